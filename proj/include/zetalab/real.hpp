#ifndef ZETALAB_REAL_HPP
#define ZETALAB_REAL_HPP

// Arbitrary-precision real and complex scalars on top of MPFR, plus the
// exact rational type (GMP) used for Bernoulli numbers.
//
// Every Real carries its working precision in decimal digits. Binary
// operations run at the larger precision of their operands; there is no
// global precision state.

#include <zetalab/error.hpp>

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <compare>
#include <concepts>
#include <cstdlib>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace zetalab {

inline constexpr int default_digits = 50;
inline constexpr int min_digits = 15;

// Exact rationals; gmpxx keeps them canonical (lowest terms, den > 0).
using Rat = mpq_class;

inline mpfr_prec_t digits_to_bits(int digits)
{
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

class Real {
public:
    Real() : Real(0L, default_digits) {}
    Real(long v, int digits = default_digits) : digits_(check(digits))
    {
        mpfr_init2(v_, digits_to_bits(digits_));
        mpfr_set_si(v_, v, MPFR_RNDN);
    }
    Real(int v, int digits = default_digits) : Real(static_cast<long>(v), digits) {}
    Real(double v, int digits = default_digits) : digits_(check(digits))
    {
        mpfr_init2(v_, digits_to_bits(digits_));
        mpfr_set_d(v_, v, MPFR_RNDN);
    }
    Real(const Rat& q, int digits) : digits_(check(digits))
    {
        mpfr_init2(v_, digits_to_bits(digits_));
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    Real(const mpz_class& z, int digits) : digits_(check(digits))
    {
        mpfr_init2(v_, digits_to_bits(digits_));
        mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
    }

    // Parses a decimal (or "inf"/"nan") string; the whole string must be consumed.
    static Real parse(std::string_view text, int digits = default_digits)
    {
        Real r(uninit, digits);
        std::string s(text);
        char* end = nullptr;
        if (!s.empty())
            mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
        if (s.empty() || *end != '\0')
            throw DomainError("not a decimal number: '" + s + "'");
        return r;
    }

    Real(const Real& o) : digits_(o.digits_)
    {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept : digits_(o.digits_)
    {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o)
    {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
            digits_ = o.digits_;
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept
    {
        mpfr_swap(v_, o.v_);
        std::swap(digits_, o.digits_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    int digits() const noexcept { return digits_; }
    mpfr_srcptr get() const noexcept { return v_; }
    mpfr_ptr raw() noexcept { return v_; }

    // Same value rounded to a different working precision.
    Real with_digits(int digits) const
    {
        Real r(uninit, digits);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    // `sig` significant decimal digits, trailing zeros removed.
    std::string to_string(int sig) const;
    // Shortest form that reproduces the value at the carried precision.
    std::string str() const { return to_string(digits_); }

    Real operator-() const
    {
        Real r(uninit, digits_);
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& o) { return assign_op(o, mpfr_add); }
    Real& operator-=(const Real& o) { return assign_op(o, mpfr_sub); }
    Real& operator*=(const Real& o) { return assign_op(o, mpfr_mul); }
    Real& operator/=(const Real& o) { return assign_op(o, mpfr_div); }

    struct uninit_t {};
    static constexpr uninit_t uninit{};
    Real(uninit_t, int digits) : digits_(check(digits)) { mpfr_init2(v_, digits_to_bits(digits_)); }

private:
    static int check(int digits)
    {
        if (digits < min_digits)
            throw ConfigError("working precision must be at least " + std::to_string(min_digits) +
                              " digits, got " + std::to_string(digits));
        return digits;
    }

    template <class Op>
    Real& assign_op(const Real& o, Op op)
    {
        if (o.digits_ > digits_) {
            mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
            digits_ = o.digits_;
        }
        op(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    mpfr_t v_;
    int digits_;
};

namespace detail {

template <class Op>
Real binary(const Real& a, const Real& b, Op op)
{
    Real r(Real::uninit, std::max(a.digits(), b.digits()));
    op(r.raw(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

template <class Op>
Real unary(const Real& a, Op op)
{
    Real r(Real::uninit, a.digits());
    op(r.raw(), a.get(), MPFR_RNDN);
    return r;
}

template <class T>
concept Arithmetic = std::integral<T> || std::floating_point<T>;

template <Arithmetic T>
Real lift(T v, int digits)
{
    if constexpr (std::integral<T>)
        return Real(static_cast<long>(v), digits);
    else
        return Real(static_cast<double>(v), digits);
}

} // namespace detail

inline Real operator+(const Real& a, const Real& b) { return detail::binary(a, b, mpfr_add); }
inline Real operator-(const Real& a, const Real& b) { return detail::binary(a, b, mpfr_sub); }
inline Real operator*(const Real& a, const Real& b) { return detail::binary(a, b, mpfr_mul); }
inline Real operator/(const Real& a, const Real& b) { return detail::binary(a, b, mpfr_div); }

template <detail::Arithmetic T> Real operator+(const Real& a, T b) { return a + detail::lift(b, a.digits()); }
template <detail::Arithmetic T> Real operator+(T a, const Real& b) { return detail::lift(a, b.digits()) + b; }
template <detail::Arithmetic T> Real operator-(const Real& a, T b) { return a - detail::lift(b, a.digits()); }
template <detail::Arithmetic T> Real operator-(T a, const Real& b) { return detail::lift(a, b.digits()) - b; }
template <detail::Arithmetic T> Real operator*(const Real& a, T b) { return a * detail::lift(b, a.digits()); }
template <detail::Arithmetic T> Real operator*(T a, const Real& b) { return detail::lift(a, b.digits()) * b; }
template <detail::Arithmetic T> Real operator/(const Real& a, T b) { return a / detail::lift(b, a.digits()); }
template <detail::Arithmetic T> Real operator/(T a, const Real& b) { return detail::lift(a, b.digits()) / b; }

inline std::partial_ordering operator<=>(const Real& a, const Real& b)
{
    if (mpfr_unordered_p(a.get(), b.get()))
        return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.get(), b.get());
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}
inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

template <detail::Arithmetic T>
std::partial_ordering operator<=>(const Real& a, T b) { return a <=> detail::lift(b, a.digits()); }
template <detail::Arithmetic T>
bool operator==(const Real& a, T b) { return a == detail::lift(b, a.digits()); }

inline Real abs(const Real& x) { return detail::unary(x, mpfr_abs); }
inline Real sqrt(const Real& x) { return detail::unary(x, mpfr_sqrt); }
inline Real exp(const Real& x) { return detail::unary(x, mpfr_exp); }
inline Real expm1(const Real& x) { return detail::unary(x, mpfr_expm1); }
inline Real log(const Real& x) { return detail::unary(x, mpfr_log); }
inline Real log1p(const Real& x) { return detail::unary(x, mpfr_log1p); }
inline Real sin(const Real& x) { return detail::unary(x, mpfr_sin); }
inline Real cos(const Real& x) { return detail::unary(x, mpfr_cos); }
inline Real sinh(const Real& x) { return detail::unary(x, mpfr_sinh); }
inline Real cosh(const Real& x) { return detail::unary(x, mpfr_cosh); }
inline Real floor(const Real& x)
{
    Real r(Real::uninit, x.digits());
    mpfr_floor(r.raw(), x.get());
    return r;
}
inline Real ceil(const Real& x)
{
    Real r(Real::uninit, x.digits());
    mpfr_ceil(r.raw(), x.get());
    return r;
}
inline Real pow(const Real& x, const Real& y) { return detail::binary(x, y, mpfr_pow); }
inline Real pow(const Real& x, long n)
{
    Real r(Real::uninit, x.digits());
    mpfr_pow_si(r.raw(), x.get(), n, MPFR_RNDN);
    return r;
}
inline Real hypot(const Real& x, const Real& y) { return detail::binary(x, y, mpfr_hypot); }
inline Real atan2(const Real& y, const Real& x) { return detail::binary(y, x, mpfr_atan2); }
inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real min(const Real& a, const Real& b) { return b < a ? b : a; }
inline bool isfinite(const Real& x) { return mpfr_number_p(x.get()) != 0; }

// Integer power of an unsigned integer base, exact up to the working precision.
inline Real uipow(unsigned long base, unsigned long n, int digits)
{
    Real r(Real::uninit, digits);
    mpfr_ui_pow_ui(r.raw(), base, n, MPFR_RNDN);
    return r;
}

inline Real pi(int digits = default_digits)
{
    Real r(Real::uninit, digits);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}
inline Real euler_gamma(int digits = default_digits)
{
    Real r(Real::uninit, digits);
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}
inline Real ln2(int digits = default_digits)
{
    Real r(Real::uninit, digits);
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}
inline Real infinity(int digits = default_digits)
{
    Real r(Real::uninit, digits);
    mpfr_set_inf(r.raw(), 1);
    return r;
}
inline Real factorial(unsigned long n, int digits)
{
    Real r(Real::uninit, digits);
    mpfr_fac_ui(r.raw(), n, MPFR_RNDN);
    return r;
}

// 10^{-n} at the given precision; the usual way tolerances are spelled.
inline Real ten_to_minus(int n, int digits = default_digits)
{
    return 1 / uipow(10, static_cast<unsigned long>(n), digits);
}

inline std::string Real::to_string(int sig) const
{
    if (mpfr_nan_p(v_))
        return "nan";
    if (mpfr_inf_p(v_))
        return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_))
        return "0";
    mpfr_exp_t e = 0;
    std::unique_ptr<char, void (*)(char*)> buf(mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sig), v_, MPFR_RNDN),
                                               mpfr_free_str);
    std::string m(buf.get());
    std::string sign;
    if (m.front() == '-') {
        sign = "-";
        m.erase(0, 1);
    }
    while (m.size() > 1 && m.back() == '0')
        m.pop_back();
    const long lead = static_cast<long>(e) - 1; // decimal exponent of the leading digit
    const long n = static_cast<long>(m.size());
    std::string out;
    if (lead >= -5 && lead < 21) {
        if (e <= 0)
            out = "0." + std::string(static_cast<size_t>(-e), '0') + m;
        else if (e >= n)
            out = m + std::string(static_cast<size_t>(e - n), '0');
        else
            out = m.substr(0, static_cast<size_t>(e)) + "." + m.substr(static_cast<size_t>(e));
    } else {
        out = m.substr(0, 1);
        if (n > 1)
            out += "." + m.substr(1);
        out += (lead < 0 ? "e-" : "e+") + std::to_string(std::labs(lead));
    }
    return sign + out;
}

inline std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.str(); }

// ---------------------------------------------------------------------------

struct Cplx {
    Real re;
    Real im;

    Cplx() = default;
    Cplx(Real r) : re(std::move(r)), im(0L, re.digits()) {}
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Cplx(long r, int digits = default_digits) : re(r, digits), im(0L, digits) {}
    Cplx(int r, int digits = default_digits) : re(r, digits), im(0L, digits) {}
    Cplx(double r, int digits = default_digits) : re(r, digits), im(0L, digits) {}

    int digits() const { return std::max(re.digits(), im.digits()); }
    Cplx with_digits(int d) const { return {re.with_digits(d), im.with_digits(d)}; }
    Cplx conj() const { return {re, -im}; }

    Cplx operator-() const { return {-re, -im}; }
    Cplx& operator+=(const Cplx& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    Cplx& operator-=(const Cplx& o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }
};

inline Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
inline Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
inline Cplx operator*(const Cplx& a, const Cplx& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Cplx operator/(const Cplx& a, const Cplx& b)
{
    Real den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
inline Cplx operator*(const Cplx& a, const Real& b) { return {a.re * b, a.im * b}; }
inline Cplx operator*(const Real& a, const Cplx& b) { return {a * b.re, a * b.im}; }
inline Cplx operator/(const Cplx& a, const Real& b) { return {a.re / b, a.im / b}; }
inline Cplx operator+(const Cplx& a, const Real& b) { return {a.re + b, a.im}; }
inline Cplx operator-(const Cplx& a, const Real& b) { return {a.re - b, a.im}; }
inline Cplx operator-(const Real& a, const Cplx& b) { return {a - b.re, -b.im}; }
inline Cplx operator+(const Real& a, const Cplx& b) { return {a + b.re, b.im}; }
inline Cplx operator/(const Real& a, const Cplx& b) { return Cplx(a, Real(0L, a.digits())) / b; }

template <detail::Arithmetic T> Cplx operator*(const Cplx& a, T b) { return {a.re * b, a.im * b}; }
template <detail::Arithmetic T> Cplx operator*(T a, const Cplx& b) { return {a * b.re, a * b.im}; }
template <detail::Arithmetic T> Cplx operator/(const Cplx& a, T b) { return {a.re / b, a.im / b}; }
template <detail::Arithmetic T> Cplx operator+(const Cplx& a, T b) { return {a.re + b, a.im}; }
template <detail::Arithmetic T> Cplx operator-(const Cplx& a, T b) { return {a.re - b, a.im}; }
template <detail::Arithmetic T> Cplx operator-(T a, const Cplx& b) { return {a - b.re, -b.im}; }
template <detail::Arithmetic T> Cplx operator/(T a, const Cplx& b) { return Cplx(Real(a, b.digits()), Real(0L, b.digits())) / b; }

// hypot avoids overflow of re^2 + im^2.
inline Real abs(const Cplx& z) { return hypot(z.re, z.im); }
inline Real arg(const Cplx& z) { return atan2(z.im, z.re); }
inline bool isfinite(const Cplx& z) { return isfinite(z.re) && isfinite(z.im); }
inline Cplx times_i(const Cplx& z) { return {-z.im, z.re}; }

inline Cplx exp(const Cplx& z)
{
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}
// Principal branch.
inline Cplx log(const Cplx& z) { return {log(abs(z)), arg(z)}; }

// base^e for a positive real base: exp(e * ln base).
inline Cplx pow(const Real& base, const Cplx& e) { return exp(e * log(base)); }

inline Cplx sin(const Cplx& z) { return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)}; }
inline Cplx cos(const Cplx& z) { return {cos(z.re) * cosh(z.im), -(sin(z.re) * sinh(z.im))}; }
inline Cplx sinh(const Cplx& z) { return {sinh(z.re) * cos(z.im), cosh(z.re) * sin(z.im)}; }

inline std::ostream& operator<<(std::ostream& os, const Cplx& z)
{
    return os << z.re.str() << (z.im.sign() < 0 ? " - " : " + ") << abs(z.im).str() << "i";
}

} // namespace zetalab

#endif
