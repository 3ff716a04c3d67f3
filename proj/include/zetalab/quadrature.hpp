#ifndef ZETALAB_QUADRATURE_HPP
#define ZETALAB_QUADRATURE_HPP

// Adaptive quadrature over (0, inf).
//
// Both halves are mapped to the log line, x = e^u, so that (0, c] becomes
// (-inf, ln c] and [c, inf) becomes [ln c, inf); the u-axis is then walked
// outward in fixed-width chunks, each integrated by adaptive bisection with a
// nested Clenshaw–Curtis 16/32-point rule, until the envelope of the
// integrand certifies the remaining tail.

#include <zetalab/real.hpp>

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace zetalab {

using RealToCplx = std::function<Cplx(const Real&)>;

struct QuadratureOptions {
    long max_panels = 400'000;
    double chunk_width = 8.0;     // width of the walking chunks on the log line
    double max_walk = 1.0e6;      // give up beyond this distance on either side
};

namespace detail {

struct ClenshawCurtis {
    std::vector<Real> x;   // cos(j pi / 32), j = 0..32
    std::vector<Real> w32; // weights of the 33-point rule
    std::vector<Real> w16; // weights of the 17-point rule on the even nodes
};

inline std::vector<Real> cc_weights(int n, int digits)
{
    const Real p = pi(digits);
    std::vector<Real> w;
    for (int j = 0; j <= n; ++j) {
        Real acc(1L, digits);
        for (int k = 1; k <= n / 2; ++k) {
            const long bk = (2 * k == n) ? 1 : 2;
            acc -= Real(bk, digits) / Real(4L * k * k - 1, digits) * cos(2 * k * j * p / n);
        }
        const long cj = (j == 0 || j == n) ? 1 : 2;
        w.push_back(cj * acc / n);
    }
    return w;
}

inline const ClenshawCurtis& cc_rule(int digits)
{
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<ClenshawCurtis>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[digits];
    if (!slot) {
        auto rule = std::make_unique<ClenshawCurtis>();
        const Real p = pi(digits);
        for (int j = 0; j <= 32; ++j)
            rule->x.push_back(cos(j * p / 32));
        rule->w32 = cc_weights(32, digits);
        rule->w16 = cc_weights(16, digits);
        slot = std::move(rule);
    }
    return *slot;
}

struct PanelResult {
    Cplx value;
    Real error;
    Real envelope; // max |g| over the nodes visited
};

struct Budget {
    long panels_left;
};

// Adaptive bisection of [a, b]; a panel is accepted once its 16/32 difference
// is within density * width.
inline PanelResult integrate_adaptive(const RealToCplx& g, const Real& a, const Real& b, const Real& density,
                                      Budget& budget)
{
    const int d = density.digits();
    const ClenshawCurtis& rule = cc_rule(d);
    PanelResult total{Cplx(0L, d), Real(0L, d), Real(0L, d)};

    struct Span {
        Real lo, hi;
    };
    std::vector<Span> stack{{a, b}};
    while (!stack.empty()) {
        Span sp = std::move(stack.back());
        stack.pop_back();
        if (--budget.panels_left < 0)
            throw AccuracyError("quadrature panel budget exhausted", total.error.to_double());
        const Real mid = (sp.lo + sp.hi) / 2;
        const Real half = (sp.hi - sp.lo) / 2;
        Cplx i32(0L, d), i16(0L, d);
        for (int j = 0; j <= 32; ++j) {
            Cplx v = g(mid + half * rule.x[j]);
            if (!isfinite(v))
                throw EvaluationError("quadrature: non-finite integrand", j);
            total.envelope = max(total.envelope, abs(v));
            i32 += rule.w32[j] * v;
            if (j % 2 == 0)
                i16 += rule.w16[j / 2] * v;
        }
        i32 = i32 * half;
        i16 = i16 * half;
        Real err = abs(i32 - i16);
        if (err <= density * (sp.hi - sp.lo) || half < ten_to_minus(d / 2, d)) {
            total.value += i32;
            total.error += err;
        } else {
            stack.push_back({mid, sp.hi});
            stack.push_back({sp.lo, mid});
        }
    }
    return total;
}

// Walks away from `start` (direction +1 or -1) until the tail beyond the
// current chunk is certified below tol/8. `rate` > 0 is the assumed
// exponential decay rate of the envelope; rate <= 0 means measure it.
inline Cplx walk(const RealToCplx& g, const Real& start, int direction, double rate, const Real& tol,
                 const QuadratureOptions& opt, Budget& budget)
{
    const int d = tol.digits();
    const double lnt = -std::log(std::max(tol.to_double(), 1e-300));
    const double assumed = rate > 0 ? rate : 1.0;
    const Real length((lnt + 5.0) / assumed, d);
    const Real density = tol / (4 * length);
    const Real width(opt.chunk_width, d);

    Cplx sum(0L, d);
    Real err(0L, d);
    Real prev_env = infinity(d);
    Real u = start;
    for (double walked = 0; walked < opt.max_walk; walked += opt.chunk_width) {
        Real next = u + direction * width;
        PanelResult r = direction > 0 ? integrate_adaptive(g, u, next, density, budget)
                                      : integrate_adaptive(g, next, u, density, budget);
        sum += r.value;
        err += r.error;
        u = std::move(next);
        if (r.envelope.is_zero())
            return sum;
        double k = rate;
        if (k <= 0 && r.envelope < prev_env && isfinite(prev_env))
            k = (log(prev_env / r.envelope) / width).to_double();
        prev_env = r.envelope;
        if (k > 0 && r.envelope / k <= tol / 8)
            return sum;
    }
    throw AccuracyError("quadrature tail not certified within the walk limit", err.to_double());
}

} // namespace detail

// Integral of f over (0, c]. `damping` is the exponent with |x f(x)| <= C x^damping
// near 0; 0 declares f bounded there (treated as exponent 1).
inline Cplx integrate_lower(const RealToCplx& f, const Real& c, const Real& damping, const Real& tol,
                            const QuadratureOptions& opt = {})
{
    if (!(c > 0))
        throw DomainError("integrate_lower: split point must be positive");
    if (damping < 0)
        throw DomainError("integrate_lower: damping must be non-negative");
    const double rate = damping.is_zero() ? 1.0 : damping.to_double();
    detail::Budget budget{opt.max_panels};
    auto g = [&](const Real& u) {
        Real x = exp(u);
        return f(x) * x;
    };
    return detail::walk(g, log(c), -1, rate, tol, opt, budget);
}

// Integral of f over [c, inf).
inline Cplx integrate_upper(const RealToCplx& f, const Real& c, const Real& tol, const QuadratureOptions& opt = {})
{
    if (!(c > 0))
        throw DomainError("integrate_upper: split point must be positive");
    detail::Budget budget{opt.max_panels};
    auto g = [&](const Real& u) {
        Real x = exp(u);
        return f(x) * x;
    };
    return detail::walk(g, log(c), +1, 0.0, tol, opt, budget);
}

// Integral of f over (0, inf), split at x = 1.
inline Cplx integrate_semiaxis(const RealToCplx& f, const Real& damping, const Real& tol,
                               const QuadratureOptions& opt = {})
{
    if (!(tol > 0))
        throw DomainError("integrate_semiaxis: tolerance must be positive");
    const Real one(1L, tol.digits());
    return integrate_lower(f, one, damping, tol / 2, opt) + integrate_upper(f, one, tol / 2, opt);
}

} // namespace zetalab

#endif
