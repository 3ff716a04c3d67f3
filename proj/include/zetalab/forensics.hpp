#ifndef ZETALAB_FORENSICS_HPP
#define ZETALAB_FORENSICS_HPP

// Formula audits. Each audit evaluates one printed formula against an
// independent oracle and, where a repaired form is known, evaluates that too.
//
// Verdicts:
//   exact           deviation <= check_tol
//   suspected_typo  deviation > 1e-3, and a repaired form is within check_tol
//   approximation   anything else

#include <zetalab/line_one.hpp>
#include <zetalab/odd_zeta.hpp>
#include <zetalab/prime_tail.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zetalab {

enum class Verdict { exact, approximation, suspected_typo };

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::exact:
        return "exact";
    case Verdict::approximation:
        return "approximation";
    case Verdict::suspected_typo:
        return "suspected_typo";
    }
    return "?";
}

inline constexpr double typo_threshold = 1e-3;

struct ForensicsReport {
    std::string formula_id;
    Cplx oracle_value;
    Cplx formula_value;
    Real deviation;
    Verdict verdict = Verdict::approximation;
    std::optional<Real> corrected_deviation;
    Real check_tol;
    std::string note;
};

struct ForensicsOptions {
    int digits = default_digits;
    Real tol = Real(1e-30, default_digits);
};

namespace detail {

struct AuditResult {
    Cplx oracle;
    Cplx formula;
    std::optional<Cplx> corrected;
    Real floor; // smallest tolerance this audit can certify
    std::string note;
};

using Audit = std::function<AuditResult(const ForensicsOptions&)>;

inline Real floor_at(double v, int w) { return Real(v, w); }

inline const std::map<std::string, Audit>& audit_table()
{
    static const std::map<std::string, Audit> table = {
        {"a10",
         [](const ForensicsOptions& o) {
             const int w = o.digits;
             return AuditResult{Cplx(zeta_even_closed(40, w)), Cplx(zeta_even_recurrence(40, w)), std::nullopt,
                                ten_to_minus(w - 8, w),
                                "zeta(40): Bernoulli-free recurrence against the Bernoulli closed form"};
         }},
        {"eq10",
         [](const ForensicsOptions& o) {
             const int w = o.digits;
             const Real s(3L, w);
             const Real z = zeta_dirichlet(s, ten_to_minus(w - 5, w)).value.re;
             const Real P(1'000'000L, w);
             const Real tail = z * pow(P, 1 - s) / (s - 1);
             return AuditResult{Cplx(z), Cplx(euler_product(s, 1'000'000)), std::nullopt, tail,
                                "Euler product at s = 3 over p <= 10^6; tolerance is the product's tail bound"};
         }},
        {"eq13",
         [](const ForensicsOptions& o) {
             const int w = o.digits;
             const Real t(1e-7, w);
             const Real z3 = zeta_dirichlet(Real(3L, w), ten_to_minus(w - 5, w)).value.re;
             return AuditResult{Cplx(z3), Cplx(zeta_odd_prime(1, Real(2L, w), t)), std::nullopt, t,
                                "zeta(3) = 2 t(3)/t(2) zeta(2) with true prime sums gives 1.1576; the table's "
                                "1.21992 comes from the closed-form t on both sides"};
         }},
        {"eq16",
         [](const ForensicsOptions& o) {
             const int w = o.digits;
             const Real t(1e-7, w);
             TailSum ts = tail_sum(Real(2L, w), t);
             return AuditResult{ts.direct.value, Cplx(ts.closed), std::nullopt, ts.direct.trunc_estimate,
                                "t(2): closed form exceeds the prime sum by sum m^{-2} over odd m > 1 that are "
                                "not prime powers (15, 21, 33, ...)"};
         }},
        {"eq2",
         [](const ForensicsOptions& o) {
             const int w = o.digits;
             return AuditResult{zeta_dirichlet(Real(10L, w), ten_to_minus(w - 5, w)).value,
                                Cplx(zeta_even_closed(10, w)), std::nullopt, ten_to_minus(w - 8, w),
                                "zeta(10) from B_10 against the Dirichlet series"};
         }},
        {"eq22",
         [](const ForensicsOptions& o) {
             const int w = o.digits + 10;
             const long s = 1;
             const Real f(2L, w);
             const Real canonical = zeta_odd_closed(s, f);
             // as typeset
             const Real p2s = uipow(2, 2 * s, w);
             const Real p2s1 = uipow(2, 2 * s + 1, w);
             const Real p2sm1 = uipow(2, 2 * s - 1, w);
             const Real B(bernoulli(2 * s), w);
             const Real sgn(s % 2 == 1 ? 1L : -1L, w); // (-1)^{s+1}
             const Real first = 4 * factorial(2 * s, w) * (1 - p2sm1) / (sgn * B * pow(pi(w), 2 * s) * p2sm1);
             const Real second = (p2s1 * (1 - f) + f - 2) / 2;
             const Real printed = f * p2s1 * (1 - p2s) / ((p2s1 - 1) * (first + second));
             return AuditResult{Cplx(canonical), Cplx(printed), Cplx(canonical), ten_to_minus(o.digits - 8, w),
                                "final f-ratio formula at s = 1, f = 2 as typeset, against the form re-derived "
                                "from the ratio identity (1.21988, which reproduces the table)"};
         }},
        {"eq23",
         [](const ForensicsOptions& o) {
             const int w = o.digits;
             const Real t = max(o.tol, ten_to_minus(w - 10, w));
             const Real z = zeta_dirichlet(Real(5L, w), ten_to_minus(w - 5, w)).value.re;
             return AuditResult{
                 Cplx(z), Cplx(zeta_odd_literature(2, LiteratureFormula::gamma_ratio, t, FormulaLayout::as_printed)),
                 Cplx(zeta_odd_literature(2, LiteratureFormula::gamma_ratio, t)), t,
                 "zeta(5), Gamma-ratio series: lower-odd sum needs (2^{2n-2m} - 1)(-pi^2)^n zeta(2m-2n+1), not a "
                 "difference"};
         }},
        {"eq24",
         [](const ForensicsOptions& o) {
             const int w = o.digits;
             const Real t = max(o.tol, ten_to_minus(w - 10, w));
             const Real z = zeta_dirichlet(Real(5L, w), ten_to_minus(w - 5, w)).value.re;
             return AuditResult{
                 Cplx(z), Cplx(zeta_odd_literature(2, LiteratureFormula::log2_series, t, FormulaLayout::as_printed)),
                 Cplx(zeta_odd_literature(2, LiteratureFormula::log2_series, t)), t,
                 "zeta(5), log 2 series: the lower-odd sum belongs inside the prefactor"};
         }},
        {"eq25",
         [](const ForensicsOptions& o) {
             const int w = o.digits;
             const Real t = max(o.tol, ten_to_minus(w - 10, w));
             const Real z = zeta_dirichlet(Real(5L, w), ten_to_minus(w - 5, w)).value.re;
             return AuditResult{
                 Cplx(z), Cplx(zeta_odd_literature(2, LiteratureFormula::log3_hurwitz, t, FormulaLayout::as_printed)),
                 std::nullopt, t, "zeta(5), log 3 series with zeta(2j, 1/3)"};
         }},
        {"eq26",
         [](const ForensicsOptions& o) {
             const int w = o.digits;
             const Real t = max(o.tol, ten_to_minus(w - 10, w));
             const Real z = zeta_dirichlet(Real(3L, w), ten_to_minus(w - 5, w)).value.re;
             return AuditResult{
                 Cplx(z), Cplx(zeta_odd_literature(1, LiteratureFormula::log2_quarter, t, FormulaLayout::as_printed)),
                 Cplx(zeta_odd_literature(1, LiteratureFormula::log2_quarter, t)), t,
                 "zeta(3), 16^k series with zeta(2j, 1/4): the series needs a factor 2"};
         }},
        {"eq3",
         [](const ForensicsOptions& o) {
             const int w = o.digits;
             // worst case over n = 0..5 against the Euler–Maclaurin oracle
             Real worst(0L, w);
             Cplx at_worst_o, at_worst_f;
             for (long n = 0; n <= 5; ++n) {
                 const Cplx z = zeta_oracle_extended(Cplx(Real(-n, w)), ten_to_minus(w - 10, w));
                 const Cplx f(Real(zeta_negative_int(n), w));
                 const Real d = abs(z - f);
                 if (n == 0 || d > worst) {
                     worst = d;
                     at_worst_o = z;
                     at_worst_f = f;
                 }
             }
             return AuditResult{at_worst_o, at_worst_f, std::nullopt, ten_to_minus(w - 12, w),
                                "zeta(-n), n = 0..5 (worst case shown); needs B_1 = +1/2, otherwise zeta(0) "
                                "comes out +1/2"};
         }},
        {"eq38",
         [](const ForensicsOptions&) {
             const int w = 30;
             const Real b(0.5, w);
             const long n = 3;
             const Real eps = Real::parse("1e-3", w);
             const Real p = pi(w);
             const Cplx s(eps, -b);
             const Cplx e = s - Real(1L, w);
             const Cplx closed = p * exp(e * log(Real(n, w))) / sin(p * s);
             auto f = [&](const Real& x) { return exp(e * log(x)) / (x + n); };
             const Cplx integral = integrate_semiaxis(f, eps, abs(closed) * Real(1e-13, w));
             // as typeset: -pi / sinh(i b pi) (n^{-1})^{-ib} / n
             const Cplx ib(Real(0L, w), b);
             const Cplx printed = Real(-1L, w) * p / sinh(ib * p) * exp(ib * log(Real(n, w))) / Real(n, w);
             return AuditResult{integral, printed, closed, abs(closed) * Real(1e-11, w),
                                "int x^{-1-ib}/(x+n) dx, b = 0.5, n = 3, damped by x^eps, eps = 1e-3: the Mellin "
                                "value is pi n^{s-1}/sin(pi s), s = eps - ib; the typeset form conjugates the "
                                "exponent and has sinh(i b pi) = i sin(b pi) where sinh(b pi) belongs"};
         }},
        {"eq4",
         [](const ForensicsOptions& o) {
             const int w = o.digits;
             const Real t = max(o.tol, ten_to_minus(w - 10, w));
             return AuditResult{zeta_dirichlet(Real(3L, w), ten_to_minus(w - 5, w)).value, Cplx(zeta_known_ref(3, t)),
                                std::nullopt, t, "zeta(3) from the zeta(2k)/4^k series, with zeta(0) = -1/2"};
         }},
        {"eq42",
         [](const ForensicsOptions& o) {
             const int w = o.digits;
             const Real x(2L, w);
             const Real t = max(o.tol, ten_to_minus(w - 10, w));
             // printed left side: x^{-1} sum_{n>=1} (-1)^n/(x+n)
            auto coeff = [&](long n) { return Cplx(1 / (x + n)); };
            const Real alt = accelerate_alternating(coeff, acceleration_order(w + 5), w + 5).value.re;
            const Real lhs = -alt / x;
            const Real gap = detail::digamma_gap(x, w);
            return AuditResult{Cplx(lhs), Cplx(gap / 2), Cplx(-gap / (2 * x)), t,
                               "x = 2: the identity holds as sum (-1)^n/(x+n) = -(psi(x/2+1) - psi((x+1)/2))/2, "
                               "without x^{-1} and with the opposite sign; residual " +
                                   digamma_gap_check(x, t).to_string(3)};
         }},
        {"eq49",
         [](const ForensicsOptions& o) {
             const int w = std::min(o.digits, 40);
             const Real x(1L, w);
             const long K = 40;
             const Real dev = hurwitz_expansion_check(x, K, w);
             const Real gap = detail::digamma_gap(x, w);
             // first omitted term 2 * 2^{-(K+1)} zeta(K+1, 1)
             const Real omitted =
                 2 * zeta_dirichlet(Real(K + 1, w), ten_to_minus(w - 5, w)).value.re / pow(Real(2L, w), K + 1);
             return AuditResult{Cplx(gap), Cplx(gap + dev), std::nullopt, omitted,
                                "x = 1, K = 40: double sum against the digamma gap, tolerance is the first omitted "
                                "term; at x = 0 the expansion does not converge (n = 0 column is sum (-1)^k)"};
         }},
        {"eq5",
         [](const ForensicsOptions& o) {
             const int w = o.digits;
             const Real t = max(o.tol, ten_to_minus(w - 10, w));
             return AuditResult{zeta_dirichlet(Real(7L, w), ten_to_minus(w - 5, w)).value, Cplx(zeta_known_ref(7, t)),
                                std::nullopt, t, "zeta(7) = 19 pi^7/56700 - 2 sum 1/(n^7 (e^{2 pi n} - 1))"};
         }},
        {"eq52",
         [](const ForensicsOptions& o) {
             const int w = o.digits;
             const Real b(1L, w);
             const Real t = max(o.tol, ten_to_minus(w - 10, w));
             const Cplx z = zeta_oracle(Cplx(Real(1L, w), b), t);
             const LineOnePoint flat = zeta_line_one_flat(b);
             const LineOnePoint eta = zeta_line_one(b, t);
             return AuditResult{z, flat.value, eta.value, max(t, Real(1e-15, w)),
                                "b = 1: the flat series (Abel-regularized) equals (1 - 2^{1-ib}) zeta(ib)/(1 - 2^{-ib}); "
                                "restoring the dropped factor n^{-1} gives zeta(1+ib)"};
         }},
        {"table",
         [](const ForensicsOptions& o) {
             const int w = o.digits;
             const Real ref11 = zeta_dirichlet(Real(11L, w), ten_to_minus(w - 5, w)).value.re;
             const Real printed_actual = Real::parse("1.004941", w);
             // repaired row: the Difference entry, which is consistent with 1.000494...
             const Real diff = abs(zeta_odd_closed(5, Real(2L, w)) - ref11);
             const Real printed_diff = Real::parse("2.8476e-6", w);
             return AuditResult{Cplx(ref11), Cplx(printed_actual), Cplx(ref11 + (diff - printed_diff)),
                                Real(5e-11, w),
                                "zeta(11) row prints 1.00494 / 1.004941 for 1.000494...; its Difference entry "
                                "2.8476e-6 matches the computed " +
                                    diff.to_string(5)};
         }},
        {"zeta5",
         [](const ForensicsOptions& o) {
             const int w = o.digits;
             const Real t = max(o.tol, ten_to_minus(w - 10, w));
             return AuditResult{zeta_dirichlet(Real(5L, w), ten_to_minus(w - 5, w)).value,
                                Cplx(detail::zeta5_series(Rat(-1, 20), t)), Cplx(zeta_known_ref(5, t)), t,
                                "zeta(5) sinh / exponential series: the last sum enters with +1/20, not -1/20"};
         }},
    };
    return table;
}

} // namespace detail

inline std::vector<std::string> forensics_ids()
{
    std::vector<std::string> ids;
    for (const auto& [id, audit] : detail::audit_table())
        ids.push_back(id);
    return ids;
}

inline ForensicsReport run_audit(const std::string& id, const ForensicsOptions& opt = {})
{
    const auto& table = detail::audit_table();
    auto it = table.find(id);
    if (it == table.end())
        throw ConfigError("unknown formula id: " + id);
    detail::AuditResult a = it->second(opt);
    ForensicsReport r;
    r.formula_id = id;
    r.oracle_value = a.oracle.with_digits(opt.digits);
    r.formula_value = a.formula.with_digits(opt.digits);
    r.deviation = abs(a.formula - a.oracle).with_digits(opt.digits);
    r.check_tol = max(opt.tol, a.floor).with_digits(opt.digits);
    r.note = a.note;
    if (a.corrected)
        r.corrected_deviation = abs(*a.corrected - a.oracle).with_digits(opt.digits);
    const bool finite = isfinite(a.formula) && isfinite(a.oracle);
    if (r.deviation <= r.check_tol)
        r.verdict = Verdict::exact;
    else if (finite && r.deviation > typo_threshold && r.corrected_deviation && *r.corrected_deviation <= r.check_tol)
        r.verdict = Verdict::suspected_typo;
    else
        r.verdict = Verdict::approximation;
    return r;
}

// One report per id, ordered by id. Unknown ids are a configuration error.
inline std::vector<ForensicsReport> forensics(std::vector<std::string> ids, const ForensicsOptions& opt = {})
{
    for (const auto& id : ids)
        if (!detail::audit_table().count(id))
            throw ConfigError("unknown formula id: " + id);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<ForensicsReport> out;
    for (const auto& id : ids)
        out.push_back(run_audit(id, opt));
    return out;
}

} // namespace zetalab

#endif
