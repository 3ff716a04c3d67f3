#ifndef ZETALAB_CLI_HPP
#define ZETALAB_CLI_HPP

// Command-line front end. Every subcommand produces a Report (a typed table),
// rendered as csv, json or aligned text.

#include <zetalab/forensics.hpp>
#include <zetalab/line_one.hpp>
#include <zetalab/odd_zeta.hpp>
#include <zetalab/prime_tail.hpp>
#include <zetalab/zeta_core.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace zetalab::cli {

enum class Format { csv, json, text };

struct RunConfig {
    int digits = default_digits;
    Real tol = Real(1e-30, default_digits);
    std::uint64_t prime_cap = default_prime_cap;
    Format format = Format::text;
    std::optional<std::string> output_path;

    void validate() const
    {
        if (digits < 15)
            throw ConfigError("--digits must be at least 15");
        if (!(tol > 0))
            throw ConfigError("--tol must be positive");
        if (tol < ten_to_minus(digits - 5, digits))
            throw ConfigError("--tol must be at least 1e-" + std::to_string(digits - 5) + " at " +
                              std::to_string(digits) + " digits");
        if (prime_cap < 100)
            throw ConfigError("--prime-cap must be at least 100");
    }
};

struct Column {
    enum Kind { text, integer, real };
    std::string name;
    Kind kind = real;
};

// Cells are preformatted strings; an empty cell is a missing value.
struct Report {
    std::string command;
    std::vector<Column> columns;
    std::vector<std::vector<std::string>> rows;
};

namespace detail {

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

inline void write_csv(const Report& r, std::ostream& os)
{
    for (std::size_t i = 0; i < r.columns.size(); ++i)
        os << (i ? "," : "") << csv_field(r.columns[i].name);
    os << "\n";
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << csv_field(row[i]);
        os << "\n";
    }
}

inline void write_json(const Report& r, std::ostream& os)
{
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        nlohmann::ordered_json o = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            const Column& c = r.columns[i];
            if (row[i].empty())
                o[c.name] = nullptr;
            else if (c.kind == Column::integer)
                o[c.name] = std::stoll(row[i]);
            else
                o[c.name] = row[i]; // reals stay decimal strings
        }
        rows.push_back(std::move(o));
    }
    nlohmann::ordered_json doc;
    doc["command"] = r.command;
    doc["rows"] = std::move(rows);
    os << doc.dump(2) << "\n";
}

inline void write_text(const Report& r, std::ostream& os)
{
    std::vector<std::size_t> width(r.columns.size());
    for (std::size_t i = 0; i < r.columns.size(); ++i)
        width[i] = r.columns[i].name.size();
    for (const auto& row : r.rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    auto line = [&](auto cell) {
        std::string s;
        for (std::size_t i = 0; i < r.columns.size(); ++i) {
            std::string v = cell(i);
            if (i + 1 < r.columns.size())
                v.resize(width[i], ' ');
            s += (i ? "  " : "") + v;
        }
        os << s << "\n";
    };
    line([&](std::size_t i) { return r.columns[i].name; });
    for (const auto& row : r.rows)
        line([&](std::size_t i) { return row[i].empty() ? std::string("-") : row[i]; });
}

} // namespace detail

inline void write_report(const Report& r, Format f, std::ostream& os)
{
    switch (f) {
    case Format::csv:
        detail::write_csv(r, os);
        break;
    case Format::json:
        detail::write_json(r, os);
        break;
    case Format::text:
        detail::write_text(r, os);
        break;
    }
}

namespace detail {

inline Real parse_real(const std::string& text, int digits, const char* flag)
{
    try {
        return Real::parse(text, digits);
    } catch (const DomainError&) {
        throw ConfigError(std::string(flag) + ": not a number: '" + text + "'");
    }
}

struct Ctx {
    const RunConfig& cfg;
    std::string num(const Real& x) const { return x.to_string(cfg.digits); }
    std::string num(const std::optional<Real>& x) const { return x ? num(*x) : std::string(); }
};

inline long odd_index(const Real& s, const char* who)
{
    const long v = std::lround(s.to_double());
    if (Real(v, s.digits()) != s || v < 3 || v % 2 == 0)
        throw DomainError(std::string(who) + ": s must be an odd integer >= 3");
    return (v - 1) / 2;
}

inline long even_arg(const Real& s, const char* who)
{
    const long v = std::lround(s.to_double());
    if (Real(v, s.digits()) != s || v < 2 || v % 2 != 0)
        throw DomainError(std::string(who) + ": s must be an even integer >= 2");
    return v;
}

struct EvalArgs {
    std::string method = "dirichlet";
    std::optional<std::string> s;
    std::string b = "0";
    std::string f = "2";
};

inline Report cmd_eval(const Ctx& c, const EvalArgs& a)
{
    const int d = c.cfg.digits;
    const Real& tol = c.cfg.tol;
    const Real b = parse_real(a.b, d, "--b");
    const bool ref = a.method.rfind("ref", 0) == 0;
    if (!a.s && !ref)
        throw ConfigError("eval --method " + a.method + " needs --s");
    Real s = ref ? Real(std::stol(a.method.substr(3)), d) : parse_real(*a.s, d, "--s");
    if (ref && a.s && parse_real(*a.s, d, "--s") != s)
        throw DomainError("eval --method " + a.method + " evaluates zeta(" + a.method.substr(3) + ") only");
    const bool complex_ok = a.method == "eta" || a.method == "oracle";
    if (!b.is_zero() && !complex_ok)
        throw DomainError("eval --method " + a.method + " is real-only; --b must be 0");

    Cplx v;
    std::string err;
    if (a.method == "dirichlet") {
        SeriesResult r = zeta_dirichlet(s, tol);
        if (!r.converged)
            throw AccuracyError("Dirichlet series did not reach --tol", r.trunc_estimate.to_double());
        v = r.value;
        err = c.num(r.trunc_estimate);
    } else if (a.method == "eta") {
        if (b.is_zero()) {
            SeriesResult r = zeta_eta_real(s, tol);
            v = r.value;
            err = c.num(r.trunc_estimate);
        } else {
            const Cplx z(s, b);
            const Cplx pref = Real(1L, d) - pow(Real(2L, d), Real(1L, d) - z);
            if (abs(pref) < Real(eta_degeneracy_threshold, d))
                throw DegenerateError("1 - 2^{1-s} vanishes at this s");
            SeriesResult r = eta_accelerated(z, zetalab::detail::digits_for_tol(tol) + 3);
            v = (r.value / pref).with_digits(d);
            err = c.num(r.trunc_estimate / abs(pref));
        }
    } else if (a.method == "euler") {
        v = Cplx(euler_product(s, c.cfg.prime_cap));
    } else if (a.method == "even-closed") {
        v = Cplx(zeta_even_closed(even_arg(s, "even-closed"), d));
    } else if (a.method == "even-recurrence") {
        v = Cplx(zeta_even_recurrence(even_arg(s, "even-recurrence"), d));
    } else if (a.method == "odd-approx") {
        v = Cplx(zeta_odd_closed(odd_index(s, "odd-approx"), parse_real(a.f, d, "--f")));
    } else if (ref) {
        v = Cplx(zeta_known_ref(std::stoi(a.method.substr(3)), tol));
    } else if (a.method == "oracle") {
        v = zeta_oracle_extended(Cplx(s, b), tol);
    } else {
        static const std::map<std::string, LiteratureFormula> lit = {
            {"eq23", LiteratureFormula::gamma_ratio},
            {"eq24", LiteratureFormula::log2_series},
            {"eq25", LiteratureFormula::log3_hurwitz},
            {"eq26", LiteratureFormula::log2_quarter},
        };
        auto it = lit.find(a.method);
        if (it == lit.end())
            throw ConfigError("unknown method: " + a.method);
        v = Cplx(zeta_odd_literature(odd_index(s, a.method.c_str()), it->second, tol));
    }
    Report r{"eval",
             {{"method", Column::text},
              {"s", Column::real},
              {"b", Column::real},
              {"re", Column::real},
              {"im", Column::real},
              {"est_error", Column::real}},
             {}};
    r.rows.push_back({a.method, c.num(s), c.num(b), c.num(v.re), c.num(v.im), err});
    return r;
}

inline Report cmd_odd_table(const Ctx& c, long max_arg, const std::string& f)
{
    auto rows = odd_error_table(max_arg, parse_real(f, c.cfg.digits, "--f"), c.cfg.tol);
    Report r{"odd-table",
             {{"argument", Column::integer},
              {"formula_value", Column::real},
              {"reference_value", Column::real},
              {"abs_diff", Column::real}},
             {}};
    for (const auto& e : rows)
        r.rows.push_back({std::to_string(e.argument), c.num(e.formula_value), c.num(e.reference_value),
                          c.num(e.abs_diff)});
    return r;
}

inline Report cmd_fscan(const Ctx& c, long s_min, long s_max, const std::string& mode)
{
    if (s_min < 1 || s_max < s_min)
        throw DomainError("fscan: need 1 <= --s-min <= --s-max");
    const FMode m = mode == "direct" ? FMode::direct : FMode::closed;
    Report r{"fscan",
             {{"s", Column::integer},
              {"f_closed", Column::real},
              {"f_direct", Column::real},
              {"f_direct_error", Column::real},
              {"zeta_even", Column::real},
              {"zeta_odd", Column::real}},
             {}};
    for (long s = s_min; s <= s_max; ++s) {
        FRatioSample x = f_ratio(s, m, c.cfg.tol, c.cfg.prime_cap);
        r.rows.push_back({std::to_string(s), c.num(x.f_closed), c.num(x.f_direct), c.num(x.f_direct_error),
                          c.num(x.zeta_even), c.num(x.zeta_odd)});
    }
    return r;
}

inline Report cmd_line1(const Ctx& c, const std::string& b_text, const std::string& method)
{
    const Real b = parse_real(b_text, c.cfg.digits, "--b");
    LineOnePoint p = method == "flat"       ? zeta_line_one_flat(b)
                     : method == "integral" ? zeta_line_one_integral(b, c.cfg.tol)
                                            : zeta_line_one(b, c.cfg.tol);
    Report r{"line1",
             {{"b", Column::real},
              {"method", Column::text},
              {"re", Column::real},
              {"im", Column::real},
              {"terms_used", Column::integer},
              {"est_error", Column::real}},
             {}};
    r.rows.push_back({c.num(b), to_string(p.method), c.num(p.value.re), c.num(p.value.im),
                      std::to_string(p.terms_used), c.num(p.est_error)});
    return r;
}

inline std::pair<long, long> parse_k_range(const std::string& text)
{
    auto to_long = [&](const std::string& t) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(t, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (t.empty() || used != t.size())
            throw ConfigError("--k: expected an integer or a range a..b, got '" + text + "'");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const long k = to_long(text);
        return {k, k};
    }
    const long a = to_long(text.substr(0, dots));
    const long b = to_long(text.substr(dots + 2));
    if (b < a)
        throw ConfigError("--k: empty range '" + text + "'");
    return {a, b};
}

inline Report cmd_zeros(const Ctx& c, const std::string& k_text)
{
    auto [a, b] = parse_k_range(k_text);
    Report r{"zeros",
             {{"k", Column::integer}, {"b", Column::real}, {"eta_abs", Column::real}, {"zeta_abs", Column::real}},
             {}};
    for (long k = a; k <= b; ++k) {
        EtaZero z = eta_zero_scan(k, c.cfg.tol);
        r.rows.push_back({std::to_string(k), c.num(z.b), c.num(z.eta_abs), c.num(z.zeta_abs)});
    }
    return r;
}

inline Report cmd_probe(const Ctx& c, const std::string& lemma, long n, long k, const std::string& b_text, long grid)
{
    const NormLemma l = lemma == "1" ? NormLemma::one : lemma == "2i" ? NormLemma::two_i : NormLemma::two_ii;
    NormProbe p = uniform_norm_probe(l, n, k, parse_real(b_text, c.cfg.digits, "--b"), grid);
    Report r{"probe",
             {{"lemma", Column::text},
              {"n", Column::integer},
              {"k", Column::integer},
              {"grid_sup", Column::real},
              {"bound", Column::real}},
             {}};
    r.rows.push_back({lemma, std::to_string(n), std::to_string(k), c.num(p.grid_sup), c.num(p.bound)});
    return r;
}

inline std::vector<std::string> split_ids(const std::string& text)
{
    if (text == "all")
        return forensics_ids();
    std::vector<std::string> ids;
    std::stringstream ss(text);
    std::string id;
    while (std::getline(ss, id, ','))
        if (!id.empty())
            ids.push_back(id);
    if (ids.empty())
        throw ConfigError("--ids: no formula ids given");
    return ids;
}

inline Report cmd_forensics(const Ctx& c, const std::string& ids)
{
    ForensicsOptions opt{c.cfg.digits, c.cfg.tol};
    auto reports = forensics(split_ids(ids), opt);
    Report r{"forensics",
             {{"formula_id", Column::text},
              {"verdict", Column::text},
              {"deviation", Column::real},
              {"corrected_deviation", Column::real},
              {"check_tol", Column::real},
              {"oracle_re", Column::real},
              {"oracle_im", Column::real},
              {"formula_re", Column::real},
              {"formula_im", Column::real},
              {"note", Column::text}},
             {}};
    for (const auto& f : reports)
        r.rows.push_back({f.formula_id, to_string(f.verdict), c.num(f.deviation), c.num(f.corrected_deviation),
                          c.num(f.check_tol), c.num(f.oracle_value.re), c.num(f.oracle_value.im),
                          c.num(f.formula_value.re), c.num(f.formula_value.im), f.note});
    return r;
}

// Literature representations side by side: error against the Dirichlet
// series, interior series terms and lower odd values consumed. Wall time only
// on request, since it breaks byte-identical output.
inline Report cmd_compare(const Ctx& c, long n_max, bool timing)
{
    if (n_max < 1)
        throw DomainError("compare: --n-max must be at least 1");
    const std::pair<const char*, LiteratureFormula> forms[] = {
        {"eq23", LiteratureFormula::gamma_ratio},
        {"eq24", LiteratureFormula::log2_series},
        {"eq25", LiteratureFormula::log3_hurwitz},
        {"eq26", LiteratureFormula::log2_quarter},
    };
    Report r{"compare",
             {{"argument", Column::integer},
              {"method", Column::text},
              {"value", Column::real},
              {"abs_error", Column::real},
              {"series_terms", Column::integer},
              {"lower_odd_calls", Column::integer}},
             {}};
    if (timing)
        r.columns.push_back({"elapsed_ms", Column::real});
    const int d = c.cfg.digits;
    for (long n = 1; n <= n_max; ++n) {
        const Real ref = zeta_dirichlet(Real(2 * n + 1, d), ten_to_minus(d - 5, d)).value.re;
        for (const auto& [name, which] : forms) {
            LiteratureTrace trace;
            const auto t0 = std::chrono::steady_clock::now();
            const Real v = zeta_odd_literature(n, which, c.cfg.tol, FormulaLayout::corrected, &trace);
            const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            std::vector<std::string> row = {std::to_string(2 * n + 1),
                                            name,
                                            c.num(v),
                                            c.num(abs(v - ref)),
                                            std::to_string(trace.series_terms),
                                            std::to_string(trace.lower_args.size())};
            if (timing)
                row.push_back(Real(ms, 15).to_string(4));
            r.rows.push_back(std::move(row));
        }
    }
    return r;
}

} // namespace detail

// argv without the program name. Exit codes: 0 success, 1 usage or
// configuration error, 2 domain / accuracy / evaluation error.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    CLI::App app{"zetalab: high-precision zeta evaluators, tables and formula audits", "zetalab"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    int digits = default_digits;
    std::optional<std::string> tol_text;
    std::uint64_t prime_cap = default_prime_cap;
    std::string format = "text";
    std::optional<std::string> out_path;
    app.add_option("--digits", digits, "significant decimal digits (>= 15)");
    app.add_option("--tol", tol_text, "absolute tolerance (default 1e-30, or 1e-(digits-5) if larger)");
    app.add_option("--prime-cap", prime_cap, "largest prime used by prime sums and products");
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"csv", "json", "text"}));
    app.add_option("--out", out_path, "write the report to this file instead of stdout");

    detail::EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "evaluate zeta(s) by one method");
    eval->add_option("--s", ev.s, "argument (real part)");
    eval->add_option("--b", ev.b, "imaginary part (eta and oracle only)");
    eval->add_option("--f", ev.f, "linking constant for odd-approx");
    eval->add_option("--method", ev.method, "evaluation method")
        ->check(CLI::IsMember({"dirichlet", "eta", "euler", "even-closed", "even-recurrence", "odd-approx", "ref3",
                               "ref5", "ref7", "eq23", "eq24", "eq25", "eq26", "oracle"}));

    long max_arg = 15;
    std::string f_text = "2";
    auto* table = app.add_subcommand("odd-table", "odd zeta values from the f-ratio closed form against references");
    table->add_option("--max", max_arg, "largest odd argument");
    table->add_option("--f", f_text, "linking constant");

    long s_min = 1, s_max = 15;
    std::string mode = "closed";
    auto* fscan = app.add_subcommand("fscan", "f-ratio over a range of s");
    fscan->add_option("--s-min", s_min);
    fscan->add_option("--s-max", s_max);
    fscan->add_option("--mode", mode)->check(CLI::IsMember({"closed", "direct"}));

    std::string b_text = "1";
    std::string l1_method = "eta";
    auto* line1 = app.add_subcommand("line1", "zeta(1 + ib)");
    line1->add_option("--b", b_text)->required();
    line1->add_option("--method", l1_method)->check(CLI::IsMember({"eta", "flat", "integral"}));

    std::string k_text = "1";
    auto* zeros = app.add_subcommand("zeros", "eta zeros at b = 2 k pi / ln 2");
    zeros->add_option("--k", k_text, "integer or range a..b")->required();

    std::string lemma = "1";
    long pn = 1, pk = 0, grid = 1000;
    std::string pb = "1";
    auto* probe = app.add_subcommand("probe", "uniform-norm probe against its analytic bound");
    probe->add_option("--lemma", lemma)->check(CLI::IsMember({"1", "2i", "2ii"}))->required();
    probe->add_option("--n", pn)->required();
    probe->add_option("--k", pk);
    probe->add_option("--b", pb);
    probe->add_option("--grid", grid);

    std::string ids = "all";
    auto* fx = app.add_subcommand("forensics", "audit printed formulas against oracles");
    fx->add_option("--ids", ids, "comma-separated formula ids, or all");

    long n_max = 3;
    bool timing = false;
    auto* cmp = app.add_subcommand("compare", "literature representations of zeta(2n+1) side by side");
    cmp->add_option("--n-max", n_max);
    cmp->add_flag("--timing", timing, "add wall-clock column (output no longer reproducible)");

    std::vector<std::string> argv_store = {"zetalab"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    }

    try {
        RunConfig cfg;
        cfg.digits = digits;
        if (digits < 15)
            throw ConfigError("--digits must be at least 15");
        cfg.tol = tol_text ? detail::parse_real(*tol_text, digits, "--tol")
                           : ten_to_minus(std::min(30, digits - 5), digits);
        cfg.prime_cap = prime_cap;
        cfg.format = format == "csv" ? Format::csv : format == "json" ? Format::json : Format::text;
        cfg.output_path = out_path;
        cfg.validate();
        const detail::Ctx ctx{cfg};

        Report rep;
        if (eval->parsed())
            rep = detail::cmd_eval(ctx, ev);
        else if (table->parsed())
            rep = detail::cmd_odd_table(ctx, max_arg, f_text);
        else if (fscan->parsed())
            rep = detail::cmd_fscan(ctx, s_min, s_max, mode);
        else if (line1->parsed())
            rep = detail::cmd_line1(ctx, b_text, l1_method);
        else if (zeros->parsed())
            rep = detail::cmd_zeros(ctx, k_text);
        else if (probe->parsed())
            rep = detail::cmd_probe(ctx, lemma, pn, pk, pb, grid);
        else if (fx->parsed())
            rep = detail::cmd_forensics(ctx, ids);
        else
            rep = detail::cmd_compare(ctx, n_max, timing);

        if (cfg.output_path) {
            std::ofstream f(*cfg.output_path, std::ios::binary);
            if (!f)
                throw ConfigError("cannot open --out file " + *cfg.output_path);
            write_report(rep, cfg.format, f);
        } else {
            write_report(rep, cfg.format, out);
        }
        return 0;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace zetalab::cli

#endif
