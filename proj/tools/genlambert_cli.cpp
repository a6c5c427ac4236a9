#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <genlambert/genlambert.hpp>

using nlohmann::json;
using namespace genlambert;

namespace {

json num_or_str(double v) {
    if (std::isfinite(v)) return json(v);
    return json(v > 0 ? "inf" : "-inf");
}

std::string bound_str(double v) {
    if (std::isfinite(v)) return format_double(v);
    return v > 0 ? "inf" : "-inf";
}

struct Output {
    std::string format = "text";
};

struct EvalArgs {
    std::optional<double> r, t, s, t1, t2, a;
    int branch = 0;
    std::vector<double> xs;
    bool deriv = false, anti = false;
};

int eval_wr(const Output& out, const EvalArgs& in) {
    if (in.xs.empty()) throw std::invalid_argument("eval: --r needs at least one X argument");
    double r = *in.r;
    BranchLayout L = classify(r);
    json arr = json::array();
    bool csv_header = false;
    for (double x : in.xs) {
        EvalResult er = w_r(r, in.branch, x);
        std::optional<double> dv, av;
        if (in.deriv) dv = w_r_derivative(r, in.branch, x);
        if (in.anti) av = w_r_antiderivative(r, in.branch, x);
        if (out.format == "json") {
            json j{{"x", x},
                   {"value", er.value},
                   {"residual", er.residual},
                   {"iterations", er.iterations}};
            if (dv) j["derivative"] = *dv;
            if (av) j["antiderivative"] = *av;
            arr.push_back(j);
        } else if (out.format == "csv") {
            if (!csv_header) {
                std::cout << "r,branch,x,value,residual,iterations,regime\n";
                csv_header = true;
            }
            std::cout << format_double(r) << "," << in.branch << "," << format_double(x) << ","
                      << format_double(er.value) << "," << format_double(er.residual) << ","
                      << er.iterations << "," << regime_name(L.regime) << "\n";
        } else {
            if (in.xs.size() > 1) std::cout << "x = " << format_double(x) << "\n";
            std::cout << "value      = " << format_double(er.value) << "\n";
            std::cout << "residual   = " << format_double(er.residual) << "\n";
            std::cout << "iterations = " << er.iterations << "\n";
            std::cout << "regime     = " << regime_name(L.regime) << "\n";
            if (dv) std::cout << "derivative = " << format_double(*dv) << "\n";
            if (av) std::cout << "antiderivative = " << format_double(*av) << "\n";
        }
    }
    if (out.format == "json") {
        json j{{"schema", 1},
               {"command", "eval"},
               {"family", "wr"},
               {"r", r},
               {"branch", in.branch},
               {"regime", regime_name(L.regime)}};
        if (arr.size() == 1) {
            for (auto& [key, val] : arr[0].items()) j[key] = val;
        } else {
            j["results"] = arr;
        }
        std::cout << j.dump(2) << "\n";
    }
    return 0;
}

int eval_roots(const Output& out, const EvalArgs& in) {
    RootSet rs;
    json params;
    std::string family;
    if (in.t) {
        family = "ts";
        rs = solve_ts(*in.t, *in.s, 1.0, *in.a);
        params = {{"t", *in.t}, {"s", *in.s}, {"a", *in.a}};
    } else {
        family = "tt";
        rs = solve_tt(*in.t1, *in.t2, *in.a);
        params = {{"t1", *in.t1}, {"t2", *in.t2}, {"a", *in.a}};
    }
    if (out.format == "json") {
        json arr = json::array();
        for (const auto& q : rs.roots)
            arr.push_back({{"x", q.x},
                           {"residual", q.residual},
                           {"multiplicity", q.multiplicity},
                           {"branch", q.branch}});
        json j{{"schema", 1}, {"command", "eval"}, {"family", family}};
        for (auto& [key, val] : params.items()) j[key] = val;
        j["count"] = rs.roots.size();
        j["roots"] = arr;
        std::cout << j.dump(2) << "\n";
    } else if (out.format == "csv") {
        std::cout << "x,residual,multiplicity,branch\n";
        for (const auto& q : rs.roots)
            std::cout << format_double(q.x) << "," << format_double(q.residual) << ","
                      << q.multiplicity << "," << q.branch << "\n";
    } else {
        std::cout << "count = " << rs.roots.size() << "\n";
        for (const auto& q : rs.roots) {
            std::cout << "x = " << format_double(q.x) << " (residual " << format_double(q.residual)
                      << ", multiplicity " << q.multiplicity << ", piece " << q.branch << ")\n";
        }
    }
    return 0;
}

int cmd_eval(const Output& out, const EvalArgs& in) {
    bool ts = in.t || in.s;
    bool tt = in.t1 || in.t2;
    if (in.r && !ts && !tt && !in.a) return eval_wr(out, in);
    if (!in.r && ts && !tt && in.t && in.s && in.a && in.xs.empty()) return eval_roots(out, in);
    if (!in.r && !ts && tt && in.t1 && in.t2 && in.a && in.xs.empty()) return eval_roots(out, in);
    throw std::invalid_argument(
        "eval: give --r with X arguments, or --t --s --a, or --t1 --t2 --a");
}

int cmd_branches(const Output& out, double r) {
    BranchLayout L = classify(r);
    if (out.format == "json") {
        json j{{"schema", 1}, {"command", "branches"}, {"r", r}, {"regime", regime_name(L.regime)}};
        json crit = json::object(), cuts = json::object();
        if (L.critical.alpha) crit["alpha"] = *L.critical.alpha;
        if (L.critical.beta) crit["beta"] = *L.critical.beta;
        if (L.critical.gamma) crit["gamma"] = *L.critical.gamma;
        if (L.critical.alpha) cuts["alpha"] = f_r(r, *L.critical.alpha);
        if (L.critical.beta) cuts["beta"] = f_r(r, *L.critical.beta);
        if (L.critical.gamma) cuts["gamma"] = f_r(r, *L.critical.gamma);
        j["critical"] = crit;
        j["cut_abscissas"] = cuts;
        j["kink_x"] = L.kink_x ? json(*L.kink_x) : json(nullptr);
        json arr = json::array();
        for (const auto& b : L.branches) {
            arr.push_back({{"id", b.id},
                           {"domain", {num_or_str(b.domain.lo), num_or_str(b.domain.hi)}},
                           {"range", {num_or_str(b.range.lo), num_or_str(b.range.hi)}},
                           {"increasing", b.increasing}});
        }
        j["branches"] = arr;
        std::cout << j.dump(2) << "\n";
    } else if (out.format == "csv") {
        std::cout << "id,domain_lo,domain_hi,range_lo,range_hi,increasing\n";
        for (const auto& b : L.branches)
            std::cout << b.id << "," << bound_str(b.domain.lo) << "," << bound_str(b.domain.hi)
                      << "," << bound_str(b.range.lo) << "," << bound_str(b.range.hi) << ","
                      << (b.increasing ? 1 : 0) << "\n";
    } else {
        std::cout << "r = " << format_double(r) << "\n";
        std::cout << "regime = " << regime_name(L.regime) << "\n";
        if (L.critical.alpha) std::cout << "alpha = " << format_double(*L.critical.alpha) << "\n";
        if (L.critical.beta) std::cout << "beta = " << format_double(*L.critical.beta) << "\n";
        if (L.critical.gamma) std::cout << "gamma = " << format_double(*L.critical.gamma) << "\n";
        if (L.critical.alpha)
            std::cout << "cut at f_r(alpha) = " << format_double(f_r(r, *L.critical.alpha)) << "\n";
        if (L.critical.beta)
            std::cout << "cut at f_r(beta) = " << format_double(f_r(r, *L.critical.beta)) << "\n";
        if (L.critical.gamma)
            std::cout << "cut at f_r(gamma) = " << format_double(f_r(r, *L.critical.gamma)) << "\n";
        if (L.kink_x) std::cout << "vertical tangent at x = " << format_double(*L.kink_x) << "\n";
        for (const auto& b : L.branches) {
            std::cout << "branch " << b.id << ": domain [" << bound_str(b.domain.lo) << ", "
                      << bound_str(b.domain.hi) << "], range [" << bound_str(b.range.lo) << ", "
                      << bound_str(b.range.hi) << "], "
                      << (b.increasing ? "increasing" : "decreasing") << "\n";
        }
    }
    return 0;
}

int emit_series(const Output& out, const std::string& kind, const SeriesExpansion& se,
                std::optional<double> eval_at, int terms, bool want_estimate) {
    // which closed form produced the coefficients
    const std::string form = kind == "wr" ? "m_polynomial" : kind == "wts" ? "laguerre"
                                                                           : "bessel_poly";
    std::optional<double> est;
    if (want_estimate) {
        est = estimate_radius(se.coeffs);  // throws below 20 coefficients
    } else if (se.coeffs.size() >= 20) {
        try {
            est = estimate_radius(se.coeffs);
        } catch (const std::exception&) {
        }
    }
    std::optional<EvalOutcome> ev;
    if (eval_at) ev = eval_series(se, *eval_at, terms);
    if (out.format == "json") {
        json j{{"schema", 1},
               {"command", "series"},
               {"kind", kind},
               {"closed_form", form},
               {"constant_term", se.constant_term}};
        j["coefficients"] = se.coeffs;
        if (!se.exact_coeffs.empty()) {
            json ex = json::array();
            for (const auto& q : se.exact_coeffs) ex.push_back(q.get_str());
            j["exact_coefficients"] = ex;
        }
        j["radius"] = se.radius ? json(*se.radius) : json(nullptr);
        j["branch_hint"] = se.branch_hint ? json(*se.branch_hint) : json(nullptr);
        if (est) j["estimated_radius"] = *est;
        if (ev) {
            j["eval"] = {{"at", *eval_at},
                         {"value", ev->value},
                         {"slow_convergence", ev->slow_convergence}};
        }
        std::cout << j.dump(2) << "\n";
    } else if (out.format == "csv") {
        bool exact = !se.exact_coeffs.empty();
        std::cout << (exact ? "n,coefficient,exact,form\n" : "n,coefficient,form\n");
        for (std::size_t i = 0; i < se.coeffs.size(); ++i) {
            std::cout << (i + 1) << "," << format_double(se.coeffs[i]);
            if (exact) std::cout << "," << se.exact_coeffs[i].get_str();
            std::cout << "," << form << "\n";
        }
    } else {
        std::cout << "closed form = " << form << "\n";
        std::cout << "constant term = " << format_double(se.constant_term) << "\n";
        if (se.radius) std::cout << "radius = " << format_double(*se.radius) << "\n";
        if (se.branch_hint) std::cout << "branch hint = " << *se.branch_hint << "\n";
        if (est) std::cout << "estimated radius (tail ratios) = " << format_double(*est) << "\n";
        for (std::size_t i = 0; i < se.coeffs.size(); ++i) {
            std::cout << "c_" << (i + 1) << " = " << format_double(se.coeffs[i]);
            if (!se.exact_coeffs.empty()) std::cout << " = " << se.exact_coeffs[i].get_str();
            std::cout << "\n";
        }
        if (ev)
            std::cout << "value at " << format_double(*eval_at) << " = " << format_double(ev->value)
                      << (ev->slow_convergence ? " (slow convergence)" : "") << "\n";
    }
    return 0;
}

void emit_bigint_rows(const Output& out, const std::string& kind,
                      const std::vector<std::pair<std::string, BigInt>>& rows,
                      const std::string& key_header) {
    if (out.format == "json") {
        json arr = json::array();
        for (const auto& [k, v] : rows) arr.push_back({{key_header, k}, {"value", v.get_str()}});
        json j{{"schema", 1}, {"command", "table"}, {"kind", kind}, {"rows", arr}};
        std::cout << j.dump(2) << "\n";
    } else if (out.format == "csv") {
        std::cout << key_header << ",value\n";
        for (const auto& [k, v] : rows) std::cout << k << "," << v.get_str() << "\n";
    } else {
        for (const auto& [k, v] : rows) std::cout << k << ": " << v.get_str() << "\n";
    }
}

int cmd_table(const Output& out, const std::string& kind, unsigned n, unsigned k,
              const std::optional<std::string>& y_text) {
    if (y_text) {
        if (kind != "M") throw std::invalid_argument("table: --y only applies to kind M");
        BigRat y;
        try {
            y = BigRat(*y_text);
            y.canonicalize();
        } catch (const std::invalid_argument&) {
            try {
                y = rat_from_double(std::stod(*y_text));
            } catch (const std::exception&) {
                throw std::invalid_argument("table: cannot parse --y value");
            }
        }
        BigRat v = m_eval(m_polynomial(n, k), y);
        if (out.format == "json") {
            json j{{"schema", 1}, {"command", "table"}, {"kind", kind}, {"n", n},
                   {"k", k},      {"y", y.get_str()},   {"value", v.get_str()}};
            std::cout << j.dump(2) << "\n";
        } else if (out.format == "csv") {
            std::cout << "y,value\n" << y.get_str() << "," << v.get_str() << "\n";
        } else {
            std::cout << "M_" << k << "^(" << n << ")(" << y.get_str() << ") = " << v.get_str()
                     << "\n";
        }
        return 0;
    }
    std::vector<std::pair<std::string, BigInt>> rows;
    if (kind == "A") {
        CoeffTriangle tri = a_triangle(n);
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned j = 1; j <= i; ++j)
                rows.push_back({std::to_string(i) + "," + std::to_string(j), tri.rows[i - 1][j - 1]});
        emit_bigint_rows(out, kind, rows, "n,k");
    } else if (kind == "C") {
        CoeffTriangle tri = c_triangle_by_recurrence(n, k);
        for (unsigned kk = 1; kk <= k; ++kk)
            for (unsigned i = 1; i <= kk; ++i)
                rows.push_back({std::to_string(i) + "," + std::to_string(kk), tri.rows[kk - 1][i - 1]});
        emit_bigint_rows(out, kind, rows, "i,k");
    } else if (kind == "M") {
        MPolynomial p = m_polynomial(n, k);
        for (unsigned i = 1; i <= k; ++i)
            rows.push_back({std::to_string(i), p.coeffs[i - 1]});
        emit_bigint_rows(out, kind, rows, "power");
    } else if (kind == "stirling") {
        for (unsigned i = 0; i <= n; ++i)
            for (unsigned j = 0; j <= i; ++j)
                rows.push_back({std::to_string(i) + "," + std::to_string(j), stirling2(i, j)});
        emit_bigint_rows(out, kind, rows, "n,k");
    } else if (kind == "fubini") {
        for (unsigned i = 0; i <= k; ++i) rows.push_back({std::to_string(i), fubini(i)});
        emit_bigint_rows(out, kind, rows, "k");
    } else {  // bell
        for (unsigned i = 0; i <= n; ++i) rows.push_back({std::to_string(i), oracle::bell_exact(i)});
        emit_bigint_rows(out, kind, rows, "n");
    }
    return 0;
}

int cmd_report(const Output& out, const std::string& scale_name) {
    using acceptance::Scale;
    Scale scale = scale_name == "full" ? Scale::full : Scale::small;
    std::vector<acceptance::CriterionResult> results = acceptance::run_all(scale);
    int failed = 0;
    if (out.format == "json") {
        json arr = json::array();
        for (const auto& c : results) {
            arr.push_back({{"id", c.id},
                           {"name", c.name},
                           {"passed", c.passed},
                           {"detail", c.detail},
                           {"seconds", c.seconds}});
            if (!c.passed) ++failed;
        }
        json j{{"schema", 1}, {"command", "report"}, {"scale", scale_name}, {"criteria", arr},
               {"failed", failed}};
        std::cout << j.dump(2) << "\n";
    } else if (out.format == "csv") {
        auto quoted = [](const std::string& s) {
            std::string q = "\"";
            for (char ch : s) {
                q += ch;
                if (ch == '"') q += ch;
            }
            return q + "\"";
        };
        std::cout << "id,name,passed,detail,seconds\n";
        for (const auto& c : results) {
            if (!c.passed) ++failed;
            std::cout << c.id << "," << quoted(c.name) << "," << (c.passed ? 1 : 0) << ","
                      << quoted(c.detail) << "," << format_double(c.seconds) << "\n";
        }
    } else {
        for (const auto& c : results) {
            if (!c.passed) ++failed;
            std::printf("%s criterion %2d [%s]: %s (%.3f s)\n", c.passed ? "PASS" : "FAIL", c.id,
                        c.name.c_str(), c.detail.c_str(), c.seconds);
        }
        std::printf("%zu criteria, %d failed\n", results.size(), failed);
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"r-Lambert and generalized Lambert function toolkit"};
    app.require_subcommand(1);
    Output out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    double r = 0.0, t = 0.0, s = 1.0, t1 = 0.0, t2 = 1.0;
    int terms = 12;
    unsigned tn = 7, tk = 8;
    bool want_est = false;
    std::optional<double> eval_at;
    std::optional<std::string> table_y;
    std::string table_kind, scale_name = "small";

    EvalArgs ea;
    std::vector<double> eval_xopt;
    CLI::App* c_eval =
        app.add_subcommand("eval", "evaluate W_r, or solve the ratio/product families");
    c_eval->add_option("-r,--r", ea.r, "additive slope r (W_r mode)");
    c_eval->add_option("X", ea.xs, "arguments for W_r mode");
    c_eval->add_option("-x,--x", eval_xopt, "same as positional X");
    c_eval->add_option("-b,--branch", ea.branch, "branch id")->capture_default_str();
    c_eval->add_flag("--derivative", ea.deriv, "also print dW/dx");
    c_eval->add_flag("--antiderivative", ea.anti, "also print the antiderivative");
    c_eval->add_option("-t,--t", ea.t, "ratio family: upper parameter");
    c_eval->add_option("-s,--s", ea.s, "ratio family: lower parameter");
    c_eval->add_option("--t1", ea.t1, "product family: first parameter");
    c_eval->add_option("--t2", ea.t2, "product family: second parameter");
    c_eval->add_option("-a,--a", ea.a, "right-hand side for the family modes");

    CLI::App* c_br = app.add_subcommand("branches", "branch layout for a given r");
    c_br->add_option("-r,--r", r, "additive slope r")->required();

    CLI::App* c_series = app.add_subcommand("series", "Taylor expansions about a = 0");
    c_series->require_subcommand(1);
    CLI::App* s_wr = c_series->add_subcommand("wr", "W_r expansion at the origin");
    s_wr->add_option("-r,--r", r, "additive slope r")->required();
    CLI::App* s_wts = c_series->add_subcommand("wts", "ratio form e^x (x-t)/(x-s) = a");
    s_wts->add_option("-t,--t", t, "upper parameter")->required();
    s_wts->add_option("-s,--s", s, "lower parameter")->required();
    CLI::App* s_wtt = c_series->add_subcommand("wtt", "product form e^x (x-t1)(x-t2) = a");
    s_wtt->add_option("--t1", t1, "first parameter")->required();
    s_wtt->add_option("--t2", t2, "second parameter")->required();
    for (CLI::App* sc : {s_wr, s_wts, s_wtt}) {
        sc->add_option("--terms", terms, "number of coefficients")->capture_default_str();
        sc->add_option("--eval-at", eval_at, "evaluate the series at this argument");
        sc->add_flag("--estimate-radius", want_est,
                     "require a tail-ratio radius estimate (needs >= 20 terms)");
    }

    CLI::App* c_table = app.add_subcommand("table", "exact integer tables");
    c_table->add_option("kind", table_kind, "A, C, M, stirling, fubini, bell")
        ->required()
        ->check(CLI::IsMember({"A", "C", "M", "stirling", "fubini", "bell"}));
    c_table->add_option("-n,--n", tn, "row parameter")->capture_default_str();
    c_table->add_option("-k,--k", tk, "column parameter")->capture_default_str();
    c_table->add_option("-y,--y", table_y, "evaluate M_k^(n) at this rational point");

    CLI::App* c_report = app.add_subcommand("report", "run the acceptance checks");
    c_report->add_option("--scale", scale_name, "small or full")
        ->check(CLI::IsMember({"small", "full"}))
        ->capture_default_str();

    // let --format appear after the subcommand name
    for (CLI::App* sc : {c_eval, c_br, c_series, s_wr, s_wts, s_wtt, c_table, c_report})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(c_eval)) {
            ea.xs.insert(ea.xs.end(), eval_xopt.begin(), eval_xopt.end());
            return cmd_eval(out, ea);
        }
        if (app.got_subcommand(c_br)) return cmd_branches(out, r);
        if (app.got_subcommand(c_series)) {
            SeriesExpansion se;
            std::string kind;
            if (c_series->got_subcommand(s_wr)) {
                se = series_wr(r, terms);
                kind = "wr";
            } else if (c_series->got_subcommand(s_wts)) {
                se = series_wts(t, s, terms);
                kind = "wts";
            } else {
                se = series_wtt(t1, t2, terms);
                kind = "wtt";
            }
            return emit_series(out, kind, se, eval_at, terms, want_est);
        }
        if (app.got_subcommand(c_table)) return cmd_table(out, table_kind, tn, tk, table_y);
        if (app.got_subcommand(c_report)) return cmd_report(out, scale_name);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
