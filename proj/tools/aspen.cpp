#include <gmpxx.h>

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aspen/algebra.hpp"
#include "aspen/bijections.hpp"
#include "aspen/enumerate.hpp"
#include "aspen/formulas.hpp"
#include "aspen/objects.hpp"
#include "aspen/serialize.hpp"
#include "aspen/verify.hpp"
#include "json.hpp"

using nlohmann::ordered_json;
using namespace aspen;

namespace {

constexpr int kBruteLimit = 7;  // brute enumeration beyond this order is impractical

struct CountOptions {
    std::string kind;
    int n = 0, l = -1, r = -1, k = -1, lambda = -1, m = 0;
    std::string method = "brute";
    bool by_rho = false, by_tau = false, plain = false;
    int jobs = 1;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void require_set(bool cond, const std::string& what) {
    if (!cond) throw UsageError(what);
}

void guard_brute(int n) {
    if (n > kBruteLimit)
        throw UsageError("brute enumeration supports n <= 7; use --method detsum");
    if (n == kBruteLimit)
        std::cerr << "note: brute enumeration at n = 7 takes a while; --method detsum is instant\n";
}

ordered_json params_json(const CountOptions& o) {
    ordered_json p;
    if (o.kind == "ast" || o.kind == "asm") p["n"] = o.n;
    if (o.kind == "asp") p = {{"n", o.n}, {"l", o.l}, {"r", o.r}};
    if (o.kind == "magog") p = {{"m", o.m}, {"n", o.n}, {"k", o.k}, {"lambda", o.lambda}};
    if (o.kind == "gog") p = {{"m", o.m}, {"n", o.n}, {"k", o.k}, {"l", o.l}};
    return p;
}

int emit_count(const CountOptions& o, const mpz_class& count, const WeightPolynomial* genpoly) {
    if (o.plain) {
        if (genpoly) {
            const auto cs = genpoly->coeff_strings();
            for (size_t i = 0; i < cs.size(); ++i) std::cout << (i ? " " : "") << cs[i];
            std::cout << "\n";
        } else {
            std::cout << count.get_str() << "\n";
        }
        return 0;
    }
    ordered_json j;
    j["object"] = o.kind;
    j["params"] = params_json(o);
    j["method"] = o.method;
    if (genpoly) j["genpoly"] = genpoly->coeff_strings();
    j["count"] = count.get_str();
    j["factorization"] = format_factorization(count, "*");
    std::cout << j.dump() << "\n";
    return 0;
}

int run_count(const CountOptions& o) {
    if (o.kind == "asp") {
        require_set(o.n >= 2, "asp needs --n >= 2 (margin windows are empty below order 2)");
        require_set(o.l >= 0 && o.r >= 0, "asp needs --l and --r");
        WeightPolynomial g;
        if (o.method == "brute") {
            guard_brute(o.n);
            g = asp_genpoly(o.n, o.l, o.r, o.jobs);
        } else if (o.method == "detsum") {
            g = detsum_genpoly(o.n, o.l, o.r);
        } else if (o.method == "pfaffian") {
            g = pfaffian_genpoly(o.n, o.l, o.r);
        } else if (o.method == "ct") {
            require_set(o.n <= 4, "--method ct expands the constant term symbolically; n <= 4 only");
            g = ct_genpoly(o.n, o.l, o.r);
        } else {
            throw UsageError("asp methods: brute, detsum, pfaffian, ct");
        }
        return emit_count(o, g.eval(1), o.by_rho ? &g : nullptr);
    }
    if (o.kind == "ast") {
        require_set(o.n >= 1, "ast needs --n >= 1");
        mpz_class c;
        if (o.method == "brute") {
            guard_brute(o.n);
            c = ast_count(o.n, o.jobs);
        } else if (o.method == "product") {
            c = ast_count_product_formula(o.n);
        } else {
            throw UsageError("ast methods: brute, product");
        }
        WeightPolynomial g;
        if (o.by_rho) {
            require_set(o.n >= 2, "--by-rho needs --n >= 2");
            guard_brute(o.n);
            g = asp_genpoly(o.n, 0, 2 * o.n - 3, o.jobs);
        }
        return emit_count(o, c, o.by_rho ? &g : nullptr);
    }
    if (o.kind == "magog") {
        require_set(o.method == "brute", "magog counts only by brute scan");
        require_set(o.n >= 1 && o.k >= 0 && o.lambda >= 0, "magog needs --n, --k, --lambda");
        guard_brute(o.n);
        const MagogShape s{o.m, o.n, o.k, o.lambda};
        if (o.by_tau) {
            const WeightPolynomial g = magog_genpoly(s, o.jobs);
            return emit_count(o, g.eval(1), &g);
        }
        return emit_count(o, magog_count(s, o.jobs), nullptr);
    }
    if (o.kind == "gog") {
        require_set(o.method == "brute", "gog counts only by brute scan");
        require_set(o.n >= 1 && o.k >= 0 && o.l >= 0, "gog needs --n, --k, --l");
        guard_brute(o.n);
        return emit_count(o, gog_count({o.m, o.n, o.k, o.l}, o.jobs), nullptr);
    }
    if (o.kind == "asm") {
        require_set(o.method == "brute", "asm counts only by brute scan");
        require_set(o.n >= 1, "asm needs --n >= 1");
        guard_brute(o.n);
        return emit_count(o, asm_count(o.n, o.jobs), nullptr);
    }
    throw UsageError("count objects: ast, asp, magog, gog, asm");
}

int run_table(int n, bool cross_check, bool csv, bool json, bool force, int jobs) {
    if ((n < 4 || n > 7) && !force)
        throw UsageError("published tables cover n = 4..7; pass --force to compute others");
    require_set(n >= 2, "table needs n >= 2");
    if (cross_check && n > 6) {
        std::cerr << "note: --cross-check runs brute enumeration, supported for n <= 6; skipping\n";
        cross_check = false;
    }
    const auto table = compute_table(n, cross_check, jobs);
    bool cross_failed = false;
    for (const auto& c : table)
        if (c.cross_checked && !c.cross_ok) cross_failed = true;

    if (json) {
        ordered_json j;
        j["object"] = "table";
        j["params"] = {{"n", n}, {"cross_check", cross_check}};
        j["cells"] = ordered_json::array();
        for (const auto& c : table) {
            ordered_json cell = {{"r", c.r},
                                 {"l", c.l},
                                 {"count", c.computed.get_str()},
                                 {"factorization", c.factorization}};
            if (!c.printed.empty()) {
                cell["printed"] = c.printed;
                cell["matches_printed"] = c.matches_printed;
                cell["erratum"] = c.erratum;
            }
            if (c.cross_checked) cell["cross_ok"] = c.cross_ok;
            j["cells"].push_back(cell);
        }
        std::cout << j.dump() << "\n";
        return cross_failed ? 1 : 0;
    }
    if (csv) {
        std::cout << "n,r,l,count,factorization,printed,matches_printed,erratum,cross_ok\n";
        for (const auto& c : table) {
            std::cout << n << "," << c.r << "," << c.l << "," << c.computed.get_str() << ","
                      << c.factorization << "," << c.printed << ",";
            if (!c.printed.empty()) std::cout << (c.matches_printed ? "true" : "false");
            std::cout << "," << (c.erratum ? "true" : "false") << ",";
            if (c.cross_checked) std::cout << (c.cross_ok ? "true" : "false");
            std::cout << "\n";
        }
        return cross_failed ? 1 : 0;
    }

    // Pretty grid: rows by r, columns by l, cells in dot-separated factored form.
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> head{"n=" + std::to_string(n)};
    for (int l = 0; l <= n - 2; ++l) head.push_back("l=" + std::to_string(l));
    grid.push_back(head);
    for (int r = n - 1; r <= 2 * n - 3; ++r) {
        std::vector<std::string> row{"r=" + std::to_string(r)};
        for (const auto& c : table)
            if (c.r == r) row.push_back(format_factorization(c.computed, "·"));
        grid.push_back(row);
    }
    // Display width counts code points, not bytes: the dot separator is two bytes wide.
    const auto display_width = [](const std::string& s) {
        size_t w = 0;
        for (const unsigned char c : s)
            if ((c & 0xC0) != 0x80) ++w;
        return w;
    };
    std::vector<size_t> width(grid[0].size(), 0);
    for (const auto& row : grid)
        for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], display_width(row[i]));
    for (const auto& row : grid) {
        for (size_t i = 0; i < row.size(); ++i)
            std::cout << (i ? "  " : "") << row[i]
                      << std::string(width[i] - display_width(row[i]), ' ');
        std::cout << "\n";
    }
    for (const auto& c : table) {
        if (!c.printed.empty() && !c.matches_printed)
            std::cout << (c.erratum ? "ERRATUM" : "MISMATCH") << " r=" << c.r << " l=" << c.l
                      << ": published " << c.printed << ", computed " << c.computed.get_str()
                      << " = " << c.factorization << "\n";
        if (c.cross_checked && !c.cross_ok)
            std::cout << "CROSS-CHECK FAILED r=" << c.r << " l=" << c.l << "\n";
    }
    if (cross_check && !cross_failed)
        std::cout << "cross-check: " << table.size() << "/" << table.size()
                  << " cells confirmed by enumeration\n";
    return cross_failed ? 1 : 0;
}

int emit_report(const VerificationReport& rep, const std::string& object, int max_n, bool json,
                bool conjecture) {
    if (json) {
        ordered_json j;
        j["object"] = object;
        j["target"] = rep.target;
        j["params"] = {{"max_n", max_n}};
        j["checked"] = rep.checked;
        j["passed"] = rep.passed;
        j["failed"] = rep.failed;
        j["errata"] = rep.errata;
        j["mismatches"] = rep.mismatches;
        j["findings"] = rep.findings;
        j["ok"] = rep.ok();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << rep.target << ": checked " << rep.checked << " cells, passed " << rep.passed;
        if (conjecture)
            std::cout << ", mismatched " << rep.mismatches;
        else
            std::cout << ", failed " << rep.failed;
        std::cout << "\n";
        for (const auto& f : rep.findings) std::cout << "  " << f << "\n";
        std::cout << (rep.ok() && (!conjecture || rep.mismatches == 0) ? "PASS" : "FAIL") << "\n";
    }
    return rep.ok() ? 0 : 1;
}

int run_verify(const std::string& target, int max_n, int jobs, bool json) {
    const std::map<std::string, int> defaults{{"main-theorem", 5}, {"pfaffian", 5},
                                              {"lgv", 4},          {"bijection", 4},
                                              {"reflection", 5},   {"asm-corollary", 5},
                                              {"catalan", 7}};
    const auto it = defaults.find(target);
    if (it == defaults.end())
        throw UsageError(
            "verify targets: main-theorem, pfaffian, lgv, bijection, reflection, asm-corollary, "
            "catalan");
    const int n = max_n > 0 ? max_n : it->second;
    VerificationReport rep;
    if (target == "main-theorem") rep = verify_main_theorem(n, jobs);
    if (target == "pfaffian") rep = verify_pfaffian(n);
    if (target == "lgv") rep = verify_lgv(n);
    if (target == "bijection") rep = verify_bijection(n);
    if (target == "reflection") rep = verify_reflection(n);
    if (target == "asm-corollary") rep = verify_asm_corollary(n, jobs);
    if (target == "catalan") rep = verify_catalan(n, jobs);
    return emit_report(rep, "verify", n, json, false);
}

int run_conjecture(const std::string& name, int max_n, int jobs, bool json) {
    if (name != "behrend") throw UsageError("conjecture names: behrend");
    const int n = max_n > 0 ? max_n : 6;
    const VerificationReport rep = conjecture_behrend(n, jobs);
    emit_report(rep, "conjecture", n, json, true);
    return rep.ok() ? 0 : 1;  // open-question mismatches do not fail the run
}

int run_trace(int l, int r, const std::vector<std::string>& steps, bool json) {
    const PathTuple t = PathTuple::from_steps(steps);
    const int n = t.order();
    if (!tuple_in_family(t, l, r))
        throw UsageError("the tuple is not a family member for these margins");
    const KissingTuple k = shift(t);
    const GtPattern g = kissing_to_gt(k);
    const MagogPentagon p = gt_to_magog(g, l, r);
    if (json) {
        ordered_json j;
        j["object"] = "bijection-trace";
        j["params"] = {{"n", n}, {"l", l}, {"r", r}};
        j["steps"] = steps;
        ordered_json ends = ordered_json::array(), kends = ordered_json::array();
        for (int i = 1; i <= n - 1; ++i) ends.push_back(t.endpoint(i));
        for (int i = 1; i <= n - 1; ++i) kends.push_back(k.endpoint(i));
        j["endpoints"] = ends;
        j["kissing_endpoints"] = kends;
        j["north_ending"] = t.north_count();
        j["pattern"] = g.rows();
        j["pentagon"] = p.rows();
        j["tau"] = tau(p);
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "steps:";
    for (const auto& s : steps) std::cout << " " << s;
    std::cout << "\nendpoints:";
    for (int i = 1; i <= n - 1; ++i) std::cout << " " << t.endpoint(i);
    std::cout << "\nkissing endpoints:";
    for (int i = 1; i <= n - 1; ++i) std::cout << " " << k.endpoint(i);
    std::cout << "\nnorth-ending paths: " << t.north_count() << "\n";
    std::cout << to_text(g) << to_text(p);
    std::cout << "tau: " << tau(p) << " (north-ending + 1)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting, formulas, and verification for alternating sign pentagons"};
    app.require_subcommand(1);

    CountOptions co;
    bool json = false, csv = false, cross_check = false, force = false;
    int n = 0, l = -1, r = -1, jobs = 1, max_n = 0;
    std::string target, name;
    std::vector<std::string> steps;

    CLI::App* count = app.add_subcommand("count", "count objects of one shape");
    count->add_option("object", co.kind, "ast | asp | magog | gog | asm")->required();
    count->add_option("--n", co.n, "order");
    count->add_option("--l", co.l, "left margin (asp) or gog corner size");
    count->add_option("--r", co.r, "right margin");
    count->add_option("--k", co.k, "number of trapezoid columns / pentagon rows");
    count->add_option("--lambda", co.lambda, "magog diagonal cutoff");
    count->add_option("--m", co.m, "row bound offset");
    count->add_option("--method", co.method, "brute | detsum | pfaffian | ct | product");
    count->add_flag("--by-rho", co.by_rho, "emit the rho generating polynomial");
    count->add_flag("--by-tau", co.by_tau, "emit the tau generating polynomial");
    count->add_flag("--plain", co.plain, "bare integer (or coefficients) instead of JSON");
    count->add_option("--jobs", co.jobs, "worker threads for brute scans")->check(CLI::PositiveNumber);

    CLI::App* table = app.add_subcommand("table", "counting table for one order with factorizations");
    table->add_option("--n", n, "order, 4..7 without --force")->required();
    table->add_flag("--cross-check", cross_check, "re-derive every cell by brute enumeration (n <= 6)");
    table->add_flag("--csv", csv, "machine-readable CSV");
    table->add_flag("--json", json, "machine-readable JSON");
    table->add_flag("--force", force, "allow orders outside the published 4..7 range");
    table->add_option("--jobs", jobs, "worker threads for the cross-check")->check(CLI::PositiveNumber);

    CLI::App* verify = app.add_subcommand("verify", "run one verification sweep");
    verify->add_option("target", target,
                       "main-theorem | pfaffian | lgv | bijection | reflection | asm-corollary | catalan")
        ->required();
    verify->add_option("--max-n", max_n, "largest order in the sweep");
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_flag("--json", json, "machine-readable JSON");

    CLI::App* conjecture = app.add_subcommand("conjecture", "sweep an open conjecture; mismatches are findings");
    conjecture->add_option("name", name, "behrend")->required();
    conjecture->add_option("--max-n", max_n, "largest order in the sweep");
    conjecture->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    conjecture->add_flag("--json", json, "machine-readable JSON");

    CLI::App* trace = app.add_subcommand("bijection-trace", "walk one tuple through the chain to its pentagon");
    trace->add_option("--l", l, "left margin")->required();
    trace->add_option("--r", r, "right margin")->required();
    trace->add_option("steps", steps, "step strings of paths 1..n-1, e.g. N NE NEN")->required();
    trace->add_flag("--json", json, "machine-readable JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (count->parsed()) return run_count(co);
        if (table->parsed()) return run_table(n, cross_check, csv, json, force, jobs);
        if (verify->parsed()) return run_verify(target, max_n, jobs, json);
        if (conjecture->parsed()) return run_conjecture(name, max_n, jobs, json);
        if (trace->parsed()) return run_trace(l, r, steps, json);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "invalid object: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
