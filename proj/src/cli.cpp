#include "irrcount/cli.hpp"

#include "irrcount/bounds.hpp"
#include "irrcount/census.hpp"
#include "irrcount/ffpoly.hpp"
#include "irrcount/hessfam.hpp"
#include "irrcount/lifting.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace irrcount::cli {

using nlohmann::ordered_json;

namespace {

const char* const kBudgetEnv = "IRRCOUNT_BUDGET";

struct Globals {
    std::string out;  // csv | json; empty selects the subcommand default
    std::string out_file;
    unsigned jobs = 1;
    std::string budget;
    std::uint64_t seed = 1;

    Int budget_value() const
    {
        std::string text = budget;
        if (text.empty()) {
            const char* env = std::getenv(kBudgetEnv);
            text = env ? env : "100000000";
        }
        Int b;
        if (b.set_str(text, 10) != 0 || b < 0) throw std::invalid_argument("invalid budget: " + text);
        return b;
    }
};

std::string verdict_text(bool pass) { return pass ? "PASS" : "FAIL"; }

std::string opt_fraction(const std::optional<Rational>& q) { return q ? to_fraction(*q) : "NA"; }

ordered_json verdicts_json(const std::vector<Verdict>& vs)
{
    ordered_json arr = ordered_json::array();
    for (const auto& v : vs)
        arr.push_back({{"id", v.id}, {"computed", v.computed}, {"bound", v.bound}, {"verdict", verdict_text(v.pass)}});
    return arr;
}

ordered_json formula_json(const FormulaValue& f)
{
    ordered_json j{{"value", opt_fraction(f.value)}, {"applicable", f.applicable}};
    if (!f.reason.empty()) j["reason"] = f.reason;
    return j;
}

ordered_json bounds_json(const BoundReport& b)
{
    return {{"alps", formula_json(b.alps)}, {"thm11_main", formula_json(b.thm11_main)}, {"thm12", formula_json(b.thm12)}};
}

ordered_json certified_json(const CertifiedBound& cb)
{
    ordered_json slots = ordered_json::array();
    for (const auto& m : cb.per_slot_min) slots.push_back(m.get_str());
    ordered_json j{{"pi_star_lb", to_fraction(cb.pi_star_lb)},
                   {"pi_star", cb.pi_star_exact ? cb.pi_star_exact->get_str() : "NA"},
                   {"per_slot_min", slots},
                   {"sum_lifts", cb.bound_exact ? cb.bound_exact->get_str() : "NA"},
                   {"certified", cb.bound_certified.get_str()},
                   {"spec_bound", cb.spec_bound.get_str()},
                   {"degraded", cb.degraded}};
    j["notes"] = cb.notes;
    return j;
}

// Writes either a JSON document or CSV lines; CSV carries the run
// configuration on a leading comment line.
class Emitter {
public:
    Emitter(std::ostream& out, ordered_json config, std::string format)
        : out_(out), config_(std::move(config)), format_(std::move(format)) {}

    bool json() const { return format_ == "json"; }

    void emit_json(ordered_json body)
    {
        ordered_json doc{{"config", config_}};
        for (auto& [k, v] : body.items()) doc[k] = v;
        out_ << doc.dump(2) << '\n';
    }

    void emit_csv(const std::string& header, const std::vector<std::string>& rows)
    {
        out_ << "# config: " << config_.dump() << '\n' << header << '\n';
        for (const auto& r : rows) out_ << r << '\n';
    }

private:
    std::ostream& out_;
    ordered_json config_;
    std::string format_;
};

std::string join(const std::vector<std::string>& cells)
{
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + cells[i];
    return s;
}

unsigned parse_unsigned(std::uint64_t v, const char* what)
{
    if (v > 1'000'000) throw std::invalid_argument(std::string(what) + " is out of range");
    return static_cast<unsigned>(v);
}

std::uint64_t parse_unsigned_text(const std::string& text, const char* what)
{
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }) ||
        text.size() > 18)
        throw std::invalid_argument(std::string("invalid ") + what + ": " + text);
    return std::stoull(text);
}

Int parse_int(const std::string& text, const char* what)
{
    Int v;
    if (v.set_str(text, 10) != 0) throw std::invalid_argument(std::string("invalid ") + what + ": " + text);
    return v;
}

}  // namespace

std::vector<std::uint64_t> parse_list(const std::string& text)
{
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    auto number = [&](const std::string& s) -> std::uint64_t {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw std::invalid_argument("invalid list element: '" + s + "'");
        return std::stoull(s);
    };
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(number(item));
            continue;
        }
        const std::uint64_t a = number(item.substr(0, dots)), b = number(item.substr(dots + 2));
        if (a > b) throw std::invalid_argument("empty range: " + item);
        if (b - a > 1'000'000) throw std::invalid_argument("range too long: " + item);
        for (std::uint64_t v = a; v <= b; ++v) out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out_stream, std::ostream& err)
{
    CLI::App app{"Exact counts and certified lower bounds for irreducible characteristic polynomials", "irrcount"};
    app.set_help_flag("--help", "Print usage and exit");
    app.require_subcommand(1, 1);
    Globals g;
    app.add_option("--out", g.out, "Report format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out-file", g.out_file, "Write the report to this file instead of stdout");
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
    app.add_option("--budget", g.budget, "Maximum number of enumerated objects");
    app.add_option("--seed", g.seed, "Sampling seed");

    std::function<int(std::ostream&)> run;
    auto sub = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->fallthrough();
        return s;
    };

    // census
    std::uint64_t c_n = 0;
    std::string c_h = "1", c_domain = "nonneg", c_mode = "exact";
    std::uint64_t c_samples = 10000;
    bool c_spec = false;
    auto* census = sub("census", "Brute-force or sampled census of bounded-height matrices");
    census->add_option("--n", c_n, "Matrix dimension")->required();
    census->add_option("--h", c_h, "Height bound H");
    census->add_option("--domain", c_domain)->check(CLI::IsMember({"nonneg", "symmetric"}));
    census->add_option("--mode", c_mode)->check(CLI::IsMember({"exact", "sample"}));
    census->add_option("--samples", c_samples);
    census->add_flag("--spec", c_spec, "Count distinct eigenvalues (n <= 4)");

    // bijection-check
    unsigned b_k = 1;
    std::string b_h = "2";
    auto* bij = sub("bijection-check", "Exhaustively verify charpoly: B -> F is a bijection");
    bij->add_option("--k", b_k)->required();
    bij->add_option("--h", b_h)->required();

    // pi-star
    std::uint64_t ps_p = 2;
    std::string ps_n = "4..13";
    auto* pistar = sub("pi-star", "pi_p(n), pi*_p(n) and their explicit bounds");
    pistar->add_option("--p", ps_p);
    pistar->add_option("--n", ps_n, "Degrees, e.g. 4..13 or 3,5,7");

    // corollary-check
    std::string cc_n = "4..20";
    auto* corollary = sub("corollary-check", "Verify pi*_2(n) >= 2^n/(7n) by enumeration");
    corollary->add_option("--n", cc_n);

    // lift
    unsigned l_n = 5;
    std::string l_h = "3";
    std::uint64_t l_p = 2;
    bool l_enumerate = false;
    auto* lift = sub("lift", "Count lifts of constrained irreducibles mod p into F");
    lift->add_option("--n", l_n)->required();
    lift->add_option("--h", l_h)->required();
    lift->add_option("--p", l_p);
    lift->add_flag("--enumerate", l_enumerate, "List every source g and its lifts (JSON)");

    // bound
    unsigned bd_n = 5;
    std::string bd_h = "3", bd_p = "auto", bd_mode = "exact";
    auto* bound = sub("bound", "Closed-form bounds with the lifting bound and verdicts");
    bound->add_option("--n", bd_n)->required();
    bound->add_option("--h", bd_h)->required();
    bound->add_option("--p", bd_p, "auto or a prime");
    bound->add_option("--mode", bd_mode)->check(CLI::IsMember({"exact", "certified"}));

    // bound-table
    std::string bt_n = "5,7,9", bt_h = "3,5,7,9";
    auto* table = sub("bound-table", "Bound formulas and lift sums over a parameter grid");
    table->add_option("--n-list", bt_n);
    table->add_option("--h-list", bt_h);

    // cross-check
    unsigned x_k = 2;
    std::string x_h = "3";
    std::uint64_t x_p = 2;
    auto* cross = sub("cross-check", "Check lifts against the forward image of B");
    cross->add_option("--k", x_k)->required();
    cross->add_option("--h", x_h)->required();
    cross->add_option("--p", x_p);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out_stream, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out_stream, err);
        err << app.help();
        return kUsage;
    }

    ordered_json config{{"subcommand", app.get_subcommands().front()->get_name()}};
    for (const auto* opt : app.get_subcommands().front()->get_options()) {
        if (opt->get_name() == "--help" || opt->count() == 0) continue;
        config[opt->get_name()] = opt->as<std::string>();
    }
    Int budget;
    try {
        budget = g.budget_value();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    config["--budget"] = budget.get_str();
    config["--seed"] = std::to_string(g.seed);

    std::ofstream file;
    std::ostream* out = &out_stream;
    if (!g.out_file.empty()) {
        file.open(g.out_file);
        if (!file) {
            err << "cannot open output file " << g.out_file << '\n';
            return kUsage;
        }
        out = &file;
    }
    auto emitter = [&](const char* default_format) {
        return Emitter(*out, config, g.out.empty() ? default_format : g.out);
    };

    try {

        if (census->parsed()) {
            CensusConfig cfg;
            cfg.n = parse_unsigned(c_n, "--n");
            cfg.h = parse_int(c_h, "--h");
            cfg.domain = c_domain == "nonneg" ? EntryDomain::Nonneg : EntryDomain::Symmetric;
            cfg.mode = c_mode == "exact" ? CensusMode::Exact : CensusMode::Sample;
            cfg.samples = c_samples;
            cfg.seed = g.seed;
            cfg.jobs = g.jobs;
            cfg.budget = budget;
            cfg.spec = c_spec;
            const auto rep = census_run(cfg);
            const auto verdicts = compare(rep, eval_bounds(cfg.n, cfg.h));
            const std::string spec = rep.spec_count ? rep.spec_count->get_str() : "NA";
            const std::string mode = rep.estimate ? "sample-ESTIMATE" : "exact";
            auto em = emitter("csv");
            if (em.json()) {
                ordered_json body{{"n", cfg.n},
                                  {"h", cfg.h.get_str()},
                                  {"domain", to_string(cfg.domain)},
                                  {"total", rep.total_matrices.get_str()},
                                  {"distinct", rep.distinct_charpolys},
                                  {"irreducible_distinct", rep.distinct_irreducible_charpolys},
                                  {"irreducible_matrices", rep.matrices_with_irreducible_charpoly},
                                  {"spec", spec},
                                  {"inconclusive", rep.inconclusive_count},
                                  {"mode", mode}};
                if (rep.estimate) {
                    body["samples"] = cfg.samples;
                    body["irreducible_fraction"] = rep.irreducible_fraction;
                    body["irreducible_fraction_stderr"] = rep.irreducible_fraction_stderr;
                }
                body["verdicts"] = verdicts_json(verdicts);
                em.emit_json(std::move(body));
            } else {
                em.emit_csv("n,h,domain,total,distinct,irreducible_distinct,irreducible_matrices,spec,inconclusive,mode",
                            {join({std::to_string(cfg.n), cfg.h.get_str(), to_string(cfg.domain),
                                   rep.total_matrices.get_str(), std::to_string(rep.distinct_charpolys),
                                   std::to_string(rep.distinct_irreducible_charpolys),
                                   std::to_string(rep.matrices_with_irreducible_charpoly), spec,
                                   std::to_string(rep.inconclusive_count), mode})});
            }
            return all_pass(verdicts) ? kOk : kVerdictFailed;
        }

        if (bij->parsed()) {
            const auto rep = bijection_check(FamilyParams(b_k, parse_int(b_h, "--h")), budget, g.jobs);
            auto em = emitter("json");
            if (em.json()) {
                ordered_json body{{"k", rep.params.k},
                                  {"h", rep.params.h.get_str()},
                                  {"family_size", rep.family_size.get_str()},
                                  {"images", rep.images},
                                  {"distinct", rep.distinct},
                                  {"violations", rep.violations},
                                  {"degenerate", rep.degenerate},
                                  {"verdict", verdict_text(rep.pass())}};
                em.emit_json(std::move(body));
            } else {
                em.emit_csv("k,h,family_size,images,distinct,violations,verdict",
                            {join({std::to_string(rep.params.k), rep.params.h.get_str(), rep.family_size.get_str(),
                                   std::to_string(rep.images), std::to_string(rep.distinct),
                                   std::to_string(rep.violations.size()), verdict_text(rep.pass())})});
            }
            return rep.pass() ? kOk : kVerdictFailed;
        }

        if (pistar->parsed()) {
            bool ok = true;
            std::vector<std::string> rows;
            ordered_json arr = ordered_json::array();
            for (auto nn : parse_list(ps_n)) {
                const unsigned n = parse_unsigned(nn, "--n");
                if (n < 1) throw std::invalid_argument("--n values must be >= 1");
                const auto r = irr_count_report(ps_p, n, budget, g.jobs);
                bool pass = r.pi_interval_ok && r.pi_star_deviation_ok.value_or(true);
                if (ps_p == 2 && n >= 4 && r.pi_star_exact)
                    pass = pass && meets(*r.pi_star_exact, Rational(pow_ui(2, n), Int(7 * n)));
                ok = ok && pass;
                const std::string star = r.pi_star_exact ? r.pi_star_exact->get_str() : "NA";
                rows.push_back(join({std::to_string(ps_p), std::to_string(n), r.pi_exact.get_str(), star,
                                     to_fraction(r.pi_star_lower), to_fraction(r.pi_star_upper), verdict_text(pass)}));
                arr.push_back({{"p", ps_p},
                               {"n", n},
                               {"pi", r.pi_exact.get_str()},
                               {"pi_star", star},
                               {"lower", to_fraction(r.pi_star_lower)},
                               {"upper", to_fraction(r.pi_star_upper)},
                               {"verdict", verdict_text(pass)}});
            }
            auto em = emitter("csv");
            if (em.json())
                em.emit_json({{"rows", arr}});
            else
                em.emit_csv("p,n,pi,pi_star,lower,upper,verdict", rows);
            return ok ? kOk : kVerdictFailed;
        }

        if (corollary->parsed()) {
            const auto ns = parse_list(cc_n);
            const auto [lo, hi] = std::minmax_element(ns.begin(), ns.end());
            const auto rows = corollary_check(parse_unsigned(*lo, "--n"), parse_unsigned(*hi, "--n"), budget, g.jobs);
            bool ok = true;
            std::vector<std::string> lines;
            ordered_json arr = ordered_json::array();
            for (const auto& r : rows) {
                if (std::find(ns.begin(), ns.end(), r.n) == ns.end()) continue;
                ok = ok && r.pass;
                lines.push_back(join({std::to_string(r.n), r.pi_star.get_str(), to_fraction(r.bound), verdict_text(r.pass)}));
                arr.push_back({{"n", r.n}, {"pi_star", r.pi_star.get_str()}, {"bound", to_fraction(r.bound)},
                               {"verdict", verdict_text(r.pass)}});
            }
            auto em = emitter("csv");
            if (em.json())
                em.emit_json({{"rows", arr}});
            else
                em.emit_csv("n,pi_star,bound,verdict", lines);
            return ok ? kOk : kVerdictFailed;
        }

        auto family_from_n = [](unsigned n, const Int& h) {
            if (n < 3 || n % 2 == 0) throw std::invalid_argument("--n must be odd and >= 3");
            return FamilyParams((n - 1) / 2, h);
        };

        if (lift->parsed()) {
            const Int h = parse_int(l_h, "--h");
            const LiftParams lp(family_from_n(l_n, h), l_p);
            const auto cb = certified_lower_bound(lp, BoundMode::ExactIfFeasible, budget, g.jobs);
            const auto bounds = eval_bounds(l_n, h);
            const auto verdicts = compare(cb, bounds);
            const bool pass = all_pass(verdicts);
            ordered_json body{{"n", l_n},
                              {"h", h.get_str()},
                              {"p", l_p},
                              {"pi_star", cb.pi_star_exact ? cb.pi_star_exact->get_str() : "NA"},
                              {"sum_lifts", cb.bound_exact ? cb.bound_exact->get_str() : "NA"},
                              {"certified", cb.bound_certified.get_str()},
                              {"thm12_rhs", opt_fraction(bounds.thm12.value)},
                              {"pass", pass}};
            auto em = emitter("json");
            if (em.json()) {
                body["verdicts"] = verdicts_json(verdicts);
                if (l_enumerate) {
                    if (!cb.bound_exact) throw BudgetExceeded("lift --enumerate: J_p is over budget", pow_ui(l_p, l_n - 2));
                    if (*cb.bound_exact > budget) throw BudgetExceeded("lift --enumerate: too many lifts", *cb.bound_exact);
                    ordered_json sources = ordered_json::array();
                    for (const auto& src : enumerate_constrained_irreducibles(l_p, l_n, budget, g.jobs)) {
                        ordered_json lifts = ordered_json::array();
                        for (const auto& f : enumerate_lifts(src, lp, budget)) lifts.push_back(f.to_poly().to_text());
                        sources.push_back({{"g", src.to_text()}, {"count", lifts.size()}, {"lifts", lifts}});
                    }
                    body["sources"] = sources;
                }
                em.emit_json(std::move(body));
            } else {
                em.emit_csv("n,h,p,pi_star,sum_lifts,certified,thm12_rhs,verdict",
                            {join({std::to_string(l_n), h.get_str(), std::to_string(l_p), body["pi_star"].get<std::string>(),
                                   body["sum_lifts"].get<std::string>(), cb.bound_certified.get_str(),
                                   opt_fraction(bounds.thm12.value), verdict_text(pass)})});
            }
            return pass ? kOk : kVerdictFailed;
        }

        auto smallest_coprime_prime = [](const Int& h) -> std::uint64_t {
            for (std::uint64_t p = 2;; ++p)
                if (is_prime_u64(p) && !mpz_divisible_ui_p(h.get_mpz_t(), p)) return p;
        };
        auto pick_prime = [&](unsigned n, const Int& h, const std::string& choice) -> std::uint64_t {
            if (choice != "auto") return parse_unsigned_text(choice, "--p");
            if (h % 2 == 1) return 2;
            if ((n - 1) / 2 >= 3) return choose_prime(n, h);
            return smallest_coprime_prime(h);
        };

        if (bound->parsed()) {
            const Int h = parse_int(bd_h, "--h");
            const auto bounds = eval_bounds(bd_n, h);
            const std::uint64_t p = pick_prime(bd_n, h, bd_p);
            const LiftParams lp(family_from_n(bd_n, h), p);
            const auto cb = certified_lower_bound(lp, bd_mode == "exact" ? BoundMode::ExactIfFeasible : BoundMode::BoundOnly,
                                                  budget, g.jobs);
            const auto verdicts = compare(cb, bounds);
            ordered_json body{{"n", bd_n}, {"h", h.get_str()}, {"p", p}};
            body["bounds"] = bounds_json(bounds);
            body["lifting"] = certified_json(cb);
            body["verdicts"] = verdicts_json(verdicts);
            body["pass"] = all_pass(verdicts);
            auto em = emitter("json");
            if (em.json()) {
                em.emit_json(std::move(body));
            } else {
                em.emit_csv("n,h,p,alps,thm11_main,thm12,sum_lifts,certified,verdict",
                            {join({std::to_string(bd_n), h.get_str(), std::to_string(p), opt_fraction(bounds.alps.value),
                                   opt_fraction(bounds.thm11_main.value), opt_fraction(bounds.thm12.value),
                                   cb.bound_exact ? cb.bound_exact->get_str() : "NA", cb.bound_certified.get_str(),
                                   verdict_text(all_pass(verdicts))})});
            }
            return all_pass(verdicts) ? kOk : kVerdictFailed;
        }

        if (table->parsed()) {
            bool ok = true;
            std::vector<std::string> rows;
            ordered_json arr = ordered_json::array();
            for (auto nn : parse_list(bt_n)) {
                for (auto hh : parse_list(bt_h)) {
                    const unsigned n = parse_unsigned(nn, "--n-list");
                    const Int h(hh);
                    const auto bounds = eval_bounds(n, h);
                    std::string sum = "NA", verdict = "NA";
                    if (n >= 3 && n % 2 == 1 && h >= 1) {
                        const LiftParams lp(family_from_n(n, h), smallest_coprime_prime(h));
                        const auto cb = certified_lower_bound(lp, BoundMode::ExactIfFeasible, budget, g.jobs);
                        sum = cb.bound_exact ? cb.bound_exact->get_str() : "NA";
                        const auto verdicts = compare(cb, bounds);
                        if (!verdicts.empty()) {
                            verdict = verdict_text(all_pass(verdicts));
                            ok = ok && all_pass(verdicts);
                        }
                    }
                    rows.push_back(join({std::to_string(n), h.get_str(), opt_fraction(bounds.alps.value),
                                         opt_fraction(bounds.thm11_main.value), opt_fraction(bounds.thm12.value), sum,
                                         verdict}));
                    arr.push_back({{"n", n},
                                   {"h", h.get_str()},
                                   {"alps", opt_fraction(bounds.alps.value)},
                                   {"thm11_main", opt_fraction(bounds.thm11_main.value)},
                                   {"thm12", opt_fraction(bounds.thm12.value)},
                                   {"sum_lifts", sum},
                                   {"verdict", verdict}});
                }
            }
            auto em = emitter("csv");
            if (em.json())
                em.emit_json({{"rows", arr}});
            else
                em.emit_csv("n,h,alps,thm11_main,thm12,sum_lifts,verdict", rows);
            return ok ? kOk : kVerdictFailed;
        }

        if (cross->parsed()) {
            const LiftParams lp(FamilyParams(x_k, parse_int(x_h, "--h")), x_p);
            const auto rep = census_vs_construction(lp, budget, g.jobs);
            ordered_json body{{"k", rep.k},
                              {"h", rep.h.get_str()},
                              {"p", rep.p},
                              {"family_size", rep.family_size},
                              {"sources", rep.sources},
                              {"sum_lifts", rep.sum_lifts.get_str()},
                              {"lifts_enumerated", rep.lifts_enumerated},
                              {"lifts_in_image", rep.lifts_in_image},
                              {"irreducible_members", rep.irreducible_members},
                              {"inconclusive_members", rep.inconclusive_members},
                              {"violations", rep.violations},
                              {"verdict", verdict_text(rep.pass())}};
            auto em = emitter("json");
            if (em.json()) {
                em.emit_json(std::move(body));
            } else {
                em.emit_csv("k,h,p,family_size,sources,sum_lifts,lifts_in_image,irreducible_members,verdict",
                            {join({std::to_string(rep.k), rep.h.get_str(), std::to_string(rep.p),
                                   std::to_string(rep.family_size), std::to_string(rep.sources), rep.sum_lifts.get_str(),
                                   std::to_string(rep.lifts_in_image), std::to_string(rep.irreducible_members),
                                   verdict_text(rep.pass())})});
            }
            return rep.pass() ? kOk : kVerdictFailed;
        }
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    err << app.help();
    return kUsage;
}

}  // namespace irrcount::cli
