#include "toroidal/autos.hpp"
#include "toroidal/charseries.hpp"
#include "toroidal/presentation.hpp"
#include "toroidal/suite.hpp"
#include "toroidal/vrep.hpp"
#include "toroidal/weylmod.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>

using namespace toroidal;
using json = nlohmann::json;

namespace {

enum Exit { Ok = 0, Usage = 2, Verification = 3, Budget = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Every setting the subcommands read. Serialized as a flat JSON object.
struct RunConfig {
    std::string type = "A1";
    int max_delta = 2;
    int max_s = 2;
    int ball = -1; ///< -1: max_delta + 1
    int window = 4;
    int tau_min = 0;
    int tau_max = 0;
    int range = 3;
    int box = 1;
    std::size_t budget = 20000;
    std::string a = "1";
    std::string factor = "pq";
    bool collapse_q = false;
    std::string json_out;

    int effective_ball() const { return ball >= 0 ? ball : max_delta + 1; }
};

void to_json(json& j, const RunConfig& c) {
    j = json{{"schema", "1"},       {"type", c.type},     {"max_delta", c.max_delta}, {"max_s", c.max_s},
             {"ball", c.ball},      {"window", c.window}, {"tau_min", c.tau_min},     {"tau_max", c.tau_max},
             {"range", c.range},    {"box", c.box},       {"budget", c.budget},       {"a", c.a},
             {"factor", c.factor},  {"collapse_q", c.collapse_q}, {"json", c.json_out}};
}

void from_json(const json& j, RunConfig& c) {
    static const std::set<std::string> known{"schema", "type",   "max_delta", "max_s",  "ball",
                                             "window", "tau_min", "tau_max",  "range",  "box",
                                             "budget", "a",       "factor",   "collapse_q", "json"};
    for (const auto& [k, v] : j.items())
        if (!known.count(k)) throw UsageError("unknown config key '" + k + "'");
    if (j.contains("schema") && j.at("schema") != "1") throw UsageError("unsupported config schema");
    auto get = [&](const char* key, auto& field) {
        if (j.contains(key)) j.at(key).get_to(field);
    };
    get("type", c.type);
    get("max_delta", c.max_delta);
    get("max_s", c.max_s);
    get("ball", c.ball);
    get("window", c.window);
    get("tau_min", c.tau_min);
    get("tau_max", c.tau_max);
    get("range", c.range);
    get("box", c.box);
    get("budget", c.budget);
    get("a", c.a);
    get("factor", c.factor);
    get("collapse_q", c.collapse_q);
    get("json", c.json_out);
}

Rational parse_rational(const std::string& s) {
    try {
        Rational q(s);
        q.canonicalize();
        if (q.get_den() == 0) throw std::invalid_argument("");
        return q;
    } catch (const std::invalid_argument&) {
        throw UsageError("not a rational number: '" + s + "'");
    }
}

json caps_json(const Caps& caps, int ball) { return {{"max_m", caps.max_m}, {"max_n", caps.max_n}, {"ball", ball}}; }

json table_json(const RunConfig& cfg, const DimTable& t, const std::string& a, int ball) {
    json entries = json::array();
    for (const auto& [l, c] : t.dims.coeffs)
        entries.push_back({{"weight", l.weight}, {"m", l.m}, {"n", l.n}, {"dim", c}});
    return {{"schema", "1"}, {"type", cfg.type}, {"a", a},
            {"caps", caps_json(t.dims.caps, ball)}, {"entries", entries}, {"provenance", t.provenance}};
}

void print_series(const CharSeries& s, const std::string& value) {
    std::cout << std::left << std::setw(16) << "weight" << std::right << std::setw(4) << "m" << std::setw(4) << "n"
              << std::setw(10) << value << "\n";
    for (const auto& [l, c] : s.coeffs) {
        std::string w = "(";
        for (std::size_t i = 0; i < l.weight.size(); ++i) w += (i ? "," : "") + std::to_string(l.weight[i]);
        w += ")";
        std::cout << std::left << std::setw(16) << w << std::right << std::setw(4) << l.m << std::setw(4) << l.n
                  << std::setw(10) << c << "\n";
    }
}

void write_json(const RunConfig& cfg, const json& j) {
    if (cfg.json_out.empty()) return;
    std::ofstream out(cfg.json_out);
    if (!out) throw std::runtime_error("cannot write " + cfg.json_out);
    out << j.dump(2) << "\n";
}

int report_exit(const Report& r) {
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.checked << " checks, "
              << r.failures.size() << " failures\n";
    for (std::size_t i = 0; i < r.failures.size() && i < 20; ++i) std::cout << "  " << r.failures[i] << "\n";
    return r.passed() ? Ok : Verification;
}

json report_json(const Report& r) {
    return {{"name", r.name}, {"checked", r.checked}, {"passed", r.passed()}, {"failures", r.failures}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in toroidal Lie algebras and their level-one Weyl modules"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig flags;
    std::string config_path, save_config;
    std::vector<CLI::Option*> overrides;
    app.add_option("--config", config_path, "JSON config file (flags override it)")->check(CLI::ExistingFile);
    app.add_option("--save-config", save_config, "write the resolved config to this file");
    overrides.push_back(app.add_option("--type", flags.type, "root system, e.g. A1, A2, D4"));
    overrides.push_back(app.add_option("--max-delta", flags.max_delta, "delta-depth cap")->check(CLI::NonNegativeNumber));
    overrides.push_back(app.add_option("--max-s", flags.max_s, "s-degree cap")->check(CLI::NonNegativeNumber));
    overrides.push_back(app.add_option("--ball", flags.ball, "finite weights with (l,l)/2 <= ball"));
    overrides.push_back(app.add_option("--window", flags.window, "D_max of the V(0) window")->check(CLI::NonNegativeNumber));
    overrides.push_back(app.add_option("--tau-min", flags.tau_min, "smallest tau power"));
    overrides.push_back(app.add_option("--tau-max", flags.tau_max, "largest tau power"));
    overrides.push_back(app.add_option("--range", flags.range, "mode range for relation checks")->check(CLI::NonNegativeNumber));
    overrides.push_back(app.add_option("--box", flags.box, "|k|,|l| bound of operator boxes")->check(CLI::NonNegativeNumber));
    overrides.push_back(app.add_option("--budget", flags.budget, "monomials per label (env TOROIDAL_BUDGET)"));
    overrides.push_back(app.add_option("--a", flags.a, "specialization point (rational)"));
    overrides.push_back(app.add_option("--factor", flags.factor, "product factor: none, p or pq")
                            ->check(CLI::IsMember({"none", "p", "pq"})));
    overrides.push_back(app.add_flag("--collapse-q", flags.collapse_q, "set q = 1"));
    overrides.push_back(app.add_option("--json", flags.json_out, "write a JSON artifact"));

    std::string x_text, y_text, auto_name;
    auto* bracket = app.add_subcommand("bracket", "bracket of two elements");
    bracket->add_option("x", x_text)->required();
    bracket->add_option("y", y_text)->required();

    auto* autom = app.add_subcommand("auto", "apply an automorphism: S, Sinv, T0, Ttheta, tau");
    autom->add_option("name", auto_name)->required()->check(CLI::IsMember({"S", "Sinv", "T0", "Ttheta", "tau"}));
    autom->add_option("x", x_text)->required();

    auto* pres = app.add_subcommand("presentation", "check the defining relations on the generator images");

    auto* v0 = app.add_subcommand("v0", "the vertex module V(0)");
    v0->require_subcommand(1);
    auto* v0_basis = v0->add_subcommand("basis", "enumerate a window");
    auto* v0_act = v0->add_subcommand("act", "apply an element to the vacuum");
    v0_act->add_option("x", x_text)->required();
    auto* v0_axioms = v0->add_subcommand("check-axioms", "module axiom on the safe sub-window");

    auto* weyl = app.add_subcommand("weyl", "level-one Weyl module");
    weyl->require_subcommand(1);
    auto* weyl_rank = weyl->add_subcommand("rank", "rank of the spanning set in V_a");
    auto* weyl_pres = weyl->add_subcommand("presented", "dimensions of the presented module W(Lambda_0)");
    auto* weyl_verify = weyl->add_subcommand("verify", "relations, rewriting identities and spanning");

    auto* chr = app.add_subcommand("char", "character of L(Lambda_0) times a product factor");

    auto* verify_all = app.add_subcommand("verify-all", "run the acceptance suite");
    std::vector<int> only;
    verify_all->add_option("--only", only, "criterion numbers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : Usage;
    }

    try {
        RunConfig cfg;
        bool window_given = app.get_option("--window")->count() > 0;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            json j;
            try {
                in >> j;
            } catch (const json::exception& e) {
                throw UsageError(std::string("config: ") + e.what());
            }
            window_given = window_given || j.contains("window");
            try {
                cfg = j.get<RunConfig>();
            } catch (const json::exception& e) {
                throw UsageError(std::string("config: ") + e.what());
            }
        }
        if (const char* env = std::getenv("TOROIDAL_BUDGET")) {
            try {
                cfg.budget = std::stoull(env);
            } catch (const std::exception&) {
                throw UsageError("TOROIDAL_BUDGET is not a number");
            }
        }
        {
            json given = flags, merged = cfg;
            for (auto* opt : overrides)
                if (opt->count() > 0) {
                    std::string key = opt->get_name().substr(2);
                    for (auto& ch : key)
                        if (ch == '-') ch = '_';
                    merged[key] = given[key];
                }
            cfg = merged.get<RunConfig>();
        }
        if (!save_config.empty()) {
            std::ofstream out(save_config);
            out << json(cfg).dump(2) << "\n";
        }

        RootSystemPtr rs;
        try {
            rs = RootSystem::build(cfg.type);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        TorLie alg(rs);
        auto parse = [&](const std::string& s) {
            try {
                return alg.parse(s);
            } catch (const std::exception& e) {
                throw UsageError(std::string("cannot parse '") + s + "': " + e.what());
            }
        };

        if (*bracket) {
            TorElt r = alg.bracket(parse(x_text), parse(y_text));
            std::cout << alg.format(r) << "\n";
            write_json(cfg, {{"schema", "1"}, {"type", cfg.type}, {"result", alg.format(r)}});
            return Ok;
        }
        if (*autom) {
            TorElt x = parse(x_text), r;
            if (auto_name == "S") r = apply_S(x, 1);
            else if (auto_name == "Sinv") r = apply_S(x, -1);
            else if (auto_name == "T0") r = apply_T0(alg, x);
            else if (auto_name == "Ttheta") r = apply_Ttheta(alg, x);
            else r = tau_shift(alg, parse_rational(cfg.a), x);
            std::cout << alg.format(r) << "\n";
            write_json(cfg, {{"schema", "1"}, {"type", cfg.type}, {"auto", auto_name}, {"result", alg.format(r)}});
            return Ok;
        }
        if (*pres) {
            Report r = verify_presentation(alg, cfg.range);
            r.name = "presentation";
            write_json(cfg, {{"schema", "1"}, {"type", cfg.type}, {"report", report_json(r)}});
            return report_exit(r);
        }
        if (*v0_basis) {
            Window w{cfg.window, cfg.tau_min, cfg.tau_max};
            auto states = enumerate_basis(*rs, w);
            VertexModule vm(rs);
            json list = json::array();
            for (const auto& st : states) {
                std::cout << vm.format(st) << "\n";
                list.push_back(vm.format(st));
            }
            auto fc = factor_counts(*rs, w);
            std::cout << states.size() << " states; factorization predicts " << fc.product() << "\n";
            write_json(cfg, {{"schema", "1"}, {"type", cfg.type},
                             {"window", {{"dmax", w.dmax}, {"tau_min", w.tau_min}, {"tau_max", w.tau_max}}},
                             {"states", list}, {"count", states.size()}, {"factorized", fc.product()}});
            return states.size() == fc.product() ? Ok : Verification;
        }
        if (*v0_act) {
            VertexModule vm(rs);
            VElt r = vm.act(parse(x_text), vacuum(*rs));
            std::cout << vm.format(r) << "\n";
            write_json(cfg, {{"schema", "1"}, {"type", cfg.type}, {"result", vm.format(r)}});
            return Ok;
        }
        if (*v0_axioms) {
            VertexModule vm(rs);
            Report r = check_module_axiom(alg, vm, basis_box(*rs, cfg.box), Window{cfg.window, cfg.tau_min, cfg.tau_max});
            r.name = "module axiom";
            write_json(cfg, {{"schema", "1"}, {"type", cfg.type}, {"report", report_json(r)}});
            return report_exit(r);
        }
        if (*weyl_rank) {
            VertexModule vm(rs);
            WeylConfig wc{rs, parse_rational(cfg.a), Caps{cfg.max_delta, 0}, cfg.effective_ball(), cfg.budget};
            DimTable t = rank_spanning(vm, wc);
            print_series(t.dims, "dim");
            write_json(cfg, table_json(cfg, t, cfg.a, wc.ball));
            return Ok;
        }
        if (*weyl_pres) {
            WeylConfig wc{rs, 0, Caps{cfg.max_delta, cfg.max_s}, cfg.effective_ball(), cfg.budget};
            DimTable t = presented_weyl_dims(alg, wc);
            print_series(t.dims, "dim");
            write_json(cfg, table_json(cfg, t, "0", wc.ball));
            return Ok;
        }
        if (*weyl_verify) {
            VertexModule vm(rs);
            PresentedWeyl pw(alg, std::max(cfg.max_s, 3), cfg.budget);
            std::vector<Report> reports{verify_hw_relations(alg, vm, pw),
                                        verify_rewriting(pw, {1, 2}, std::max(cfg.max_delta, 2)),
                                        verify_spanning(pw, cfg.max_delta, cfg.effective_ball()),
                                        verify_induction_transport(alg, vm, enumerate_basis(*rs, Window{2, -1, 1}))};
            int code = Ok;
            json arr = json::array();
            for (const auto& r : reports) {
                if (report_exit(r) != Ok) code = Verification;
                arr.push_back(report_json(r));
            }
            write_json(cfg, {{"schema", "1"}, {"type", cfg.type}, {"reports", arr}});
            return code;
        }
        if (*chr) {
            Caps caps{cfg.max_delta, cfg.factor == "pq" ? cfg.max_s : 0};
            CharSeries s = char_L0(*rs, caps);
            if (cfg.factor == "p") s = product_expand(s, ProductFactor::P);
            if (cfg.factor == "pq") s = product_expand(s, ProductFactor::PQ);
            if (cfg.collapse_q) s = collapse_q(s);
            print_series(s, "coeff");
            json entries = json::array();
            for (const auto& [l, c] : s.coeffs)
                entries.push_back({{"weight", l.weight}, {"m", l.m}, {"n", l.n}, {"coeff", c}});
            write_json(cfg, {{"schema", "1"}, {"type", cfg.type}, {"factor", cfg.factor},
                             {"collapse_q", cfg.collapse_q}, {"caps", caps_json(s.caps, -1)}, {"entries", entries}});
            return Ok;
        }
        if (*verify_all) {
            SuiteConfig sc;
            sc.type = cfg.type;
            sc.max_delta = cfg.max_delta;
            sc.max_delta_q = cfg.max_delta;
            sc.max_s = cfg.max_s;
            sc.budget = cfg.budget;
            if (window_given) sc.window = cfg.window;
            std::printf("%-4s %3s  %-26s %10s %9s\n", "", "id", "criterion", "checks", "seconds");
            bool ok = true;
            json crit = json::array();
            run_suite(sc, only, [&](const CriterionResult& r) {
                std::printf("%-4s %3d  %-26s %10zu %9.2f\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                            r.checked, r.seconds);
                for (std::size_t i = 0; i < r.failures.size() && i < 10; ++i)
                    std::printf("           %s\n", r.failures[i].c_str());
                std::fflush(stdout);
                ok = ok && r.passed;
                crit.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"checked", r.checked},
                                {"failures", r.failures}});
            });
            std::time_t now = std::time(nullptr);
            char stamp[32];
            std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
            write_json(cfg, {{"schema", "1"}, {"config", json(cfg)}, {"timestamp", stamp}, {"criteria", crit}});
            return ok ? Ok : Verification;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return Budget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return Ok;
}
