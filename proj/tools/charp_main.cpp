#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "charp/io.hpp"
#include "charp/parse.hpp"

using namespace charp;

namespace {

enum ExitCode { kPass = 0, kFail = 1, kIndeterminate = 2, kInputError = 3 };

long env_long(const char* name, long fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    return std::strtol(v, nullptr, 10);
}

// budget caps come from defaults, then environment, then flags
Budget base_budget() {
    Budget b;
    b.max_pairs = env_long("CHARP_MAX_PAIRS", b.max_pairs);
    b.max_basis = env_long("CHARP_MAX_BASIS", b.max_basis);
    b.max_degree = static_cast<int>(env_long("CHARP_MAX_DEGREE", b.max_degree));
    b.max_steps = static_cast<int>(env_long("CHARP_MAX_STEPS", b.max_steps));
    b.max_q = static_cast<std::uint64_t>(env_long("CHARP_MAX_Q", static_cast<long>(b.max_q)));
    b.max_length = env_long("CHARP_MAX_LENGTH", b.max_length);
    return b;
}

std::vector<Polynomial> parse_sequence(const RingPtr& ring, const std::string& text) {
    std::vector<Polynomial> out;
    std::string cur;
    auto flush = [&] {
        std::string t = cur;
        cur.clear();
        size_t a = t.find_first_not_of(" \t");
        if (a == std::string::npos) return;
        out.push_back(parse_polynomial(ring, t));
    };
    for (char c : text) {
        if (c == ';') flush();
        else cur.push_back(c);
    }
    flush();
    return out;
}

void emit(const std::string& json, bool text_mode, const std::string& text) {
    if (text_mode) std::cout << text << "\n";
    else std::cout << json << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"charp: exact commutative algebra over prime fields"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    Budget budget = base_budget();
    double time_limit = 0;
    app.add_option("--max-pairs", budget.max_pairs, "basis computation pair cap");
    app.add_option("--max-basis", budget.max_basis, "basis size cap");
    app.add_option("--max-degree", budget.max_degree, "internal degree cap");
    app.add_option("--max-steps", budget.max_steps, "homological step cap");
    app.add_option("--max-q", budget.max_q, "cap on q = p^n");
    app.add_option("--max-length", budget.max_length, "length enumeration cap");
    app.add_option("--time-limit", time_limit, "wall-clock cap in seconds (0 = none)");

    std::string ring_path, module_path, poly_text, seq_text, scenario_id, data_dir = "data";
    int n = 1, tor_i = 1, steps = 4, chi_i = 0;
    std::uint32_t p_override = 0;
    int vars_override = 0;
    std::uint64_t seed_override = 0;
    bool no_resolution = false;

    auto* gb = app.add_subcommand("gb", "reduced basis of the ideal in a ring file");
    gb->add_option("--ring", ring_path)->required();

    auto* nf = app.add_subcommand("nf", "normal form of a polynomial");
    nf->add_option("--ring", ring_path)->required();
    nf->add_option("--poly", poly_text)->required();

    auto* col = app.add_subcommand("colon", "colon ideal (I : f)");
    col->add_option("--ring", ring_path)->required();
    col->add_option("--poly", poly_text)->required();

    auto* br = app.add_subcommand("bracket", "bracket power I^[q], q = p^n");
    br->add_option("--ring", ring_path)->required();
    br->add_option("--n", n)->required();

    auto* dim = app.add_subcommand("dim", "krull dimension of the ring or module");
    dim->add_option("--ring", ring_path);
    dim->add_option("--module", module_path);

    auto* len = app.add_subcommand("length", "length of the module");
    len->add_option("--module", module_path)->required();

    auto* dep = app.add_subcommand("depth", "depth of the module");
    dep->add_option("--module", module_path)->required();

    auto* res = app.add_subcommand("resolve", "minimal free resolution ranks");
    res->add_option("--module", module_path)->required();
    res->add_option("--steps", steps);

    auto* bet = app.add_subcommand("betti", "graded betti table");
    bet->add_option("--module", module_path)->required();
    bet->add_option("--steps", steps);

    auto* frob = app.add_subcommand("frobenius", "frobenius module F^n(M)");
    frob->add_option("--module", module_path)->required();
    frob->add_option("--n", n);

    auto* tor = app.add_subcommand("tor", "Tor_i(M, f^n R)");
    tor->add_option("--module", module_path)->required();
    tor->add_option("--i", tor_i);
    tor->add_option("--n", n);

    bool flag_gorenstein = false, flag_isolated = false, flag_ci = false;
    auto* rig = app.add_subcommand("rigidity", "combined rigidity report for F^n");
    rig->add_option("--module", module_path)->required();
    rig->add_option("--n", n);
    rig->add_option("--i-max", tor_i);
    rig->add_flag("--assert-gorenstein", flag_gorenstein);
    rig->add_flag("--assert-isolated-singularity", flag_isolated);
    rig->add_flag("--assert-complete-intersection", flag_ci);

    auto* chi_cmd = app.add_subcommand("chi", "euler characteristics against R/x");
    chi_cmd->add_option("--module", module_path)->required();
    chi_cmd->add_option("--seq", seq_text)->required();
    chi_cmd->add_option("--i", chi_i);

    auto* prop = app.add_subcommand("check-prop43", "length inequality for F^n over R/x");
    prop->add_option("--module", module_path)->required();
    prop->add_option("--seq", seq_text)->required();
    prop->add_option("--n", n);

    auto* ver = app.add_subcommand("verify", "run a scripted scenario");
    ver->add_option("scenario", scenario_id)->required();
    ver->add_option("--p", p_override);
    ver->add_option("--n", n);
    ver->add_option("--vars", vars_override);
    ver->add_option("--seed", seed_override);
    ver->add_option("--data", data_dir, "directory holding scenarios/");
    ver->add_flag("--no-resolution", no_resolution, "skip the expensive resolution steps");

    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough(); // global flags may follow the subcommand

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }
    bool text_mode = format == "text";
    if (time_limit <= 0) {
        const char* tl = std::getenv("CHARP_TIME_LIMIT");
        if (tl) time_limit = std::strtod(tl, nullptr);
    }
    if (time_limit > 0) budget.arm_time_limit(time_limit);

    try {
        if (gb->parsed()) {
            ParsedInput in = parse_input_file(ring_path, budget);
            const GroebnerIdeal& I = in.ring->defining();
            std::string t = "basis:";
            for (const auto& b : I.reduced_basis()) t += "\n  " + b.str();
            emit(json_basis(I), text_mode, t);
            return kPass;
        }
        if (nf->parsed()) {
            ParsedInput in = parse_input_file(ring_path, budget);
            Polynomial f = parse_polynomial(in.ring->ambient(), poly_text);
            Polynomial r = in.ring->reduce(f);
            emit(json_polynomial_list("normal_form", {r}), text_mode, r.str());
            return kPass;
        }
        if (col->parsed()) {
            ParsedInput in = parse_input_file(ring_path, budget);
            Polynomial f = parse_polynomial(in.ring->ambient(), poly_text);
            GroebnerIdeal q = colon(in.ring->defining(), f);
            std::string t = "colon basis:";
            for (const auto& b : q.reduced_basis()) t += "\n  " + b.str();
            emit(json_polynomial_list("colon_basis", q.reduced_basis()), text_mode, t);
            return kPass;
        }
        if (br->parsed()) {
            ParsedInput in = parse_input_file(ring_path, budget);
            std::uint64_t p = in.ring->ambient()->field.p();
            std::uint64_t q = 1;
            for (int i = 0; i < n; ++i) {
                budget.check_q(q * p);
                q *= p;
            }
            GroebnerIdeal b = bracket_power(in.ring->defining(), q);
            std::string t = "bracket basis:";
            for (const auto& g : b.reduced_basis()) t += "\n  " + g.str();
            emit(json_polynomial_list("bracket_basis", b.reduced_basis()), text_mode, t);
            return kPass;
        }
        if (dim->parsed()) {
            if (module_path.empty() && ring_path.empty())
                throw engine_error("dim needs --ring or --module");
            ParsedInput in = parse_input_file(module_path.empty() ? ring_path : module_path,
                                              budget);
            int d = in.has_module ? dimension(in.module) : in.ring->krull_dimension();
            emit(json_scalar("dimension", d), text_mode, std::to_string(d));
            return kPass;
        }
        if (len->parsed()) {
            ParsedInput in = parse_input_file(module_path, budget);
            ModuleLength L = module_length(module_of(in, budget));
            emit(json_length(L), text_mode, L.finite ? std::to_string(L.value) : "INFINITE");
            return kPass;
        }
        if (dep->parsed()) {
            ParsedInput in = parse_input_file(module_path, budget);
            int d = depth(module_of(in, budget));
            emit(json_scalar("depth", d), text_mode, std::to_string(d));
            return kPass;
        }
        if (res->parsed() || bet->parsed()) {
            ParsedInput in = parse_input_file(module_path, budget);
            Resolution r = minimal_resolution(module_of(in, budget), steps);
            if (res->parsed()) {
                std::string t = "ranks:";
                for (int i = 0; i <= r.complex.steps(); ++i)
                    t += " " + std::to_string(r.complex.term(i).rank);
                emit(json_resolution(r), text_mode, t);
            } else {
                std::string t = "betti:";
                for (const auto& [k, v] : r.betti.entries)
                    t += "\n  (" + std::to_string(k.first) + "," + std::to_string(k.second) +
                         ") = " + std::to_string(v);
                emit(json_betti(r.betti, r.complete, r.pd), text_mode, t);
            }
            return kPass;
        }
        if (frob->parsed()) {
            ParsedInput in = parse_input_file(module_path, budget);
            PresentedModule m = module_of(in, budget);
            auto f = FrobeniusPower::make(m.ring(), n, budget);
            PresentedModule fm = frobenius_module(m, f);
            std::string t = "rank " + std::to_string(fm.rank()) + ", relations " +
                            std::to_string(fm.relations().size());
            emit(json_presentation("frobenius", fm, f.n, f.q), text_mode, t);
            return kPass;
        }
        if (tor->parsed()) {
            ParsedInput in = parse_input_file(module_path, budget);
            PresentedModule m = module_of(in, budget);
            auto f = FrobeniusPower::make(m.ring(), n, budget);
            PresentedModule t = tor_frobenius(m, f, tor_i);
            ModuleLength L = t.is_zero() ? ModuleLength{true, 0} : module_length(t);
            emit(json_tor(t, tor_i, n), text_mode,
                 "length " + (L.finite ? std::to_string(L.value) : std::string("INFINITE")));
            return kPass;
        }
        if (rig->parsed()) {
            ParsedInput in = parse_input_file(module_path, budget);
            PresentedModule m = module_of(in, budget);
            auto f = FrobeniusPower::make(m.ring(), n, budget);
            RigidityReport rep =
                rigidity_report(m, f, tor_i, flag_gorenstein, flag_isolated, flag_ci);
            emit(json_rigidity(rep), text_mode,
                 "hard_failure " +
                     std::string(rep.tor_table.hard_failure || rep.numerical.hard_failure
                                     ? "true"
                                     : "false"));
            return (rep.tor_table.hard_failure || rep.numerical.hard_failure) ? kFail : kPass;
        }
        if (chi_cmd->parsed()) {
            ParsedInput in = parse_input_file(module_path, budget);
            PresentedModule m = module_of(in, budget);
            ElementSequence x =
                certify_sequence(m.ring(), parse_sequence(m.ring()->ambient(), seq_text), budget);
            EulerData d = euler_data(m, x);
            std::int64_t v = chi_i < static_cast<int>(d.chi_i.size()) ? d.chi_i[chi_i] : 0;
            emit(json_euler(d), text_mode, "chi_" + std::to_string(chi_i) + " = " + std::to_string(v));
            return kPass;
        }
        if (prop->parsed()) {
            ParsedInput in = parse_input_file(module_path, budget);
            PresentedModule m = module_of(in, budget);
            ElementSequence x =
                certify_sequence(m.ring(), parse_sequence(m.ring()->ambient(), seq_text), budget);
            auto f = FrobeniusPower::make(m.ring(), n, budget);
            Prop43Report rep = prop43_check(m, x, f);
            std::string t = "lhs " + std::to_string(rep.lhs) + " rhs " + std::to_string(rep.rhs);
            emit(json_prop43(rep), text_mode, t);
            return kPass;
        }
        if (ver->parsed()) {
            Scenario s;
            std::string path = data_dir + "/scenarios/" + scenario_id + ".scenario";
            std::ifstream probe(path);
            if (probe) {
                s = parse_scenario_text(read_text_file(path));
            } else {
                s.id = scenario_id;
            }
            s.budget = budget;
            if (p_override) s.p = p_override;
            if (ver->count("--n")) s.n = n;
            if (vars_override) s.vars = vars_override;
            if (seed_override) s.seed = seed_override;
            if (no_resolution) s.run_resolution = false;
            ScenarioReport rep = run_scenario(s);
            std::string t;
            for (const auto& c : rep.checks)
                t += "[" + check_status_word(c.status) + "] " + c.name +
                     (c.note.empty() ? "" : " (" + c.note + ")") + "\n";
            t += "overall: " + check_status_word(rep.overall());
            emit(json_scenario(rep), text_mode, t);
            switch (rep.overall()) {
                case CheckStatus::Pass: return kPass;
                case CheckStatus::Fail: return kFail;
                default: return kIndeterminate;
            }
        }
    } catch (const budget_error& e) {
        std::cout << json_error("budget", e.what()) << "\n";
        std::cerr << "INDETERMINATE: " << e.what() << "\n";
        return kIndeterminate;
    } catch (const engine_error& e) {
        std::cout << json_error("input", e.what()) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
