// Acceptance suite: every criterion prints one PASS/FAIL/INDETERMINATE line
// and the process exits nonzero if any criterion fails. Tolerances are exact
// integer comparisons throughout; there is no floating point in the engine.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "charp/io.hpp"
#include "charp/parse.hpp"
#include "charp/scenario.hpp"
#include "support/oracle.hpp"

using namespace charp;

namespace {

int failures = 0;
int indeterminates = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(const std::string& name, bool pass, const std::string& detail, double secs) {
    if (!pass) ++failures;
    std::printf("[%s] %s: %s (%.2fs)\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str(),
                secs);
    std::fflush(stdout);
}

void report_indeterminate(const std::string& name, const std::string& why) {
    ++indeterminates;
    std::printf("[INDETERMINATE] %s: %s\n", name.c_str(), why.c_str());
    std::fflush(stdout);
}

Polynomial P(const RingPtr& R, const std::string& s) { return parse_polynomial(R, s); }

// ---------------------------------------------------------------- criterion 1
void criterion_1() {
    Timer t;
    bool ok = true;
    std::string detail;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int n : {2, 3}) {
            RingPtr ring = build_determinantal(p)->ambient();
            std::vector<Polynomial> gens = generic_minors(ring);
            gens.push_back(Polynomial::variable(ring, ring->var_index("x11"), n));
            gens.push_back(Polynomial::variable(ring, ring->var_index("x12"), n));
            GroebnerIdeal I(ring, gens);
            std::set<std::string> computed;
            for (const auto& b : I.reduced_basis()) computed.insert(b.str());
            std::set<std::string> expected;
            for (const auto& b : determinantal_power_family(ring, n)) expected.insert(b.str());
            bool match = computed == expected;
            bool x33_free = true;
            int x33 = ring->var_index("x33");
            for (const auto& m : I.initial_ideal())
                if (m.e[x33]) x33_free = false;
            if (!match || !x33_free) {
                ok = false;
                detail += " p=" + std::to_string(p) + ",n=" + std::to_string(n) +
                          (match ? "" : " basis-mismatch") + (x33_free ? "" : " x33-divides");
            }
        }
    }
    report("criterion-1 reduced basis family, p in {2,3,5}, n in {2,3}", ok,
           ok ? "exact match, initial ideal avoids x33" : detail, t.seconds());
}

// ---------------------------------------------------------------- criterion 2
void criterion_2() {
    Timer t;
    bool ok = true;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int n : {2, 3}) {
            RingPtr ring = build_determinantal(p)->ambient();
            std::vector<Polynomial> gens = generic_minors(ring);
            gens.push_back(Polynomial::variable(ring, ring->var_index("x11"), n));
            gens.push_back(Polynomial::variable(ring, ring->var_index("x12"), n));
            auto Q = QuotientRing::make(ring, gens);
            if (!is_nonzerodivisor(Polynomial::variable(ring, ring->var_index("x33")), *Q))
                ok = false;
        }
    }
    report("criterion-2 x33 nonzerodivisor on A/(x11^n, x12^n)", ok,
           ok ? "true on the whole grid" : "a zerodivisor verdict appeared", t.seconds());
}

// ---------------------------------------------------------------- criterion 3
void criterion_3() {
    Timer t;
    try {
        QRingPtr A = build_determinantal(2);
        const RingPtr& ring = A->ambient();
        auto L = PresentedModule::cyclic(A, {P(ring, "x11"), P(ring, "x12")});
        bool ok = ring_depth(A) == 5;
        auto v = is_finite_pd(L);
        ok = ok && !v.finite && v.certificate.total(6) != 0;
        std::uint64_t beta6 = v.certificate.total(6);
        bool depths = true;
        for (int n : {1, 2}) {
            auto f = FrobeniusPower::make(A, n);
            depths = depths && !has_depth_zero(frobenius_module(L, f));
        }
        Scenario s;
        s.id = "example-3.6";
        s.p = 2;
        s.n = 1;
        ScenarioReport rep = run_scenario(s);
        bool verdict = rep.overall() == CheckStatus::Pass;
        ok = ok && depths && verdict;
        report("criterion-3 pd L infinite and example-3.6 verdict", ok,
               "depth A = 5, beta_6(L) = " + std::to_string(beta6) +
                   ", depth F^n(L) > 0 for n in {1,2}, scenario " +
                   check_status_word(rep.overall()),
               t.seconds());
    } catch (const budget_error& e) {
        report_indeterminate("criterion-3 pd L infinite and example-3.6 verdict", e.what());
    }
}

// ---------------------------------------------------------------- criterion 4
void criterion_4() {
    Timer t;
    try {
        QRingPtr A = build_determinantal(2);
        const RingPtr& ring = A->ambient();
        std::vector<Polynomial> off = {P(ring, "x12"), P(ring, "x13"), P(ring, "x21"),
                                       P(ring, "x23"), P(ring, "x31"), P(ring, "x32")};
        auto N = PresentedModule::cyclic(A, off);
        int dimN = dimension(N);
        auto f = FrobeniusPower::make(A, 1);
        int depthFN = depth(frobenius_module(N, f));
        auto v = is_finite_pd(N);
        bool ok = dimN == 1 && depthFN == 1 && !v.finite && v.certificate.total(6) != 0;
        report("criterion-4 remark-4.6 module N", ok,
               "dim N = " + std::to_string(dimN) + ", depth F(N) = " + std::to_string(depthFN) +
                   ", beta_6(N) = " + std::to_string(v.certificate.total(6)),
               t.seconds());
    } catch (const budget_error& e) {
        report_indeterminate("criterion-4 remark-4.6 module N", e.what());
    }
}

// ---------------------------------------------------------------- criterion 5
void criterion_5() {
    Timer t;
    bool ok = true;
    std::string detail;
    for (std::uint32_t p : {2u, 3u}) {
        Scenario k;
        k.id = "kunz-regular";
        k.p = p;
        ScenarioReport rep = run_scenario(k);
        if (rep.overall() != CheckStatus::Pass) {
            ok = false;
            detail += " kunz(p=" + std::to_string(p) + ") failed";
        }
    }
    Scenario h;
    h.id = "psh-hypersurface";
    ScenarioReport rep = run_scenario(h);
    if (rep.overall() != CheckStatus::Pass) {
        ok = false;
        detail += " hypersurface sweep failed";
    }
    report("criterion-5 kunz flatness and hypersurface rigidity sweeps", ok,
           ok ? "all Tor vanish over regular rings; single vanishing forces finite pd" : detail,
           t.seconds());
}

// ---------------------------------------------------------------- criterion 6
void criterion_6() {
    Timer t;
    bool ok = true;
    std::string detail;

    // regular: every finite-length module has finite pd; equality must hold
    {
        auto R = QuotientRing::polynomial_ring(make_ring(2, {"x", "y"}));
        const RingPtr& amb = R->ambient();
        std::vector<std::vector<std::string>> mods = {
            {"x", "y"}, {"x^2", "y"}, {"x", "y^2"}, {"x^2", "x*y", "y^2"}, {"x^3", "y^2"}};
        for (const auto& gens : mods) {
            std::vector<Polynomial> g;
            for (const auto& s : gens) g.push_back(P(amb, s));
            auto M = PresentedModule::cyclic(R, g);
            for (int n : {1, 2}) {
                auto f = FrobeniusPower::make(R, n);
                auto rep = numerical_rigidity_check(M, f, true);
                if (!rep.equal || rep.hard_failure) {
                    ok = false;
                    detail += " regular-instance failed";
                }
            }
        }
    }
    // hypersurface of dimension one: cyclic quotients by nonzerodivisors
    {
        auto amb = make_ring(2, {"x", "y"});
        auto H = QuotientRing::make(amb, {P(amb, "x^2 + x*y")});
        for (const std::string& s : {"y", "y^2"}) {
            auto M = PresentedModule::cyclic(H, {P(amb, s)});
            if (!module_length(M).finite) continue;
            auto v = is_finite_pd(M);
            if (!v.finite) continue;
            for (int n : {1, 2}) {
                auto f = FrobeniusPower::make(H, n);
                auto rep = numerical_rigidity_check(M, f, true);
                if (!rep.equal || rep.hard_failure) {
                    ok = false;
                    detail += " hypersurface-instance failed";
                }
            }
        }
    }
    // the artinian counterpoint: l(F(R/x^2)) = 4 over F_2[x]/(x^4), not 2
    {
        auto amb = make_ring(2, {"x"});
        auto R4 = QuotientRing::make(amb, {P(amb, "x^4")});
        auto M = PresentedModule::cyclic(R4, {P(amb, "x^2")});
        auto f = FrobeniusPower::make(R4, 1);
        auto rep = numerical_rigidity_check(M, f, false);
        if (!(rep.lhs == 4 && rep.rhs == 2 && !rep.equal)) {
            ok = false;
            detail += " x^4 counterpoint failed";
        }
    }
    report("criterion-6 numerical rigidity arithmetic", ok,
           ok ? "equalities over complete intersections; 4 != 2 on the x^4 instance" : detail,
           t.seconds());
}

// ------------------------------------------------------- criteria 7 and 8
struct SuiteInstance {
    PresentedModule m;
    ElementSequence x;
    QRingPtr ring;
};

std::vector<SuiteInstance> lichtenbaum_suite() {
    std::vector<SuiteInstance> out;
    auto add_ring = [&](QRingPtr R, const std::vector<std::vector<std::string>>& numerators,
                        const std::vector<std::vector<std::string>>& sequences) {
        const RingPtr& amb = R->ambient();
        for (const auto& seq : sequences) {
            std::vector<Polynomial> xs;
            for (const auto& s : seq) xs.push_back(P(amb, s));
            ElementSequence x = certify_sequence(R, xs);
            if (!x.certified_regular()) continue;
            for (const auto& nm : numerators) {
                std::vector<Polynomial> gens;
                for (const auto& s : nm) gens.push_back(P(amb, s));
                PresentedModule m = PresentedModule::cyclic(R, gens);
                if (!nm.empty() && m.is_zero()) continue;
                // finite covolume check happens inside euler_data; prefilter
                PresentedModule mx(quotient_by(R, xs), m.gens(), m.relations());
                if (!module_length(mx).finite) continue;
                out.push_back({m, x, R});
            }
        }
    };

    std::vector<std::vector<std::string>> planes_m = {
        {}, {"x"}, {"y"}, {"x^2"}, {"x*y"}, {"y^2"}, {"x", "y"}, {"x^2", "y"},
        {"x^2", "x*y"}, {"x^2", "y^2"}, {"x^3"}, {"x^2", "x*y", "y^2"}, {"x*y^2"}};
    std::vector<std::vector<std::string>> planes_x = {{"x", "y"}, {"x^2", "y"}, {"x", "y^3"},
                                                      {"x + y", "y^2"}};
    add_ring(QuotientRing::polynomial_ring(make_ring(2, {"x", "y"})), planes_m, planes_x);
    add_ring(QuotientRing::polynomial_ring(make_ring(3, {"x", "y"})), planes_m, planes_x);

    std::vector<std::vector<std::string>> space_m = {
        {}, {"x"}, {"x", "y"}, {"x*y"}, {"x^2"}, {"z"}, {"x", "y", "z"}, {"x^2", "y"}};
    std::vector<std::vector<std::string>> space_x = {{"x", "y", "z"}, {"x^2", "y", "z"}};
    add_ring(QuotientRing::polynomial_ring(make_ring(2, {"x", "y", "z"})), space_m, space_x);
    return out;
}

void criterion_7(const std::vector<SuiteInstance>& suite) {
    Timer t;
    bool ok = suite.size() >= 50;
    std::string detail = std::to_string(suite.size()) + " certified instances";
    for (const auto& inst : suite) {
        EulerData d;
        try {
            d = euler_data(inst.m, inst.x);
        } catch (const engine_error&) {
            continue;
        }
        int c = inst.x.size();
        bool zero_dimensional = inst.m.is_zero();
        int dim_m = zero_dimensional ? -1 : dimension(inst.m);
        if (d.chi < 0) ok = false;
        bool lemma44 = (d.chi == 0) == (dim_m < c);
        if (!lemma44) {
            ok = false;
            detail += " chi-dimension equivalence failed";
        }
        LichtenbaumReport rep = lichtenbaum_check(inst.m, inst.x);
        if (!rep.ok) {
            ok = false;
            detail += " higher-chi check failed";
        }
    }
    report("criterion-7 lichtenbaum suite", ok, detail, t.seconds());
}

void criterion_8(const std::vector<SuiteInstance>& suite) {
    Timer t;
    bool ok = true;
    int applied = 0, equalities = 0;
    for (const auto& inst : suite) {
        if (inst.m.is_zero()) continue;
        auto f = FrobeniusPower::make(inst.ring, 1);
        Prop43Report rep = prop43_check(inst.m, inst.x, f);
        if (rep.status == Prop43Status::UnmetHypothesis) continue;
        ++applied;
        if (rep.status == Prop43Status::HoldsWithEquality) ++equalities;
        if (static_cast<std::int64_t>(rep.lhs) < rep.rhs) ok = false;
    }
    // the dimension-one module over the determinantal ring, along the trace
    try {
        QRingPtr A = build_determinantal(2);
        const RingPtr& ring = A->ambient();
        auto N = PresentedModule::cyclic(A, {P(ring, "x12"), P(ring, "x13"), P(ring, "x21"),
                                             P(ring, "x23"), P(ring, "x31"), P(ring, "x32")});
        ElementSequence trace = certify_sequence(A, {P(ring, "x11 + x22 + x33")});
        auto f = FrobeniusPower::make(A, 1);
        Prop43Report rep = prop43_check(N, trace, f);
        if (rep.status == Prop43Status::UnmetHypothesis) {
            ok = false;
        } else {
            ++applied;
            if (static_cast<std::int64_t>(rep.lhs) < rep.rhs) ok = false;
        }
    } catch (const budget_error&) {
        report_indeterminate("criterion-8 determinantal pipeline instance", "budget");
    }
    report("criterion-8 length inequality", ok,
           std::to_string(applied) + " instances within hypotheses, " +
               std::to_string(equalities) + " with equality",
           t.seconds());
}

// ---------------------------------------------------------------- criterion 9
void criterion_9() {
    Timer t;
    bool ok = true;
    std::string detail;
    long checked = 0;

    // determinantal ideals across the grid: hilbert agreement to degree 8
    // and membership agreement on basis elements and probes
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int n : {0, 2, 3}) { // n = 0 means the plain minor ideal
            RingPtr ring = build_determinantal(p)->ambient();
            std::vector<Polynomial> gens = generic_minors(ring);
            if (n > 0) {
                gens.push_back(Polynomial::variable(ring, ring->var_index("x11"), n));
                gens.push_back(Polynomial::variable(ring, ring->var_index("x12"), n));
            }
            GroebnerIdeal I(ring, gens);
            auto Q = QuotientRing::make(ring, gens);
            auto M = PresentedModule::free_module(Q, GradedFreeModule::of({0}));
            test_oracle::ModuleFrame frame(ring, {0});
            std::vector<ModVec> g;
            for (const auto& f : gens) g.push_back(ModVec::from_poly(f, 0));
            for (std::int64_t d = 0; d <= 8; ++d) {
                ++checked;
                if (hilbert_function(M, d) != test_oracle::hilbert(frame, g, d)) {
                    ok = false;
                    detail += " hilbert mismatch p=" + std::to_string(p);
                }
            }
            for (const auto& b : I.reduced_basis()) {
                ++checked;
                if (!test_oracle::ideal_membership(ring, gens, b)) {
                    ok = false;
                    detail += " basis element rejected by the oracle";
                }
            }
            Polynomial probe = P(ring, "x22*x33");
            ++checked;
            if (I.normal_form(probe).is_zero() !=
                test_oracle::ideal_membership(ring, gens, probe)) {
                ok = false;
                detail += " membership verdict mismatch";
            }
        }
    }

    // module instances: L and N over A, plus the frobenius image of N
    {
        QRingPtr A = build_determinantal(2);
        const RingPtr& ring = A->ambient();
        auto check_module = [&](const PresentedModule& m) {
            test_oracle::ModuleFrame frame(ring, m.gens().twists);
            std::vector<ModVec> rels = m.relations();
            for (auto& c : defining_columns(A, m.rank())) rels.push_back(c);
            for (std::int64_t d = 0; d <= 8; ++d) {
                ++checked;
                if (hilbert_function(m, d) != test_oracle::hilbert(frame, rels, d)) {
                    ok = false;
                    detail += " module hilbert mismatch";
                }
            }
        };
        auto L = PresentedModule::cyclic(A, {P(ring, "x11"), P(ring, "x12")});
        check_module(L);
        auto N = PresentedModule::cyclic(A, {P(ring, "x12"), P(ring, "x13"), P(ring, "x21"),
                                             P(ring, "x23"), P(ring, "x31"), P(ring, "x32")});
        check_module(N);
        auto f = FrobeniusPower::make(A, 1);
        check_module(frobenius_module(N, f));
        check_module(frobenius_module(L, f));
    }

    // two-variable sweep rings from criterion 5/6
    {
        auto amb = make_ring(2, {"x", "y"});
        auto H = QuotientRing::make(amb, {P(amb, "x^2 + x*y")});
        auto M = PresentedModule::cyclic(H, {P(amb, "y")});
        test_oracle::ModuleFrame frame(amb, {0});
        std::vector<ModVec> rels = M.relations();
        for (auto& c : defining_columns(H, 1)) rels.push_back(c);
        for (std::int64_t d = 0; d <= 8; ++d) {
            ++checked;
            if (hilbert_function(M, d) != test_oracle::hilbert(frame, rels, d)) ok = false;
        }
    }

    report("criterion-9 engine vs linear-algebra oracle", ok,
           ok ? std::to_string(checked) + " degreewise comparisons agree" : detail, t.seconds());
}

} // namespace

int main() {
    Timer total;
    std::printf("acceptance suite: exact tolerances, deterministic inputs\n");
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    std::vector<SuiteInstance> suite = lichtenbaum_suite();
    criterion_7(suite);
    criterion_8(suite);
    criterion_9();
    std::printf("summary: %d failure(s), %d indeterminate, %.2fs total\n", failures,
                indeterminates, total.seconds());
    return failures == 0 ? 0 : 1;
}
