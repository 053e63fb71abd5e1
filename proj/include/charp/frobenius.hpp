#ifndef CHARP_FROBENIUS_HPP
#define CHARP_FROBENIUS_HPP

#include "charp/module.hpp"

namespace charp {

// The n-th Frobenius power on a fixed ring: q = p^n, overflow-checked.
struct FrobeniusPower {
    int n = 1;
    std::uint64_t q = 0;
    QRingPtr ring;

    static FrobeniusPower make(QRingPtr r, int n, const Budget& budget = {}) {
        if (n < 1) throw engine_error("frobenius iteration count must be positive");
        FrobeniusPower f;
        f.n = n;
        f.ring = std::move(r);
        std::uint64_t p = f.ring->ambient()->field.p();
        std::uint64_t q = 1;
        for (int i = 0; i < n; ++i) {
            if (q > budget.max_q / p) throw budget_error("q = p^n exceeds the configured cap");
            q *= p;
        }
        budget.check_q(q);
        f.q = q;
        return f;
    }
};

// Base change along f^n: presentation entries to the q-th power, degree
// twists scaled by q.
PresentedModule frobenius_module(const PresentedModule& m, const FrobeniusPower& f);

// Tor_i(M, f^n R): homology of the entrywise q-th power of the minimal
// resolution; Tor_0 is the Frobenius module itself.
PresentedModule tor_frobenius(const PresentedModule& m, const FrobeniusPower& f, int i);

enum class TorState { Zero, Nonzero, Indeterminate };

struct TorEntry {
    int i = 0;
    TorState state = TorState::Indeterminate;
    ModuleLength length; // filled when the module has finite length
};

// Vanishing table of Tor_i(M, f^n R) for 1 <= i <= i_max, cross-checked
// against the finite-pd verdict.
struct PshReport {
    int i_max = 0;
    std::vector<TorEntry> entries;
    bool pd_known = false;
    bool pd_finite = false;
    bool hard_failure = false; // pd finite but some Tor in range is nonzero
    std::string note;
};
PshReport psh_vanishing_check(const PresentedModule& m, const FrobeniusPower& f, int i_max);

enum class RigidityVerdict { NotStronglyRigid, Inconclusive, Indeterminate };

struct StrongRigidityReport {
    RigidityVerdict verdict = RigidityVerdict::Indeterminate;
    bool pd_infinite = false;
    bool frobenius_depth_positive = false;
    bool gorenstein_asserted = false;          // caller-supplied hypothesis
    bool isolated_singularity_asserted = false; // caller-supplied hypothesis
    std::uint64_t module_hash = 0;
    std::string note;
};
// Witness search: pd L infinite together with depth F^n(L) > 0 rules out
// strong rigidity of f^n R. Ring hypotheses are recorded, never inferred.
StrongRigidityReport strong_rigidity_witness(const PresentedModule& l, const FrobeniusPower& f,
                                             bool gorenstein_asserted,
                                             bool isolated_singularity_asserted);

struct NumericalRigidityReport {
    std::uint64_t lhs = 0; // l(F^n(M))
    std::uint64_t rhs = 0; // p^{nd} l(M)
    bool equal = false;
    bool pd_checked = false;
    bool pd_finite = false;
    bool hard_failure = false; // equality over an asserted complete intersection with pd infinite
    std::string note;
};
// Compares l(F^n(M)) against p^{nd} l(M); over rings asserted to be complete
// intersections, equality must be accompanied by finite projective dimension.
NumericalRigidityReport numerical_rigidity_check(const PresentedModule& m,
                                                 const FrobeniusPower& f,
                                                 bool complete_intersection_asserted);

// block-diagonal direct sum of presentations
PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b);

// One-stop rigidity record for a module at a fixed Frobenius power: the Tor
// table, depth data of F^n(M), the pd verdict, and both predicate verdicts.
// Reports carry the presentation hash so every entry is reproducible.
struct RigidityReport {
    std::uint64_t module_hash = 0;
    int n = 1;
    std::uint64_t q = 0;
    PshReport tor_table;
    bool frobenius_depth_positive = false;
    int frobenius_depth = -1; // -1 when not computed
    RigidityVerdict strong = RigidityVerdict::Indeterminate;
    bool numerical_applicable = false; // finite length input
    NumericalRigidityReport numerical;
    bool gorenstein_asserted = false;
    bool isolated_singularity_asserted = false;
    bool complete_intersection_asserted = false;
};

RigidityReport rigidity_report(const PresentedModule& m, const FrobeniusPower& f, int i_max,
                               bool gorenstein_asserted, bool isolated_singularity_asserted,
                               bool complete_intersection_asserted);

} // namespace charp

#endif
