#include "charp/frobenius.hpp"

namespace charp {

namespace {

ModVec entrywise_power(const ModVec& v, std::uint64_t q, int nv) {
    std::vector<ModTerm> out;
    out.reserve(v.terms().size());
    // (sum c m)^q termwise: coefficients are Frobenius-fixed, exponents scale
    for (const auto& tm : v.terms()) out.push_back({tm.pos, tm.m.power(q, nv), tm.c});
    return ModVec::adopt_sorted(std::move(out)); // uniform scaling preserves the order
}

} // namespace

PresentedModule frobenius_module(const PresentedModule& m, const FrobeniusPower& f) {
    require_same_qring(m.ring(), f.ring);
    const int nv = m.ring()->ambient()->nvars();
    GradedFreeModule gens;
    gens.rank = m.rank();
    for (auto t : m.gens().twists) gens.twists.push_back(t * static_cast<std::int64_t>(f.q));
    std::vector<ModVec> rels;
    rels.reserve(m.relations().size());
    for (const auto& c : m.relations()) rels.push_back(entrywise_power(c, f.q, nv));
    return PresentedModule(m.ring(), std::move(gens), std::move(rels), m.budget());
}

PresentedModule tor_frobenius(const PresentedModule& m, const FrobeniusPower& f, int i) {
    if (i < 0) throw engine_error("Tor index must be nonnegative");
    if (i == 0) return frobenius_module(m, f);
    const QRingPtr& R = m.ring();
    const int nv = R->ambient()->nvars();
    Resolution res = minimal_resolution(m, i + 1);
    if (res.complete && res.pd < i) return PresentedModule::zero_module(R);

    FreeComplex twisted;
    twisted.ring = R;
    twisted.f0.rank = res.complex.f0.rank;
    for (auto t : res.complex.f0.twists)
        twisted.f0.twists.push_back(t * static_cast<std::int64_t>(f.q));
    for (const auto& d : res.complex.d) {
        GradedMatrix td;
        td.target.rank = d.target.rank;
        for (auto t : d.target.twists)
            td.target.twists.push_back(t * static_cast<std::int64_t>(f.q));
        td.source.rank = d.source.rank;
        for (auto t : d.source.twists)
            td.source.twists.push_back(t * static_cast<std::int64_t>(f.q));
        for (const auto& c : d.cols) td.cols.push_back(entrywise_power(c, f.q, nv));
        twisted.d.push_back(std::move(td));
    }
    return homology(twisted, i);
}

PshReport psh_vanishing_check(const PresentedModule& m, const FrobeniusPower& f, int i_max) {
    PshReport rep;
    rep.i_max = i_max;
    if (m.is_zero()) {
        rep.pd_known = true;
        rep.pd_finite = true;
        rep.note = "zero module: vacuous pass";
        for (int i = 1; i <= i_max; ++i) rep.entries.push_back({i, TorState::Zero, {true, 0}});
        return rep;
    }
    try {
        auto v = is_finite_pd(m);
        rep.pd_known = true;
        rep.pd_finite = v.finite;
    } catch (const budget_error&) {
        rep.pd_known = false;
    }
    for (int i = 1; i <= i_max; ++i) {
        TorEntry e;
        e.i = i;
        try {
            PresentedModule t = tor_frobenius(m, f, i);
            e.state = t.is_zero() ? TorState::Zero : TorState::Nonzero;
            if (e.state == TorState::Nonzero) {
                e.length = module_length(t);
            } else {
                e.length = {true, 0};
            }
        } catch (const budget_error&) {
            e.state = TorState::Indeterminate;
        }
        rep.entries.push_back(e);
    }
    if (rep.pd_known && rep.pd_finite) {
        for (const auto& e : rep.entries)
            if (e.state == TorState::Nonzero) {
                rep.hard_failure = true;
                rep.note = "finite projective dimension with a nonvanishing Tor against f^n R";
            }
    }
    if (rep.pd_known && !rep.pd_finite && rep.note.empty()) {
        bool all_zero = true;
        for (const auto& e : rep.entries)
            if (e.state != TorState::Zero) all_zero = false;
        if (all_zero)
            rep.note = "all tested Tor vanish at this n; the converse requires every n";
    }
    return rep;
}

StrongRigidityReport strong_rigidity_witness(const PresentedModule& l, const FrobeniusPower& f,
                                             bool gorenstein_asserted,
                                             bool isolated_singularity_asserted) {
    StrongRigidityReport rep;
    rep.gorenstein_asserted = gorenstein_asserted;
    rep.isolated_singularity_asserted = isolated_singularity_asserted;
    rep.module_hash = l.presentation_hash();
    if (l.ring()->krull_dimension() <= 0)
        throw engine_error("strong rigidity witness requires a ring of positive dimension");
    try {
        auto v = is_finite_pd(l);
        if (v.finite) {
            rep.verdict = RigidityVerdict::Inconclusive;
            rep.note = "module has finite projective dimension";
            return rep;
        }
        rep.pd_infinite = true;
        PresentedModule fl = frobenius_module(l, f);
        if (fl.is_zero()) {
            rep.verdict = RigidityVerdict::Inconclusive;
            rep.note = "frobenius module vanished";
            return rep;
        }
        rep.frobenius_depth_positive = !has_depth_zero(fl);
        if (rep.frobenius_depth_positive) {
            rep.verdict = RigidityVerdict::NotStronglyRigid;
            rep.note = "infinite projective dimension with depth F^n > 0";
        } else {
            rep.verdict = RigidityVerdict::Inconclusive;
            rep.note = "depth F^n vanishes; no witness";
        }
    } catch (const budget_error& e) {
        rep.verdict = RigidityVerdict::Indeterminate;
        rep.note = e.what();
    }
    return rep;
}

NumericalRigidityReport numerical_rigidity_check(const PresentedModule& m,
                                                 const FrobeniusPower& f,
                                                 bool complete_intersection_asserted) {
    NumericalRigidityReport rep;
    ModuleLength lm = module_length(m);
    if (!lm.finite) throw engine_error("numerical rigidity requires a finite-length module");
    int d = m.ring()->krull_dimension();
    PresentedModule fm = frobenius_module(m, f);
    ModuleLength lf = module_length(fm);
    if (!lf.finite) throw engine_error("internal: F^n of a finite-length module must be finite");
    rep.lhs = lf.value;
    std::uint64_t scale = 1;
    for (int i = 0; i < d; ++i) {
        if (scale > UINT64_MAX / f.q) throw budget_error("p^{nd} overflows");
        scale *= f.q;
    }
    if (lm.value != 0 && scale > UINT64_MAX / lm.value) throw budget_error("p^{nd} l(M) overflows");
    rep.rhs = scale * lm.value;
    rep.equal = rep.lhs == rep.rhs;
    if (rep.equal && complete_intersection_asserted) {
        try {
            auto v = is_finite_pd(m);
            rep.pd_checked = true;
            rep.pd_finite = v.finite;
            if (!v.finite) {
                rep.hard_failure = true;
                rep.note = "equality over an asserted complete intersection with infinite pd";
            }
        } catch (const budget_error&) {
            rep.pd_checked = false;
        }
    }
    return rep;
}

RigidityReport rigidity_report(const PresentedModule& m, const FrobeniusPower& f, int i_max,
                               bool gorenstein_asserted, bool isolated_singularity_asserted,
                               bool complete_intersection_asserted) {
    RigidityReport rep;
    rep.module_hash = m.presentation_hash();
    rep.n = f.n;
    rep.q = f.q;
    rep.gorenstein_asserted = gorenstein_asserted;
    rep.isolated_singularity_asserted = isolated_singularity_asserted;
    rep.complete_intersection_asserted = complete_intersection_asserted;
    rep.tor_table = psh_vanishing_check(m, f, i_max);
    if (!m.is_zero()) {
        PresentedModule fm = frobenius_module(m, f);
        if (!fm.is_zero()) {
            try {
                rep.frobenius_depth_positive = !has_depth_zero(fm);
                rep.frobenius_depth = depth(fm);
            } catch (const budget_error&) {
                rep.frobenius_depth = -1;
            }
        }
        if (m.ring()->krull_dimension() > 0) {
            try {
                rep.strong = strong_rigidity_witness(m, f, gorenstein_asserted,
                                                     isolated_singularity_asserted)
                                 .verdict;
            } catch (const budget_error&) {
                rep.strong = RigidityVerdict::Indeterminate;
            }
        }
        if (module_length(m).finite) {
            rep.numerical_applicable = true;
            rep.numerical = numerical_rigidity_check(m, f, complete_intersection_asserted);
        }
    }
    return rep;
}

PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b) {
    require_same_qring(a.ring(), b.ring());
    GradedFreeModule gens;
    gens.rank = a.rank() + b.rank();
    gens.twists = a.gens().twists;
    gens.twists.insert(gens.twists.end(), b.gens().twists.begin(), b.gens().twists.end());
    std::vector<ModVec> rels = a.relations();
    for (const auto& c : b.relations()) rels.push_back(c.slice_positions(0, b.rank(), a.rank()));
    return PresentedModule(a.ring(), std::move(gens), std::move(rels), a.budget());
}

} // namespace charp
