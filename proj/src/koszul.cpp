#include "charp/koszul.hpp"

#include <functional>

namespace charp {

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> comb(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            out.push_back(comb);
            return;
        }
        for (int v = start; v < n; ++v) {
            comb[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

int subset_index(const std::vector<std::vector<int>>& list, const std::vector<int>& s) {
    for (size_t i = 0; i < list.size(); ++i)
        if (list[i] == s) return static_cast<int>(i);
    throw engine_error("internal: missing subset index");
}

} // namespace

ElementSequence certify_sequence(const QRingPtr& ring, std::vector<Polynomial> elements,
                                 Budget budget) {
    ElementSequence x;
    x.elements = std::move(elements);
    QRingPtr cur = ring;
    for (const auto& f : x.elements) {
        if (!f.is_homogeneous() || f.is_zero() || f.degree() < 1)
            throw engine_error("sequence elements must be homogeneous of positive degree");
        bool ok;
        try {
            ok = is_nonzerodivisor(f, *cur);
        } catch (const engine_error&) {
            ok = false; // reduced to zero in the current quotient
        }
        x.regularity.push_back(ok);
        cur = quotient_by(cur, {f}, budget);
    }
    return x;
}

FreeComplex koszul_complex(const ElementSequence& x, const QRingPtr& ring) {
    if (x.elements.empty()) throw engine_error("koszul complex needs a nonempty sequence");
    const RingPtr& amb = ring->ambient();
    std::vector<std::int64_t> degs;
    for (const auto& f : x.elements) {
        require_same_ring(amb, f.ring());
        if (!f.is_homogeneous() || f.is_zero() || f.degree() < 1)
            throw engine_error("koszul complex needs homogeneous elements of positive degree");
        degs.push_back(f.degree());
    }
    const int c = x.size();
    FreeComplex K;
    K.ring = ring;
    K.f0 = GradedFreeModule::of({0});
    ModuleOrder ord{amb, 1 << 30};

    std::vector<std::vector<std::vector<int>>> subs(c + 1);
    for (int i = 0; i <= c; ++i) subs[i] = subsets_of_size(c, i);
    auto twist_of = [&](const std::vector<int>& T) {
        std::int64_t t = 0;
        for (int j : T) t += degs[j];
        return t;
    };

    GradedFreeModule prev = K.f0;
    for (int i = 1; i <= c; ++i) {
        GradedFreeModule fi;
        fi.rank = static_cast<int>(subs[i].size());
        for (const auto& T : subs[i]) fi.twists.push_back(twist_of(T));
        GradedMatrix d;
        d.target = prev;
        d.source = fi;
        for (const auto& T : subs[i]) {
            ModVec col;
            for (size_t k = 0; k < T.size(); ++k) {
                std::vector<int> rest;
                for (size_t a = 0; a < T.size(); ++a)
                    if (a != k) rest.push_back(T[a]);
                int pos = subset_index(subs[i - 1], rest);
                Polynomial entry = x.elements[T[k]];
                if (k % 2 == 1) entry = -entry;
                col = col.add(ModVec::from_poly(entry, pos), ord);
            }
            d.cols.push_back(col);
        }
        K.d.push_back(std::move(d));
        prev = fi;
    }
    return K;
}

PresentedModule koszul_homology(const PresentedModule& m, const ElementSequence& x, int j) {
    if (j < 0) throw engine_error("homology index must be nonnegative");
    const QRingPtr& R = m.ring();
    const int c = x.size();
    if (j > c) return PresentedModule::zero_module(R);
    FreeComplex K = koszul_complex(x, R);
    const int rm = m.rank();

    // cover of K_i (x) M: position (t, r) -> t*rm + r
    auto cover_of = [&](int i) {
        const GradedFreeModule& ki = K.term(i);
        GradedFreeModule g;
        g.rank = ki.rank * rm;
        for (int t = 0; t < ki.rank; ++t)
            for (int r = 0; r < rm; ++r) g.twists.push_back(ki.twists[t] + m.gens().twists[r]);
        return g;
    };
    // d_i (x) id_M columns, indexed by source basis (t, r)
    auto tensored_cols = [&](int i) {
        std::vector<ModVec> cols;
        if (i < 1 || i > K.steps()) return cols;
        const GradedMatrix& d = K.d[i - 1];
        for (int t = 0; t < d.source.rank; ++t) {
            for (int r = 0; r < rm; ++r) {
                std::vector<ModTerm> ts;
                for (const auto& tm : d.cols[t].terms())
                    ts.push_back({tm.pos * rm + r, tm.m, tm.c});
                ModuleOrder ord{R->ambient(), 1 << 30};
                cols.push_back(ModVec::make(ord, std::move(ts)));
            }
        }
        return cols;
    };
    // relations of K_i (x) M: module relations duplicated per exterior block
    auto tensored_rels = [&](int i) {
        std::vector<ModVec> rels;
        const GradedFreeModule& ki = K.term(i);
        for (int t = 0; t < ki.rank; ++t)
            for (const auto& rc : m.relations()) rels.push_back(rc.slice_positions(0, rm, t * rm));
        return rels;
    };

    GradedFreeModule cover_j = cover_of(j);
    std::vector<ModVec> ker;
    if (j == 0) {
        for (int r = 0; r < cover_j.rank; ++r) ker.push_back(ModVec::unit(r));
    } else {
        GradedFreeModule cover_prev = cover_of(j - 1);
        ker = module_syzygies(R, cover_prev, tensored_cols(j), m.budget(), tensored_rels(j - 1));
        ker = trim_to_minimal_generators(R, cover_j, std::move(ker), m.budget());
    }
    if (ker.empty()) return PresentedModule::zero_module(R);

    std::vector<ModVec> others = tensored_cols(j + 1);
    for (auto& r : tensored_rels(j)) others.push_back(std::move(r));
    return subquotient_presentation(R, cover_j, ker, others, m.budget());
}

EulerData euler_data(const PresentedModule& m, const ElementSequence& x) {
    if (!x.certified_regular())
        throw engine_error("euler characteristics need a certified regular sequence");
    EulerData data;
    const int c = x.size();
    for (int j = 0; j <= c; ++j) {
        PresentedModule h = koszul_homology(m, x, j);
        ModuleLength L = h.is_zero() ? ModuleLength{true, 0} : module_length(h);
        if (!L.finite) throw engine_error("infinite covolume: l(M/xM) must be finite");
        data.tor_lengths.push_back(L.value);
    }
    data.chi_i.assign(c + 1, 0);
    for (int i = c; i >= 0; --i) {
        std::int64_t acc = 0;
        std::int64_t sign = 1;
        for (int j = i; j <= c; ++j) {
            acc += sign * static_cast<std::int64_t>(data.tor_lengths[j]);
            sign = -sign;
        }
        data.chi_i[i] = acc;
    }
    data.chi = data.chi_i[0];
    return data;
}

std::int64_t chi(const PresentedModule& m, const ElementSequence& x, int i) {
    if (i < 0) throw engine_error("chi index must be nonnegative");
    EulerData d = euler_data(m, x);
    if (i >= static_cast<int>(d.chi_i.size())) return 0;
    return d.chi_i[i];
}

LichtenbaumReport lichtenbaum_check(const PresentedModule& m, const ElementSequence& x) {
    LichtenbaumReport rep;
    rep.data = euler_data(m, x);
    const int c = x.size();
    for (int i = 1; i <= c; ++i) {
        LichtenbaumEntry e;
        e.i = i;
        e.chi_i = rep.data.chi_i[i];
        e.tor_zero = rep.data.tor_lengths[i] == 0;
        if (e.chi_i < 0) {
            rep.ok = false;
            rep.note = "negative higher euler characteristic";
        }
        if ((e.chi_i == 0) != e.tor_zero) {
            rep.ok = false;
            rep.note = "chi_i vanishing does not match Tor_i vanishing";
        }
        rep.entries.push_back(e);
    }
    return rep;
}

Prop43Report prop43_check(const PresentedModule& m, const ElementSequence& x,
                          const FrobeniusPower& f) {
    Prop43Report rep;
    const QRingPtr& R = m.ring();
    if (!x.certified_regular()) {
        rep.status = Prop43Status::UnmetHypothesis;
        rep.note = "sequence is not certified regular on R";
        return rep;
    }
    if (m.is_zero()) {
        rep.status = Prop43Status::UnmetHypothesis;
        rep.note = "zero module";
        return rep;
    }
    int dim_m = dimension(m);
    if (dim_m <= 0) {
        rep.status = Prop43Status::UnmetHypothesis;
        rep.note = "module must have positive dimension";
        return rep;
    }
    int dim_r = R->krull_dimension();
    rep.codim = dim_r - dim_m;

    PresentedModule fm = frobenius_module(m, f);
    int dim_fm = dimension(fm);
    if (dim_fm != x.size()) {
        rep.status = Prop43Status::UnmetHypothesis;
        rep.note = "sequence length differs from dim F^n(M): not a system of parameters";
        return rep;
    }

    // left side over R/x
    QRingPtr rx = quotient_by(R, x.elements, m.budget());
    PresentedModule m_mod_x(rx, m.gens(), m.relations(), m.budget());
    FrobeniusPower fx = FrobeniusPower::make(rx, f.n, m.budget());
    PresentedModule f_mod = frobenius_module(m_mod_x, fx);
    ModuleLength lhs = f_mod.is_zero() ? ModuleLength{true, 0} : module_length(f_mod);
    if (!lhs.finite) {
        rep.status = Prop43Status::UnmetHypothesis;
        rep.note = "x is not a system of parameters for F^n(M): infinite covolume";
        return rep;
    }
    rep.lhs = lhs.value;

    EulerData data;
    try {
        data = euler_data(m, x);
    } catch (const engine_error& e) {
        rep.status = Prop43Status::UnmetHypothesis;
        rep.note = e.what();
        return rep;
    }
    std::int64_t qc = 1;
    for (int i = 0; i < rep.codim; ++i) qc *= static_cast<std::int64_t>(f.q);
    rep.rhs = qc * data.chi;

    if (static_cast<std::int64_t>(rep.lhs) < rep.rhs) {
        rep.status = Prop43Status::Indeterminate;
        rep.note = "inequality violated: engine invariant failure";
        throw engine_error("prop43: length inequality violated, this is an engine bug");
    }
    if (static_cast<std::int64_t>(rep.lhs) == rep.rhs) {
        rep.status = Prop43Status::HoldsWithEquality;
        try {
            rep.frobenius_cm = depth(fm) == dim_fm;
            rep.frobenius_cm_checked = true;
        } catch (const budget_error&) {
            rep.frobenius_cm_checked = false;
        }
        rep.note = "equality; localization condition at minimal primes recorded as assumed";
    } else {
        rep.status = Prop43Status::Holds;
    }
    return rep;
}

} // namespace charp
