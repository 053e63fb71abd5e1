#include "charp/modvec.hpp"

#include <algorithm>

namespace charp {

ModVec ModVec::make(const ModuleOrder& ord, std::vector<ModTerm> terms) {
    ModVec v;
    v.t_ = std::move(terms);
    const auto& F = ord.ring->field;
    std::stable_sort(v.t_.begin(), v.t_.end(),
                     [&](const ModTerm& a, const ModTerm& b) { return ord.greater(a, b); });
    std::vector<ModTerm> out;
    out.reserve(v.t_.size());
    for (const auto& tm : v.t_) {
        std::uint32_t c = tm.c % F.p();
        if (!out.empty() && out.back().pos == tm.pos && out.back().m == tm.m) {
            out.back().c = F.add(out.back().c, c);
            if (out.back().c == 0) out.pop_back();
        } else if (c != 0) {
            out.push_back({tm.pos, tm.m, c});
        }
    }
    v.t_ = std::move(out);
    return v;
}

ModVec ModVec::from_poly(const Polynomial& p, std::int32_t pos) {
    ModVec v;
    v.t_.reserve(p.terms().size());
    for (const auto& tm : p.terms()) v.t_.push_back({pos, tm.m, tm.c});
    return v; // order within one position equals the polynomial's order
}

ModVec ModVec::add(const ModVec& o, const ModuleOrder& ord) const {
    const auto& F = ord.ring->field;
    ModVec r;
    r.t_.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        Cmp c = ord.compare(t_[i], o.t_[j]);
        if (c == Cmp::GT) {
            r.t_.push_back(t_[i++]);
        } else if (c == Cmp::LT) {
            r.t_.push_back(o.t_[j++]);
        } else {
            std::uint32_t s = F.add(t_[i].c, o.t_[j].c);
            if (s) r.t_.push_back({t_[i].pos, t_[i].m, s});
            ++i;
            ++j;
        }
    }
    for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
    for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
    return r;
}

ModVec ModVec::negate(const PrimeField& F) const {
    ModVec r;
    r.t_.reserve(t_.size());
    for (const auto& tm : t_) r.t_.push_back({tm.pos, tm.m, F.neg(tm.c)});
    return r;
}

ModVec ModVec::scaled(std::uint32_t c, const PrimeField& F) const {
    c %= F.p();
    if (c == 0) return ModVec();
    if (c == 1) return *this;
    ModVec r;
    r.t_.reserve(t_.size());
    for (const auto& tm : t_) r.t_.push_back({tm.pos, tm.m, F.mul(tm.c, c)});
    return r;
}

ModVec ModVec::times_term(const Monomial& m, std::uint32_t c, const RingPtr& ring) const {
    const auto& F = ring->field;
    const int n = ring->nvars();
    c %= F.p();
    if (c == 0) return ModVec();
    ModVec r;
    r.t_.reserve(t_.size());
    for (const auto& tm : t_) r.t_.push_back({tm.pos, tm.m.mul(m, n), F.mul(tm.c, c)});
    return r;
}

ModVec ModVec::reduce_by(const ModVec& g, const Monomial& m, std::uint32_t c,
                         const ModuleOrder& ord) const {
    return add(g.times_term(m, ord.ring->field.neg(c), ord.ring), ord);
}

std::int64_t ModVec::homogeneous_degree(const std::vector<std::int64_t>& twists, int nvars) const {
    if (t_.empty()) return -1;
    std::int64_t d = t_[0].m.degree(nvars) + twists.at(t_[0].pos);
    for (const auto& tm : t_)
        if (tm.m.degree(nvars) + twists.at(tm.pos) != d)
            throw engine_error("vector is not homogeneous");
    return d;
}

bool ModVec::is_homogeneous(const std::vector<std::int64_t>& twists, int nvars) const {
    if (t_.empty()) return true;
    std::int64_t d = t_[0].m.degree(nvars) + twists.at(t_[0].pos);
    for (const auto& tm : t_)
        if (tm.m.degree(nvars) + twists.at(tm.pos) != d) return false;
    return true;
}

Polynomial ModVec::component(std::int32_t pos, const RingPtr& ring) const {
    std::vector<Term> terms;
    for (const auto& tm : t_)
        if (tm.pos == pos) terms.push_back({tm.m, tm.c});
    return Polynomial(ring, std::move(terms));
}

ModVec ModVec::slice_positions(std::int32_t lo, std::int32_t hi, std::int32_t shift) const {
    ModVec r;
    for (const auto& tm : t_)
        if (tm.pos >= lo && tm.pos < hi) r.t_.push_back({tm.pos + shift, tm.m, tm.c});
    return r;
}

} // namespace charp
