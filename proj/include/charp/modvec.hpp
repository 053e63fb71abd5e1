#ifndef CHARP_MODVEC_HPP
#define CHARP_MODVEC_HPP

#include <cstdint>
#include <vector>

#include "charp/polynomial.hpp"

namespace charp {

// One term of a free-module element: coefficient * monomial * e_pos.
struct ModTerm {
    std::int32_t pos = 0;
    Monomial m;
    std::uint32_t c = 0;
};

// Position-over-term order refined by the ambient monomial order, with an
// optional dominant/secondary block split used for syzygy elimination:
// positions < primary_count dominate the rest; within a block lower
// positions are larger; monomial ties break by the ring order.
struct ModuleOrder {
    RingPtr ring;
    int primary_count = 1 << 30; // no secondary block by default

    int block(std::int32_t pos) const { return pos < primary_count ? 0 : 1; }

    Cmp compare(const ModTerm& a, const ModTerm& b) const {
        int ba = block(a.pos), bb = block(b.pos);
        if (ba != bb) return ba < bb ? Cmp::GT : Cmp::LT;
        if (a.pos != b.pos) return a.pos < b.pos ? Cmp::GT : Cmp::LT;
        return ring->order.compare(a.m, b.m);
    }
    bool greater(const ModTerm& a, const ModTerm& b) const { return compare(a, b) == Cmp::GT; }
};

// Element of a graded free module, terms strictly decreasing.
class ModVec {
public:
    ModVec() = default;

    static ModVec make(const ModuleOrder& ord, std::vector<ModTerm> terms);
    // adopt a term list already in strictly decreasing normalized form
    static ModVec adopt_sorted(std::vector<ModTerm> terms) {
        ModVec v;
        v.t_ = std::move(terms);
        return v;
    }
    static ModVec unit(std::int32_t pos) {
        ModVec v;
        v.t_.push_back({pos, Monomial::one(), 1});
        return v;
    }
    static ModVec from_poly(const Polynomial& p, std::int32_t pos);

    const std::vector<ModTerm>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    const ModTerm& leading() const {
        if (t_.empty()) throw engine_error("leading term of the zero vector");
        return t_[0];
    }

    ModVec add(const ModVec& o, const ModuleOrder& ord) const;
    ModVec negate(const PrimeField& F) const;
    ModVec scaled(std::uint32_t c, const PrimeField& F) const;
    ModVec times_term(const Monomial& m, std::uint32_t c, const RingPtr& ring) const;
    // this - c * m * g
    ModVec reduce_by(const ModVec& g, const Monomial& m, std::uint32_t c, const ModuleOrder& ord) const;

    bool pure_position() const { // every term in one position
        for (const auto& tm : t_)
            if (tm.pos != t_[0].pos) return false;
        return true;
    }
    // degree of a homogeneous vector under the given twists; throws if mixed
    std::int64_t homogeneous_degree(const std::vector<std::int64_t>& twists, int nvars) const;
    bool is_homogeneous(const std::vector<std::int64_t>& twists, int nvars) const;

    Polynomial component(std::int32_t pos, const RingPtr& ring) const;
    ModVec slice_positions(std::int32_t lo, std::int32_t hi, std::int32_t shift) const;

    bool operator==(const ModVec& o) const {
        if (t_.size() != o.t_.size()) return false;
        for (size_t i = 0; i < t_.size(); ++i)
            if (t_[i].pos != o.t_[i].pos || !(t_[i].m == o.t_[i].m) || t_[i].c != o.t_[i].c)
                return false;
        return true;
    }

private:
    std::vector<ModTerm> t_;
};

} // namespace charp

#endif
