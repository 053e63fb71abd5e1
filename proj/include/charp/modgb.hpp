#ifndef CHARP_MODGB_HPP
#define CHARP_MODGB_HPP

#include <unordered_set>
#include <vector>

#include "charp/common.hpp"
#include "charp/modvec.hpp"

namespace charp {

// Buchberger engine for submodules of graded free modules, used uniformly
// for ideal bases (rank one), module membership, and syzygy elimination
// (primary block = the free module, secondary block = tracking columns).
struct ModGBInput {
    ModVec v;
    bool relation = false; // per-position copy of an already-reduced ideal basis
};

struct ModGBOptions {
    // full: compute and interreduce a Groebner basis of the whole module.
    // generators_only: skip secondary-secondary pairs; the secondary-led
    // output elements still generate the secondary intersection.
    bool generators_only = false;
    bool interreduce = true; // minimalize leads and reduce tails at the end
    std::vector<std::int64_t> twists; // degree bookkeeping; empty = inhomogeneous mode
    Budget budget;
};

struct ModPair {
    int i, j;
    std::int32_t pos;
    Monomial lcm;
    std::int64_t deg;
};

class ModGB {
public:
    // immediate full run over the inputs
    ModGB(ModuleOrder ord, std::vector<ModGBInput> input, ModGBOptions opt);

    // incremental variant: seed with relations, then add generators and
    // complete pair processing as far as each query needs
    ModGB(ModuleOrder ord, ModGBOptions opt);
    void seed_relation(const ModVec& v);
    void add_generator(const ModVec& v);
    void complete_all();
    // process the queue while the smallest pair degree is <= deg; exact
    // membership for homogeneous queries of degree <= deg afterwards
    void complete_through(std::int64_t deg);

    const ModuleOrder& order() const { return ord_; }
    const std::vector<ModVec>& elements() const { return elems_; }

    ModVec normal_form(const ModVec& v) const;

    // elements led entirely by positions >= primary_count, shifted to 0
    std::vector<ModVec> secondary_elements() const;

private:
    struct Meta {
        std::int32_t lm_pos;
        Monomial lm;
        std::uint32_t mask;
        bool pure;
        bool relation;
    };

    ModuleOrder ord_;
    ModGBOptions opt_;
    bool homogeneous_ = false;
    long pair_pops_ = 0;
    std::vector<ModVec> elems_;
    std::vector<Meta> meta_;
    std::vector<std::vector<int>> bucket_;
    std::vector<ModPair> heap_;
    std::unordered_set<std::uint64_t> done_;

    int find_reducer(std::int32_t pos, const Monomial& m, std::uint32_t mask) const;
    void add_elem(ModVec v, bool relation);
    void push_pairs_for(int idx);
    bool chain_redundant(const ModPair& pr) const;
    void process_pair(const ModPair& pr);
    void interreduce();
    void sort_canonically();
};

// Convenience wrappers -------------------------------------------------------

// Reduced Groebner basis of the submodule generated by vecs (+ relations).
std::vector<ModVec> module_basis(const ModuleOrder& ord, const std::vector<ModVec>& vecs,
                                 const std::vector<ModVec>& relations,
                                 const std::vector<std::int64_t>& twists, const Budget& budget);

// Generators of { h : sum h_i vecs_i lies in <relations> }, the syzygy
// module of vecs over the quotient by the relation columns.
std::vector<ModVec> syzygy_generators(const RingPtr& ring, int rank,
                                      const std::vector<ModVec>& vecs,
                                      const std::vector<ModVec>& relations,
                                      const std::vector<std::int64_t>& rank_twists,
                                      const std::vector<std::int64_t>& vec_degrees,
                                      const Budget& budget);

} // namespace charp

#endif
