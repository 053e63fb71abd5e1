#ifndef CHARP_MODULE_HPP
#define CHARP_MODULE_HPP

#include <map>
#include <optional>
#include <string>

#include "charp/quotient.hpp"

namespace charp {

// Free module with recorded generator degrees: F = (+) R(-twists[i]).
struct GradedFreeModule {
    int rank = 0;
    std::vector<std::int64_t> twists;

    static GradedFreeModule of(std::vector<std::int64_t> tw) {
        GradedFreeModule f;
        f.rank = static_cast<int>(tw.size());
        f.twists = std::move(tw);
        return f;
    }
    bool operator==(const GradedFreeModule& o) const {
        return rank == o.rank && twists == o.twists;
    }
};

// Graded matrix between free modules, stored by columns.
struct GradedMatrix {
    GradedFreeModule target; // rows
    GradedFreeModule source; // columns
    std::vector<ModVec> cols;

    Polynomial entry(int row, int col, const RingPtr& ring) const {
        return cols.at(col).component(row, ring);
    }
    // image of a source-coordinate vector under the matrix
    ModVec apply(const ModVec& v, const ModuleOrder& ord) const;
    bool is_zero() const {
        for (const auto& c : cols)
            if (!c.is_zero()) return false;
        return true;
    }
};

// Sequence of differentials d[0]: F_1 -> F_0, d[1]: F_2 -> F_1, ...
struct FreeComplex {
    QRingPtr ring;
    GradedFreeModule f0;
    std::vector<GradedMatrix> d;

    int steps() const { return static_cast<int>(d.size()); }
    const GradedFreeModule& term(int i) const { return i == 0 ? f0 : d.at(i - 1).source; }
    // verify d_i . d_{i+1} = 0 over the quotient ring
    bool is_complex() const;
};

struct BettiTable {
    // (homological degree, internal degree) -> rank
    std::map<std::pair<int, std::int64_t>, std::uint64_t> entries;

    std::uint64_t total(int i) const {
        std::uint64_t s = 0;
        for (const auto& [k, v] : entries)
            if (k.first == i) s += v;
        return s;
    }
    void record(int i, const GradedFreeModule& f) {
        for (auto t : f.twists) entries[{i, t}] += 1;
    }
};

struct ModuleLength {
    bool finite = false;
    std::uint64_t value = 0; // meaningful when finite
    bool operator==(const ModuleLength& o) const {
        return finite == o.finite && (!finite || value == o.value);
    }
};

// Finitely presented graded module over a quotient ring: the cokernel of a
// graded matrix, canonicalized entry-by-entry against the defining ideal.
class PresentedModule {
public:
    PresentedModule() = default;
    PresentedModule(QRingPtr ring, GradedFreeModule gens, std::vector<ModVec> relation_cols,
                    Budget budget = {});

    static PresentedModule free_module(QRingPtr ring, GradedFreeModule gens, Budget budget = {});
    // R/(extra) with generator in degree 0; extra is reduced into the ring
    static PresentedModule cyclic(QRingPtr ring, const std::vector<Polynomial>& extra,
                                  Budget budget = {});
    static PresentedModule zero_module(QRingPtr ring);

    const QRingPtr& ring() const { return st_->ring; }
    const GradedFreeModule& gens() const { return st_->gens; }
    int rank() const { return st_->gens.rank; }
    const std::vector<ModVec>& relations() const { return st_->rels; }
    const Budget& budget() const { return st_->budget; }

    // full reduced basis of <relations> + J*F, the canonical datum
    const std::vector<ModVec>& relation_basis() const;
    ModVec reduce(const ModVec& v) const;

    bool is_zero() const;
    bool equals(const PresentedModule& o) const;

    // presentation hash over the canonical data (reports embed it)
    std::uint64_t presentation_hash() const;
    std::string describe() const;

private:
    struct State {
        QRingPtr ring;
        GradedFreeModule gens;
        std::vector<ModVec> rels;
        Budget budget;
        mutable std::once_flag once;
        mutable std::vector<ModVec> basis;
    };
    std::shared_ptr<State> st_;
};

struct Resolution {
    FreeComplex complex;
    BettiTable betti;
    bool complete = false; // the resolution terminated within the step budget
    int pd = -1;           // projective dimension when complete
};

// Spec operations -------------------------------------------------------------

// First syzygy module: minimal generators of the presentation's image and
// the module of relations among them.
PresentedModule syzygy(const PresentedModule& m);

// Minimal graded free resolution to homological degree `steps` (inclusive).
Resolution minimal_resolution(const PresentedModule& m, int steps);

struct FinitePdVerdict {
    bool finite = false;
    int pd = -1; // valid when finite
    BettiTable certificate;
};
// Auslander-Buchsbaum test: pd is finite iff beta_{depth R + 1} vanishes.
FinitePdVerdict is_finite_pd(const PresentedModule& m);

int dimension(const PresentedModule& m);
ModuleLength module_length(const PresentedModule& m);
std::uint64_t hilbert_function(const PresentedModule& m, std::int64_t degree);

int depth(const PresentedModule& m);
// (0 :_M m) != 0, the fast depth-zero witness
bool has_depth_zero(const PresentedModule& m);

// depth of the ring as a module over itself, cached per ring instance
int ring_depth(const QRingPtr& ring);
int ring_dimension(const QRingPtr& ring);

// ker(d_i)/im(d_{i+1}) as a presented module; pads with zero maps at the ends
PresentedModule homology(const FreeComplex& c, int i);

// Remove split summands: prune unit entries of a presentation matrix.
void minimize_presentation(const QRingPtr& ring, GradedFreeModule& gens,
                           std::vector<ModVec>& cols, Budget budget = {});

// Trim a homogeneous generating set of a submodule of F (mod the defining
// ideal) to a minimal one, by degree bands and graded Nakayama.
std::vector<ModVec> trim_to_minimal_generators(const QRingPtr& ring,
                                               const GradedFreeModule& ambient,
                                               std::vector<ModVec> candidates, Budget budget);

// Generators of the syzygy module of the given columns inside F over the
// quotient ring (defining relations adjoined per position, plus any extra
// relation columns such as coefficient-module presentations).
std::vector<ModVec> module_syzygies(const QRingPtr& ring, const GradedFreeModule& ambient,
                                    const std::vector<ModVec>& cols, Budget budget,
                                    const std::vector<ModVec>& extra_relations = {});

// J-relation columns g*e_pos for every defining basis element g.
std::vector<ModVec> defining_columns(const QRingPtr& ring, int rank);

// Presentation of <gens> / (<others> + J*F) inside the free module F: the
// relation columns are the projections of the syzygies of [gens | others]
// onto the gens coordinates.
PresentedModule subquotient_presentation(const QRingPtr& ring, const GradedFreeModule& ambient,
                                         const std::vector<ModVec>& gens,
                                         const std::vector<ModVec>& others, Budget budget);

} // namespace charp

#endif
