#ifndef CHARP_KOSZUL_HPP
#define CHARP_KOSZUL_HPP

#include "charp/frobenius.hpp"
#include "charp/module.hpp"

namespace charp {

// Sequence of homogeneous positive-degree ring elements, optionally carrying
// per-prefix nonzerodivisor certificates.
struct ElementSequence {
    std::vector<Polynomial> elements;
    std::vector<bool> regularity; // regularity[i]: elements[i] is NZD mod the first i

    int size() const { return static_cast<int>(elements.size()); }
    bool certified_regular() const {
        if (regularity.size() != elements.size()) return false;
        for (bool b : regularity)
            if (!b) return false;
        return true;
    }
};

// Runs the iterated nonzerodivisor test on successive quotients.
ElementSequence certify_sequence(const QRingPtr& ring, std::vector<Polynomial> elements,
                                 Budget budget = {});

// Exterior-algebra complex on the sequence over R; length |x|.
FreeComplex koszul_complex(const ElementSequence& x, const QRingPtr& ring);

// H_j(Koszul(x) (x) M) as a presented module.
PresentedModule koszul_homology(const PresentedModule& m, const ElementSequence& x, int j);

struct EulerData {
    std::vector<std::uint64_t> tor_lengths; // l(Tor_j(M, R/x)), j = 0..c
    std::int64_t chi = 0;                   // alternating sum
    std::vector<std::int64_t> chi_i;        // chi_i = sum_{j>=i} (-1)^{j-i} l(Tor_j)
};

// All Koszul homology lengths at once; requires x certified regular on R and
// finite covolume on M.
EulerData euler_data(const PresentedModule& m, const ElementSequence& x);

std::int64_t chi(const PresentedModule& m, const ElementSequence& x, int i);

struct LichtenbaumEntry {
    int i = 0;
    std::int64_t chi_i = 0;
    bool tor_zero = false;
};
struct LichtenbaumReport {
    EulerData data;
    std::vector<LichtenbaumEntry> entries; // i >= 1
    bool ok = true;     // all chi_i >= 0 and chi_i = 0 iff Tor_i = 0
    std::string note;
};
// Nonnegativity and the vanishing equivalence of the higher Euler
// characteristics; any violation is a hard failure.
LichtenbaumReport lichtenbaum_check(const PresentedModule& m, const ElementSequence& x);

enum class Prop43Status { Holds, HoldsWithEquality, UnmetHypothesis, Indeterminate };
struct Prop43Report {
    Prop43Status status = Prop43Status::Indeterminate;
    std::uint64_t lhs = 0;  // l(F^n_{R/x}(M/xM))
    std::int64_t rhs = 0;   // q^c chi(M, R/x)
    int codim = 0;
    bool frobenius_cm_checked = false;
    bool frobenius_cm = false; // condition (1) at equality, as far as computable
    std::string note;          // condition (2) is recorded as an assumption
};
// The length inequality l(F^n_{R/x}(M/xM)) >= q^c chi(M, R/x) for a sequence
// that is a system of parameters on F^n(M) and regular on R.
Prop43Report prop43_check(const PresentedModule& m, const ElementSequence& x,
                          const FrobeniusPower& f);

} // namespace charp

#endif
