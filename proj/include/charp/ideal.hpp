#ifndef CHARP_IDEAL_HPP
#define CHARP_IDEAL_HPP

#include <memory>
#include <mutex>
#include <vector>

#include "charp/modgb.hpp"
#include "charp/polynomial.hpp"

namespace charp {

// An ideal of the ambient ring together with its reduced Groebner basis,
// computed at most once and then sealed. Copies share the sealed state.
class GroebnerIdeal {
public:
    GroebnerIdeal() = default;
    GroebnerIdeal(RingPtr ring, std::vector<Polynomial> gens, Budget budget = {});

    const RingPtr& ring() const { return st_->ring; }
    const std::vector<Polynomial>& generators() const { return st_->gens; }

    const std::vector<Polynomial>& reduced_basis() const;
    // reduced_basis()[i] == sum_j certificate(i)[j] * generators()[j]
    const std::vector<std::vector<Polynomial>>& certificates() const;

    Polynomial normal_form(const Polynomial& f) const;
    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

    bool is_zero_ideal() const { return reduced_basis().empty(); }
    bool is_unit_ideal() const;
    bool is_homogeneous() const;

    // minimal generating monomials of in(I) = leading monomials of the basis
    std::vector<Monomial> initial_ideal() const;

    bool operator==(const GroebnerIdeal& o) const;

private:
    struct State {
        RingPtr ring;
        std::vector<Polynomial> gens;
        Budget budget;
        mutable std::once_flag once;
        mutable std::vector<Polynomial> basis;
        mutable std::vector<std::vector<Polynomial>> certs;
    };
    std::shared_ptr<State> st_;

    void seal() const;
};

// Spec-level operations -------------------------------------------------------

GroebnerIdeal buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens,
                         Budget budget = {});

// I^{[q]}: ideal generated by the q-th powers of the generators, q = p^n.
GroebnerIdeal bracket_power(const GroebnerIdeal& I, std::uint64_t q);

// I intersect J, computed with a dominant auxiliary variable.
GroebnerIdeal intersect(const GroebnerIdeal& I, const GroebnerIdeal& J);

// (I : f), by intersecting with (f) and dividing by f.
GroebnerIdeal colon(const GroebnerIdeal& I, const Polynomial& f);

// exact division h / f; throws if f does not divide h
Polynomial exact_divide(const Polynomial& h, const Polynomial& f);

// combinatorial (Krull) dimension of the quotient by a monomial ideal:
// the largest variable subset meeting no generator's support
int monomial_quotient_dimension(const std::vector<Monomial>& gens, int nvars);

} // namespace charp

#endif
