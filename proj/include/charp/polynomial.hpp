#ifndef CHARP_POLYNOMIAL_HPP
#define CHARP_POLYNOMIAL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "charp/monomial.hpp"

namespace charp {

struct Term {
    Monomial m;
    std::uint32_t c = 0; // in [1, p) for stored terms
};

// Multivariate polynomial over F_p in canonical form: terms strictly
// decreasing in the ring's order, no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, std::vector<Term> terms); // normalizes

    static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }
    static Polynomial constant(const RingPtr& ring, std::int64_t c);
    static Polynomial variable(const RingPtr& ring, int i, std::uint32_t k = 1);
    static Polynomial term(const RingPtr& ring, Monomial m, std::int64_t c);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_[0].m.is_one(ring_->nvars()));
    }
    size_t term_count() const { return t_.size(); }

    const Term& leading() const {
        if (t_.empty()) throw engine_error("leading term of the zero polynomial");
        return t_[0];
    }
    const Monomial& leading_monomial() const { return leading().m; }
    std::uint32_t leading_coeff() const { return leading().c; }

    std::int64_t degree() const { // -1 for zero
        if (t_.empty()) return -1;
        std::int64_t d = -1;
        for (const auto& tm : t_) {
            std::int64_t td = tm.m.degree(ring_->nvars());
            if (td > d) d = td;
        }
        return d;
    }
    bool is_homogeneous() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const;

    Polynomial scaled(std::uint32_t c) const;                 // c * f
    Polynomial times_term(const Monomial& m, std::uint32_t c) const;
    Polynomial monic() const;

    // f - c * m * g, the reduction workhorse
    static Polynomial reduce_step(const Polynomial& f, const Polynomial& g,
                                  const Monomial& m, std::uint32_t c);

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Term> t_;

    void normalize();
};

enum class PolyOp { Add, Sub, Mul };

// Exact arithmetic dispatch with ambient checking.
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op);

// a^q for q a power of the characteristic; exponents scale by q and
// coefficients are fixed points of x -> x^p.
Polynomial frobenius_power(const Polynomial& a, std::uint64_t q);

bool is_power_of(std::uint64_t q, std::uint32_t p);

} // namespace charp

#endif
