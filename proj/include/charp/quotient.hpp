#ifndef CHARP_QUOTIENT_HPP
#define CHARP_QUOTIENT_HPP

#include <memory>
#include <optional>

#include "charp/ideal.hpp"

namespace charp {

// Ambient polynomial ring modulo a sealed homogeneous ideal. Normal forms
// against the defining basis are the canonical ring representatives.
class QuotientRing {
public:
    QuotientRing(RingPtr ambient, GroebnerIdeal defining);

    static std::shared_ptr<const QuotientRing> make(RingPtr ambient,
                                                    std::vector<Polynomial> defining_gens,
                                                    Budget budget = {});
    // the ambient polynomial ring itself (zero defining ideal)
    static std::shared_ptr<const QuotientRing> polynomial_ring(RingPtr ambient);

    const RingPtr& ambient() const { return ambient_; }
    const GroebnerIdeal& defining() const { return defining_; }
    bool is_polynomial_ring() const { return defining_.is_zero_ideal(); }

    Polynomial reduce(const Polynomial& f) const { return defining_.normal_form(f); }
    bool is_zero_in_ring(const Polynomial& f) const { return reduce(f).is_zero(); }

    int krull_dimension() const;

    // depth of R over itself, filled in by the module layer
    std::optional<int> cached_depth() const {
        std::lock_guard<std::mutex> lk(dim_mutex_);
        return depth_;
    }
    void set_cached_depth(int d) const {
        std::lock_guard<std::mutex> lk(dim_mutex_);
        depth_ = d;
    }

private:
    RingPtr ambient_;
    GroebnerIdeal defining_;
    mutable std::optional<int> dim_;
    mutable std::optional<int> depth_;
    mutable std::mutex dim_mutex_;
};

using QRingPtr = std::shared_ptr<const QuotientRing>;

inline void require_same_qring(const QRingPtr& a, const QRingPtr& b) {
    if (a == b) return;
    require_same_ring(a->ambient(), b->ambient());
    if (!(a->defining() == b->defining())) throw engine_error("quotient ring mismatch");
}

// true iff multiplication by f is injective on R, decided by (J : f) = J;
// rejects elements that are zero in R
bool is_nonzerodivisor(const Polynomial& f, const QuotientRing& R);

// R/(extra), reusing R's ambient ring
QRingPtr quotient_by(const QRingPtr& R, const std::vector<Polynomial>& extra, Budget budget = {});

} // namespace charp

#endif
