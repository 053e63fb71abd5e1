#include "charp/quotient.hpp"

namespace charp {

QuotientRing::QuotientRing(RingPtr ambient, GroebnerIdeal defining)
    : ambient_(std::move(ambient)), defining_(std::move(defining)) {
    require_same_ring(ambient_, defining_.ring());
    if (!defining_.is_homogeneous())
        throw engine_error(
            "defining ideal must be homogeneous: the engine works in the graded category");
    defining_.reduced_basis(); // seal now
}

std::shared_ptr<const QuotientRing> QuotientRing::make(RingPtr ambient,
                                                       std::vector<Polynomial> defining_gens,
                                                       Budget budget) {
    GroebnerIdeal I(ambient, std::move(defining_gens), budget);
    return std::make_shared<const QuotientRing>(std::move(ambient), std::move(I));
}

std::shared_ptr<const QuotientRing> QuotientRing::polynomial_ring(RingPtr ambient) {
    return make(std::move(ambient), {});
}

int QuotientRing::krull_dimension() const {
    {
        std::lock_guard<std::mutex> lk(dim_mutex_);
        if (dim_) return *dim_;
    }
    if (defining_.is_unit_ideal())
        throw engine_error("dimension of the zero ring is undefined");
    int d = monomial_quotient_dimension(defining_.initial_ideal(), ambient_->nvars());
    std::lock_guard<std::mutex> lk(dim_mutex_);
    dim_ = d;
    return d;
}

bool is_nonzerodivisor(const Polynomial& f, const QuotientRing& R) {
    Polynomial nf = R.reduce(f);
    if (nf.is_zero()) throw engine_error("zero element: not a candidate nonzerodivisor");
    if (R.defining().is_zero_ideal()) return true; // domain
    GroebnerIdeal c = colon(R.defining(), nf);
    return c == R.defining();
}

QRingPtr quotient_by(const QRingPtr& R, const std::vector<Polynomial>& extra, Budget budget) {
    std::vector<Polynomial> gens = R->defining().generators();
    for (const auto& f : extra) gens.push_back(f);
    return QuotientRing::make(R->ambient(), std::move(gens), budget);
}

} // namespace charp
