#ifndef CHARP_FIELD_HPP
#define CHARP_FIELD_HPP

#include <cstdint>

#include "charp/common.hpp"

namespace charp {

// The prime field F_p. Elements are residues in [0, p); p < 2^31 so that
// products fit in 64-bit intermediates.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!is_prime(p)) throw engine_error("characteristic " + std::to_string(p) + " is not prime");
        if (p >= (1u << 31)) throw engine_error("characteristic must be < 2^31");
    }

    std::uint32_t p() const { return p_; }

    std::uint32_t reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return s >= p_ ? static_cast<std::uint32_t>(s - p_) : static_cast<std::uint32_t>(s);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1 % p_;
        std::uint32_t base = a % p_;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a % p_ == 0) throw engine_error("division by zero in F_" + std::to_string(p_));
        return pow(a, p_ - 2);
    }
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        if (n < 4) return true;
        if (n % 2 == 0) return false;
        for (std::uint32_t d = 3; std::uint64_t(d) * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::uint32_t p_;
};

} // namespace charp

#endif
