#ifndef CHARP_COMMON_HPP
#define CHARP_COMMON_HPP

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace charp {

// Raised on malformed input or violated mathematical preconditions.
class engine_error : public std::runtime_error {
public:
    explicit engine_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a resource cap is hit. Callers surface this as an
// INDETERMINATE outcome, never as a mathematical verdict.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Per-call resource caps. Defaults are generous enough for every shipped
// computation; scenario files and the CLI can lower or raise them.
struct Budget {
    long max_pairs = 4'000'000;     // S-pairs processed per basis computation
    long max_basis = 200'000;       // basis elements per computation
    int max_degree = 256;           // internal degree cap (homogeneous runs)
    int max_steps = 32;             // homological steps per resolution
    std::uint64_t max_q = 65536;    // cap on q = p^n
    long max_length = 10'000'000;   // standard-monomial enumeration cap
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;

    void arm_time_limit(double seconds) {
        deadline = std::chrono::steady_clock::now() +
                   std::chrono::milliseconds(static_cast<long>(seconds * 1000));
        has_deadline = true;
    }
    void check_time() const {
        if (has_deadline && std::chrono::steady_clock::now() > deadline)
            throw budget_error("time limit exceeded");
    }
    void check_pairs(long n) const {
        check_time();
        if (n > max_pairs) throw budget_error("pair budget exceeded (" + std::to_string(max_pairs) + ")");
    }
    void check_basis(long n) const {
        if (n > max_basis) throw budget_error("basis-size budget exceeded (" + std::to_string(max_basis) + ")");
    }
    void check_degree(long d) const {
        if (d > max_degree) throw budget_error("degree budget exceeded (" + std::to_string(max_degree) + ")");
    }
    void check_q(std::uint64_t q) const {
        if (q > max_q) throw budget_error("q budget exceeded (" + std::to_string(max_q) + ")");
    }
};

} // namespace charp

#endif
