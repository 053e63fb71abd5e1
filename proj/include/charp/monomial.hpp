#ifndef CHARP_MONOMIAL_HPP
#define CHARP_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "charp/common.hpp"
#include "charp/field.hpp"

namespace charp {

inline constexpr int kMaxVars = 16;

// Dense exponent vector. The ambient variable count is carried by the ring
// descriptor; slots beyond it stay zero.
struct Monomial {
    std::array<std::uint32_t, kMaxVars> e{};

    static Monomial one() { return Monomial{}; }
    static Monomial var(int i, std::uint32_t k = 1) {
        Monomial m;
        m.e[i] = k;
        return m;
    }

    std::int64_t degree(int nvars) const {
        std::int64_t d = 0;
        for (int i = 0; i < nvars; ++i) d += e[i];
        return d;
    }
    bool is_one(int nvars) const {
        for (int i = 0; i < nvars; ++i)
            if (e[i]) return false;
        return true;
    }
    Monomial mul(const Monomial& o, int nvars) const {
        Monomial r;
        for (int i = 0; i < nvars; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
    // q-fold scaling of every exponent (the monomial part of a q-th power).
    Monomial power(std::uint64_t q, int nvars) const {
        Monomial r;
        for (int i = 0; i < nvars; ++i) {
            std::uint64_t v = std::uint64_t(e[i]) * q;
            if (v > 0xFFFFFFFFull) throw budget_error("exponent overflow in monomial power");
            r.e[i] = static_cast<std::uint32_t>(v);
        }
        return r;
    }
    bool divides(const Monomial& o, int nvars) const {
        for (int i = 0; i < nvars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial quotient(const Monomial& o, int nvars) const { // *this / o
        Monomial r;
        for (int i = 0; i < nvars; ++i) r.e[i] = e[i] - o.e[i];
        return r;
    }
    Monomial lcm(const Monomial& o, int nvars) const {
        Monomial r;
        for (int i = 0; i < nvars; ++i) r.e[i] = e[i] > o.e[i] ? e[i] : o.e[i];
        return r;
    }
    bool coprime(const Monomial& o, int nvars) const {
        for (int i = 0; i < nvars; ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }
    std::uint32_t support_mask(int nvars) const {
        std::uint32_t m = 0;
        for (int i = 0; i < nvars; ++i)
            if (e[i]) m |= 1u << i;
        return m;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

// Monomial order: one of lex / graded-lex / graded-reverse-lex with an
// explicit variable priority (priority[0] is the largest variable), plus an
// optional single dominant elimination variable used for colon/intersection.
struct MonomialOrder {
    enum class Kind { Lex, GrLex, GrevLex };
    Kind kind = Kind::GrevLex;
    std::vector<int> priority;  // permutation of 0..nvars-1, largest first
    int elim_var = -1;          // if >= 0, monomials are compared by this variable's degree first

    static MonomialOrder natural(Kind k, int nvars) {
        MonomialOrder o;
        o.kind = k;
        o.priority.resize(nvars);
        std::iota(o.priority.begin(), o.priority.end(), 0);
        return o;
    }

    Cmp compare(const Monomial& a, const Monomial& b) const {
        if (elim_var >= 0) {
            if (a.e[elim_var] != b.e[elim_var])
                return a.e[elim_var] > b.e[elim_var] ? Cmp::GT : Cmp::LT;
        }
        const int n = static_cast<int>(priority.size());
        if (kind != Kind::Lex) {
            std::int64_t da = 0, db = 0;
            for (int i = 0; i < n; ++i) {
                da += a.e[priority[i]];
                db += b.e[priority[i]];
            }
            if (da != db) return da > db ? Cmp::GT : Cmp::LT;
        }
        if (kind == Kind::GrevLex) {
            // ties broken at the smallest-priority variable with unequal
            // exponent; the smaller exponent wins
            for (int i = n - 1; i >= 0; --i) {
                int v = priority[i];
                if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? Cmp::GT : Cmp::LT;
            }
            return Cmp::EQ;
        }
        for (int i = 0; i < n; ++i) {
            int v = priority[i];
            if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? Cmp::GT : Cmp::LT;
        }
        return Cmp::EQ;
    }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::LT; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::GT; }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && priority == o.priority && elim_var == o.elim_var;
    }
};

// Ambient polynomial ring descriptor: prime field, named variables, order.
// Shared immutably by everything built on top of it.
struct RingDesc {
    PrimeField field;
    std::vector<std::string> vars;
    MonomialOrder order;

    RingDesc(PrimeField f, std::vector<std::string> names, MonomialOrder ord)
        : field(f), vars(std::move(names)), order(std::move(ord)) {
        if (vars.empty() || static_cast<int>(vars.size()) > kMaxVars)
            throw engine_error("variable count must be in [1, " + std::to_string(kMaxVars) + "]");
        if (order.priority.size() != vars.size())
            throw engine_error("order priority length does not match variable count");
        for (size_t i = 0; i < vars.size(); ++i)
            for (size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i] == vars[j]) throw engine_error("duplicate variable name: " + vars[i]);
    }

    int nvars() const { return static_cast<int>(vars.size()); }
    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }
    bool same_structure(const RingDesc& o) const {
        return field == o.field && vars == o.vars && order == o.order;
    }
};

using RingPtr = std::shared_ptr<const RingDesc>;

inline RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars,
                         MonomialOrder::Kind kind = MonomialOrder::Kind::GrevLex) {
    auto ord = MonomialOrder::natural(kind, static_cast<int>(vars.size()));
    return std::make_shared<RingDesc>(PrimeField(p), std::move(vars), std::move(ord));
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return;
    if (!a || !b || !a->same_structure(*b)) throw engine_error("ambient ring mismatch");
}

} // namespace charp

#endif
