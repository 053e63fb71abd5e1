#include "charp/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace charp {

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), t_(std::move(terms)) {
    normalize();
}

void Polynomial::normalize() {
    const auto& ord = ring_->order;
    const auto& F = ring_->field;
    std::stable_sort(t_.begin(), t_.end(),
                     [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
    std::vector<Term> out;
    out.reserve(t_.size());
    for (const auto& tm : t_) {
        std::uint32_t c = tm.c % F.p();
        if (!out.empty() && out.back().m == tm.m) {
            out.back().c = F.add(out.back().c, c);
            if (out.back().c == 0) out.pop_back();
        } else if (c != 0) {
            out.push_back({tm.m, c});
        }
    }
    t_ = std::move(out);
}

Polynomial Polynomial::constant(const RingPtr& ring, std::int64_t c) {
    std::uint32_t r = ring->field.reduce(c);
    Polynomial p(ring);
    if (r != 0) p.t_.push_back({Monomial::one(), r});
    return p;
}

Polynomial Polynomial::variable(const RingPtr& ring, int i, std::uint32_t k) {
    if (i < 0 || i >= ring->nvars()) throw engine_error("variable index out of range");
    Polynomial p(ring);
    if (k == 0) return constant(ring, 1);
    p.t_.push_back({Monomial::var(i, k), 1});
    return p;
}

Polynomial Polynomial::term(const RingPtr& ring, Monomial m, std::int64_t c) {
    std::uint32_t r = ring->field.reduce(c);
    Polynomial p(ring);
    if (r != 0) p.t_.push_back({m, r});
    return p;
}

bool Polynomial::is_homogeneous() const {
    if (t_.empty()) return true;
    const int n = ring_->nvars();
    std::int64_t d = t_[0].m.degree(n);
    for (const auto& tm : t_)
        if (tm.m.degree(n) != d) return false;
    return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    const auto& ord = ring_->order;
    const auto& F = ring_->field;
    Polynomial r(ring_);
    r.t_.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        Cmp c = ord.compare(t_[i].m, o.t_[j].m);
        if (c == Cmp::GT) {
            r.t_.push_back(t_[i++]);
        } else if (c == Cmp::LT) {
            r.t_.push_back(o.t_[j++]);
        } else {
            std::uint32_t s = F.add(t_[i].c, o.t_[j].c);
            if (s) r.t_.push_back({t_[i].m, s});
            ++i;
            ++j;
        }
    }
    for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
    for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    const auto& F = ring_->field;
    Polynomial r(ring_);
    r.t_.reserve(t_.size());
    for (const auto& tm : t_) r.t_.push_back({tm.m, F.neg(tm.c)});
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(std::uint32_t c) const {
    const auto& F = ring_->field;
    c %= F.p();
    if (c == 0) return Polynomial(ring_);
    if (c == 1) return *this;
    Polynomial r(ring_);
    r.t_.reserve(t_.size());
    for (const auto& tm : t_) r.t_.push_back({tm.m, F.mul(tm.c, c)});
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, std::uint32_t c) const {
    const auto& F = ring_->field;
    const int n = ring_->nvars();
    c %= F.p();
    if (c == 0) return Polynomial(ring_);
    Polynomial r(ring_);
    r.t_.reserve(t_.size());
    for (const auto& tm : t_) r.t_.push_back({tm.m.mul(m, n), F.mul(tm.c, c)});
    return r; // multiplying by a monomial preserves the term order
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    if (is_zero() || o.is_zero()) return Polynomial(ring_);
    const Polynomial& shorter = t_.size() <= o.t_.size() ? *this : o;
    const Polynomial& longer = t_.size() <= o.t_.size() ? o : *this;
    Polynomial acc(ring_);
    for (const auto& tm : shorter.t_) acc = acc + longer.times_term(tm.m, tm.c);
    return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!ring_ || !o.ring_) return t_.empty() && o.t_.empty();
    if (!ring_->same_structure(*o.ring_)) return false;
    if (t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (!(t_[i].m == o.t_[i].m) || t_[i].c != o.t_[i].c) return false;
    return true;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->field.inv(t_[0].c));
}

Polynomial Polynomial::reduce_step(const Polynomial& f, const Polynomial& g,
                                   const Monomial& m, std::uint32_t c) {
    return f - g.times_term(m, c);
}

std::string Polynomial::str() const {
    if (t_.empty()) return "0";
    const int n = ring_->nvars();
    std::ostringstream os;
    bool first = true;
    for (const auto& tm : t_) {
        if (!first) os << " + ";
        first = false;
        bool isone = tm.m.is_one(n);
        bool wrote = false;
        if (tm.c != 1 || isone) {
            os << tm.c;
            wrote = true;
        }
        for (int i = 0; i < n; ++i) {
            if (tm.m.e[i] == 0) continue;
            if (wrote) os << "*";
            os << ring_->vars[i];
            if (tm.m.e[i] > 1) os << "^" << tm.m.e[i];
            wrote = true;
        }
    }
    return os.str();
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op) {
    require_same_ring(a.ring(), b.ring());
    switch (op) {
        case PolyOp::Add: return a + b;
        case PolyOp::Sub: return a - b;
        case PolyOp::Mul: return a * b;
    }
    throw engine_error("unknown polynomial operation");
}

bool is_power_of(std::uint64_t q, std::uint32_t p) {
    if (q == 0) return false;
    while (q % p == 0) q /= p;
    return q == 1;
}

Polynomial frobenius_power(const Polynomial& a, std::uint64_t q) {
    if (!a.ring()) throw engine_error("frobenius power of an unattached polynomial");
    const auto& F = a.ring()->field;
    if (!is_power_of(q, F.p()))
        throw engine_error("q = " + std::to_string(q) + " is not a power of the characteristic " +
                           std::to_string(F.p()));
    const int n = a.ring()->nvars();
    std::vector<Term> out;
    out.reserve(a.terms().size());
    // (sum c_i m_i)^q = sum c_i^q m_i^q in characteristic p, and c^q = c
    // in F_p by Fermat; exponent scaling preserves the term order.
    for (const auto& tm : a.terms()) out.push_back({tm.m.power(q, n), tm.c});
    return Polynomial(a.ring(), std::move(out));
}

} // namespace charp
