#include "charp/ideal.hpp"

#include <algorithm>

namespace charp {

GroebnerIdeal::GroebnerIdeal(RingPtr ring, std::vector<Polynomial> gens, Budget budget) {
    st_ = std::make_shared<State>();
    st_->ring = std::move(ring);
    st_->budget = budget;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        require_same_ring(st_->ring, g.ring());
        st_->gens.push_back(std::move(g));
    }
}

void GroebnerIdeal::seal() const {
    std::call_once(st_->once, [this] {
        const RingPtr& R = st_->ring;
        ModuleOrder ord{R, 1};
        std::vector<ModGBInput> in;
        in.reserve(st_->gens.size());
        for (size_t i = 0; i < st_->gens.size(); ++i) {
            ModVec graph = ModVec::from_poly(st_->gens[i], 0)
                               .add(ModVec::unit(1 + static_cast<std::int32_t>(i)), ord);
            in.push_back({graph, false});
        }
        ModGBOptions opt;
        opt.budget = st_->budget;
        // tracked run: primary block = the ring, one tracking column per
        // generator; secondary pairs only complete the syzygy part and are
        // skipped, while interreduction still canonicalizes the ring block
        opt.generators_only = true;
        opt.interreduce = true;
        ModGB gb(ord, std::move(in), opt);
        const auto& F = R->field;
        for (const auto& e : gb.elements()) {
            if (e.is_zero() || e.leading().pos != 0) continue;
            Polynomial b = e.component(0, R);
            std::vector<Polynomial> cert(st_->gens.size(), Polynomial(R));
            // graph element (b, h) satisfies b = sum h_i g_i up to sign bookkeeping
            for (size_t i = 0; i < st_->gens.size(); ++i)
                cert[i] = e.component(1 + static_cast<std::int32_t>(i), R);
            // normalize to a monic basis element
            std::uint32_t lc = b.leading_coeff();
            if (lc != 1) {
                std::uint32_t s = F.inv(lc);
                b = b.scaled(s);
                for (auto& c : cert) c = c.scaled(s);
            }
            st_->basis.push_back(std::move(b));
            st_->certs.push_back(std::move(cert));
        }
    });
}

const std::vector<Polynomial>& GroebnerIdeal::reduced_basis() const {
    seal();
    return st_->basis;
}

const std::vector<std::vector<Polynomial>>& GroebnerIdeal::certificates() const {
    seal();
    return st_->certs;
}

Polynomial GroebnerIdeal::normal_form(const Polynomial& f) const {
    require_same_ring(st_->ring, f.ring());
    const auto& basis = reduced_basis();
    const RingPtr& R = st_->ring;
    const int nv = R->nvars();
    const auto& ord = R->order;
    const auto& F = R->field;

    std::vector<Term> out;
    std::vector<Term> cur(f.terms());
    std::vector<Term> next;
    size_t head = 0;
    while (head < cur.size()) {
        const Term& lt = cur[head];
        std::uint32_t mask = lt.m.support_mask(nv);
        const Polynomial* red = nullptr;
        for (const auto& g : basis) {
            const Monomial& lm = g.leading_monomial();
            if ((lm.support_mask(nv) & ~mask) != 0) continue;
            if (lm.divides(lt.m, nv)) {
                red = &g;
                break;
            }
        }
        if (!red) {
            out.push_back(lt);
            ++head;
            continue;
        }
        Monomial q = lt.m.quotient(red->leading_monomial(), nv);
        std::uint32_t c = F.neg(F.mul(lt.c, F.inv(red->leading_coeff())));
        const auto& g = red->terms();
        next.clear();
        size_t i = head + 1, j = 1;
        while (i < cur.size() && j < g.size()) {
            Term bt{g[j].m.mul(q, nv), F.mul(g[j].c, c)};
            Cmp cmp = ord.compare(cur[i].m, bt.m);
            if (cmp == Cmp::GT) {
                next.push_back(cur[i++]);
            } else if (cmp == Cmp::LT) {
                next.push_back(bt);
                ++j;
            } else {
                std::uint32_t s = F.add(cur[i].c, bt.c);
                if (s) next.push_back({cur[i].m, s});
                ++i;
                ++j;
            }
        }
        for (; i < cur.size(); ++i) next.push_back(cur[i]);
        for (; j < g.size(); ++j) next.push_back({g[j].m.mul(q, nv), F.mul(g[j].c, c)});
        cur.swap(next);
        head = 0;
    }
    return Polynomial(R, std::move(out));
}

bool GroebnerIdeal::is_unit_ideal() const {
    const auto& b = reduced_basis();
    return b.size() == 1 && b[0].is_constant() && !b[0].is_zero();
}

bool GroebnerIdeal::is_homogeneous() const {
    for (const auto& g : st_->gens)
        if (!g.is_homogeneous()) return false;
    return true;
}

std::vector<Monomial> GroebnerIdeal::initial_ideal() const {
    std::vector<Monomial> out;
    for (const auto& g : reduced_basis()) out.push_back(g.leading_monomial());
    return out;
}

bool GroebnerIdeal::operator==(const GroebnerIdeal& o) const {
    if (!st_->ring->same_structure(*o.st_->ring)) return false;
    return reduced_basis() == o.reduced_basis();
}

GroebnerIdeal buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens, Budget budget) {
    GroebnerIdeal I(ring, gens, budget);
    I.reduced_basis();
    return I;
}

GroebnerIdeal bracket_power(const GroebnerIdeal& I, std::uint64_t q) {
    const RingPtr& R = I.ring();
    if (!is_power_of(q, R->field.p()))
        throw engine_error("bracket power requires q to be a power of " + std::to_string(R->field.p()));
    std::vector<Polynomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(frobenius_power(g, q));
    return GroebnerIdeal(R, std::move(gens));
}

namespace {

// ambient ring extended by one dominant auxiliary variable (appended last)
RingPtr extend_with_aux(const RingPtr& R) {
    if (R->nvars() + 1 > kMaxVars)
        throw engine_error("no room for an elimination variable (max " +
                           std::to_string(kMaxVars) + " variables)");
    std::vector<std::string> vars = R->vars;
    vars.push_back("@t");
    MonomialOrder ord = R->order;
    ord.priority.push_back(R->nvars());
    ord.elim_var = R->nvars();
    return std::make_shared<RingDesc>(R->field, std::move(vars), std::move(ord));
}

Polynomial lift_to(const RingPtr& ext, const Polynomial& f) {
    std::vector<Term> ts(f.terms().begin(), f.terms().end());
    return Polynomial(ext, std::move(ts)); // variable indices are unchanged
}

Polynomial restrict_from(const RingPtr& R, const Polynomial& f) {
    std::vector<Term> ts(f.terms().begin(), f.terms().end());
    return Polynomial(R, std::move(ts));
}

} // namespace

GroebnerIdeal intersect(const GroebnerIdeal& I, const GroebnerIdeal& J) {
    require_same_ring(I.ring(), J.ring());
    const RingPtr& R = I.ring();
    RingPtr ext = extend_with_aux(R);
    int tvar = R->nvars();
    Polynomial t = Polynomial::variable(ext, tvar);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(t * lift_to(ext, g));
    for (const auto& g : J.generators()) gens.push_back(one_minus_t * lift_to(ext, g));
    GroebnerIdeal E(ext, std::move(gens));
    std::vector<Polynomial> out;
    for (const auto& b : E.reduced_basis()) {
        bool uses_t = false;
        for (const auto& tm : b.terms())
            if (tm.m.e[tvar]) {
                uses_t = true;
                break;
            }
        if (!uses_t) out.push_back(restrict_from(R, b));
    }
    return GroebnerIdeal(R, std::move(out));
}

Polynomial exact_divide(const Polynomial& h, const Polynomial& f) {
    require_same_ring(h.ring(), f.ring());
    if (f.is_zero()) throw engine_error("division by the zero polynomial");
    const RingPtr& R = h.ring();
    const int nv = R->nvars();
    const auto& F = R->field;
    Polynomial q(R);
    Polynomial cur = h;
    while (!cur.is_zero()) {
        const Term& lt = cur.leading();
        const Term& lf = f.leading();
        if (!lf.m.divides(lt.m, nv))
            throw engine_error("exact division failed: remainder is nonzero");
        Monomial m = lt.m.quotient(lf.m, nv);
        std::uint32_t c = F.mul(lt.c, F.inv(lf.c));
        q = q + Polynomial::term(R, m, c);
        cur = Polynomial::reduce_step(cur, f, m, c);
    }
    return q;
}

GroebnerIdeal colon(const GroebnerIdeal& I, const Polynomial& f) {
    if (f.is_zero()) throw engine_error("colon by the zero polynomial");
    require_same_ring(I.ring(), f.ring());
    const RingPtr& R = I.ring();
    if (f.is_constant()) return I;
    GroebnerIdeal fI(R, {f});
    GroebnerIdeal meet = intersect(I, fI);
    std::vector<Polynomial> out;
    for (const auto& g : meet.reduced_basis()) out.push_back(exact_divide(g, f));
    return GroebnerIdeal(R, std::move(out));
}

int monomial_quotient_dimension(const std::vector<Monomial>& gens, int nvars) {
    for (const auto& g : gens)
        if (g.is_one(nvars)) return -1; // unit ideal: empty spectrum
    std::vector<std::uint32_t> masks;
    masks.reserve(gens.size());
    for (const auto& g : gens) masks.push_back(g.support_mask(nvars));
    int best = 0;
    const std::uint32_t limit = 1u << nvars;
    for (std::uint32_t s = 0; s < limit; ++s) {
        int size = __builtin_popcount(s);
        if (size <= best) continue;
        bool independent = true;
        for (std::uint32_t m : masks)
            if ((m & ~s) == 0) {
                independent = false;
                break;
            }
        if (independent) best = size;
    }
    return best;
}

} // namespace charp
