#include "charp/module.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace charp {

namespace {

ModuleOrder order_for(const QRingPtr& ring, int primary_count) {
    return ModuleOrder{ring->ambient(), primary_count};
}

// canonical entries: reduce every component against the defining ideal
ModVec reduce_entries(const QRingPtr& ring, const ModVec& v) {
    if (ring->is_polynomial_ring()) return v;
    ModuleOrder ord = order_for(ring, 1 << 30);
    std::map<std::int32_t, Polynomial> comps;
    for (const auto& tm : v.terms()) {
        auto [it, fresh] = comps.try_emplace(tm.pos, Polynomial(ring->ambient()));
        it->second = it->second + Polynomial::term(ring->ambient(), tm.m, tm.c);
    }
    std::vector<ModTerm> out;
    for (auto& [pos, f] : comps) {
        Polynomial nf = ring->reduce(f);
        for (const auto& t : nf.terms()) out.push_back({pos, t.m, t.c});
    }
    return ModVec::make(ord, std::move(out));
}

ModVec vec_times_poly(const ModVec& v, const Polynomial& f, const ModuleOrder& ord) {
    ModVec acc;
    for (const auto& t : f.terms()) acc = acc.add(v.times_term(t.m, t.c, ord.ring), ord);
    return acc;
}

ModVec nf_against(const std::vector<ModVec>& basis, const ModVec& v, const ModuleOrder& ord) {
    const int nv = ord.ring->nvars();
    const auto& F = ord.ring->field;
    std::vector<ModTerm> out;
    std::vector<ModTerm> cur(v.terms());
    std::vector<ModTerm> next;
    size_t head = 0;
    while (head < cur.size()) {
        const ModTerm& lt = cur[head];
        const ModVec* red = nullptr;
        std::uint32_t mask = lt.m.support_mask(nv);
        for (const auto& g : basis) {
            const ModTerm& gl = g.leading();
            if (gl.pos != lt.pos) continue;
            if ((gl.m.support_mask(nv) & ~mask) != 0) continue;
            if (gl.m.divides(lt.m, nv)) {
                red = &g;
                break;
            }
        }
        if (!red) {
            out.push_back(lt);
            ++head;
            continue;
        }
        // cur[head..] - (lt.c / lc(red)) * q * red; the leads cancel
        Monomial q = lt.m.quotient(red->leading().m, nv);
        std::uint32_t c = F.neg(F.mul(lt.c, F.inv(red->leading().c)));
        next.clear();
        size_t i = head + 1, j = 1;
        const auto& g = red->terms();
        while (i < cur.size() && j < g.size()) {
            ModTerm bt{g[j].pos, g[j].m.mul(q, nv), F.mul(g[j].c, c)};
            Cmp cmp = ord.compare(cur[i], bt);
            if (cmp == Cmp::GT) {
                next.push_back(cur[i++]);
            } else if (cmp == Cmp::LT) {
                next.push_back(bt);
                ++j;
            } else {
                std::uint32_t s = F.add(cur[i].c, bt.c);
                if (s) next.push_back({cur[i].pos, cur[i].m, s});
                ++i;
                ++j;
            }
        }
        for (; i < cur.size(); ++i) next.push_back(cur[i]);
        for (; j < g.size(); ++j) next.push_back({g[j].pos, g[j].m.mul(q, nv), F.mul(g[j].c, c)});
        cur.swap(next);
        head = 0;
    }
    return ModVec::adopt_sorted(std::move(out));
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

std::vector<ModVec> defining_columns(const QRingPtr& ring, int rank) {
    std::vector<ModVec> out;
    if (ring->is_polynomial_ring()) return out;
    const auto& basis = ring->defining().reduced_basis();
    out.reserve(basis.size() * size_t(rank));
    for (int r = 0; r < rank; ++r)
        for (const auto& g : basis) out.push_back(ModVec::from_poly(g, r));
    return out;
}

ModVec GradedMatrix::apply(const ModVec& v, const ModuleOrder& ord) const {
    ModVec acc;
    for (const auto& tm : v.terms()) {
        if (tm.pos < 0 || tm.pos >= static_cast<std::int32_t>(cols.size()))
            throw engine_error("matrix application out of range");
        acc = acc.add(cols[tm.pos].times_term(tm.m, tm.c, ord.ring), ord);
    }
    return acc;
}

bool FreeComplex::is_complex() const {
    ModuleOrder ord = ModuleOrder{ring->ambient(), 1 << 30};
    for (size_t i = 0; i + 1 < d.size(); ++i) {
        for (const auto& col : d[i + 1].cols) {
            ModVec image = d[i].apply(col, ord);
            if (!reduce_entries(ring, image).is_zero()) return false;
        }
    }
    return true;
}

PresentedModule::PresentedModule(QRingPtr ring, GradedFreeModule gens,
                                 std::vector<ModVec> relation_cols, Budget budget) {
    st_ = std::make_shared<State>();
    st_->ring = std::move(ring);
    st_->budget = budget;
    if (gens.rank != static_cast<int>(gens.twists.size()))
        throw engine_error("free module rank does not match its twist vector");
    st_->gens = std::move(gens);
    const int nv = st_->ring->ambient()->nvars();
    for (auto& c : relation_cols) {
        for (const auto& tm : c.terms())
            if (tm.pos < 0 || tm.pos >= st_->gens.rank)
                throw engine_error("relation column position out of range");
        if (!c.is_homogeneous(st_->gens.twists, nv))
            throw engine_error("presentation matrix is not graded");
        ModVec r = reduce_entries(st_->ring, c);
        if (!r.is_zero()) st_->rels.push_back(std::move(r));
    }
}

PresentedModule PresentedModule::free_module(QRingPtr ring, GradedFreeModule gens, Budget budget) {
    return PresentedModule(std::move(ring), std::move(gens), {}, budget);
}

PresentedModule PresentedModule::cyclic(QRingPtr ring, const std::vector<Polynomial>& extra,
                                        Budget budget) {
    std::vector<ModVec> rels;
    for (const auto& f : extra) {
        require_same_ring(ring->ambient(), f.ring());
        if (!f.is_homogeneous()) throw engine_error("cyclic module numerator must be homogeneous");
        rels.push_back(ModVec::from_poly(f, 0));
    }
    return PresentedModule(std::move(ring), GradedFreeModule::of({0}), std::move(rels), budget);
}

PresentedModule PresentedModule::zero_module(QRingPtr ring) {
    return PresentedModule(std::move(ring), GradedFreeModule::of({}), {});
}

const std::vector<ModVec>& PresentedModule::relation_basis() const {
    std::call_once(st_->once, [this] {
        ModuleOrder ord = order_for(st_->ring, st_->gens.rank);
        st_->basis = module_basis(ord, st_->rels, defining_columns(st_->ring, st_->gens.rank),
                                  st_->gens.twists, st_->budget);
    });
    return st_->basis;
}

ModVec PresentedModule::reduce(const ModVec& v) const {
    ModuleOrder ord = order_for(st_->ring, st_->gens.rank);
    return nf_against(relation_basis(), v, ord);
}

bool PresentedModule::is_zero() const {
    for (int r = 0; r < st_->gens.rank; ++r)
        if (!reduce(ModVec::unit(r)).is_zero()) return false;
    return true;
}

bool PresentedModule::equals(const PresentedModule& o) const {
    if (!st_->ring->ambient()->same_structure(*o.st_->ring->ambient())) return false;
    if (!(st_->ring->defining() == o.st_->ring->defining())) return false;
    bool za = is_zero(), zb = o.is_zero();
    if (za || zb) return za == zb; // zero modules are equal whatever the cover
    if (!(st_->gens == o.st_->gens)) return false;
    return relation_basis() == o.relation_basis();
}

std::string PresentedModule::describe() const {
    std::ostringstream os;
    const RingPtr& amb = st_->ring->ambient();
    os << "char " << amb->field.p() << "; vars";
    for (const auto& v : amb->vars) os << " " << v;
    os << "; defining";
    for (const auto& g : st_->ring->defining().reduced_basis()) os << " [" << g.str() << "]";
    os << "; twists";
    for (auto t : st_->gens.twists) os << " " << t;
    os << "; relations";
    for (const auto& c : st_->rels) {
        os << " {";
        for (const auto& tm : c.terms())
            os << "(" << tm.pos << "," << Polynomial::term(amb, tm.m, tm.c).str() << ")";
        os << "}";
    }
    return os.str();
}

std::uint64_t PresentedModule::presentation_hash() const { return fnv1a(describe()); }

void minimize_presentation(const QRingPtr& ring, GradedFreeModule& gens,
                           std::vector<ModVec>& cols, Budget budget) {
    (void)budget;
    ModuleOrder ord = order_for(ring, 1 << 30);
    const auto& F = ring->ambient()->field;
    const int nv = ring->ambient()->nvars();
    for (auto& c : cols) c = reduce_entries(ring, c);

    auto find_unit = [&](int& row, int& col) -> bool {
        for (size_t c = 0; c < cols.size(); ++c)
            for (const auto& tm : cols[c].terms())
                if (tm.m.is_one(nv)) {
                    row = tm.pos;
                    col = static_cast<int>(c);
                    return true;
                }
        return false;
    };

    int row = 0, col = 0;
    while (find_unit(row, col)) {
        Polynomial pivot = cols[col].component(row, ring->ambient());
        std::uint32_t u = pivot.leading_coeff(); // constant by choice of (row, col)
        cols[col] = cols[col].scaled(F.inv(u), F);
        for (size_t c = 0; c < cols.size(); ++c) {
            if (static_cast<int>(c) == col) continue;
            Polynomial e = cols[c].component(row, ring->ambient());
            if (e.is_zero()) continue;
            cols[c] = cols[c].add(vec_times_poly(cols[col], -e, ord), ord);
            cols[c] = reduce_entries(ring, cols[c]);
        }
        cols.erase(cols.begin() + col);
        for (auto& c : cols) {
            std::vector<ModTerm> ts;
            for (const auto& tm : c.terms()) {
                if (tm.pos == row) continue; // cleared above; drop the split row
                ts.push_back({tm.pos > row ? tm.pos - 1 : tm.pos, tm.m, tm.c});
            }
            c = ModVec::make(ord, std::move(ts));
        }
        gens.twists.erase(gens.twists.begin() + row);
        gens.rank -= 1;
    }
    std::vector<ModVec> kept;
    for (auto& c : cols)
        if (!c.is_zero()) kept.push_back(std::move(c));
    cols = std::move(kept);
}

std::vector<ModVec> trim_to_minimal_generators(const QRingPtr& ring,
                                               const GradedFreeModule& ambient,
                                               std::vector<ModVec> candidates, Budget budget) {
    ModuleOrder ord = order_for(ring, ambient.rank);
    const int nv = ring->ambient()->nvars();

    std::vector<ModVec> cands;
    for (auto& c : candidates) {
        ModVec r = reduce_entries(ring, c);
        if (!r.is_zero()) cands.push_back(std::move(r));
    }
    std::stable_sort(cands.begin(), cands.end(), [&](const ModVec& a, const ModVec& b) {
        std::int64_t da = a.homogeneous_degree(ambient.twists, nv);
        std::int64_t db = b.homogeneous_degree(ambient.twists, nv);
        if (da != db) return da < db;
        return ord.compare(a.leading(), b.leading()) == Cmp::LT;
    });

    // incremental basis of the already-selected generators; processing pairs
    // through degree d makes normal_form an exact membership test in degree
    // d, because every pair a degree-d addition creates sits strictly above d
    ModGBOptions opt;
    opt.twists = ambient.twists;
    opt.budget = budget;
    ModGB gb(ord, opt);
    for (const auto& r : defining_columns(ring, ambient.rank)) gb.seed_relation(r);

    std::vector<ModVec> selected;
    for (auto& cand : cands) {
        gb.complete_through(cand.homogeneous_degree(ambient.twists, nv));
        ModVec nf = gb.normal_form(cand);
        if (nf.is_zero()) continue;
        selected.push_back(std::move(cand));
        gb.add_generator(std::move(nf));
    }
    return selected;
}

std::vector<ModVec> module_syzygies(const QRingPtr& ring, const GradedFreeModule& ambient,
                                    const std::vector<ModVec>& cols, Budget budget,
                                    const std::vector<ModVec>& extra_relations) {
    const int nv = ring->ambient()->nvars();
    std::vector<std::int64_t> col_degrees;
    col_degrees.reserve(cols.size());
    for (const auto& c : cols) col_degrees.push_back(c.homogeneous_degree(ambient.twists, nv));
    std::vector<ModVec> rels = defining_columns(ring, ambient.rank);
    for (const auto& r : extra_relations) rels.push_back(r);
    return syzygy_generators(ring->ambient(), ambient.rank, cols, rels, ambient.twists,
                             col_degrees, budget);
}

PresentedModule syzygy(const PresentedModule& m) {
    const QRingPtr& R = m.ring();
    GradedFreeModule gens = m.gens();
    std::vector<ModVec> cols = m.relations();
    minimize_presentation(R, gens, cols);
    cols = trim_to_minimal_generators(R, gens, cols, m.budget());
    const int nv = R->ambient()->nvars();
    std::vector<std::int64_t> col_degrees;
    for (const auto& c : cols) col_degrees.push_back(c.homogeneous_degree(gens.twists, nv));
    std::vector<ModVec> syz = module_syzygies(R, gens, cols, m.budget());
    GradedFreeModule target = GradedFreeModule::of(col_degrees);
    syz = trim_to_minimal_generators(R, target, std::move(syz), m.budget());
    return PresentedModule(R, target, std::move(syz), m.budget());
}

Resolution minimal_resolution(const PresentedModule& m, int steps) {
    if (steps < 0) throw engine_error("resolution steps must be nonnegative");
    const QRingPtr& R = m.ring();
    if (steps > m.budget().max_steps) throw budget_error("resolution step budget exceeded");
    const int nv = R->ambient()->nvars();

    Resolution res;
    res.complex.ring = R;

    GradedFreeModule f0 = m.gens();
    std::vector<ModVec> cols = m.relations();
    minimize_presentation(R, f0, cols);
    cols = trim_to_minimal_generators(R, f0, cols, m.budget());
    res.complex.f0 = f0;
    res.betti.record(0, f0);
    if (f0.rank == 0 || cols.empty()) {
        res.complete = true;
        res.pd = 0;
        return res;
    }

    GradedFreeModule prev = f0;
    for (int i = 1; i <= steps; ++i) {
        std::vector<std::int64_t> degs;
        for (const auto& c : cols) degs.push_back(c.homogeneous_degree(prev.twists, nv));
        GradedFreeModule fi = GradedFreeModule::of(degs);
        GradedMatrix d;
        d.target = prev;
        d.source = fi;
        d.cols = cols;
        // a trimmed differential over a minimal predecessor has no unit entry
        for (const auto& c : d.cols)
            for (const auto& tm : c.terms())
                if (tm.m.is_one(nv))
                    throw engine_error("internal: resolution differential has a unit entry");
        res.complex.d.push_back(d);
        res.betti.record(i, fi);
        if (i == steps) break;
        std::vector<ModVec> syz = module_syzygies(R, prev, cols, m.budget());
        syz = trim_to_minimal_generators(R, fi, std::move(syz), m.budget());
        if (syz.empty()) {
            res.complete = true;
            res.pd = i;
            return res;
        }
        prev = fi;
        cols = std::move(syz);
    }
    // probe one further step so a resolution ending exactly at `steps` closes
    if (!res.complete && !res.complex.d.empty()) {
        std::vector<ModVec> syz = module_syzygies(R, prev, cols, m.budget());
        syz = trim_to_minimal_generators(R, res.complex.d.back().source, std::move(syz),
                                         m.budget());
        if (syz.empty()) {
            res.complete = true;
            res.pd = steps;
        }
    }
    return res;
}

int ring_dimension(const QRingPtr& ring) { return ring->krull_dimension(); }

int ring_depth(const QRingPtr& ring) {
    if (auto c = ring->cached_depth()) return *c;
    PresentedModule self = PresentedModule::free_module(ring, GradedFreeModule::of({0}));
    int d = depth(self);
    ring->set_cached_depth(d);
    return d;
}

FinitePdVerdict is_finite_pd(const PresentedModule& m) {
    const QRingPtr& R = m.ring();
    int s = ring_depth(R) + 1;
    Resolution res = minimal_resolution(m, s);
    FinitePdVerdict v;
    v.certificate = res.betti;
    if (res.complete && res.pd <= s - 1) {
        v.finite = true;
        v.pd = res.pd;
        return v;
    }
    if (res.complete && res.pd == s)
        throw engine_error("internal: finite pd exceeding depth contradicts Auslander-Buchsbaum");
    v.finite = false;
    return v;
}

namespace {

// monomials at each position that lead the initial module
std::vector<std::vector<Monomial>> initial_module(const PresentedModule& m) {
    std::vector<std::vector<Monomial>> mon(m.rank());
    for (const auto& g : m.relation_basis()) {
        const ModTerm& lt = g.leading();
        mon[lt.pos].push_back(lt.m);
    }
    return mon;
}

std::uint64_t count_standard_monomials(const std::vector<Monomial>& gens, int nv,
                                       const Budget& budget) {
    // zero-dimensional position: every variable has a pure-power bound
    std::vector<std::uint32_t> bound(nv, 0);
    for (int v = 0; v < nv; ++v) {
        bool found = false;
        for (const auto& g : gens) {
            bool pure = true;
            for (int w = 0; w < nv; ++w)
                if (w != v && g.e[w] != 0) {
                    pure = false;
                    break;
                }
            if (pure && g.e[v] > 0) {
                if (!found || g.e[v] < bound[v]) bound[v] = g.e[v];
                found = true;
            }
        }
        if (!found) throw engine_error("internal: expected a zero-dimensional position");
    }
    std::uint64_t count = 0;
    Monomial cur;
    std::function<void(int)> rec = [&](int v) {
        if (v == nv) {
            for (const auto& g : gens)
                if (g.divides(cur, nv)) return;
            ++count;
            if (static_cast<long>(count) > budget.max_length)
                throw budget_error("length enumeration budget exceeded");
            return;
        }
        for (std::uint32_t e = 0; e < bound[v]; ++e) {
            cur.e[v] = e;
            rec(v + 1);
        }
        cur.e[v] = 0;
    };
    rec(0);
    return count;
}

void count_monomials_of_degree(const std::vector<Monomial>& gens, int nv, std::int64_t deg,
                               std::uint64_t& count) {
    if (deg < 0) return;
    Monomial cur;
    std::function<void(int, std::int64_t)> rec = [&](int v, std::int64_t rem) {
        if (v == nv - 1) {
            cur.e[v] = static_cast<std::uint32_t>(rem);
            bool standard = true;
            for (const auto& g : gens)
                if (g.divides(cur, nv)) {
                    standard = false;
                    break;
                }
            if (standard) ++count;
            cur.e[v] = 0;
            return;
        }
        for (std::int64_t e = 0; e <= rem; ++e) {
            cur.e[v] = static_cast<std::uint32_t>(e);
            rec(v + 1, rem - e);
        }
        cur.e[v] = 0;
    };
    if (nv == 0) {
        if (deg == 0 && gens.empty()) ++count;
        return;
    }
    rec(0, deg);
}

} // namespace

int dimension(const PresentedModule& m) {
    if (m.is_zero()) throw engine_error("dimension of the zero module is undefined");
    auto mon = initial_module(m);
    const int nv = m.ring()->ambient()->nvars();
    int best = -1;
    for (int r = 0; r < m.rank(); ++r) {
        int d = monomial_quotient_dimension(mon[r], nv);
        if (d > best) best = d;
    }
    return best;
}

ModuleLength module_length(const PresentedModule& m) {
    ModuleLength L;
    if (m.rank() == 0 || m.is_zero()) {
        L.finite = true;
        L.value = 0;
        return L;
    }
    auto mon = initial_module(m);
    const int nv = m.ring()->ambient()->nvars();
    std::uint64_t total = 0;
    for (int r = 0; r < m.rank(); ++r) {
        int d = monomial_quotient_dimension(mon[r], nv);
        if (d > 0) {
            L.finite = false;
            return L;
        }
        if (d < 0) continue; // this position collapsed to zero
        total += count_standard_monomials(mon[r], nv, m.budget());
    }
    L.finite = true;
    L.value = total;
    return L;
}

std::uint64_t hilbert_function(const PresentedModule& m, std::int64_t degree) {
    if (m.rank() == 0) return 0;
    auto mon = initial_module(m);
    const int nv = m.ring()->ambient()->nvars();
    std::uint64_t count = 0;
    for (int r = 0; r < m.rank(); ++r) {
        bool unit = false;
        for (const auto& g : mon[r])
            if (g.is_one(nv)) unit = true;
        if (unit) continue;
        count_monomials_of_degree(mon[r], nv, degree - m.gens().twists[r], count);
    }
    return count;
}

namespace {

PresentedModule as_ambient_module(const PresentedModule& m) {
    QRingPtr S = QuotientRing::polynomial_ring(m.ring()->ambient());
    std::vector<ModVec> rels = m.relations();
    for (auto& c : defining_columns(m.ring(), m.rank())) rels.push_back(std::move(c));
    Budget b = m.budget();
    if (b.max_steps < m.ring()->ambient()->nvars() + 1)
        b.max_steps = m.ring()->ambient()->nvars() + 1;
    return PresentedModule(S, m.gens(), std::move(rels), b);
}

std::vector<Monomial> list_standard_monomials(const std::vector<Monomial>& gens, int nv,
                                              std::int64_t deg) {
    std::vector<Monomial> out;
    if (deg < 0) return out;
    Monomial cur;
    std::function<void(int, std::int64_t)> rec = [&](int v, std::int64_t rem) {
        if (v == nv - 1) {
            cur.e[v] = static_cast<std::uint32_t>(rem);
            bool standard = true;
            for (const auto& g : gens)
                if (g.divides(cur, nv)) {
                    standard = false;
                    break;
                }
            if (standard) out.push_back(cur);
            cur.e[v] = 0;
            return;
        }
        for (std::int64_t e = 0; e <= rem; ++e) {
            cur.e[v] = static_cast<std::uint32_t>(e);
            rec(v + 1, rem - e);
        }
        cur.e[v] = 0;
    };
    if (nv == 0) return out;
    rec(0, deg);
    return out;
}

long rank_f2(std::vector<std::vector<std::uint64_t>>& rows) {
    long rank = 0;
    size_t words = rows.empty() ? 0 : rows[0].size();
    std::map<long, size_t> pivot_at; // leading bit -> row index
    for (size_t r = 0; r < rows.size(); ++r) {
        auto& row = rows[r];
        while (true) {
            size_t w = 0;
            while (w < words && row[w] == 0) ++w;
            if (w == words) break;
            long lead = static_cast<long>(w) * 64 + __builtin_ctzll(row[w]);
            auto it = pivot_at.find(lead);
            if (it == pivot_at.end()) {
                pivot_at[lead] = r;
                ++rank;
                break;
            }
            const auto& prow = rows[it->second];
            for (size_t x = w; x < words; ++x) row[x] ^= prow[x];
        }
    }
    return rank;
}

long rank_fp(std::vector<std::vector<std::uint8_t>>& rows, std::uint32_t p) {
    long rank = 0;
    size_t ncols = rows.empty() ? 0 : rows[0].size();
    std::map<size_t, size_t> pivot_at; // leading column -> row index (row scaled monic)
    auto inv_mod = [&](std::uint32_t a) {
        std::uint32_t r = 1, base = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = static_cast<std::uint32_t>((std::uint64_t(r) * base) % p);
            base = static_cast<std::uint32_t>((std::uint64_t(base) * base) % p);
            e >>= 1;
        }
        return r;
    };
    for (size_t r = 0; r < rows.size(); ++r) {
        auto& row = rows[r];
        while (true) {
            size_t w = 0;
            while (w < ncols && row[w] == 0) ++w;
            if (w == ncols) break;
            auto it = pivot_at.find(w);
            if (it == pivot_at.end()) {
                std::uint32_t s = inv_mod(row[w]);
                for (size_t x = w; x < ncols; ++x)
                    row[x] = static_cast<std::uint8_t>((std::uint64_t(row[x]) * s) % p);
                pivot_at[w] = r;
                ++rank;
                break;
            }
            const auto& prow = rows[it->second];
            std::uint32_t f = p - row[w];
            for (size_t x = w; x < ncols; ++x)
                row[x] = static_cast<std::uint8_t>((row[x] + std::uint64_t(f) * prow[x]) % p);
        }
    }
    return rank;
}

// Tor^S(M, k) via the Koszul complex on all the variables, sliced degree by
// degree in the standard-monomial basis of M. Valid degree window from the
// Taylor bound on the initial module. Returns depth, or -1 when the slices
// exceed the size guard.
int koszul_depth_scan(const PresentedModule& m) {
    const QRingPtr& R = m.ring();
    const RingPtr& amb = R->ambient();
    const int nv = amb->nvars();
    const std::uint32_t p = amb->field.p();
    if (p >= 256) throw budget_error("koszul scan needs a word-sized characteristic");

    auto mon = initial_module(m);
    std::int64_t lo = m.gens().twists.empty() ? 0 : m.gens().twists[0];
    std::int64_t hi = lo;
    for (auto t : m.gens().twists) lo = std::min(lo, t);
    bool any = false;
    for (int r = 0; r < m.rank(); ++r) {
        bool unit = false;
        for (const auto& g : mon[r])
            if (g.is_one(nv)) unit = true;
        if (unit) continue;
        if (mon[r].empty()) continue; // free summand: no higher Tor
        Monomial l = Monomial::one();
        for (const auto& g : mon[r]) l = l.lcm(g, nv);
        hi = std::max(hi, m.gens().twists[r] + l.degree(nv));
        any = true;
    }
    if (!any) return nv; // free module
    hi += nv; // slack for the Koszul homological shift

    // standard-monomial bases per internal degree
    struct Basis {
        std::vector<std::pair<int, Monomial>> elems;
        std::map<std::pair<int, std::string>, int> index;
    };
    auto key_of = [&](const Monomial& mn) {
        std::string k;
        k.reserve(nv * 4);
        for (int v = 0; v < nv; ++v) {
            k.push_back(char(mn.e[v] & 0xff));
            k.push_back(char((mn.e[v] >> 8) & 0xff));
        }
        return k;
    };
    std::map<std::int64_t, Basis> bases;
    auto basis_at = [&](std::int64_t d) -> Basis& {
        auto it = bases.find(d);
        if (it != bases.end()) return it->second;
        Basis b;
        for (int r = 0; r < m.rank(); ++r) {
            bool unit = false;
            for (const auto& g : mon[r])
                if (g.is_one(nv)) unit = true;
            if (unit) continue;
            for (auto& mo : list_standard_monomials(mon[r], nv, d - m.gens().twists[r]))
                b.elems.push_back({r, mo});
        }
        for (size_t i = 0; i < b.elems.size(); ++i)
            b.index[{b.elems[i].first, key_of(b.elems[i].second)}] = static_cast<int>(i);
        return bases.emplace(d, std::move(b)).first->second;
    };

    // coordinates of x_j * u for a standard basis element u
    auto mult = [&](int j, const std::pair<int, Monomial>& u, const Basis& target)
        -> std::vector<std::pair<int, std::uint32_t>> {
        ModVec v = ModVec::adopt_sorted({{u.first, u.second.mul(Monomial::var(j), nv), 1}});
        ModVec nf = m.reduce(v);
        std::vector<std::pair<int, std::uint32_t>> out;
        for (const auto& tm : nf.terms()) {
            auto it = target.index.find({tm.pos, key_of(tm.m)});
            if (it == target.index.end())
                throw engine_error("internal: reduced term is not a standard monomial");
            out.push_back({it->second, tm.c});
        }
        return out;
    };

    std::vector<std::vector<std::vector<int>>> subset_list(nv + 1);
    for (int i = 0; i <= nv; ++i) {
        std::vector<int> comb(i);
        std::function<void(int, int)> rec = [&](int start, int k) {
            if (k == i) {
                subset_list[i].push_back(comb);
                return;
            }
            for (int v = start; v < nv; ++v) {
                comb[k] = v;
                rec(v + 1, k + 1);
            }
        };
        rec(0, 0);
    }
    auto subset_index = [&](int i, const std::vector<int>& s) {
        const auto& L = subset_list[i];
        for (size_t k = 0; k < L.size(); ++k)
            if (L[k] == s) return static_cast<int>(k);
        throw engine_error("internal: subset index");
    };

    const long size_guard = 6000;

    // rank of the Koszul differential (K_i (x) M)_d -> (K_{i-1} (x) M)_d
    auto diff_rank = [&](int i, std::int64_t d) -> long {
        if (i <= 0 || i > nv) return 0;
        const Basis& src = basis_at(d - i);
        const Basis& dst = basis_at(d - i + 1);
        long nrows = static_cast<long>(subset_list[i].size()) * src.elems.size();
        long ncols = static_cast<long>(subset_list[i - 1].size()) * dst.elems.size();
        if (nrows == 0 || ncols == 0) return 0;
        if (nrows > size_guard || ncols > size_guard) throw budget_error("koszul slice too large");
        if (p == 2) {
            size_t words = (ncols + 63) / 64;
            std::vector<std::vector<std::uint64_t>> rows(
                nrows, std::vector<std::uint64_t>(words, 0));
            long rr = 0;
            for (size_t t = 0; t < subset_list[i].size(); ++t) {
                for (size_t u = 0; u < src.elems.size(); ++u, ++rr) {
                    const auto& T = subset_list[i][t];
                    for (size_t k = 0; k < T.size(); ++k) {
                        std::vector<int> rest;
                        for (size_t x = 0; x < T.size(); ++x)
                            if (x != k) rest.push_back(T[x]);
                        int tid = subset_index(i - 1, rest);
                        for (auto [ui, c] : mult(T[k], src.elems[u], dst)) {
                            long col = static_cast<long>(tid) * dst.elems.size() + ui;
                            if (c & 1) rows[rr][col / 64] ^= 1ull << (col % 64);
                        }
                    }
                }
            }
            return rank_f2(rows);
        }
        std::vector<std::vector<std::uint8_t>> rows(nrows, std::vector<std::uint8_t>(ncols, 0));
        long rr = 0;
        for (size_t t = 0; t < subset_list[i].size(); ++t) {
            for (size_t u = 0; u < src.elems.size(); ++u, ++rr) {
                const auto& T = subset_list[i][t];
                for (size_t k = 0; k < T.size(); ++k) {
                    std::vector<int> rest;
                    for (size_t x = 0; x < T.size(); ++x)
                        if (x != k) rest.push_back(T[x]);
                    int tid = subset_index(i - 1, rest);
                    std::uint32_t sign = (k % 2 == 0) ? 1 : p - 1;
                    for (auto [ui, c] : mult(T[k], src.elems[u], dst)) {
                        long col = static_cast<long>(tid) * dst.elems.size() + ui;
                        rows[rr][col] = static_cast<std::uint8_t>(
                            (rows[rr][col] + std::uint64_t(sign) * c) % p);
                    }
                }
            }
        }
        return rank_fp(rows, p);
    };

    std::map<std::pair<int, std::int64_t>, long> rank_memo;
    auto diff_rank_memo = [&](int i, std::int64_t d) {
        auto key = std::make_pair(i, d);
        auto it = rank_memo.find(key);
        if (it != rank_memo.end()) return it->second;
        long r = diff_rank(i, d);
        rank_memo[key] = r;
        return r;
    };

    for (int i = nv; i >= 1; --i) {
        bool nonzero = false;
        for (std::int64_t d = lo; d <= hi && !nonzero; ++d) {
            long dim_i = static_cast<long>(subset_list[i].size()) * basis_at(d - i).elems.size();
            if (dim_i == 0) continue;
            if (dim_i > size_guard) throw budget_error("koszul slice too large");
            long r_i = diff_rank_memo(i, d);
            long r_up = (i + 1 <= nv) ? diff_rank_memo(i + 1, d) : 0;
            if (dim_i - r_i - r_up > 0) nonzero = true;
        }
        if (nonzero) return nv - i;
    }
    return nv; // pd 0
}

} // namespace

int depth(const PresentedModule& m) {
    if (m.is_zero()) throw engine_error("depth of the zero module is undefined");
    const int nv = m.ring()->ambient()->nvars();
    // two routes to #vars - max{ i : H_i(Koszul(all vars); M) != 0 }: the
    // minimal resolution over the ambient ring (Tor^S(M,k) step by step), or
    // direct degreewise slices of the Koszul complex. Low-dimensional modules
    // have small slices; high-dimensional ones have small resolutions.
    bool prefer_scan = dimension(m) <= 1;
    if (prefer_scan) {
        try {
            return koszul_depth_scan(m);
        } catch (const budget_error&) {
            // fall through to the resolution route
        }
    }
    try {
        PresentedModule over_s = as_ambient_module(m);
        Resolution res = minimal_resolution(over_s, nv);
        if (!res.complete)
            throw engine_error("internal: resolution over the polynomial ring did not terminate");
        return nv - res.pd;
    } catch (const budget_error&) {
        if (prefer_scan) throw;
        return koszul_depth_scan(m);
    }
}

bool has_depth_zero(const PresentedModule& m) {
    if (m.is_zero()) throw engine_error("socle of the zero module is undefined");
    const QRingPtr& R = m.ring();
    const int nv = R->ambient()->nvars();
    const int rank = m.rank();
    // stacked multiplication map M -> M^{#vars}; a kernel generator outside
    // the relation module witnesses a nonzero socle
    GradedFreeModule big;
    big.rank = rank * nv;
    big.twists.resize(size_t(rank) * nv);
    for (int j = 0; j < nv; ++j)
        for (int r = 0; r < rank; ++r) big.twists[size_t(j) * rank + r] = m.gens().twists[r];
    ModuleOrder ord = order_for(R, big.rank);

    std::vector<ModVec> cols;
    for (int r = 0; r < rank; ++r) {
        std::vector<ModTerm> ts;
        for (int j = 0; j < nv; ++j) ts.push_back({j * rank + r, Monomial::var(j), 1});
        cols.push_back(ModVec::make(ord, std::move(ts)));
    }
    std::vector<ModVec> rels = defining_columns(R, big.rank);
    for (const auto& c : m.relations())
        for (int j = 0; j < nv; ++j) rels.push_back(c.slice_positions(0, rank, j * rank));

    std::vector<std::int64_t> col_degrees;
    col_degrees.reserve(rank);
    for (int r = 0; r < rank; ++r) col_degrees.push_back(m.gens().twists[r] + 1);
    std::vector<ModVec> ker = syzygy_generators(R->ambient(), big.rank, cols, rels, big.twists,
                                                col_degrees, m.budget());
    for (const auto& h : ker)
        if (!m.reduce(h).is_zero()) return true;
    return false;
}

PresentedModule subquotient_presentation(const QRingPtr& ring, const GradedFreeModule& ambient,
                                         const std::vector<ModVec>& gens,
                                         const std::vector<ModVec>& others, Budget budget) {
    const int nv = ring->ambient()->nvars();
    if (gens.empty()) return PresentedModule::zero_module(ring);
    std::vector<ModVec> combined = gens;
    for (const auto& o : others)
        if (!o.is_zero()) combined.push_back(o);
    std::vector<ModVec> syz = module_syzygies(ring, ambient, combined, budget);
    std::vector<std::int64_t> gen_degrees;
    for (const auto& g : gens) gen_degrees.push_back(g.homogeneous_degree(ambient.twists, nv));
    GradedFreeModule cover = GradedFreeModule::of(gen_degrees);
    std::vector<ModVec> rels;
    for (auto& h : syz) {
        ModVec proj = h.slice_positions(0, static_cast<std::int32_t>(gens.size()), 0);
        if (!proj.is_zero()) rels.push_back(std::move(proj));
    }
    minimize_presentation(ring, cover, rels);
    return PresentedModule(ring, cover, rels, budget);
}

PresentedModule homology(const FreeComplex& c, int i) {
    if (i < 0) throw engine_error("homology index must be nonnegative");
    if (!c.is_complex()) throw engine_error("input differentials do not compose to zero");
    const QRingPtr& R = c.ring;
    const int nv = R->ambient()->nvars();

    if (i > c.steps()) return PresentedModule::zero_module(R);

    GradedFreeModule fi = c.term(i);
    std::vector<ModVec> ker;
    if (i == 0) {
        for (int r = 0; r < fi.rank; ++r) ker.push_back(ModVec::unit(r));
    } else {
        const GradedMatrix& di = c.d[i - 1];
        ker = module_syzygies(R, di.target, di.cols, Budget{});
        ker = trim_to_minimal_generators(R, fi, std::move(ker), Budget{});
    }
    (void)nv;
    if (ker.empty()) return PresentedModule::zero_module(R);

    std::vector<ModVec> image;
    if (i < c.steps()) image = c.d[i].cols;
    return subquotient_presentation(R, fi, ker, image, Budget{});
}

} // namespace charp
