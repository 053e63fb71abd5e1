#include "charp/modgb.hpp"

#include <algorithm>

namespace charp {

namespace {

inline std::uint64_t pair_key(int i, int j) {
    if (i > j) std::swap(i, j);
    return (std::uint64_t(std::uint32_t(i)) << 32) | std::uint32_t(j);
}

// priority_queue comparator popping the smallest pair first
struct PairLater {
    const MonomialOrder* mord;
    bool operator()(const ModPair& a, const ModPair& b) const {
        if (a.deg != b.deg) return a.deg > b.deg;
        if (a.pos != b.pos) return a.pos > b.pos;
        Cmp c = mord->compare(a.lcm, b.lcm);
        if (c != Cmp::EQ) return c == Cmp::GT;
        if (a.i != b.i) return a.i > b.i;
        return a.j > b.j;
    }
};

// merge two strictly-descending term lists: a + c * b
void merged_tail(const ModuleOrder& ord, const std::vector<ModTerm>& a, size_t a_from,
                 const std::vector<ModTerm>& b, size_t b_from, const Monomial& mul,
                 std::uint32_t scale, std::vector<ModTerm>& out) {
    const auto& F = ord.ring->field;
    const int nv = ord.ring->nvars();
    out.clear();
    out.reserve((a.size() - a_from) + (b.size() - b_from));
    size_t i = a_from, j = b_from;
    while (i < a.size() && j < b.size()) {
        ModTerm bt{b[j].pos, b[j].m.mul(mul, nv), F.mul(b[j].c, scale)};
        Cmp c = ord.compare(a[i], bt);
        if (c == Cmp::GT) {
            out.push_back(a[i++]);
        } else if (c == Cmp::LT) {
            out.push_back(bt);
            ++j;
        } else {
            std::uint32_t s = F.add(a[i].c, bt.c);
            if (s) out.push_back({a[i].pos, a[i].m, s});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j)
        out.push_back({b[j].pos, b[j].m.mul(mul, nv), F.mul(b[j].c, scale)});
}

} // namespace

ModGB::ModGB(ModuleOrder ord, ModGBOptions opt) : ord_(std::move(ord)), opt_(std::move(opt)) {
    homogeneous_ = !opt_.twists.empty();
}

ModGB::ModGB(ModuleOrder ord, std::vector<ModGBInput> input, ModGBOptions opt)
    : ModGB(std::move(ord), std::move(opt)) {
    // relation columns first so they are only reduced against each other
    for (auto& in : input)
        if (in.relation) seed_relation(in.v);
    for (auto& in : input)
        if (!in.relation) add_generator(in.v);
    complete_all();
    if (opt_.interreduce) interreduce();
    sort_canonically();
}

void ModGB::seed_relation(const ModVec& v) {
    if (v.is_zero()) return;
    if (homogeneous_ && !v.is_homogeneous(opt_.twists, ord_.ring->nvars()))
        throw engine_error("inhomogeneous input to a graded basis computation");
    add_elem(v, true);
}

void ModGB::add_generator(const ModVec& v) {
    if (v.is_zero()) return;
    if (homogeneous_ && !v.is_homogeneous(opt_.twists, ord_.ring->nvars()))
        throw engine_error("inhomogeneous input to a graded basis computation");
    ModVec r = normal_form(v);
    if (!r.is_zero()) add_elem(std::move(r), false);
}

void ModGB::complete_all() {
    PairLater later{&ord_.ring->order};
    while (!heap_.empty()) {
        std::pop_heap(heap_.begin(), heap_.end(), later);
        ModPair pr = heap_.back();
        heap_.pop_back();
        process_pair(pr);
    }
}

void ModGB::complete_through(std::int64_t deg) {
    PairLater later{&ord_.ring->order};
    while (!heap_.empty() && heap_.front().deg <= deg) {
        std::pop_heap(heap_.begin(), heap_.end(), later);
        ModPair pr = heap_.back();
        heap_.pop_back();
        process_pair(pr);
    }
}

void ModGB::process_pair(const ModPair& pr) {
    opt_.budget.check_pairs(++pair_pops_);
    if (homogeneous_) opt_.budget.check_degree(pr.deg);
    std::uint64_t key = pair_key(pr.i, pr.j);
    if (done_.count(key)) return;
    done_.insert(key);
    if (chain_redundant(pr)) return;

    const int nv = ord_.ring->nvars();
    const auto& F = ord_.ring->field;
    const ModVec& gi = elems_[pr.i];
    const ModVec& gj = elems_[pr.j];
    Monomial mi = pr.lcm.quotient(meta_[pr.i].lm, nv);
    Monomial mj = pr.lcm.quotient(meta_[pr.j].lm, nv);
    ModVec s = gi.times_term(mi, 1, ord_.ring)
                   .add(gj.times_term(mj, F.neg(1), ord_.ring), ord_);
    ModVec r = normal_form(s);
    if (!r.is_zero()) add_elem(std::move(r), false);
}

bool ModGB::chain_redundant(const ModPair& pr) const {
    const int nv = ord_.ring->nvars();
    std::uint32_t lcm_mask = pr.lcm.support_mask(nv);
    for (int l : bucket_[pr.pos]) {
        if (l == pr.i || l == pr.j) continue;
        const Meta& ml = meta_[l];
        if ((ml.mask & ~lcm_mask) != 0) continue;
        if (!ml.lm.divides(pr.lcm, nv)) continue;
        if (done_.count(pair_key(pr.i, l)) && done_.count(pair_key(pr.j, l))) return true;
    }
    return false;
}

void ModGB::push_pairs_for(int idx) {
    const int nv = ord_.ring->nvars();
    const Meta& mi = meta_[idx];
    PairLater later{&ord_.ring->order};
    for (int k : bucket_[mi.lm_pos]) {
        if (k == idx) continue;
        const Meta& mk = meta_[k];
        if (mk.relation && mi.relation) {
            done_.insert(pair_key(idx, k)); // relation rows already form a basis
            continue;
        }
        if (mk.pure && mi.pure && mk.lm.coprime(mi.lm, nv)) {
            done_.insert(pair_key(idx, k)); // product criterion for single-position vectors
            continue;
        }
        if (opt_.generators_only && ord_.block(mi.lm_pos) == 1) {
            done_.insert(pair_key(idx, k)); // secondary block: generators suffice
            continue;
        }
        ModPair pr;
        pr.i = std::min(idx, k);
        pr.j = std::max(idx, k);
        pr.pos = mi.lm_pos;
        pr.lcm = mi.lm.lcm(mk.lm, nv);
        pr.deg = pr.lcm.degree(nv);
        if (homogeneous_) pr.deg += opt_.twists.at(pr.pos);
        heap_.push_back(pr);
        std::push_heap(heap_.begin(), heap_.end(), later);
    }
}

void ModGB::add_elem(ModVec v, bool relation) {
    const int nv = ord_.ring->nvars();
    const auto& F = ord_.ring->field;
    const ModTerm& lt = v.leading();
    Meta m;
    m.lm_pos = lt.pos;
    m.lm = lt.m;
    m.mask = lt.m.support_mask(nv);
    m.pure = v.pure_position();
    m.relation = relation;
    if (lt.c != 1) v = v.scaled(F.inv(lt.c), F);
    int idx = static_cast<int>(elems_.size());
    elems_.push_back(std::move(v));
    meta_.push_back(m);
    if (size_t(m.lm_pos) >= bucket_.size()) bucket_.resize(size_t(m.lm_pos) + 1);
    opt_.budget.check_basis(static_cast<long>(elems_.size()));
    push_pairs_for(idx);
    bucket_[m.lm_pos].push_back(idx);
}

int ModGB::find_reducer(std::int32_t pos, const Monomial& m, std::uint32_t mask) const {
    if (size_t(pos) >= bucket_.size()) return -1;
    const int nv = ord_.ring->nvars();
    for (int k : bucket_[pos]) {
        const Meta& mk = meta_[k];
        if ((mk.mask & ~mask) != 0) continue;
        if (mk.lm.divides(m, nv)) return k;
    }
    return -1;
}

ModVec ModGB::normal_form(const ModVec& v) const {
    const int nv = ord_.ring->nvars();
    const auto& F = ord_.ring->field;
    std::vector<ModTerm> out;
    std::vector<ModTerm> cur(v.terms());
    std::vector<ModTerm> next;
    size_t head = 0;
    while (head < cur.size()) {
        const ModTerm& lt = cur[head];
        int k = find_reducer(lt.pos, lt.m, lt.m.support_mask(nv));
        if (k < 0) {
            out.push_back(lt);
            ++head;
            continue;
        }
        // leads cancel exactly: merge the tails
        const auto& g = elems_[k].terms();
        Monomial q = lt.m.quotient(meta_[k].lm, nv);
        merged_tail(ord_, cur, head + 1, g, 1, q, F.neg(lt.c), next);
        cur.swap(next);
        head = 0;
    }
    // `out` is strictly decreasing by construction
    return ModVec::adopt_sorted(std::move(out));
}

void ModGB::interreduce() {
    const int nv = ord_.ring->nvars();
    const size_t n = elems_.size();
    std::vector<char> drop(n, 0);
    for (size_t i = 0; i < n; ++i) {
        for (int k : bucket_[meta_[i].lm_pos]) {
            if (size_t(k) == i) continue;
            const Meta& mk = meta_[k];
            if (drop[k]) continue;
            if ((mk.mask & ~meta_[i].mask) != 0) continue;
            if (mk.lm == meta_[i].lm) continue; // distinct leads by construction
            if (mk.lm.divides(meta_[i].lm, nv)) {
                drop[i] = 1;
                break;
            }
        }
    }
    std::vector<ModVec> kept;
    std::vector<Meta> kept_meta;
    for (size_t i = 0; i < n; ++i) {
        if (!drop[i]) {
            kept.push_back(std::move(elems_[i]));
            kept_meta.push_back(meta_[i]);
        }
    }
    elems_ = std::move(kept);
    meta_ = std::move(kept_meta);
    for (auto& b : bucket_) b.clear();
    for (size_t i = 0; i < elems_.size(); ++i) bucket_[meta_[i].lm_pos].push_back(static_cast<int>(i));

    // tail-reduce each element against the others; leads are immutable now
    for (size_t i = 0; i < elems_.size(); ++i) {
        auto& bk = bucket_[meta_[i].lm_pos];
        auto it = std::find(bk.begin(), bk.end(), static_cast<int>(i));
        int saved = *it;
        bk.erase(it);
        std::vector<ModTerm> tail(elems_[i].terms().begin() + 1, elems_[i].terms().end());
        ModVec red = normal_form(ModVec::adopt_sorted(std::move(tail)));
        bk.push_back(saved);
        std::sort(bk.begin(), bk.end());
        std::vector<ModTerm> whole;
        whole.reserve(1 + red.terms().size());
        whole.push_back(elems_[i].leading());
        for (const auto& t : red.terms()) whole.push_back(t);
        elems_[i] = ModVec::adopt_sorted(std::move(whole));
    }
}

void ModGB::sort_canonically() {
    const int nv = ord_.ring->nvars();
    std::vector<int> perm(elems_.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    // degree ascending, leading term descending within a degree
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        const ModTerm& la = elems_[a].leading();
        const ModTerm& lb = elems_[b].leading();
        std::int64_t da = la.m.degree(nv), db = lb.m.degree(nv);
        if (homogeneous_) {
            da += opt_.twists.at(la.pos);
            db += opt_.twists.at(lb.pos);
        }
        if (da != db) return da < db;
        return ord_.compare({la.pos, la.m, 1}, {lb.pos, lb.m, 1}) == Cmp::GT;
    });
    std::vector<ModVec> sorted_elems;
    std::vector<Meta> sorted_meta;
    sorted_elems.reserve(elems_.size());
    for (int p : perm) {
        sorted_elems.push_back(std::move(elems_[p]));
        sorted_meta.push_back(meta_[p]);
    }
    elems_ = std::move(sorted_elems);
    meta_ = std::move(sorted_meta);
    for (auto& b : bucket_) b.clear();
    for (size_t i = 0; i < elems_.size(); ++i) bucket_[meta_[i].lm_pos].push_back(static_cast<int>(i));
}

std::vector<ModVec> ModGB::secondary_elements() const {
    std::vector<ModVec> out;
    for (size_t i = 0; i < elems_.size(); ++i)
        if (ord_.block(meta_[i].lm_pos) == 1)
            out.push_back(elems_[i].slice_positions(ord_.primary_count, 1 << 30,
                                                    -ord_.primary_count));
    return out;
}

std::vector<ModVec> module_basis(const ModuleOrder& ord, const std::vector<ModVec>& vecs,
                                 const std::vector<ModVec>& relations,
                                 const std::vector<std::int64_t>& twists, const Budget& budget) {
    std::vector<ModGBInput> in;
    in.reserve(vecs.size() + relations.size());
    for (const auto& r : relations) in.push_back({r, true});
    for (const auto& v : vecs) in.push_back({v, false});
    ModGBOptions opt;
    opt.twists = twists;
    opt.budget = budget;
    ModGB gb(ord, std::move(in), opt);
    return gb.elements();
}

std::vector<ModVec> syzygy_generators(const RingPtr& ring, int rank,
                                      const std::vector<ModVec>& vecs,
                                      const std::vector<ModVec>& relations,
                                      const std::vector<std::int64_t>& rank_twists,
                                      const std::vector<std::int64_t>& vec_degrees,
                                      const Budget& budget) {
    ModuleOrder ord{ring, rank};
    std::vector<ModGBInput> in;
    in.reserve(vecs.size() + relations.size());
    for (const auto& r : relations) in.push_back({r, true});
    ModGBOptions opt;
    opt.generators_only = true;
    opt.interreduce = false; // the secondary elements are generators, not a basis
    opt.budget = budget;
    if (!rank_twists.empty()) {
        opt.twists = rank_twists;
        opt.twists.insert(opt.twists.end(), vec_degrees.begin(), vec_degrees.end());
    }
    for (size_t i = 0; i < vecs.size(); ++i) {
        ModVec graph = vecs[i].add(ModVec::unit(rank + static_cast<std::int32_t>(i)), ord);
        in.push_back({graph, false});
    }
    ModGB gb(ord, std::move(in), opt);
    return gb.secondary_elements();
}

} // namespace charp
