#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <thread>

#include "charp/ideal.hpp"
#include "charp/parse.hpp"
#include "charp/quotient.hpp"

using namespace charp;

namespace {

RingPtr detring(std::uint32_t p) {
    return make_ring(p, {"x11", "x12", "x13", "x21", "x22", "x23", "x31", "x32", "x33"});
}

Polynomial P(const RingPtr& R, const std::string& s) { return parse_polynomial(R, s); }

int vix(int r, int c) { return 3 * (r - 1) + (c - 1); }

// 2x2 minor of the generic 3x3 matrix complementary to entry (i,j)
Polynomial minor_delta(const RingPtr& R, int i, int j) {
    int r1 = 1 + (i == 1), r2 = 3 - (i == 3);
    int c1 = 1 + (j == 1), c2 = 3 - (j == 3);
    Polynomial a = Polynomial::variable(R, vix(r1, c1)) * Polynomial::variable(R, vix(r2, c2));
    Polynomial b = Polynomial::variable(R, vix(r1, c2)) * Polynomial::variable(R, vix(r2, c1));
    return a - b;
}

std::vector<Polynomial> all_minors(const RingPtr& R) {
    std::vector<Polynomial> out;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) out.push_back(minor_delta(R, i, j));
    return out;
}

std::set<std::string> basis_strings(const GroebnerIdeal& I) {
    std::set<std::string> out;
    for (const auto& g : I.reduced_basis()) out.insert(g.str());
    return out;
}

// random-path normal form used to check confluence: reducer choice is random
Polynomial random_path_nf(const Polynomial& f, const std::vector<Polynomial>& basis,
                          std::mt19937& rng) {
    const RingPtr& R = f.ring();
    const int nv = R->nvars();
    const auto& F = R->field;
    std::vector<Term> out;
    Polynomial cur = f;
    while (!cur.is_zero()) {
        const Term lt = cur.leading();
        std::vector<const Polynomial*> cands;
        for (const auto& g : basis)
            if (g.leading_monomial().divides(lt.m, nv)) cands.push_back(&g);
        if (cands.empty()) {
            out.push_back(lt);
            std::vector<Term> rest(cur.terms().begin() + 1, cur.terms().end());
            cur = Polynomial(R, std::move(rest));
            continue;
        }
        const Polynomial* g = cands[rng() % cands.size()];
        cur = Polynomial::reduce_step(cur, *g, lt.m.quotient(g->leading_monomial(), nv),
                                      F.mul(lt.c, F.inv(g->leading_coeff())));
    }
    return Polynomial(R, std::move(out));
}

Polynomial spoly(const Polynomial& a, const Polynomial& b) {
    const RingPtr& R = a.ring();
    const int nv = R->nvars();
    const auto& F = R->field;
    Monomial l = a.leading_monomial().lcm(b.leading_monomial(), nv);
    Polynomial sa = a.times_term(l.quotient(a.leading_monomial(), nv), F.inv(a.leading_coeff()));
    Polynomial sb = b.times_term(l.quotient(b.leading_monomial(), nv), F.inv(b.leading_coeff()));
    return sa - sb;
}

} // namespace

TEST_CASE("monomial ideal is its own basis; principal ideals become monic") {
    auto R = make_ring(2, {"x", "y"});
    GroebnerIdeal I = buchberger(R, {P(R, "x"), P(R, "y")});
    CHECK(basis_strings(I) == std::set<std::string>{"x", "y"});

    auto R7 = make_ring(7, {"x", "y"});
    GroebnerIdeal J = buchberger(R7, {P(R7, "3*x^2 + 3*y")});
    CHECK(basis_strings(J) == std::set<std::string>{"x^2 + y"});
}

TEST_CASE("zero and unit ideals short-circuit") {
    auto R = make_ring(3, {"x", "y"});
    GroebnerIdeal Z = buchberger(R, {});
    CHECK(Z.is_zero_ideal());
    CHECK(Z.normal_form(P(R, "x + y")) == P(R, "x + y"));

    GroebnerIdeal U = buchberger(R, {P(R, "x"), P(R, "x + 1")});
    CHECK(U.is_unit_ideal());
    CHECK(U.normal_form(P(R, "y^5")).is_zero());

    auto other = make_ring(3, {"a", "b"});
    CHECK_THROWS_AS(buchberger(R, {P(other, "a")}), engine_error);
}

TEST_CASE("normal form: membership, units, and the n=2 determinantal witness") {
    auto R = detring(2);
    std::vector<Polynomial> gens = all_minors(R);
    gens.push_back(P(R, "x11^2"));
    gens.push_back(P(R, "x12^2"));
    GroebnerIdeal I = buchberger(R, gens);

    for (const auto& g : gens) CHECK(I.normal_form(g).is_zero());
    CHECK(I.normal_form(P(R, "1")) == P(R, "1"));
    // x33 * x22 stays outside in(I): a nonzero remainder survives
    CHECK_FALSE(I.normal_form(P(R, "x33*x22")).is_zero());
}

TEST_CASE("reduced basis of the n=2 determinantal ideal matches the derived family") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        CAPTURE(p);
        auto R = detring(p);
        std::vector<Polynomial> gens = all_minors(R);
        gens.push_back(P(R, "x11^2"));
        gens.push_back(P(R, "x12^2"));
        GroebnerIdeal I = buchberger(R, gens);

        // expected: nine monic minors, the two pure powers, and the two
        // boundary monomials x11*x12*x22, x11*x12*x32 found by hand from
        // S(x12^2, delta_33) and S(x12^2, delta_23)
        std::set<std::string> expect;
        for (const auto& d : all_minors(R)) expect.insert(d.monic().str());
        expect.insert(P(R, "x11^2").str());
        expect.insert(P(R, "x12^2").str());
        expect.insert(P(R, "x11*x12*x22").str());
        expect.insert(P(R, "x11*x12*x32").str());
        CHECK(basis_strings(I) == expect);
        CHECK(I.reduced_basis().size() == 13);
    }
}

TEST_CASE("all S-polynomials of a reduced basis reduce to zero (termination certificate)") {
    auto R = detring(3);
    std::vector<Polynomial> gens = all_minors(R);
    gens.push_back(P(R, "x11^3"));
    gens.push_back(P(R, "x12^3"));
    GroebnerIdeal I = buchberger(R, gens);
    const auto& B = I.reduced_basis();
    for (size_t i = 0; i < B.size(); ++i)
        for (size_t j = i + 1; j < B.size(); ++j)
            CHECK(I.normal_form(spoly(B[i], B[j])).is_zero());
}

TEST_CASE("confluence: random reduction paths agree with the engine's normal form") {
    auto R = detring(2);
    std::vector<Polynomial> gens = all_minors(R);
    gens.push_back(P(R, "x11^2"));
    gens.push_back(P(R, "x12^2"));
    GroebnerIdeal I = buchberger(R, gens);
    std::mt19937 rng(4242);
    std::vector<Polynomial> probes = {
        P(R, "x11*x22*x33 + x13*x22*x31"),
        P(R, "x11^2*x33 + x12*x23 + x21"),
        P(R, "x12^3 + x11*x12*x22*x33"),
    };
    for (const auto& f : probes) {
        Polynomial nf = I.normal_form(f);
        for (int it = 0; it < 10; ++it) CHECK(random_path_nf(f, I.reduced_basis(), rng) == nf);
    }
}

TEST_CASE("basis certificates express basis elements over the generators") {
    auto R = detring(3);
    std::vector<Polynomial> gens = all_minors(R);
    gens.push_back(P(R, "x11^2"));
    gens.push_back(P(R, "x12^2"));
    GroebnerIdeal I = buchberger(R, gens);
    const auto& B = I.reduced_basis();
    const auto& C = I.certificates();
    REQUIRE(B.size() == C.size());
    for (size_t i = 0; i < B.size(); ++i) {
        Polynomial acc(R);
        for (size_t j = 0; j < gens.size(); ++j) acc = acc + C[i][j] * gens[j];
        CHECK(acc == B[i]);
    }
}

TEST_CASE("bracket power: definition, identity cases, and generator independence") {
    auto R = make_ring(2, {"x", "y"});
    GroebnerIdeal I = buchberger(R, {P(R, "x"), P(R, "y")});
    GroebnerIdeal B = bracket_power(I, 2);
    CHECK(basis_strings(B) == std::set<std::string>{"x^2", "y^2"});
    CHECK_THROWS_AS(bracket_power(I, 3), engine_error);

    CHECK(bracket_power(buchberger(R, {}), 4).is_zero_ideal());

    // NF(g^q, I^[q]) = 0 for every generator, and independence of the
    // generating set: generators vs the reduced basis as generators
    auto Rd = detring(2);
    std::vector<Polynomial> gens = all_minors(Rd);
    gens.push_back(P(Rd, "x11^2"));
    gens.push_back(P(Rd, "x12^2"));
    GroebnerIdeal J = buchberger(Rd, gens);
    GroebnerIdeal Jq = bracket_power(J, 4);
    for (const auto& g : gens) CHECK(Jq.normal_form(frobenius_power(g, 4)).is_zero());
    GroebnerIdeal J2(Rd, J.reduced_basis());
    CHECK(bracket_power(J2, 4) == Jq);

    auto R3 = make_ring(3, {"x", "y"});
    GroebnerIdeal K = buchberger(R3, {P(R3, "x + y"), P(R3, "x*y")});
    GroebnerIdeal K2(R3, {P(R3, "x + y"), P(R3, "x*y + x + y"), P(R3, "2*x*y")});
    CHECK(K == K2);
    CHECK(bracket_power(K, 9) == bracket_power(K2, 9));
}

TEST_CASE("colon: principal cases and the colon inverse property") {
    auto R = make_ring(2, {"x", "y"});
    GroebnerIdeal I = buchberger(R, {P(R, "x^2")});
    CHECK(basis_strings(colon(I, P(R, "x"))) == std::set<std::string>{"x"});
    CHECK(colon(I, P(R, "1")) == I);
    CHECK_THROWS_AS(colon(I, P(R, "0")), engine_error);

    auto R3 = make_ring(2, {"x", "y", "z"});
    GroebnerIdeal J = buchberger(R3, {P(R3, "x*y")});
    CHECK(basis_strings(colon(J, P(R3, "y"))) == std::set<std::string>{"x"});

    // f * (I : f) is contained in I
    auto Rd = detring(3);
    std::vector<Polynomial> gens = all_minors(Rd);
    gens.push_back(P(Rd, "x11^2"));
    gens.push_back(P(Rd, "x12^2"));
    GroebnerIdeal K = buchberger(Rd, gens);
    Polynomial f = P(Rd, "x33");
    GroebnerIdeal Q = colon(K, f);
    for (const auto& b : Q.reduced_basis()) CHECK(K.normal_form(f * b).is_zero());
}

TEST_CASE("colon and bracket interact as in the symbolic-power identity on a principal case") {
    auto R = make_ring(2, {"x", "y", "z"});
    // I = (a):(b) with a = x*y, b = y gives I = (x); then (a^q : b^q) = (x^q)
    Polynomial a = P(R, "x*y"), b = P(R, "y");
    GroebnerIdeal I = colon(buchberger(R, {a}), b);
    CHECK(basis_strings(I) == std::set<std::string>{"x"});
    for (std::uint64_t q : {2ull, 4ull}) {
        GroebnerIdeal lhs = colon(buchberger(R, {frobenius_power(a, q)}), frobenius_power(b, q));
        GroebnerIdeal rhs = bracket_power(I, q);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("intersection via the dominant auxiliary variable") {
    auto R = make_ring(5, {"x", "y"});
    GroebnerIdeal I = buchberger(R, {P(R, "x")});
    GroebnerIdeal J = buchberger(R, {P(R, "y")});
    CHECK(basis_strings(intersect(I, J)) == std::set<std::string>{"x*y"});

    GroebnerIdeal K = buchberger(R, {P(R, "x^2"), P(R, "y")});
    GroebnerIdeal M = intersect(I, K);
    // (x) meet (x^2, y) = (x^2, xy)
    CHECK(basis_strings(M) == std::set<std::string>{"x^2", "x*y"});
}

TEST_CASE("quotient rings reject inhomogeneous defining ideals and the zero ring") {
    auto R = make_ring(2, {"x", "y"});
    CHECK_THROWS_AS(QuotientRing::make(R, {P(R, "x^2 + y")}), engine_error);
    auto ok = QuotientRing::make(R, {P(R, "x^2 + x*y")});
    CHECK(ok->krull_dimension() == 1);
    auto unit = QuotientRing::make(R, {P(R, "x"), P(R, "y"), P(R, "1")});
    CHECK_THROWS_AS(unit->krull_dimension(), engine_error);
}

TEST_CASE("krull dimension: polynomial ring, the point, and the determinantal ring") {
    auto R = make_ring(2, {"x", "y"});
    CHECK(QuotientRing::polynomial_ring(R)->krull_dimension() == 2);
    CHECK(QuotientRing::make(R, {P(R, "x"), P(R, "y")})->krull_dimension() == 0);

    auto Rd = detring(2);
    auto A = QuotientRing::make(Rd, all_minors(Rd));
    CHECK(A->krull_dimension() == 5);
}

TEST_CASE("krull dimension drops by one along a homogeneous nonzerodivisor") {
    auto Rd = detring(3);
    auto A = QuotientRing::make(Rd, all_minors(Rd));
    std::vector<std::string> nzds = {"x33", "x11 + x22 + x33"};
    for (const auto& s : nzds) {
        Polynomial f = P(Rd, s);
        if (!is_nonzerodivisor(f, *A)) continue;
        auto Q = quotient_by(A, {f});
        CHECK(Q->krull_dimension() == A->krull_dimension() - 1);
    }
    // and a regular ring sample
    auto R = make_ring(2, {"x", "y", "z"});
    auto S = QuotientRing::polynomial_ring(R);
    CHECK(quotient_by(S, {P(R, "x + y")})->krull_dimension() == 2);
}

TEST_CASE("nonzerodivisor test: units, zero elements, honest zerodivisors") {
    auto R = make_ring(2, {"x"});
    auto Q = QuotientRing::make(R, {P(R, "x^2")});
    CHECK_FALSE(is_nonzerodivisor(P(R, "x"), *Q));
    CHECK(is_nonzerodivisor(P(R, "1"), *Q));
    CHECK_THROWS_AS(is_nonzerodivisor(P(R, "x^2"), *Q), engine_error);
}

TEST_CASE("x33 is a nonzerodivisor on A/(x11^n, x12^n) for n = 2, 3") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int n : {2, 3}) {
            CAPTURE(p);
            CAPTURE(n);
            auto R = detring(p);
            std::vector<Polynomial> gens = all_minors(R);
            gens.push_back(P(R, "x11^" + std::to_string(n)));
            gens.push_back(P(R, "x12^" + std::to_string(n)));
            auto Q = QuotientRing::make(R, gens);
            CHECK(is_nonzerodivisor(P(R, "x33"), *Q));
        }
    }
}

TEST_CASE("initial ideal of the n=2,3 ideals has no generator divisible by x33") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int n : {2, 3}) {
            auto R = detring(p);
            std::vector<Polynomial> gens = all_minors(R);
            gens.push_back(P(R, "x11^" + std::to_string(n)));
            gens.push_back(P(R, "x12^" + std::to_string(n)));
            GroebnerIdeal I = buchberger(R, gens);
            auto in = I.initial_ideal();
            for (const auto& m : in) CHECK(m.e[8] == 0);
            // minimality: the generating monomials form an antichain
            for (size_t i = 0; i < in.size(); ++i)
                for (size_t j = 0; j < in.size(); ++j)
                    if (i != j) CHECK_FALSE(in[i].divides(in[j], 9));
        }
    }
}

TEST_CASE("the reduced basis is independent of the generator order") {
    auto R = detring(3);
    std::vector<Polynomial> gens = all_minors(R);
    gens.push_back(P(R, "x11^2"));
    gens.push_back(P(R, "x12^2"));
    GroebnerIdeal I = buchberger(R, gens);
    std::mt19937 rng(31337);
    for (int it = 0; it < 5; ++it) {
        std::vector<Polynomial> shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        GroebnerIdeal J = buchberger(R, shuffled);
        CHECK(I.reduced_basis() == J.reduced_basis());
    }
    // and under a scaled, redundant generating set
    std::vector<Polynomial> redundant = gens;
    redundant.push_back(gens[0].scaled(2) + gens[1]);
    redundant.push_back(gens[2] * P(R, "x33"));
    CHECK(buchberger(R, redundant).reduced_basis() == I.reduced_basis());
}

TEST_CASE("budget exhaustion raises a budget error, not a wrong answer") {
    auto R = detring(2);
    Budget tiny;
    tiny.max_pairs = 3;
    GroebnerIdeal I(R, all_minors(R), tiny);
    CHECK_THROWS_AS(I.reduced_basis(), budget_error);
}

TEST_CASE("sealing races and concurrent reads are safe") {
    auto R = detring(3);
    std::vector<Polynomial> gens = all_minors(R);
    gens.push_back(P(R, "x11^2"));
    gens.push_back(P(R, "x12^2"));
    GroebnerIdeal I(R, gens);
    std::vector<std::thread> workers;
    std::vector<size_t> sizes(6, 0);
    std::vector<bool> verdicts(6, false);
    for (int t = 0; t < 6; ++t) {
        workers.emplace_back([&, t] {
            // all threads trigger or wait on the same single sealing
            sizes[t] = I.reduced_basis().size();
            verdicts[t] = I.normal_form(P(R, "x22*x33")).is_zero();
        });
    }
    for (auto& w : workers) w.join();
    for (int t = 0; t < 6; ++t) {
        CHECK(sizes[t] == 13);
        CHECK_FALSE(verdicts[t]);
    }
}
