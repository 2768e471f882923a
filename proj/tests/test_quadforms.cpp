#include <doctest.h>

#include <witt2/artinschreier.hpp>
#include <witt2/quadforms.hpp>
#include <witt2/random.hpp>

#include <random>

using namespace witt2;

namespace {

FieldRef f4() { return parse_field("GF(2)[a]/(a^2+a+1)"); }
FieldRef f2t() { return parse_field("GF(2)(t)"); }

FieldValue el(FieldRef f, const char* s) { return parse_element(f, s); }

// Hyperbolic pairs and residue basis must be explicit and mutually orthogonal.
void check_report(const QuadSpace& q, const WittReport& r) {
    std::vector<Vec> all;
    for (const auto& p : r.hyperbolic_pairs) {
        CHECK(q.evaluate(p.e).is_zero());
        CHECK(q.evaluate(p.f).is_zero());
        CHECK(q.bilinear(p.e, p.f).is_one());
    }
    std::vector<SymplecticPair> pairs = r.hyperbolic_pairs;
    pairs.insert(pairs.end(), r.residue_basis.begin(), r.residue_basis.end());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        CHECK(q.bilinear(pairs[i].e, pairs[i].f).is_one());
        for (std::size_t j = i + 1; j < pairs.size(); ++j)
            for (const Vec* u : {&pairs[i].e, &pairs[i].f})
                for (const Vec* v : {&pairs[j].e, &pairs[j].f}) CHECK(q.bilinear(*u, *v).is_zero());
    }
    CHECK(2 * pairs.size() == q.dim());
    CHECK(r.hyperbolic == (2 * r.witt_index == r.dim));
    CHECK(r.hyperbolic == !r.residue_space.has_value());
    if (r.residue && r.certified) CHECK_FALSE(pmember(r.residue->a * r.residue->b).member);
}

// Zeros of q over a finite field, by enumeration.
std::uint64_t count_zeros(const QuadSpace& q) {
    const std::uint64_t Q = q.field->order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < q.dim(); ++i) total *= Q;
    std::uint64_t zeros = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Vec v;
        for (std::uint64_t r = idx, i = 0; i < q.dim(); ++i, r /= Q) v.push_back(FieldValue::from_bits(q.field, r % Q));
        zeros += q.evaluate(v).is_zero();
    }
    return zeros;
}

bool zero_count_hyperbolic(const QuadSpace& q) {
    const std::uint64_t Q = q.field->order();
    const std::size_t m = q.dim() / 2;
    auto pw = [&](std::size_t e) {
        std::uint64_t r = 1;
        for (std::size_t i = 0; i < e; ++i) r *= Q;
        return r;
    };
    return count_zeros(q) == pw(2 * m - 1) + pw(m) - pw(m - 1);
}

QuadSpace random_form(FieldRef f, std::size_t m, std::mt19937_64& rng) {
    while (true) {
        Matrix Q = zero_matrix(f, m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j) Q[i][j] = random_element(f, rng, 1);
        QuadSpace q(f, Q);
        if (q.nonsingular()) return q;
    }
}

}  // namespace

TEST_CASE("evaluation and polar form") {
    const auto h = QuadSpace::hyperbolic(gf2(), 1);
    CHECK(h.evaluate({el(gf2(), "1"), el(gf2(), "0")}).is_zero());
    const auto q = QuadSpace::binary(el(gf2(), "1"), el(gf2(), "1"));
    CHECK(q.evaluate({el(gf2(), "1"), el(gf2(), "1")}).is_one());
    CHECK_THROWS_AS(q.evaluate({el(gf2(), "1")}), Error);

    std::mt19937_64 rng(1);
    for (FieldRef f : {gf2(), f4(), f2t()}) {
        const auto s = random_form(f, 4, rng);
        for (int trial = 0; trial < 100; ++trial) {
            Vec u, v;
            for (int i = 0; i < 4; ++i) u.push_back(random_element(f, rng, 2));
            for (int i = 0; i < 4; ++i) v.push_back(random_element(f, rng, 2));
            REQUIRE(s.evaluate(u + v) == s.evaluate(u) + s.evaluate(v) + s.bilinear(u, v));
            REQUIRE(s.bilinear(v, v).is_zero());
        }
    }
}

TEST_CASE("form parsing") {
    const auto q = parse_form(f4(), "1, a; 0, a+1");
    CHECK(q.str() == "1,a;0,a+1");
    CHECK_THROWS_AS(parse_form(f4(), "1,1;1,1"), Error);
    CHECK_THROWS_AS(parse_form(f4(), "1,1;0"), Error);
}

TEST_CASE("symplectic bases") {
    const auto h = QuadSpace::hyperbolic(gf2(), 1);
    const auto b = symplectic_basis(h);
    REQUIRE(b.size() == 1);
    CHECK(b[0].e == unit_vec(gf2(), 2, 0));
    CHECK(b[0].f == unit_vec(gf2(), 2, 1));

    CHECK_THROWS_AS(symplectic_basis(QuadSpace(gf2(), {{el(gf2(), "1")}})), Error);
    CHECK_THROWS_AS(symplectic_basis(QuadSpace(gf2(), zero_matrix(gf2(), 2, 2))), Error);

    std::mt19937_64 rng(5);
    for (FieldRef f : {gf2(), f4(), f2t()})
        for (std::size_t m : {2U, 4U, 6U}) {
            const auto q = random_form(f, m, rng);
            const auto pairs = symplectic_basis(q);
            REQUIRE(pairs.size() == m / 2);
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                CHECK(q.bilinear(pairs[i].e, pairs[i].f).is_one());
                for (std::size_t j = i + 1; j < pairs.size(); ++j) {
                    CHECK(q.bilinear(pairs[i].e, pairs[j].e).is_zero());
                    CHECK(q.bilinear(pairs[i].e, pairs[j].f).is_zero());
                    CHECK(q.bilinear(pairs[i].f, pairs[j].e).is_zero());
                    CHECK(q.bilinear(pairs[i].f, pairs[j].f).is_zero());
                }
            }
        }
}

TEST_CASE("Witt decomposition examples") {
    const auto q11 = QuadSpace::binary(el(gf2(), "1"), el(gf2(), "1"));
    const auto r = witt_decompose(q11);
    CHECK(r.witt_index == 0);
    REQUIRE(r.residue.has_value());
    CHECK(r.residue->str() == "[1,1]");
    check_report(q11, r);

    const auto q11f4 = QuadSpace::binary(el(f4(), "1"), el(f4(), "1"));
    const auto r4 = witt_decompose(q11f4);
    CHECK(r4.witt_index == 1);
    CHECK(r4.hyperbolic);
    check_report(q11f4, r4);

    const auto q1a = QuadSpace::binary(el(f4(), "1"), el(f4(), "a"));
    CHECK(arf(q1a) == el(f4(), "a"));
    CHECK(arf(QuadSpace::hyperbolic(f4(), 2)).is_zero());
    const auto sum = orthogonal_sum(q11f4, q1a);
    CHECK(pclass_equal(arf(sum), el(f4(), "a")));
    const auto rs = witt_decompose(sum);
    CHECK(rs.witt_index == 1);
    CHECK(rs.residue->str() == "[1,a]");
    check_report(sum, rs);

    // [0, b] is hyperbolic at once.
    CHECK(witt_decompose(QuadSpace::binary(el(f2t(), "0"), el(f2t(), "t"))).hyperbolic);
}

TEST_CASE("Witt equivalence") {
    const auto q1a = QuadSpace::binary(el(f4(), "1"), el(f4(), "a"));
    const auto q11 = QuadSpace::binary(el(f4(), "1"), el(f4(), "1"));
    CHECK_FALSE(witt_equivalent(q1a, q11));
    CHECK(witt_equivalent(q1a, orthogonal_sum(q1a, QuadSpace::hyperbolic(f4(), 1))));
    CHECK(witt_equivalent(q1a, QuadSpace::binary(el(f4(), "a"), el(f4(), "1"))));
    CHECK(witt_equivalent(q1a, QuadSpace::binary(el(f4(), "a+1"), el(f4(), "a+1"))));
    CHECK_THROWS_AS(witt_equivalent(q1a, QuadSpace::binary(el(gf2(), "1"), el(gf2(), "1"))), Error);
}

TEST_CASE("Witt decomposition agrees with zero counts over finite fields") {
    std::mt19937_64 rng(8);
    for (FieldRef f : {gf2(), f4()})
        for (std::size_t m : {2U, 4U, 6U}) {
            if (f == f4() && m == 6) continue;
            for (int trial = 0; trial < 20; ++trial) {
                const auto q = random_form(f, m, rng);
                const auto r = witt_decompose(q);
                check_report(q, r);
                REQUIRE(r.certified);
                CHECK(r.dim - 2 * r.witt_index <= 2);
                CHECK(r.hyperbolic == zero_count_hyperbolic(q));
                CHECK(r.hyperbolic == arf(q).is_zero());
            }
        }
}

TEST_CASE("function field decompositions") {
    FieldRef F = f2t();
    // [1, t] + [1, t]: common value 1.
    const auto q = orthogonal_sum(QuadSpace::binary(el(F, "1"), el(F, "t")), QuadSpace::binary(el(F, "1"), el(F, "t")));
    const auto r = witt_decompose(q);
    CHECK(r.hyperbolic);
    CHECK(r.witt_index == 2);
    check_report(q, r);

    // [1, t] + [1, t^3]: Arf class t + t^3 is nontrivial.
    const auto q2 = orthogonal_sum(QuadSpace::binary(el(F, "1"), el(F, "t")), QuadSpace::binary(el(F, "1"), el(F, "t^3")));
    const auto r2 = witt_decompose(q2);
    CHECK(r2.certified);
    CHECK(r2.witt_index == 1);
    CHECK(r2.represents_one);
    CHECK(pclass_equal(r2.residue->b, el(F, "t+t^3")));
    check_report(q2, r2);

    // [1,1] + t[1,1] is anisotropic.
    const auto q3 = orthogonal_sum(QuadSpace::binary(el(F, "1"), el(F, "1")),
                                   QuadSpace::binary(el(F, "1"), el(F, "1")).scaled(el(F, "t")));
    const auto r3 = witt_decompose(q3);
    CHECK(r3.certified);
    CHECK(r3.witt_index == 0);
    CHECK(r3.residue_space->dim() == 4);
    CHECK_FALSE(r3.anisotropy.empty());
    check_report(q3, r3);

    // Random forms: reports are sound whenever produced.
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = random_form(F, 4, rng);
        const auto rr = witt_decompose(s);
        check_report(s, rr);
    }
}

TEST_CASE("Springer certificate") {
    FieldRef F = f2t();
    CHECK(springer_certificate({{el(F, "1"), el(F, "1")}, {el(F, "t"), el(F, "1/t")}}).has_value());
    // [1,1] + [1,1] is hyperbolic, so no certificate can exist.
    CHECK_FALSE(springer_certificate({{el(F, "1"), el(F, "1")}, {el(F, "1"), el(F, "1")}}).has_value());
}

TEST_CASE("Arf class under symplectic transvections") {
    std::mt19937_64 rng(4);
    for (FieldRef f : {gf2(), f4(), f2t()}) {
        const auto q = random_form(f, 4, rng);
        const auto base = symplectic_basis(q);
        FieldValue a0 = FieldValue::zero(f);
        for (const auto& p : base) a0 += q.evaluate(p.e) * q.evaluate(p.f);
        for (int trial = 0; trial < 20; ++trial) {
            Vec v;
            for (int i = 0; i < 4; ++i) v.push_back(random_element(f, rng, 1));
            auto tv = [&](const Vec& x) { return x + q.bilinear(x, v) * v; };
            FieldValue a1 = FieldValue::zero(f);
            for (const auto& p : base) a1 += q.evaluate(tv(p.e)) * q.evaluate(tv(p.f));
            CHECK(pclass_equal(a0, a1));
        }
    }
}

TEST_CASE("scalar extension") {
    const auto G = ExtensionAlgebra(parse_poly(gf2(), "x^2+x+1"));
    const auto q = QuadSpace::binary(el(gf2(), "1"), el(gf2(), "1"));
    const auto qe = extend_scalars(q, G);
    CHECK(witt_decompose(qe).hyperbolic);
    CHECK(witt_decompose(extend_scalars(QuadSpace::hyperbolic(gf2(), 1), G)).hyperbolic);
    CHECK_THROWS_AS(extend_scalars(QuadSpace::hyperbolic(f4(), 1), G), Error);

    FieldRef F = f2t();
    const auto E = ExtensionAlgebra(parse_poly(F, "x^2+x+t"));
    const auto qt = QuadSpace::binary(el(F, "1"), el(F, "t"));
    const auto qx = extend_scalars(qt, E);
    FieldRef L = qx.field;
    const Vec iso{FieldValue::generator(L), FieldValue::one(L)};
    CHECK(qx.evaluate(iso).is_zero());
    const auto rx = witt_decompose(qx);
    CHECK(rx.hyperbolic);
}

TEST_CASE("trace normal form") {
    const auto G = ExtensionAlgebra(parse_poly(gf2(), "x^2+x+1"));
    const auto t = trace_normal_form(G);
    CHECK(t.report.witt_index == 0);
    CHECK(t.report.residue->str() == "[1,1]");

    const auto E = ExtensionAlgebra(parse_poly(f4(), "x^3+x+a"), false);
    const auto te = trace_normal_form(E);
    CHECK(te.report.residue->str() == "[1,a]");

    for (const char* p : {"x^5+x^2+1", "x^5+x^3+1", "x^5+x^4+x^3+x^2+1", "x^4+x^3+1", "x^6+x+1"}) {
        const auto X = ExtensionAlgebra(parse_poly(gf2(), p));
        const auto n = trace_normal_form(X);
        CAPTURE(p);
        CHECK(n.report.dim - 2 * n.report.witt_index <= 2);
        const auto Q = second_trace_form(X);
        CHECK(n.report.hyperbolic == zero_count_hyperbolic(Q));
        for (std::size_t i = 0; i < n.basis.size(); ++i) {
            CHECK(second_trace(X, n.basis[i].first).is_one());
            CHECK(n.a[i] == second_trace(X, n.basis[i].second));
            if (X.degree() % 2 == 1) {
                CHECK(trace(X, n.basis[i].first).is_zero());
                CHECK(trace(X, n.basis[i].second).is_zero());
            }
            for (std::size_t j = 0; j < n.basis.size(); ++j) {
                CHECK(trace_polar(X, n.basis[i].first, n.basis[j].second) == FieldValue::from_int(gf2(), i == j));
                if (i != j) CHECK(trace_polar(X, n.basis[i].first, n.basis[j].first).is_zero());
            }
        }
    }
}
