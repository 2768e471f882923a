#include <doctest.h>

#include <witt2/artinschreier.hpp>
#include <witt2/random.hpp>

#include <random>
#include <set>

using namespace witt2;

namespace {

FieldRef f4() { return parse_field("GF(2)[a]/(a^2+a+1)"); }
FieldRef f2t() { return parse_field("GF(2)(t)"); }

FieldRef finite_of_degree(unsigned d) {
    switch (d) {
        case 1: return gf2();
        case 2: return f4();
        case 3: return parse_field("GF(2)[c]/(c^3+c+1)");
        default: return parse_field("GF(2)[c]/(c^4+c+1)");
    }
}

// Odd pole orders everywhere, as required after reduction.
void check_reduced(const FieldValue& r) {
    const PoleData pd = poles(r);
    for (const auto& pm : pd.finite) CHECK(pm.second % 2 == 1);
    CHECK((pd.at_infinity == 0 || pd.at_infinity % 2 == 1));
}

}  // namespace

TEST_CASE("examples") {
    CHECK(pmember(FieldValue::zero(f4())).member);
    CHECK(pmember(FieldValue::zero(f4())).certificate->is_zero());

    const auto one = pmember(FieldValue::one(f4()));
    CHECK(one.member);
    CHECK(*one.certificate == parse_element(f4(), "a"));

    CHECK_FALSE(pmember(parse_element(f4(), "a")).member);
    CHECK_FALSE(pmember(FieldValue::one(gf2())).member);

    CHECK_FALSE(pmember(parse_element(f2t(), "t")).member);
    const auto tt = pmember(parse_element(f2t(), "t^2+t"));
    CHECK(tt.member);
    CHECK(tt.certificate->str() == "t");

    CHECK(pclass_equal(FieldValue::one(gf2()), FieldValue::one(gf2())));
    CHECK(pclass_equal(parse_element(f4(), "a^2"), parse_element(f4(), "a")));
    CHECK_FALSE(pclass_equal(parse_element(f2t(), "t"), FieldValue::zero(f2t())));
}

TEST_CASE("t is not in P(GF(2)(t)) by bounded search") {
    // No c = u/v with deg u, deg v <= 3 satisfies c^2 + c = t.
    FieldRef F = f2t();
    const auto t = parse_element(F, "t");
    for (Bits u = 0; u < 16; ++u)
        for (Bits v = 1; v < 16; ++v) {
            const auto c = FieldValue(F, Elem(F->make_frac({u & 1, (u >> 1) & 1, (u >> 2) & 1, (u >> 3) & 1},
                                                           {v & 1, (v >> 1) & 1, (v >> 2) & 1, (v >> 3) & 1})));
            REQUIRE_FALSE(c.square() + c == t);
        }
}

TEST_CASE("reduce_pole examples") {
    FieldRef F = f2t();
    const auto r = reduce_pole(parse_element(F, "1/t^2"), Place::finite({0, 1}));
    CHECK(r.h.str() == "1/t");
    CHECK(r.reduced.str() == "1/t");

    const auto s = reduce_pole(parse_element(F, "t^2"), Place::infinity());
    CHECK(s.h.str() == "t");
    CHECK(s.reduced.str() == "t");

    CHECK_THROWS_AS(reduce_pole(parse_element(F, "1/t"), Place::finite({0, 1})), Error);
    CHECK_THROWS_AS(reduce_pole(parse_element(F, "t^3"), Place::infinity()), Error);

    // A pole of order 4 over a degree-2 place.
    const auto b = parse_element(F, "(t+1)/(t^2+t+1)^4");
    const auto q = reduce_pole(b, Place::finite({1, 1, 1}));
    CHECK(q.reduced == b + q.h.square() + q.h);
    CHECK(poles(q.reduced).finite.size() <= 1);
    for (const auto& pm : poles(q.reduced).finite) CHECK(pm.second < 4);
}

TEST_CASE("finite fields agree with enumeration") {
    for (unsigned d = 1; d <= 4; ++d) {
        FieldRef F = finite_of_degree(d);
        std::set<Bits> image;
        for (Bits x = 0; x < (Bits{1} << d); ++x) {
            const auto v = FieldValue::from_bits(F, x);
            image.insert(std::get<Bits>((v.square() + v).payload().rep));
        }
        CHECK(image.size() == (std::size_t{1} << (d - 1)));
        for (Bits x = 0; x < (Bits{1} << d); ++x) {
            const auto b = FieldValue::from_bits(F, x);
            const auto m = pmember(b);
            REQUIRE(m.member == (image.count(x) == 1));
            if (m.member) REQUIRE(m.certificate->square() + *m.certificate == b);
            REQUIRE(m.reduced_form == b + m.shift.square() + m.shift);
        }
        CHECK_FALSE(pmember(canonical_nontrivial(F)).member);
    }
}

TEST_CASE("round trip over function fields") {
    std::mt19937_64 rng(11);
    for (FieldRef F : {f2t(), parse_field("(GF(2)[a]/(a^2+a+1))(t)")}) {
        for (int trial = 0; trial < 300; ++trial) {
            const auto c = random_element(F, rng, 5);
            const auto b = c.square() + c;
            const auto m = pmember(b);
            REQUIRE(m.member);
            REQUIRE(m.certificate->square() + *m.certificate == b);
        }
    }
}

TEST_CASE("reduction soundness and subgroup property") {
    std::mt19937_64 rng(12);
    FieldRef F = f2t();
    for (int trial = 0; trial < 300; ++trial) {
        const auto b = random_element(F, rng, 4);
        const auto m = pmember(b);
        REQUIRE(m.reduced_form == b + m.shift.square() + m.shift);
        check_reduced(m.reduced_form);
        if (!m.member) CHECK_FALSE(m.certificate.has_value());

        const auto c1 = random_element(F, rng, 3), c2 = random_element(F, rng, 3);
        REQUIRE(pmember((c1.square() + c1) + (c2.square() + c2)).member);
        // Class arithmetic is compatible with translation by P(F).
        REQUIRE(pmember(b).member == pmember(b + c1.square() + c1).member);
    }
}

TEST_CASE("quadratic Artin-Schreier layer") {
    FieldRef L = parse_field("GF(2)(t)[y]/(y^2+y+t)");
    CHECK(pmember_supported(L));
    const auto t = parse_element(L, "t");
    const auto m = pmember(t);
    CHECK(m.member);
    CHECK(m.certificate->square() + *m.certificate == t);
    CHECK_FALSE(pmember(parse_element(L, "t^3")).member);
    CHECK_FALSE(pmember_supported(parse_field("GF(2)(t)[y]/(y^3+t)")));
    CHECK_THROWS_AS(pmember(parse_element(parse_field("GF(2)(t)[y]/(y^3+t)"), "y")), Error);
}
