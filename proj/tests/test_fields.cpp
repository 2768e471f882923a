#include <doctest.h>

#include <witt2/fields.hpp>
#include <witt2/random.hpp>

#include <random>

using namespace witt2;

namespace {

FieldRef f4() { return parse_field("GF(2)[a]/(a^2+a+1)"); }
FieldRef f2t() { return parse_field("GF(2)(t)"); }

std::vector<FieldRef> fixtures() {
    return {
        gf2(),
        f4(),
        parse_field("GF(2)[a]/(a^2+a+1)[b]/(b^2+b+a)"),
        parse_field("GF(2)[c]/(c^5+c^2+1)"),
        f2t(),
        parse_field("(GF(2)[a]/(a^2+a+1))(t)"),
        parse_field("GF(2)(t)[y]/(y^2+y+t)"),
    };
}

}  // namespace

TEST_CASE("F4 arithmetic") {
    FieldRef F = f4();
    const auto a = parse_element(F, "a");
    CHECK((a + a).is_zero());
    CHECK(a.inverse() == parse_element(F, "a+1"));
    CHECK(a * a == a + FieldValue::one(F));
    CHECK_THROWS_AS(FieldValue::zero(F).inverse(), Error);
}

TEST_CASE("function field fractions") {
    FieldRef F = f2t();
    const auto lhs = parse_element(F, "t/(t+1)") + parse_element(F, "1/(t+1)");
    CHECK(lhs.is_one());
    const auto x = parse_element(F, "(t^2+1)/(t^3+t)");
    CHECK(x.str() == "1/t");
    CHECK(parse_element(F, "(t^2+t)/(t+1)").str() == "t");
}

TEST_CASE("descriptor mismatch is reported") {
    const auto a = parse_element(f4(), "a");
    const auto t = parse_element(f2t(), "t");
    try {
        (void)(a + t);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DescriptorMismatch);
    }
    // Subfields promote.
    CHECK((FieldValue::one(gf2()) + a) == parse_element(f4(), "a+1"));
}

TEST_CASE("descriptor grammar") {
    CHECK(parse_field("GF(2)")->describe() == "GF(2)");
    CHECK(parse_field(" GF(2)[a]/( a^2 + a + 1 ) ")->describe() == "GF(2)[a]/(a^2+a+1)");
    CHECK(parse_field("GF(2)(t)")->describe() == "GF(2)(t)");
    CHECK(parse_field("(GF(2)[a]/(a^2+a+1))(t)")->describe() == "(GF(2)[a]/(a^2+a+1))(t)");
    CHECK(parse_field("GF(2)[a]/(a^2+a+1)") == f4());
    CHECK(f4()->bits() == 2);

    auto kind_of = [](const char* text) {
        try {
            parse_field(text);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Precondition;
    };
    CHECK(kind_of("GF(3)") == ErrorKind::Parse);
    CHECK(kind_of("GF(2)[a]/(a^2+1)") == ErrorKind::Reducible);
    CHECK(kind_of("GF(2)[a]/(a^2+a+1)[a]/(a^2+a+1)") == ErrorKind::Parse);
    CHECK(kind_of("GF(2)(t)(u)") == ErrorKind::Unsupported);
    CHECK(kind_of("GF(2)[a]/(a^2+a+b)") == ErrorKind::Parse);
}

TEST_CASE("poly_gcd") {
    FieldRef F = gf2();
    const auto f = parse_poly(F, "x^4+x^3+1");
    CHECK(poly_gcd(f, parse_poly(F, "x^2")).str() == "1");
    CHECK(poly_gcd(f, UniPoly(F)) == f);
    CHECK(poly_gcd(parse_poly(F, "x^2+1"), parse_poly(F, "x+1")).str() == "x+1");
    CHECK_THROWS_AS(poly_gcd(UniPoly(F), UniPoly(F)), Error);

    FieldRef G = f4();
    const auto g = parse_poly(G, "a*x^3+x+a");
    CHECK(poly_gcd(g, UniPoly(G)) == g.monic());
}

TEST_CASE("poly_gcd divides both inputs exactly") {
    std::mt19937_64 rng(7);
    for (FieldRef F : {gf2(), f4(), f2t()}) {
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<FieldValue> cf, cg, ch;
            for (int i = 0; i < 4; ++i) cf.push_back(random_element(F, rng, 2));
            for (int i = 0; i < 4; ++i) cg.push_back(random_element(F, rng, 2));
            for (int i = 0; i < 3; ++i) ch.push_back(random_element(F, rng, 2));
            const UniPoly h(F, ch);
            const UniPoly f = UniPoly(F, cf) * h, g = UniPoly(F, cg) * h;
            if (f.is_zero() && g.is_zero()) continue;
            const auto d = poly_gcd(f, g);
            CHECK(d.is_monic());
            CHECK(f.divmod(d).second.is_zero());
            CHECK(g.divmod(d).second.is_zero());
            if (!h.is_zero()) CHECK(d.divmod(h.monic()).second.is_zero());
        }
    }
}

TEST_CASE("separability") {
    CHECK(is_separable(parse_poly(gf2(), "x^4+x^3+1")));
    CHECK_FALSE(is_separable(parse_poly(gf2(), "x^2+1")));
    CHECK(is_separable(parse_poly(f2t(), "x^3+t")));
    CHECK_FALSE(is_separable(parse_poly(f2t(), "x^2+t")));
    CHECK_THROWS_AS(is_separable(parse_poly(gf2(), "1")), Error);
}

TEST_CASE("irreducibility") {
    CHECK(is_irreducible(parse_poly(gf2(), "x^4+x^3+1")) == Irreducibility::Irreducible);
    CHECK(is_irreducible(parse_poly(gf2(), "x^2+x+1")) == Irreducibility::Irreducible);
    CHECK(is_irreducible(parse_poly(gf2(), "x^4+x^2+1")) == Irreducibility::Reducible);
    CHECK(is_irreducible(parse_poly(f2t(), "x^3+t")) == Irreducibility::Irreducible);
    CHECK(is_irreducible(parse_poly(f2t(), "x^4+x^3+1")) == Irreducibility::Irreducible);
    CHECK(is_irreducible(parse_poly(f2t(), "x^5+t")) == Irreducibility::Irreducible);
    CHECK(is_irreducible(parse_poly(f2t(), "x^3+t^3")) == Irreducibility::Reducible);
    CHECK(is_irreducible(parse_poly(f2t(), "x^2+x+t")) == Irreducibility::Irreducible);
    CHECK(is_irreducible(parse_poly(f2t(), "x^2+x+t^2+t")) == Irreducibility::Reducible);
    // x^4+x^3+1 splits over F4 into two quadratics.
    CHECK(is_irreducible(parse_poly(f4(), "x^4+x^3+1")) == Irreducibility::Reducible);
    CHECK(is_irreducible(parse_poly(f4(), "x^3+a")) == Irreducibility::Irreducible);
    CHECK_THROWS_AS(is_irreducible(parse_poly(gf2(), "1")), Error);
}

TEST_CASE("irreducible counts over small fields") {
    // Necklace counts: 1, 2, 3, 6, 9 for degrees 2..6 over F2; 6, 20 for degrees 2, 3 over F4.
    const std::vector<std::size_t> f2{1, 2, 3, 6, 9};
    for (unsigned d = 2; d <= 6; ++d) CHECK(monic_irreducibles(gf2(), d).size() == f2[d - 2]);
    CHECK(monic_irreducibles(f4(), 2).size() == 6);
    CHECK(monic_irreducibles(f4(), 3).size() == 20);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(2024);
    for (FieldRef F : fixtures()) {
        CAPTURE(F->describe());
        for (int trial = 0; trial < 1000; ++trial) {
            const auto x = random_element(F, rng), y = random_element(F, rng), z = random_element(F, rng);
            REQUIRE(((x + y) + z) == (x + (y + z)));
            REQUIRE(((x * y) * z) == (x * (y * z)));
            REQUIRE((x * (y + z)) == (x * y + x * z));
            REQUIRE((x * y) == (y * x));
            REQUIRE((x + x).is_zero());
            if (!x.is_zero()) REQUIRE((x * x.inverse()).is_one());
            REQUIRE(F->is_canonical((x * y + z).payload()));
        }
    }
}

TEST_CASE("Frobenius is additive and injective") {
    std::mt19937_64 rng(99);
    for (FieldRef F : fixtures()) {
        CAPTURE(F->describe());
        for (int trial = 0; trial < 1000; ++trial) {
            const auto x = random_element(F, rng), y = random_element(F, rng);
            REQUIRE((x + y).square() == x.square() + y.square());
            if (!(x == y)) REQUIRE_FALSE(x.square() == y.square());
        }
    }
}

TEST_CASE("print/parse round trip") {
    std::mt19937_64 rng(5);
    for (FieldRef F : fixtures()) {
        CAPTURE(F->describe());
        for (int trial = 0; trial < 300; ++trial) {
            const auto x = random_element(F, rng);
            REQUIRE(parse_element(F, x.str()) == x);
        }
        std::vector<FieldValue> c;
        for (int i = 0; i < 4; ++i) c.push_back(random_element(F, rng));
        const UniPoly p(F, c);
        CHECK(parse_poly(F, p.str(), "x") == p);
    }
}
