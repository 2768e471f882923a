#include <doctest.h>

#include <witt2/quadforms.hpp>
#include <witt2/random.hpp>
#include <witt2/zerocount.hpp>

#include <random>

using namespace witt2;
using namespace witt2::oracle;

namespace {

F2System random_system(unsigned nvars, unsigned nforms, std::mt19937_64& rng, double density) {
    std::bernoulli_distribution coin(density);
    F2System s;
    s.nvars = nvars;
    s.rows.assign(nforms, std::vector<std::uint64_t>(nvars, 0));
    for (auto& rows : s.rows)
        for (unsigned u = 0; u < nvars; ++u)
            for (unsigned v = u; v < nvars; ++v)
                if (coin(rng)) rows[u] |= std::uint64_t{1} << v;
    return s;
}

// Direct evaluation of the sum over u <= v, independent of the kernels.
std::uint64_t naive(const F2System& s) {
    std::uint64_t zeros = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << s.nvars); ++x) {
        bool z = true;
        for (const auto& rows : s.rows) {
            unsigned val = 0;
            for (unsigned u = 0; u < s.nvars; ++u)
                for (unsigned v = u; v < s.nvars; ++v)
                    val ^= ((rows[u] >> v) & 1U) & ((x >> u) & 1U) & ((x >> v) & 1U);
            z = z && val == 0;
        }
        zeros += z;
    }
    return zeros;
}

}  // namespace

TEST_CASE("kernels agree on random systems") {
    std::mt19937_64 rng(21);
    for (unsigned n = 1; n <= 14; ++n)
        for (unsigned forms = 1; forms <= 3; ++forms)
            for (double density : {0.1, 0.5}) {
                const auto s = random_system(n, forms, rng, density);
                const auto want = naive(s);
                for (Kernel k : available_kernels()) {
                    CAPTURE(to_string(k));
                    CHECK(count_common_zeros(s, k) == want);
                }
            }
    for (unsigned n : {16U, 18U, 20U}) {
        const auto s = random_system(n, 2, rng, 0.3);
        const auto want = count_common_zeros(s, Kernel::Scalar);
        for (Kernel k : available_kernels()) CHECK(count_common_zeros(s, k) == want);
    }
}

TEST_CASE("hyperbolic zero counts") {
    CHECK(hyperbolic_zero_count(2, 1) == 3);
    CHECK(hyperbolic_zero_count(4, 1) == 7);
    CHECK(hyperbolic_zero_count(2, 2) == 10);
    for (FieldRef f : {gf2(), parse_field("GF(2)[a]/(a^2+a+1)"), parse_field("GF(2)[c]/(c^3+c+1)")})
        for (std::size_t r = 1; r <= 3; ++r) {
            const auto h = QuadSpace::hyperbolic(f, r);
            if (h.dim() * f->bits() > 20) continue;
            CHECK(count_zeros(h) == hyperbolic_zero_count(f->order(), r));
        }
    // [1,1] over F2 has only the zero vector as a zero.
    CHECK(count_zeros(QuadSpace::binary(FieldValue::one(gf2()), FieldValue::one(gf2()))) == 1);
}

TEST_CASE("linearised forms match direct evaluation") {
    std::mt19937_64 rng(22);
    FieldRef F = parse_field("GF(2)[a]/(a^2+a+1)[b]/(b^2+b+a)");
    for (int trial = 0; trial < 10; ++trial) {
        Matrix Q = zero_matrix(F, 2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = i; j < 2; ++j) Q[i][j] = random_element(F, rng);
        const QuadSpace q(F, Q);
        std::uint64_t direct = 0;
        for (Bits x = 0; x < 16; ++x)
            for (Bits y = 0; y < 16; ++y) direct += q.evaluate({FieldValue::from_bits(F, x), FieldValue::from_bits(F, y)}).is_zero();
        CHECK(count_zeros(q) == direct);
    }
    CHECK_THROWS_AS(linearize(QuadSpace::hyperbolic(parse_field("GF(2)(t)"), 1)), Error);
}

TEST_CASE("dispatch honours WITT2_KERNEL") {
    const auto avail = available_kernels();
    CHECK(avail.front() == Kernel::Scalar);
    setenv("WITT2_KERNEL", "scalar", 1);
    CHECK(default_kernel() == Kernel::Scalar);
    setenv("WITT2_KERNEL", "u64", 1);
    CHECK(default_kernel() == Kernel::Bitsliced64);
    setenv("WITT2_KERNEL", "bogus", 1);
    CHECK(default_kernel() == avail.back());
    unsetenv("WITT2_KERNEL");
}
