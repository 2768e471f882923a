#include <witt2/zerocount.hpp>

#include <bit>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define WITT2_HAVE_X86 1
#endif

namespace witt2::oracle::detail {

#ifdef WITT2_HAVE_X86

bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

// 256 lanes: the low 6 variables vary inside each 64-bit word, variables 6 and
// 7 select the word.
__attribute__((target("avx2"))) std::uint64_t count_avx2(const F2System& s) {
    constexpr long long pattern[6] = {
        static_cast<long long>(0xAAAAAAAAAAAAAAAAULL), static_cast<long long>(0xCCCCCCCCCCCCCCCCULL),
        static_cast<long long>(0xF0F0F0F0F0F0F0F0ULL), static_cast<long long>(0xFF00FF00FF00FF00ULL),
        static_cast<long long>(0xFFFF0000FFFF0000ULL), static_cast<long long>(0xFFFFFFFF00000000ULL)};
    if (s.nvars < 8) return count_u64(s);
    const unsigned n = s.nvars;
    const std::uint64_t blocks = std::uint64_t{1} << (n - 8);
    const __m256i ones = _mm256_set1_epi64x(-1), zero = _mm256_setzero_si256();
    __m256i X[kMaxVars];
    for (unsigned u = 0; u < 6; ++u) X[u] = _mm256_set1_epi64x(pattern[u]);
    X[6] = _mm256_set_epi64x(-1, 0, -1, 0);
    X[7] = _mm256_set_epi64x(-1, -1, 0, 0);
    bool live[kMaxVars];
    for (unsigned u = 0; u < n; ++u) live[u] = true;
    std::uint64_t zeros = 0;
    for (std::uint64_t hb = 0; hb < blocks; ++hb) {
        for (unsigned u = 8; u < n; ++u) {
            live[u] = (hb >> (u - 8)) & 1U;
            X[u] = live[u] ? ones : zero;
        }
        __m256i nonzero = zero;
        for (const auto& rows : s.rows) {
            __m256i acc = zero;
            for (unsigned u = 0; u < n; ++u) {
                if (!live[u] || rows[u] == 0) continue;
                __m256i t = zero;
                for (std::uint64_t bits = rows[u]; bits != 0; bits &= bits - 1)
                    t = _mm256_xor_si256(t, X[std::countr_zero(bits)]);
                acc = _mm256_xor_si256(acc, _mm256_and_si256(X[u], t));
            }
            nonzero = _mm256_or_si256(nonzero, acc);
        }
        alignas(32) std::uint64_t w[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(w), nonzero);
        for (auto x : w) zeros += static_cast<std::uint64_t>(std::popcount(~x));
    }
    return zeros;
}

#else

bool avx2_supported() { return false; }
std::uint64_t count_avx2(const F2System& s) { return count_u64(s); }

#endif

}  // namespace witt2::oracle::detail
