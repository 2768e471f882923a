#include <witt2/zerocount.hpp>

#include <bit>
#include <cstdlib>
#include <cstring>

namespace witt2::oracle {

F2System linearize(const QuadSpace& q) {
    FieldRef f = q.field;
    if (!f->is_finite()) raise(ErrorKind::Unsupported, "zero counting needs a finite field, got " + f->describe());
    const unsigned d = f->bits(), m = static_cast<unsigned>(q.dim());
    if (m * d > kMaxVars)
        raise(ErrorKind::Precondition, "zero counting is limited to " + std::to_string(kMaxVars) + " binary variables");
    F2System s;
    s.nvars = m * d;
    s.rows.assign(d, std::vector<std::uint64_t>(s.nvars, 0));
    auto coeff = [&](unsigned i, unsigned j) { return std::get<Bits>(q.Q[i][j].payload().rep); };
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = i; j < m; ++j) {
            const Bits c = coeff(i, j);
            if (c == 0) continue;
            for (unsigned a = 0; a < d; ++a) {
                const Bits ba = Bits{1} << a;
                if (i == j) {
                    // (sum x_a b_a)^2 = sum x_a b_a^2 in characteristic two.
                    const Bits img = f->fmul(c, f->fmul(ba, ba));
                    for (unsigned k = 0; k < d; ++k)
                        if ((img >> k) & 1U) s.rows[k][i * d + a] ^= std::uint64_t{1} << (i * d + a);
                    continue;
                }
                for (unsigned b = 0; b < d; ++b) {
                    const Bits img = f->fmul(c, f->fmul(ba, Bits{1} << b));
                    for (unsigned k = 0; k < d; ++k)
                        if ((img >> k) & 1U) s.rows[k][i * d + a] ^= std::uint64_t{1} << (j * d + b);
                }
            }
        }
    return s;
}

const char* to_string(Kernel k) noexcept {
    switch (k) {
        case Kernel::Scalar: return "scalar";
        case Kernel::Bitsliced64: return "u64";
        case Kernel::Avx2: return "avx2";
    }
    return "?";
}

std::vector<Kernel> available_kernels() {
    std::vector<Kernel> out{Kernel::Scalar, Kernel::Bitsliced64};
    if (detail::avx2_supported()) out.push_back(Kernel::Avx2);
    return out;
}

Kernel default_kernel() {
    const auto avail = available_kernels();
    if (const char* env = std::getenv("WITT2_KERNEL"))
        for (Kernel k : avail)
            if (std::strcmp(env, to_string(k)) == 0) return k;
    return avail.back();
}

std::uint64_t count_common_zeros(const F2System& s, Kernel k) {
    if (s.nvars > kMaxVars) raise(ErrorKind::Precondition, "too many variables for enumeration");
    switch (k) {
        case Kernel::Scalar: return detail::count_scalar(s);
        case Kernel::Bitsliced64: return detail::count_u64(s);
        case Kernel::Avx2:
            if (!detail::avx2_supported()) raise(ErrorKind::Unsupported, "AVX2 is not available on this machine");
            return detail::count_avx2(s);
    }
    return 0;
}

std::uint64_t count_common_zeros(const F2System& s) { return count_common_zeros(s, default_kernel()); }

std::uint64_t count_zeros(const QuadSpace& q) { return count_common_zeros(linearize(q)); }

std::uint64_t hyperbolic_zero_count(std::uint64_t Q, std::size_t m) {
    auto pw = [Q](std::size_t e) {
        std::uint64_t r = 1;
        for (std::size_t i = 0; i < e; ++i) r *= Q;
        return r;
    };
    if (m == 0) return 1;
    return pw(2 * m - 1) + pw(m) - pw(m - 1);
}

bool zero_count_hyperbolic(const QuadSpace& q) {
    if (q.dim() % 2 != 0) return false;
    return count_zeros(q) == hyperbolic_zero_count(q.field->order(), q.dim() / 2);
}

namespace detail {

std::uint64_t count_scalar(const F2System& s) {
    const std::uint64_t total = std::uint64_t{1} << s.nvars;
    std::uint64_t zeros = 0;
    for (std::uint64_t x = 0; x < total; ++x) {
        bool zero = true;
        for (const auto& rows : s.rows) {
            unsigned val = 0;
            for (std::uint64_t bits = x; bits != 0; bits &= bits - 1)
                val ^= std::popcount(rows[std::countr_zero(bits)] & x) & 1U;
            if (val) {
                zero = false;
                break;
            }
        }
        zeros += zero;
    }
    return zeros;
}

// Lane l of a 64-bit word holds the assignment whose low 6 variables are l.
std::uint64_t count_u64(const F2System& s) {
    constexpr std::uint64_t pattern[6] = {0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
                                          0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
    if (s.nvars < 6) return count_scalar(s);
    const unsigned n = s.nvars;
    const std::uint64_t blocks = std::uint64_t{1} << (n - 6);
    std::vector<std::uint64_t> X(n);
    for (unsigned u = 0; u < 6; ++u) X[u] = pattern[u];
    std::uint64_t zeros = 0;
    for (std::uint64_t hb = 0; hb < blocks; ++hb) {
        for (unsigned u = 6; u < n; ++u) X[u] = ((hb >> (u - 6)) & 1U) ? ~std::uint64_t{0} : 0;
        std::uint64_t nonzero = 0;
        for (const auto& rows : s.rows) {
            std::uint64_t acc = 0;
            for (unsigned u = 0; u < n; ++u) {
                if (X[u] == 0 || rows[u] == 0) continue;
                std::uint64_t t = 0;
                for (std::uint64_t bits = rows[u]; bits != 0; bits &= bits - 1) t ^= X[std::countr_zero(bits)];
                acc ^= X[u] & t;
            }
            nonzero |= acc;
            if (nonzero == ~std::uint64_t{0}) break;
        }
        zeros += static_cast<std::uint64_t>(std::popcount(~nonzero));
    }
    return zeros;
}

}  // namespace detail

}  // namespace witt2::oracle
