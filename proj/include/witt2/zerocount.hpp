#pragma once

// Brute-force zero counting for quadratic forms over GF(2^d).
//
// A form on GF(2^d)^m is rewritten over GF(2) as d quadratic forms in m*d
// variables (one per output coordinate); a vector is a zero of q exactly when
// it is a common zero of all d of them. The count is then taken by exhaustive
// enumeration with one of several interchangeable kernels.

#include <witt2/quadspace.hpp>

#include <cstdint>
#include <vector>

namespace witt2::oracle {

// f_k(x) = sum_{u <= v} c_k(u, v) x_u x_v over GF(2); the u == v terms are linear.
struct F2System {
    unsigned nvars = 0;
    std::vector<std::vector<std::uint64_t>> rows;  // rows[k][u] has bit v set iff c_k(u, v) = 1, v >= u
};

constexpr unsigned kMaxVars = 40;

F2System linearize(const QuadSpace& q);

enum class Kernel { Scalar, Bitsliced64, Avx2 };

const char* to_string(Kernel k) noexcept;
std::vector<Kernel> available_kernels();
// WITT2_KERNEL=scalar|u64|avx2 if set and available, else the widest available.
Kernel default_kernel();

std::uint64_t count_common_zeros(const F2System& s, Kernel k);
std::uint64_t count_common_zeros(const F2System& s);

std::uint64_t count_zeros(const QuadSpace& q);
// Zeros of a hyperbolic form of dimension 2m over a field with Q elements:
// Q^(2m-1) + Q^m - Q^(m-1).
std::uint64_t hyperbolic_zero_count(std::uint64_t Q, std::size_t m);
bool zero_count_hyperbolic(const QuadSpace& q);

namespace detail {
std::uint64_t count_scalar(const F2System& s);
std::uint64_t count_u64(const F2System& s);
std::uint64_t count_avx2(const F2System& s);
bool avx2_supported();
}  // namespace detail

}  // namespace witt2::oracle
