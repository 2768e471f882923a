#pragma once

// Dense linear algebra over GF(2) on packed bit vectors.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace witt2::detail {

class BitVec {
public:
    explicit BitVec(std::size_t n = 0) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const noexcept { return n_; }
    bool get(std::size_t i) const noexcept { return (w_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i, bool v) noexcept {
        const std::uint64_t m = std::uint64_t{1} << (i % 64);
        w_[i / 64] = v ? (w_[i / 64] | m) : (w_[i / 64] & ~m);
    }
    void flip(std::size_t i) noexcept { w_[i / 64] ^= std::uint64_t{1} << (i % 64); }
    BitVec& operator^=(const BitVec& o) noexcept {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    bool any() const noexcept {
        for (auto x : w_)
            if (x != 0) return true;
        return false;
    }

private:
    std::size_t n_;
    std::vector<std::uint64_t> w_;
};

// Solve A x = rhs where column j of A is cols[j]; free variables are set to 0.
inline std::optional<BitVec> solve(const std::vector<BitVec>& cols, const BitVec& rhs) {
    const std::size_t m = rhs.size(), n = cols.size();
    // Row-major augmented system.
    std::vector<BitVec> rows(m, BitVec(n + 1));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i)
            if (cols[j].get(i)) rows[i].set(j, true);
    for (std::size_t i = 0; i < m; ++i)
        if (rhs.get(i)) rows[i].set(n, true);

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && !rows[p].get(c)) ++p;
        if (p == m) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < m; ++i)
            if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (rows[i].get(n)) return std::nullopt;
    BitVec x(n);
    for (std::size_t i = 0; i < r; ++i)
        if (rows[i].get(n)) x.set(pivot_col[i], true);
    return x;
}

}  // namespace witt2::detail
