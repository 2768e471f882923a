#include <witt2/linalg.hpp>

namespace witt2 {

Vec zero_vec(FieldRef f, std::size_t n) { return Vec(n, FieldValue::zero(f)); }

Vec unit_vec(FieldRef f, std::size_t n, std::size_t i) {
    Vec v = zero_vec(f, n);
    v.at(i) = FieldValue::one(f);
    return v;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) raise(ErrorKind::Precondition, "vector length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec operator*(const FieldValue& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

Matrix zero_matrix(FieldRef f, std::size_t rows, std::size_t cols) { return Matrix(rows, zero_vec(f, cols)); }

Matrix identity(FieldRef f, std::size_t n) {
    Matrix m = zero_matrix(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = FieldValue::one(f);
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.empty() || b.empty()) return {};
    if (a[0].size() != b.size()) raise(ErrorKind::Precondition, "matrix shape mismatch");
    const FieldRef f = a[0][0].field();
    Matrix r = zero_matrix(f, a.size(), b[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

Vec operator*(const Matrix& a, const Vec& v) {
    Vec r;
    for (const auto& row : a) {
        if (row.size() != v.size()) raise(ErrorKind::Precondition, "matrix shape mismatch");
        FieldValue s = FieldValue::zero(v.empty() ? row[0].field() : v[0].field());
        for (std::size_t j = 0; j < v.size(); ++j) s += row[j] * v[j];
        r.push_back(s);
    }
    return r;
}

Matrix transpose(const Matrix& m) {
    if (m.empty()) return {};
    Matrix r(m[0].size(), Vec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) r[j][i] = m[i][j];
    return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const FieldValue inv = m[r][c].inverse();
        for (auto& x : m[r]) x = x * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const FieldValue k = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] += k * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(Matrix m) { return rref(m).size(); }

FieldValue determinant(Matrix m) {
    const std::size_t n = m.size();
    if (n == 0) raise(ErrorKind::Precondition, "determinant of an empty matrix");
    FieldValue det = FieldValue::one(m[0][0].field());
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return FieldValue::zero(det.field());
        std::swap(m[p], m[c]);  // sign is irrelevant in characteristic two
        det = det * m[c][c];
        const FieldValue inv = m[c][c].inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            const FieldValue k = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] += k * m[c][j];
        }
    }
    return det;
}

std::vector<Vec> kernel(const Matrix& m, FieldRef f) {
    if (m.empty()) return {};
    Matrix r = m;
    const std::size_t cols = m[0].size();
    const auto pivots = rref(r);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> out;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v = unit_vec(f, cols, free);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = r[i][free];
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vec> solve(const Matrix& m, const Vec& rhs, FieldRef f) {
    if (m.size() != rhs.size()) raise(ErrorKind::Precondition, "right-hand side length mismatch");
    if (m.empty()) return Vec{};
    const std::size_t cols = m[0].size();
    Matrix a = m;
    for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(rhs[i]);
    const auto pivots = rref(a);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    Vec x = zero_vec(f, cols);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return Matrix{};
    const FieldRef f = m[0][0].field();
    Matrix a = m;
    const Matrix id = identity(f, n);
    for (std::size_t i = 0; i < n; ++i) a[i].insert(a[i].end(), id[i].begin(), id[i].end());
    const auto pivots = rref(a);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix r(n);
    for (std::size_t i = 0; i < n; ++i) r[i].assign(a[i].begin() + static_cast<std::ptrdiff_t>(n), a[i].end());
    return r;
}

Vec read_into(const Vec& v, FieldRef target) {
    Vec r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(x.embed_into(target));
    return r;
}

Matrix read_into(const Matrix& m, FieldRef target) {
    Matrix r;
    for (const auto& row : m) r.push_back(read_into(row, target));
    return r;
}

}  // namespace witt2
