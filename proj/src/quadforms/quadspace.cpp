#include <witt2/quadspace.hpp>

#include <sstream>

namespace witt2 {

QuadSpace::QuadSpace(FieldRef f, Matrix q, std::vector<std::string> names)
    : field(f), Q(std::move(q)), labels(std::move(names)) {
    const std::size_t m = Q.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (Q[i].size() != m) raise(ErrorKind::Precondition, "coefficient matrix must be square");
        for (std::size_t j = 0; j < m; ++j) {
            Q[i][j] = Q[i][j].embed_into(f);
            if (j < i && !Q[i][j].is_zero())
                raise(ErrorKind::Precondition, "coefficient matrix must be upper triangular");
        }
    }
    if (!labels.empty() && labels.size() != m) raise(ErrorKind::Precondition, "label count must match the dimension");
}

FieldValue QuadSpace::evaluate(const Vec& v) const {
    if (v.size() != dim()) raise(ErrorKind::Precondition, "vector has the wrong dimension");
    FieldValue s = FieldValue::zero(field);
    for (std::size_t i = 0; i < dim(); ++i) {
        if (v[i].is_zero()) continue;
        FieldValue row = FieldValue::zero(field);
        for (std::size_t j = i; j < dim(); ++j)
            if (!Q[i][j].is_zero()) row += Q[i][j] * v[j];
        s += v[i] * row;
    }
    return s;
}

FieldValue QuadSpace::bilinear(const Vec& u, const Vec& v) const {
    if (u.size() != dim() || v.size() != dim()) raise(ErrorKind::Precondition, "vector has the wrong dimension");
    FieldValue s = FieldValue::zero(field);
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i + 1; j < dim(); ++j) {
            if (Q[i][j].is_zero()) continue;
            s += Q[i][j] * (u[i] * v[j] + u[j] * v[i]);
        }
    return s;
}

Matrix QuadSpace::gram() const {
    Matrix b = zero_matrix(field, dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i + 1; j < dim(); ++j) b[i][j] = b[j][i] = Q[i][j];
    return b;
}

bool QuadSpace::nonsingular() const {
    if (dim() == 0) return true;
    return !determinant(gram()).is_zero();
}

QuadSpace QuadSpace::binary(const FieldValue& a, const FieldValue& b) {
    FieldRef f = (a + b).field();
    return QuadSpace(f, {{a, FieldValue::one(f)}, {FieldValue::zero(f), b}});
}

QuadSpace QuadSpace::hyperbolic(FieldRef f, std::size_t r) {
    Matrix q = zero_matrix(f, 2 * r, 2 * r);
    for (std::size_t i = 0; i < r; ++i) q[2 * i][2 * i + 1] = FieldValue::one(f);
    return QuadSpace(f, std::move(q));
}

QuadSpace QuadSpace::scaled(const FieldValue& c) const {
    QuadSpace r = *this;
    for (auto& row : r.Q)
        for (auto& x : row) x = c * x;
    return r;
}

QuadSpace QuadSpace::pullback(const Matrix& columns) const {
    if (columns.size() != dim()) raise(ErrorKind::Precondition, "basis change has the wrong shape");
    const std::size_t k = columns.empty() ? 0 : columns[0].size();
    const Matrix cols = transpose(columns);
    Matrix q = zero_matrix(field, k, k);
    for (std::size_t i = 0; i < k; ++i) {
        q[i][i] = evaluate(cols[i]);
        for (std::size_t j = i + 1; j < k; ++j) q[i][j] = bilinear(cols[i], cols[j]);
    }
    return QuadSpace(field, std::move(q));
}

QuadSpace QuadSpace::read_into(FieldRef target) const {
    return QuadSpace(target, witt2::read_into(Q, target), labels);
}

std::string QuadSpace::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (i) os << ';';
        for (std::size_t j = 0; j < dim(); ++j) os << (j ? "," : "") << Q[i][j].str();
    }
    return os.str();
}

QuadSpace orthogonal_sum(const QuadSpace& a, const QuadSpace& b) {
    if (a.field != b.field) raise(ErrorKind::DescriptorMismatch, "orthogonal sum of forms over different fields");
    const std::size_t m = a.dim(), n = b.dim();
    Matrix q = zero_matrix(a.field, m + n, m + n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) q[i][j] = a.Q[i][j];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q[m + i][m + j] = b.Q[i][j];
    std::vector<std::string> labels;
    if (!a.labels.empty() && !b.labels.empty()) {
        labels = a.labels;
        labels.insert(labels.end(), b.labels.begin(), b.labels.end());
    }
    return QuadSpace(a.field, std::move(q), std::move(labels));
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

QuadSpace parse_form(FieldRef f, const std::string& text) {
    const auto rows = split(text, ';');
    const std::size_t m = rows.size();
    Matrix q;
    for (const auto& row : rows) {
        const auto cells = split(row, ',');
        if (cells.size() != m)
            raise(ErrorKind::Parse, "form '" + text + "': every row needs " + std::to_string(m) + " entries");
        Vec r;
        for (const auto& c : cells) r.push_back(parse_element(f, c));
        q.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!q[i][j].is_zero()) raise(ErrorKind::Parse, "form '" + text + "' is not upper triangular");
    return QuadSpace(f, std::move(q));
}

}  // namespace witt2
