#pragma once

// A quadratic space (V, q) over a field F with V = F^m and
//
//   q(v) = sum_{i <= j} Q_ij v_i v_j,    Q upper triangular.
//
// The polar form B(u, v) = q(u + v) + q(u) + q(v) has Gram matrix Q + Q^T.
// The coefficient matrix, not the Gram matrix, is the primary data: in
// characteristic two the Gram matrix forgets the diagonal values q(e_i).

#include <witt2/linalg.hpp>

#include <string>
#include <vector>

namespace witt2 {

struct QuadSpace {
    FieldRef field = nullptr;
    Matrix Q;                         // m x m, zero below the diagonal
    std::vector<std::string> labels;  // optional names of the basis vectors

    QuadSpace() = default;
    QuadSpace(FieldRef f, Matrix q, std::vector<std::string> names = {});

    std::size_t dim() const noexcept { return Q.size(); }

    FieldValue evaluate(const Vec& v) const;
    FieldValue bilinear(const Vec& u, const Vec& v) const;
    Matrix gram() const;
    bool nonsingular() const;

    // [a, b]: a x^2 + x y + b y^2.
    static QuadSpace binary(const FieldValue& a, const FieldValue& b);
    // r copies of the hyperbolic plane [0, 0].
    static QuadSpace hyperbolic(FieldRef f, std::size_t r);

    // c * q.
    QuadSpace scaled(const FieldValue& c) const;
    // The form v -> q(M v) (columns of M are the new basis vectors).
    QuadSpace pullback(const Matrix& columns) const;
    // Coefficients read in a larger field of the same tower.
    QuadSpace read_into(FieldRef target) const;

    std::string str() const;  // rows "Q11,Q12;0,Q22" in the element grammar
};

QuadSpace orthogonal_sum(const QuadSpace& a, const QuadSpace& b);

// Parse "Q11,Q12,...;Q21,...;..." (upper-triangular coefficient rows).
QuadSpace parse_form(FieldRef f, const std::string& text);

}  // namespace witt2
