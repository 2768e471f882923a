#pragma once

// Witt decomposition, Arf invariant and Witt equivalence of nonsingular
// quadratic spaces over fields of characteristic two.

#include <witt2/extensions.hpp>
#include <witt2/quadspace.hpp>

#include <optional>
#include <string>
#include <vector>

namespace witt2 {

// [a, b] = a x^2 + x y + b y^2.
struct BinaryForm {
    FieldValue a, b;

    QuadSpace space() const { return QuadSpace::binary(a, b); }
    std::string str() const;
};

// Vectors with B(e, f) = 1.
struct SymplecticPair {
    Vec e, f;
};

struct WittReport {
    std::size_t dim = 0;
    std::size_t witt_index = 0;
    bool hyperbolic = false;
    bool certified = true;

    // q(e) = q(f) = 0, B(e, f) = 1, pairwise orthogonal.
    std::vector<SymplecticPair> hyperbolic_pairs;
    // Symplectic basis of the residue, orthogonal to the hyperbolic pairs.
    std::vector<SymplecticPair> residue_basis;
    // Residue on residue_basis (absent when hyperbolic).
    std::optional<QuadSpace> residue_space;
    // Binary residue; [1, c] with c reduced mod P(F) when represents_one.
    std::optional<BinaryForm> residue;
    bool represents_one = false;

    std::optional<FieldValue> arf;  // class representative
    std::string anisotropy;         // proof of anisotropy for residues of dimension >= 4
    std::string note;               // reason when certified = false
};

// Bounded search used over K(t) for represented values.
struct SearchLimits {
    unsigned max_degree = 4;
    std::size_t max_evaluations = std::size_t{1} << 14;
};

FieldValue evaluate(const QuadSpace& q, const Vec& v);
FieldValue bilinear(const QuadSpace& q, const Vec& u, const Vec& v);

// Raises Singular for odd dimension or a degenerate polar form.
std::vector<SymplecticPair> symplectic_basis(const QuadSpace& q);

WittReport witt_decompose(const QuadSpace& q, const SearchLimits& limits = {});

// Sum of q(e_i) q(f_i) over a symplectic basis, as its class representative.
FieldValue arf(const QuadSpace& q);

// Raises Uncertified when a decomposition cannot be completed.
bool witt_equivalent(const QuadSpace& q1, const QuadSpace& q2, const SearchLimits& limits = {});

// The same coefficients read in the field E (E must be a field over q's field).
QuadSpace extend_scalars(const QuadSpace& q, const ExtensionAlgebra& E);

// Anisotropy of the orthogonal sum of binary planes over K(t) via a place
// where it splits as q1 + pi q2 with anisotropic residue forms. Returns a
// description of the place, or nothing.
std::optional<std::string> springer_certificate(const std::vector<BinaryForm>& planes);

struct TraceNormalForm {
    WittReport report;
    // e'_i = T_2(x_i)^-1 x_i^2, f'_i = T_2(x_i) y_i^2 as elements of E.
    std::vector<std::pair<AlgebraElement, AlgebraElement>> basis;
    Vec a;             // a_i = T_2(f'_i)
    FieldValue a_sum;  // sum of the a_i
};

TraceNormalForm trace_normal_form(const ExtensionAlgebra& E);

std::string vec_str(const Vec& v);

}  // namespace witt2
