#pragma once

// Finite separable extensions E = F[x]/(p) given by a power basis
// 1, alpha, ..., alpha^(n-1), and the coefficients T_1, ..., T_n of the
// characteristic polynomial of multiplication by an element.

#include <witt2/quadspace.hpp>

#include <memory>
#include <string>
#include <vector>

namespace witt2 {

struct AlgebraElement {
    Vec c;  // coordinates over the power basis

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

// x^n + T[0] x^(n-1) + ... + T[n-1].
struct CharPolyCoeffs {
    Vec T;

    const FieldValue& operator()(std::size_t i) const { return T.at(i - 1); }  // T_i, 1-based
    UniPoly poly(const std::string& var = "x") const;
};

class ExtensionAlgebra {
public:
    // Raises Precondition (not monic, degree < 2), Inseparable, or Reducible.
    // An irreducibility test that is inconclusive leaves certified() false.
    // With require_field = false a reducible separable modulus is accepted and
    // the result is an etale algebra (a product of fields); trace forms are
    // still defined, field operations (as_field) are not.
    explicit ExtensionAlgebra(const UniPoly& modulus, bool require_field = true);

    FieldRef base() const noexcept { return base_; }
    const UniPoly& modulus() const noexcept { return p_; }
    std::size_t degree() const noexcept { return n_; }
    bool certified() const noexcept { return irr_ == Irreducibility::Irreducible; }
    bool is_field() const noexcept { return irr_ != Irreducibility::Reducible; }
    Irreducibility irreducibility() const noexcept { return irr_; }
    const std::string& var() const noexcept { return p_.var(); }

    AlgebraElement zero() const;
    AlgebraElement one() const;
    AlgebraElement alpha_power(std::size_t k) const;  // reduced alpha^k, any k
    AlgebraElement from_base(const FieldValue& x) const;
    AlgebraElement element(Vec coords) const;
    // Polynomial text in the modulus variable, reduced mod p.
    AlgebraElement parse(const std::string& text) const;

    AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement scale(const FieldValue& c, const AlgebraElement& a) const;

    // T_1(alpha^i), i < n.
    const Vec& trace_vector() const noexcept { return tau_; }

    std::string str(const AlgebraElement& a) const;

private:
    FieldRef base_;
    UniPoly p_;
    std::size_t n_;
    Irreducibility irr_;
    std::vector<Vec> powers_;  // alpha^k reduced, k = 0 .. 2n-2
    Vec tau_;
};

Matrix mult_matrix(const ExtensionAlgebra& E, const AlgebraElement& a);
// Berkowitz, division free.
CharPolyCoeffs char_poly(const ExtensionAlgebra& E, const AlgebraElement& a);
CharPolyCoeffs char_poly(const Matrix& m);
FieldValue trace(const ExtensionAlgebra& E, const AlgebraElement& a);
FieldValue norm(const ExtensionAlgebra& E, const AlgebraElement& a);
// T_2 as the sum of the 2x2 principal minors of the multiplication matrix.
FieldValue second_trace(const ExtensionAlgebra& E, const AlgebraElement& a);
// T_1(xy) + T_1(x)T_1(y).
FieldValue trace_polar(const ExtensionAlgebra& E, const AlgebraElement& x, const AlgebraElement& y);

std::vector<AlgebraElement> kernel_of_trace(const ExtensionAlgebra& E);

// (E, T_2) for even degree, (Ker T_1, T_2) for odd degree; labels hold the
// basis elements of E.
QuadSpace second_trace_form(const ExtensionAlgebra& E);
// The basis of E (even degree) or Ker T_1 (odd degree) used by second_trace_form.
std::vector<AlgebraElement> trace_form_basis(const ExtensionAlgebra& E);
// (E, T_2) for even degree; for odd degree the form T_2(e) + T_1(e) f on E x F
// in the basis (alpha^i, 0), (0, 1).
QuadSpace bm_form(const ExtensionAlgebra& E);

AlgebraElement frobenius(const ExtensionAlgebra& E, const AlgebraElement& a);

// E as a field descriptor (a root of the modulus adjoined to the base), and the
// image of an element there.
FieldRef as_field(const ExtensionAlgebra& E);
FieldValue to_field(const ExtensionAlgebra& E, const AlgebraElement& a);

}  // namespace witt2
