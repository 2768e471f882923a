#pragma once

// Membership in the Artin-Schreier group P(F) = { c^2 + c : c in F }.
//
// Supported fields: finite fields, K(t) with K finite, and quadratic
// Artin-Schreier layers L = B[x]/(x^2 + x + c) over a supported B for inputs
// that already lie in B.

#include <witt2/fields.hpp>

#include <optional>

namespace witt2 {

struct PMembership {
    bool member = false;
    std::optional<FieldValue> certificate;  // c with c^2 + c = input
    FieldValue reduced_form;                // representative of the input's class mod P(F)
    FieldValue shift;                       // reduced_form = input + shift^2 + shift
};

// A place of K(t): a monic irreducible polynomial in t over K, or infinity.
struct Place {
    std::optional<KPoly> pi;  // empty = infinity

    static Place infinity() { return {}; }
    static Place finite(KPoly p) { return {std::move(p)}; }
    bool at_infinity() const { return !pi.has_value(); }
};

struct PoleReduction {
    FieldValue reduced;  // b + h^2 + h
    FieldValue h;
};

bool pmember_supported(FieldRef f);

PMembership pmember(const FieldValue& b);

// One Artin-Schreier reduction step at `place`; b must have a pole of even
// order there. For a finite place the polynomial may be any squarefree divisor
// of the denominator whose factors all occur with the same even multiplicity.
PoleReduction reduce_pole(const FieldValue& b, const Place& place);

bool pclass_equal(const FieldValue& x, const FieldValue& y);

// Finite fields: the element with the smallest packed coefficient vector among
// those of absolute trace 1.
FieldValue canonical_nontrivial(FieldRef f);

// Pole orders of an element of K(t): finite places of the squarefree
// decomposition of the denominator, and the order at infinity (0 if none).
struct PoleData {
    std::vector<std::pair<KPoly, unsigned>> finite;  // squarefree part, multiplicity
    unsigned at_infinity = 0;
};
PoleData poles(const FieldValue& b);

// Squarefree decomposition over a finite field: f = prod p_i^i, p_i squarefree
// and pairwise coprime. Returned as (p_i, i) with nonconstant p_i.
std::vector<std::pair<KPoly, unsigned>> squarefree_decomposition(FieldRef k, const KPoly& f);

}  // namespace witt2
