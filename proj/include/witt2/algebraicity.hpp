#pragma once

// 2-algebraicity: is a quadratic form Witt equivalent to some second trace
// form? Witness extensions, and end-to-end checks of the trace form theory.

#include <witt2/quadforms.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace witt2 {

enum class Answer { Yes, No, Unknown };
const char* to_string(Answer a) noexcept;

struct AlgebraicityAnswer {
    Answer answer = Answer::Unknown;
    std::optional<UniPoly> witness;  // modulus of E with T_{E/F} Witt equivalent to the input
    std::string reason;              // hyperbolic-witness | binary-residue | residue-too-big | search-exhausted
    WittReport report;
};

AlgebraicityAnswer is_2algebraic(const QuadSpace& q, const SearchLimits& limits = {});

struct HyperbolicWitness {
    ExtensionAlgebra E;
    // Symplectic pairs of isotropic elements spanning the trace form space.
    std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
    std::size_t witt_index = 0;
};

// E = F[x]/(x^4+x^3+1) for F = GF(2) or GF(2)(t), with the basis
// {alpha, 1+alpha^3}, {alpha^2, alpha+alpha^2+alpha^3} checked symplectic and isotropic.
HyperbolicWitness witness_hyperbolic_quartic(FieldRef F);

// E = F[x]/(x^n + a), n odd, x^n + a irreducible; Ker T_1 splits as the planes
// <alpha^k, alpha^(n-k)>.
HyperbolicWitness witness_hyperbolic_radical(FieldRef F, const FieldValue& a, unsigned n);

// Revoy and Berge-Martinet forms are Witt equivalent (plus the explicit split
// of the latter in odd degree). `detail` receives a failure description.
bool verify_revoy_bm(const ExtensionAlgebra& E, std::string* detail = nullptr);

// The trace normal form is (n-1)H + [1, a] and Witt equivalent to the trace form.
bool verify_normal_form(const ExtensionAlgebra& E, std::string* detail = nullptr);

struct CorpusEntry {
    UniPoly modulus;
    TraceNormalForm tnf;
};

constexpr unsigned kMaxCorpusDegree = 10;

// All monic irreducible p over a finite F with 2 <= deg p <= bound, by degree
// then coefficient order. Work is spread over `threads` workers (0: hardware
// concurrency); `sink`, if given, receives entries in order as they complete.
std::vector<CorpusEntry> enumerate_corpus(FieldRef F, unsigned degree_bound, unsigned threads = 0,
                                          const std::function<void(const CorpusEntry&)>& sink = {});

}  // namespace witt2
