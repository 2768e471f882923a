#pragma once

#include <witt2/fields.hpp>

#include <random>

namespace witt2 {

// Random element for property checks. Over K(t) numerator and denominator
// have degree <= max_degree; finite fields are sampled uniformly.
FieldValue random_element(FieldRef f, std::mt19937_64& rng, unsigned max_degree = 3);

// Random nonzero polynomial of degree <= max_degree over a finite field.
KPoly random_kpoly(FieldRef k, std::mt19937_64& rng, unsigned max_degree);

}  // namespace witt2
