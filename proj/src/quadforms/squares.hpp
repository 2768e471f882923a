#pragma once

#include <witt2/fields.hpp>

#include <optional>
#include <string>

namespace witt2::detail {

// Square root if x is a square in its field (always for finite fields).
std::optional<FieldValue> field_sqrt(const FieldValue& x);

// Over K(t): the monic squarefree part of num * den, which determines the class
// of a nonzero x modulo squares. Empty for other fields.
std::optional<std::string> square_class_key(const FieldValue& x);

}  // namespace witt2::detail
