#pragma once

#include <string>

#include "grh/algebra.hpp"

namespace grh {

// Parses the expression grammar shared by the CLI and the preset file format:
// generator identifiers, integer literals, `q`, `+ - * /`, `^` (nonnegative on
// generators, any integer on scalars), parentheses. Juxtaposition is a syntax
// error; products need an explicit `*`. Division requires a scalar divisor.
Element parse_element(const std::string& text, const AlphabetPtr& alphabet);

Scalar parse_scalar(const std::string& text);

}  // namespace grh
