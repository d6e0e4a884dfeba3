#pragma once

#include <string>

#include "dold/quotient.hpp"

namespace dold {

/// JSON presentation format, the on-disk schema for algebra inputs:
///   {
///     "variables": [["a", 1], ["b", 2]],
///     "relations": [[[3, 0]], [[0, 2]]],
///     "degree_cap": 9
///   }
/// Variables are (name, degree) pairs in declaration order (the order is part
/// of the presentation: it fixes the monomial-order tie-break). Each relation
/// is a list of monomials; each monomial is the exponent vector over the
/// variables. "degree_cap" is optional.
QuotientAlgebra presentation_from_json(const std::string& text,
                                       int default_degree_cap = 16);
QuotientAlgebra presentation_from_file(const std::string& path,
                                       int default_degree_cap = 16);
std::string presentation_to_json(const QuotientAlgebra& algebra);

}  // namespace dold
