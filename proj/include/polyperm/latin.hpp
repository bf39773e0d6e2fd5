#pragma once

#include "polyperm/hypermatrix.hpp"
#include "polyperm/support_set.hpp"

namespace polyperm {

/// True iff every entry is an integer symbol in 0..n-1 and every line carries all n symbols.
bool is_latin_hypercube(const HyperMatrix &q);

/// The (d+1)-dimensional permutation with a member at (alpha, q_alpha) for every alpha.
/// Throws MalformedInput unless q is a latin hypercube.
SupportSet latin_to_permutation(const HyperMatrix &q);

/// Inverse of latin_to_permutation: the symbol at alpha is the last coordinate of the
/// member on the line through (alpha, *). Throws MalformedInput unless p is a permutation
/// support of dimension at least 2.
HyperMatrix permutation_to_latin(const SupportSet &p);

/// The latin hypercube q_alpha = alpha_1 + ... + alpha_d mod n.
HyperMatrix cyclic_latin_hypercube(const Shape &shape);

} // namespace polyperm
