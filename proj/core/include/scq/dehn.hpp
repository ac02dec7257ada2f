#pragma once

#include <cstddef>

#include "scq/pieces.hpp"

namespace scq {

/// Dehn reduction for a presentation verified C'(1/6): repeatedly replaces a
/// subword u that is a prefix of a closure member r with |u| > |r|/2 by the
/// shorter complement, freely reducing after each step.  Tie-breaking:
/// leftmost match, then longest u, then lexicographically least replacement.
/// Throws if the presentation does not satisfy C'(1/6).
Word dehn_reduce(const Word& w, const SymmetrizedPresentation& p);

/// Word problem for C'(1/6) presentations (Greendlinger).
bool is_trivial(const Word& w, const SymmetrizedPresentation& p);

/// Number of distinct group elements represented by words of length <=
/// radius, by pairwise is_trivial classification.  Throws when the word
/// count exceeds word_cap.
std::size_t ball_elements(const SymmetrizedPresentation& p, int radius,
                          std::size_t word_cap = 20000);

}  // namespace scq
