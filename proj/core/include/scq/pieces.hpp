#pragma once

#include <map>
#include <vector>

#include "scq/rat.hpp"
#include "scq/word.hpp"

namespace scq {

/// Relator set closed under cyclic permutations and inverses.
struct SymmetrizedPresentation {
  int rank = 0;
  std::vector<Word> relators;  // as supplied, cyclically reduced
  std::vector<Word> closure;   // deduplicated, sorted
  int minlen = 0;              // length of the shortest closure member
};

/// Throws if some relator is trivial after cyclic reduction.
SymmetrizedPresentation symmetrize(int rank, const std::vector<Word>& relators);

/// Suffix automaton over signed-letter words, used for longest-common-factor
/// queries.
class PieceIndex {
 public:
  explicit PieceIndex(const Word& w);

  /// Length of the longest contiguous common subword with w.
  int longest_common_factor(const Word& w) const;

 private:
  struct State {
    int len = 0;
    int link = -1;
    std::map<int, int> next;
  };
  std::vector<State> states_;
  int last_ = 0;

  void extend(int c);
};

/// Longest word occurring as a contiguous subword of two distinct closure
/// members; 0 when the closure has at most one member.
int max_piece(const SymmetrizedPresentation& p);

/// Classical C'(lambda) check: every common prefix of two distinct closure
/// members has length at most lambda * minlen, compared exactly.
bool check_prime_condition(const SymmetrizedPresentation& p, Rat lambda);

/// Maximal overlap (edge length) between two distinct translates of the
/// roots' axes in the Cayley tree, computed as longest common factors of the
/// bi-infinite periodic words root^inf in both orientations, including
/// self-comparisons at offsets not congruent to 0 mod the period.  Searches
/// are truncated at |r_i| + |r_j| (Fine-Wilf).
int cylinder_delta(const std::vector<ConjClass>& roots);

}  // namespace scq
