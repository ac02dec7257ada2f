#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace scq {

/// Freely reduced word in the free group F_rank.
///
/// Letters are nonzero integers: +i is the i-th generator, -i its inverse
/// (1-based, i <= rank).  The letter sequence is always freely reduced.
struct Word {
  int rank = 0;
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Total order key for a letter: a < A < b < B < ...
inline int letter_key(int l) { return 2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0); }

/// Lexicographic comparison under (length, letter_key) order.
bool word_less(const Word& a, const Word& b);

/// Freely reduces a raw letter sequence.  Throws std::invalid_argument on a
/// zero letter or an index above rank.
Word reduce(int rank, std::span<const int> raw);

Word inverse(const Word& w);
Word mul(const Word& a, const Word& b);
Word pow(const Word& w, int k);
Word conjugate(const Word& g, const Word& w);  // g w g^-1

/// w = conjugator * core * conjugator^-1 with core cyclically reduced and
/// conjugator the maximal cancelled prefix.
std::pair<Word, Word> cyclic_reduce(const Word& w);

/// Primitive root of the cyclic core: core == root^exponent with root not a
/// proper power and exponent maximal.  Throws on the trivial word.
struct PrimitiveRoot {
  Word root;
  int exponent = 0;
};
PrimitiveRoot primitive_root(const Word& w);

/// Conjugacy class of a loxodromic element, held by its canonical
/// representative: the least word, under (length, lex) order, among all
/// cyclic shifts of the cyclic core and of its inverse.
struct ConjClass {
  Word representative;

  friend bool operator==(const ConjClass&, const ConjClass&) = default;
};

ConjClass conj_class(const Word& w);

/// Rotates a cyclically reduced word left by k letters.
Word rotate(const Word& w, int k);

/// One representative per orbit of primitive cyclically reduced words of
/// length <= lmax under cyclic shift and inversion, sorted by (length, lex).
std::vector<ConjClass> enumerate_primitive_classes(int rank, int lmax);

/// Text syntax: 'a'..'z' positive generators, 'A'..'Z' inverses, "1" = empty.
Word parse_word(int rank, const std::string& text);
std::string to_string(const Word& w);

}  // namespace scq
