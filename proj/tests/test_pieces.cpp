#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "scq/pieces.hpp"
#include "scq/treegeom.hpp"

using namespace scq;

namespace {

Word W(const std::string& s, int rank = 2) { return parse_word(rank, s); }

// O(n^4) brute force: longest subword occurring in two distinct closure members
int max_piece_brute(const SymmetrizedPresentation& p) {
  int best = 0;
  for (std::size_t i = 0; i < p.closure.size(); ++i)
    for (std::size_t j = 0; j < p.closure.size(); ++j) {
      if (i == j) continue;
      const auto& a = p.closure[i].letters;
      const auto& b = p.closure[j].letters;
      for (std::size_t s = 0; s < a.size(); ++s)
        for (std::size_t len = best + 1; s + len <= a.size(); ++len) {
          std::vector<int> sub(a.begin() + s, a.begin() + s + len);
          bool found = false;
          for (std::size_t t = 0; t + len <= b.size() && !found; ++t)
            found = std::equal(sub.begin(), sub.end(), b.begin() + t);
          if (found)
            best = static_cast<int>(len);
          else
            break;
        }
    }
  return best;
}

}  // namespace

TEST_CASE("symmetrize") {
  auto p = symmetrize(2, {W("ab")});
  std::set<std::string> cl;
  for (const auto& w : p.closure) cl.insert(to_string(w));
  CHECK(cl == std::set<std::string>{"ab", "ba", "BA", "AB"});
  CHECK(p.minlen == 2);

  auto p2 = symmetrize(2, {W("aa")});
  CHECK(p2.closure.size() == 2);
  CHECK(p2.minlen == 2);

  auto p3 = symmetrize(2, {W("aaaa")});
  CHECK(p3.closure.size() == 2);
  CHECK(p3.minlen == 4);

  CHECK_THROWS(symmetrize(2, {W("aA")}));
}

TEST_CASE("max piece") {
  auto p = symmetrize(2, {pow(W("a"), 3), pow(W("b"), 3), pow(W("ba"), 3)});
  CHECK(max_piece(p) == 5);
  CHECK(max_piece(symmetrize(2, {W("ab")})) == 1);
  CHECK(max_piece(symmetrize(2, {W("aaaa")})) == 0);
}

TEST_CASE("max piece equals brute force on random presentations") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> nrel(1, 3), len(2, 8), letter(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Word> rels;
    int k = nrel(rng);
    for (int i = 0; i < k; ++i) {
      Word w;
      do {
        std::vector<int> raw;
        int l = len(rng);
        for (int j = 0; j < l; ++j) {
          int x = letter(rng);
          raw.push_back(x < 2 ? x + 1 : -(x - 1));
        }
        w = cyclic_reduce(reduce(2, raw)).second;
      } while (w.empty());
      rels.push_back(w);
    }
    auto p = symmetrize(2, rels);
    CHECK(max_piece(p) == max_piece_brute(p));
  }
}

TEST_CASE("metric condition") {
  auto surf = symmetrize(2, {W("abABcdCD", 4)});
  CHECK(check_prime_condition(surf, Rat(1, 6)));
  CHECK_FALSE(check_prime_condition(symmetrize(2, {W("abAB")}), Rat(1, 6)));
  CHECK(check_prime_condition(symmetrize(2, {pow(W("a"), 3)}), Rat(1, 6)));
}

TEST_CASE("cylinder delta basics") {
  CHECK(cylinder_delta({conj_class(W("a")), conj_class(W("b"))}) == 0);
  CHECK(cylinder_delta({conj_class(W("a")), conj_class(W("ab"))}) == 1);
  CHECK(cylinder_delta({conj_class(W("ab")), conj_class(W("aB"))}) == 1);
  CHECK_THROWS(cylinder_delta({ConjClass{W("abab")}}));
}

namespace {

// Geometric oracle.  Up to translating the pair, the first line is exactly
// axis(r_i) and, sliding along it by powers of r_i, the overlap segment
// touches a bounded window around 1; the second line then passes through a
// window vertex and is a translate of a rotated period line.  Enumerate all
// of those and take the max pairwise axis_overlap.
int delta_oracle(const std::vector<ConjClass>& roots) {
  int best = 0;
  for (const auto& ri : roots) {
    Word r1 = ri.representative;
    PeriodicLine l1 = axis(r1);
    for (const auto& rj : roots) {
      Word r2 = rj.representative;
      int window = 2 * r1.length() + r2.length() + 2;
      auto verts = line_vertices(l1, window);
      std::vector<Word> periods;
      for (int k = 0; k < r2.length(); ++k) {
        periods.push_back(rotate(r2, k));
        periods.push_back(inverse(rotate(r2, k)));
      }
      for (const auto& v : verts)
        for (const auto& w : periods) {
          auto ov = axis_overlap(l1, PeriodicLine{v, w});
          if (ov) best = std::max(best, *ov);
        }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("cylinder delta equals geometric oracle") {
  auto classes = enumerate_primitive_classes(2, 4);
  // all singletons and pairs
  for (std::size_t i = 0; i < classes.size(); ++i) {
    CHECK(cylinder_delta({classes[i]}) == delta_oracle({classes[i]}));
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      std::vector<ConjClass> rs = {classes[i], classes[j]};
      CHECK(cylinder_delta(rs) == delta_oracle(rs));
    }
  }
}

TEST_CASE("cylinder delta monotone in roots") {
  auto classes = enumerate_primitive_classes(2, 3);
  std::vector<ConjClass> acc;
  int prev = 0;
  for (const auto& c : classes) {
    acc.push_back(c);
    int d = cylinder_delta(acc);
    CHECK(d >= prev);
    prev = d;
  }
}
