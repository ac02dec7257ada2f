#include <doctest.h>

#include <random>

#include "scq/dehn.hpp"

using namespace scq;

namespace {

Word W(const std::string& s, int rank = 4) { return parse_word(rank, s); }

SymmetrizedPresentation surface() { return symmetrize(4, {W("abABcdCD")}); }

}  // namespace

TEST_CASE("dehn reduction") {
  auto p = surface();
  CHECK(dehn_reduce(W("abABcdCD"), p).empty());
  CHECK(dehn_reduce(W("abAB"), p) == W("abAB"));
  CHECK(dehn_reduce(W("aA"), p).empty());
  CHECK_THROWS(dehn_reduce(W("ab", 2), symmetrize(2, {W("abAB", 2)})));
}

TEST_CASE("word problem") {
  auto p = surface();
  CHECK(is_trivial(W("1"), p));
  CHECK_FALSE(is_trivial(W("a"), p));
  CHECK_FALSE(is_trivial(W("b"), p));
  CHECK_FALSE(is_trivial(W("c"), p));
  CHECK_FALSE(is_trivial(W("d"), p));

  std::mt19937 rng(59);
  std::uniform_int_distribution<std::size_t> pick(0, p.closure.size() - 1);
  std::uniform_int_distribution<int> clen(0, 3), letter(0, 7);
  for (int trial = 0; trial < 100; ++trial) {
    Word w;
    w.rank = 4;
    int parts = 1 + trial % 5;
    for (int i = 0; i < parts; ++i) {
      std::vector<int> raw;
      int l = clen(rng);
      for (int j = 0; j < l; ++j) {
        int x = letter(rng);
        raw.push_back(x < 4 ? x + 1 : -(x - 3));
      }
      Word c = reduce(4, raw);
      w = mul(w, conjugate(c, p.closure[pick(rng)]));
    }
    CHECK(is_trivial(w, p));
  }
}

TEST_CASE("triviality is conjugation invariant") {
  auto p = surface();
  std::vector<Word> words = {W("abABcdCD"), W("a"), W("ab"), W("cdCD")};
  std::vector<Word> conjs = {W("a"), W("dc"), W("bAd")};
  for (const auto& w : words)
    for (const auto& g : conjs) CHECK(is_trivial(w, p) == is_trivial(conjugate(g, w), p));
}

TEST_CASE("ball elements") {
  auto free2 = symmetrize(2, {});
  CHECK(ball_elements(free2, 2) == 17);
  CHECK(ball_elements(free2, 0) == 1);

  auto z3 = symmetrize(1, {parse_word(1, "aaa")});
  CHECK(ball_elements(z3, 3) == 3);

  // radius 2 is too small for the length-8 relators to cause any collapse,
  // so the count equals the free rank-4 ball: 1 + 8 + 8*7
  CHECK(ball_elements(surface(), 2) == 65);

  // monotone in radius
  std::size_t prev = 0;
  for (int r = 0; r <= 3; ++r) {
    std::size_t n = ball_elements(z3, r);
    CHECK(n >= prev);
    prev = n;
  }
  CHECK_THROWS(ball_elements(free2, 4, 100));
}
