#include "scq/dehn.hpp"

#include <numeric>
#include <stdexcept>

#include "scq/treegeom.hpp"

namespace scq {

namespace {

// One Dehn rewriting step, or false if no more-than-half relator subword
// exists.
bool dehn_step(Word& w, const SymmetrizedPresentation& p) {
  int n = w.length();
  for (int i = 0; i < n; ++i) {
    int best_len = 0;
    Word best_repl;
    for (const Word& r : p.closure) {
      int m = 0;
      while (m < r.length() && i + m < n && w.letters[i + m] == r.letters[m]) ++m;
      if (2 * m <= r.length()) continue;
      // u = r[0..m), replacement = inverse(r[m..))
      Word repl;
      repl.rank = w.rank;
      for (int t = r.length() - 1; t >= m; --t) repl.letters.push_back(-r.letters[t]);
      if (m > best_len || (m == best_len && word_less(repl, best_repl))) {
        best_len = m;
        best_repl = repl;
      }
    }
    if (best_len > 0) {
      std::vector<int> raw(w.letters.begin(), w.letters.begin() + i);
      raw.insert(raw.end(), best_repl.letters.begin(), best_repl.letters.end());
      raw.insert(raw.end(), w.letters.begin() + i + best_len, w.letters.end());
      Word next = reduce(w.rank, raw);
      if (next.length() >= w.length())
        throw std::logic_error("Dehn step did not decrease length");
      w = next;
      return true;
    }
  }
  return false;
}

}  // namespace

Word dehn_reduce(const Word& w, const SymmetrizedPresentation& p) {
  if (!check_prime_condition(p, Rat(1, 6)))
    throw std::invalid_argument("presentation is not C'(1/6)");
  Word cur = w;
  while (dehn_step(cur, p)) {
  }
  return cur;
}

bool is_trivial(const Word& w, const SymmetrizedPresentation& p) {
  return dehn_reduce(w, p).empty();
}

std::size_t ball_elements(const SymmetrizedPresentation& p, int radius, std::size_t word_cap) {
  std::vector<Word> words = ball(p.rank, radius);
  if (words.size() > word_cap) throw std::invalid_argument("ball word cap exceeded");
  std::vector<std::size_t> parent(words.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (find(i) == find(j)) continue;
      if (is_trivial(mul(words[i], inverse(words[j])), p)) {
        // merge by least canonical representative: smaller index is earlier
        // in (length, lex) DFS order
        auto a = find(i), b = find(j);
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::size_t classes = 0;
  for (std::size_t i = 0; i < words.size(); ++i)
    if (find(i) == i) ++classes;
  return classes;
}

}  // namespace scq
