#include "scq/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace scq {

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = std::hash<int>{}(w.rank);
  for (int l : w.letters) h = h * 1000003u + static_cast<std::size_t>(l + 64);
  return h;
}

bool word_less(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  for (int i = 0; i < a.length(); ++i) {
    int ka = letter_key(a.letters[i]), kb = letter_key(b.letters[i]);
    if (ka != kb) return ka < kb;
  }
  return false;
}

Word reduce(int rank, std::span<const int> raw) {
  Word w;
  w.rank = rank;
  w.letters.reserve(raw.size());
  for (int l : raw) {
    if (l == 0 || std::abs(l) > rank)
      throw std::invalid_argument("letter out of range for rank");
    if (!w.letters.empty() && w.letters.back() == -l)
      w.letters.pop_back();
    else
      w.letters.push_back(l);
  }
  return w;
}

Word inverse(const Word& w) {
  Word r;
  r.rank = w.rank;
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(-*it);
  return r;
}

Word mul(const Word& a, const Word& b) {
  if (a.rank != b.rank) throw std::invalid_argument("rank mismatch");
  Word r = a;
  for (int l : b.letters) {
    if (!r.letters.empty() && r.letters.back() == -l)
      r.letters.pop_back();
    else
      r.letters.push_back(l);
  }
  return r;
}

Word pow(const Word& w, int k) {
  Word base = k < 0 ? inverse(w) : w;
  int m = std::abs(k);
  Word r;
  r.rank = w.rank;
  for (int i = 0; i < m; ++i) r = mul(r, base);
  return r;
}

Word conjugate(const Word& g, const Word& w) { return mul(mul(g, w), inverse(g)); }

std::pair<Word, Word> cyclic_reduce(const Word& w) {
  int i = 0, j = w.length() - 1;
  while (i < j && w.letters[i] == -w.letters[j]) {
    ++i;
    --j;
  }
  Word conj, core;
  conj.rank = core.rank = w.rank;
  conj.letters.assign(w.letters.begin(), w.letters.begin() + i);
  core.letters.assign(w.letters.begin() + i, w.letters.begin() + j + 1);
  if (w.empty()) core.letters.clear();
  return {conj, core};
}

PrimitiveRoot primitive_root(const Word& w) {
  if (w.empty()) throw std::invalid_argument("primitive_root of trivial word");
  Word core = cyclic_reduce(w).second;
  int n = core.length();
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (int i = d; i < n && ok; ++i)
      if (core.letters[i] != core.letters[i % d]) ok = false;
    if (ok) {
      Word root;
      root.rank = core.rank;
      root.letters.assign(core.letters.begin(), core.letters.begin() + d);
      return {root, n / d};
    }
  }
  return {core, 1};  // unreachable: d == n always matches
}

Word rotate(const Word& w, int k) {
  int n = w.length();
  if (n == 0) return w;
  k = ((k % n) + n) % n;
  Word r;
  r.rank = w.rank;
  r.letters.reserve(n);
  for (int i = 0; i < n; ++i) r.letters.push_back(w.letters[(i + k) % n]);
  return r;
}

ConjClass conj_class(const Word& w) {
  Word core = cyclic_reduce(w).second;
  Word best = core;
  Word inv = inverse(core);
  for (int k = 0; k < core.length(); ++k) {
    Word a = rotate(core, k);
    if (word_less(a, best)) best = a;
    Word b = rotate(inv, k);
    if (word_less(b, best)) best = b;
  }
  return {best};
}

namespace {

void enumerate_rec(Word& w, int lmax, std::vector<ConjClass>& out) {
  if (!w.empty()) {
    // cyclically reduced?
    if (w.length() == 1 || w.letters.front() != -w.letters.back()) {
      if (primitive_root(w).exponent == 1 && conj_class(w).representative == w)
        out.push_back({w});
    }
  }
  if (w.length() == lmax) return;
  for (int g = 1; g <= w.rank; ++g) {
    for (int s : {+1, -1}) {
      int l = s * g;
      if (!w.letters.empty() && w.letters.back() == -l) continue;
      w.letters.push_back(l);
      enumerate_rec(w, lmax, out);
      w.letters.pop_back();
    }
  }
}

}  // namespace

std::vector<ConjClass> enumerate_primitive_classes(int rank, int lmax) {
  if (rank < 1 || lmax < 1) throw std::invalid_argument("rank and lmax must be >= 1");
  Word w;
  w.rank = rank;
  std::vector<ConjClass> out;
  enumerate_rec(w, lmax, out);
  std::sort(out.begin(), out.end(), [](const ConjClass& a, const ConjClass& b) {
    return word_less(a.representative, b.representative);
  });
  return out;
}

Word parse_word(int rank, const std::string& text) {
  if (text == "1") {
    Word w;
    w.rank = rank;
    return w;
  }
  std::vector<int> raw;
  raw.reserve(text.size());
  for (char c : text) {
    if (c >= 'a' && c <= 'z')
      raw.push_back(c - 'a' + 1);
    else if (c >= 'A' && c <= 'Z')
      raw.push_back(-(c - 'A' + 1));
    else
      throw std::invalid_argument(std::string("bad character in word: ") + c);
  }
  return reduce(rank, raw);
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  s.reserve(w.letters.size());
  for (int l : w.letters) {
    int i = std::abs(l) - 1;
    if (i >= 26) throw std::invalid_argument("word not printable: rank > 26");
    s.push_back(static_cast<char>(l > 0 ? 'a' + i : 'A' + i));
  }
  return s;
}

}  // namespace scq
