#include "scq/treegeom.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace scq {

int dist(const Word& u, const Word& v) {
  if (u.rank != v.rank) throw std::invalid_argument("rank mismatch");
  return mul(inverse(u), v).length();
}

Rat gromov_product(const Word& x, const Word& y, const Word& z) {
  return Rat(dist(x, z) + dist(y, z) - dist(x, y), 2);
}

TranslationLengths translation_lengths(const Word& g) {
  int n = cyclic_reduce(g).second.length();
  return {n, n};
}

namespace {

// Steps one vertex along the line; pos is the letter index within period^inf,
// forward for +1, backward for -1.
Word step(const Word& v, const Word& period, long long pos, int dir) {
  int k = period.length();
  int l;
  if (dir > 0) {
    l = period.letters[static_cast<int>(((pos % k) + k) % k)];
  } else {
    l = -period.letters[static_cast<int>((((pos - 1) % k) + k) % k)];
  }
  std::vector<int> raw = v.letters;
  raw.push_back(l);
  return reduce(v.rank, raw);
}

}  // namespace

PeriodicLine axis(const Word& g) {
  auto [conj, core] = cyclic_reduce(g);
  if (core.empty()) throw std::invalid_argument("axis of elliptic element");
  return normalize_line({conj, primitive_root(core).root});
}

PeriodicLine normalize_line(const PeriodicLine& l) {
  int k = l.period.length();
  if (k == 0) throw std::invalid_argument("empty period");
  Word v = l.basepoint;
  long long t = 0;
  for (;;) {
    Word fwd = step(v, l.period, t, +1);
    if (fwd.length() < v.length()) {
      v = fwd;
      ++t;
      continue;
    }
    Word bwd = step(v, l.period, t, -1);
    if (bwd.length() < v.length()) {
      v = bwd;
      --t;
      continue;
    }
    break;
  }
  Word p = rotate(l.period, static_cast<int>(((t % k) + k) % k));
  Word q = inverse(p);
  return {v, word_less(q, p) ? q : p};
}

PeriodicLine translate_line(const Word& g, const PeriodicLine& l) {
  return normalize_line({mul(g, l.basepoint), l.period});
}

std::vector<Word> line_vertices(const PeriodicLine& l, int steps) {
  std::vector<Word> out;
  out.reserve(2 * steps + 1);
  Word v = l.basepoint;
  out.push_back(v);
  for (long long t = 0; t < steps; ++t) {
    v = step(v, l.period, t, +1);
    out.push_back(v);
  }
  v = l.basepoint;
  for (long long t = 0; t > -steps; --t) {
    v = step(v, l.period, t, -1);
    out.push_back(v);
  }
  return out;
}

std::optional<int> axis_overlap(const PeriodicLine& a, const PeriodicLine& b) {
  if (a.period.rank != b.period.rank) throw std::invalid_argument("rank mismatch");
  PeriodicLine l1 = normalize_line(a), l2 = normalize_line(b);
  if (l1 == l2) return std::nullopt;
  int r = dist(l1.basepoint, l2.basepoint) + l1.period.length() + l2.period.length() + 4;
  std::unordered_set<Word, WordHash> s1;
  for (auto& v : line_vertices(l1, r)) s1.insert(v);
  int common = 0;
  for (auto& v : line_vertices(l2, r))
    if (s1.count(v)) ++common;
  return common > 0 ? common - 1 : 0;
}

std::vector<Word> ball(int rank, int radius) {
  std::vector<Word> out;
  Word w;
  w.rank = rank;
  out.push_back(w);
  std::size_t lo = 0;
  for (int len = 1; len <= radius; ++len) {
    std::size_t hi = out.size();
    for (std::size_t i = lo; i < hi; ++i) {
      for (int g = 1; g <= rank; ++g) {
        for (int s : {+1, -1}) {
          int l = s * g;
          if (!out[i].letters.empty() && out[i].letters.back() == -l) continue;
          Word v = out[i];
          v.letters.push_back(l);
          out.push_back(v);
        }
      }
    }
    lo = hi;
  }
  return out;
}

std::vector<Word> mov_set(const MovQuery& q) {
  std::vector<Word> out;
  for (auto& x : ball(q.rank, q.ball_radius)) {
    bool ok = true;
    for (auto& g : q.s)
      if (dist(mul(g, x), x) >= q.d) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;
}

MargulisReport margulis_check(const Word& g, const Word& h, int nu, int a, Rat delta) {
  if (g.rank != h.rank) throw std::invalid_argument("rank mismatch");
  if (cyclic_reduce(g).second.empty() || cyclic_reduce(h).second.empty())
    throw std::invalid_argument("margulis_check: elliptic input");
  if (conj_class(primitive_root(g).root) == conj_class(primitive_root(h).root))
    throw std::invalid_argument("margulis_check: elementary pair");
  int ng = translation_lengths(g).norm;
  int nh = translation_lengths(h).norm;
  auto ov = axis_overlap(axis(g), axis(h));
  if (!ov) throw std::logic_error("distinct classes with equal axes");
  MargulisReport rep;
  rep.overlap = *ov;
  rep.bound = Rat(ng + nh + nu * std::max(ng, nh) + a) + Rat(191) * delta;
  rep.slack = rep.bound - Rat(rep.overlap);
  rep.pass = Rat(rep.overlap) <= rep.bound;
  return rep;
}

}  // namespace scq
