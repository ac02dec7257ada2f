#include "scq/bassserre.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace scq {

namespace {

bool syllable_trivial(const FreeProduct& s, const Syllable& y) {
  const Factor& f = s.factors.at(y.factor);
  return f.table ? y.elt == f.table->identity : y.w.empty();
}

Syllable syllable_mul(const FreeProduct& s, const Syllable& a, const Syllable& b) {
  const Factor& f = s.factors.at(a.factor);
  Syllable r;
  r.factor = a.factor;
  if (f.table) {
    r.elt = f.table->mul(a.elt, b.elt);
  } else {
    r.w = mul(a.w, b.w);
  }
  return r;
}

Syllable syllable_inv(const FreeProduct& s, const Syllable& a) {
  const Factor& f = s.factors.at(a.factor);
  Syllable r;
  r.factor = a.factor;
  if (f.table) {
    r.elt = f.table->inv[a.elt];
  } else {
    r.w = inverse(a.w);
  }
  return r;
}

}  // namespace

GoGWord gog_normal_form(const FreeProduct& s, const std::vector<Syllable>& raw) {
  GoGWord out;
  for (const Syllable& y : raw) {
    if (y.factor < 0 || y.factor >= static_cast<int>(s.factors.size()))
      throw std::invalid_argument("syllable factor out of range");
    const Factor& f = s.factors[y.factor];
    if (f.table && (y.elt < 0 || y.elt >= f.table->order))
      throw std::invalid_argument("syllable element out of range");
    if (syllable_trivial(s, y)) continue;
    if (!out.syllables.empty() && out.syllables.back().factor == y.factor) {
      Syllable m = syllable_mul(s, out.syllables.back(), y);
      out.syllables.pop_back();
      if (!syllable_trivial(s, m)) out.syllables.push_back(m);
    } else {
      out.syllables.push_back(y);
    }
  }
  return out;
}

GoGWord gog_mul(const FreeProduct& s, const GoGWord& a, const GoGWord& b) {
  std::vector<Syllable> raw = a.syllables;
  raw.insert(raw.end(), b.syllables.begin(), b.syllables.end());
  return gog_normal_form(s, raw);
}

GoGWord gog_inv(const FreeProduct& s, const GoGWord& a) {
  GoGWord r;
  for (auto it = a.syllables.rbegin(); it != a.syllables.rend(); ++it)
    r.syllables.push_back(syllable_inv(s, *it));
  return r;
}

std::string gog_str(const FreeProduct& s, const GoGWord& a) {
  if (a.syllables.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < a.syllables.size(); ++i) {
    const Syllable& y = a.syllables[i];
    if (i) os << ".";
    if (s.factors[y.factor].table)
      os << "f" << y.factor << ":" << y.elt;
    else
      os << "f" << y.factor << ":" << to_string(y.w);
  }
  return os.str();
}

Classification classify(const FreeProduct& s, const GoGWord& g) {
  std::vector<Syllable> syl = g.syllables;
  bool changed = true;
  while (changed && syl.size() >= 2) {
    changed = false;
    if (syl.front().factor == syl.back().factor) {
      Syllable m = syllable_mul(s, syl.back(), syl.front());
      syl.erase(syl.begin());
      syl.pop_back();
      if (!syllable_trivial(s, m)) syl.insert(syl.begin(), m);
      changed = true;
    }
  }
  Classification c;
  if (syl.size() <= 1) {
    c.type = IsomType::Elliptic;
    c.translation_length = 0;
  } else {
    c.type = IsomType::Loxodromic;
    c.translation_length = static_cast<int>(syl.size());
  }
  return c;
}

namespace {

// ---- Bass-Serre tree machinery for a free product of two finite groups ----

struct Tree2 {
  const FreeProduct& s;

  explicit Tree2(const FreeProduct& fp) : s(fp) {
    if (fp.factors.size() != 2 || !fp.factors[0].table || !fp.factors[1].table)
      throw std::invalid_argument("tree search needs a free product of two finite groups");
  }

  // Vertex: coset rep * G_side, rep canonical (no trailing side-syllable).
  struct Vertex {
    int side;
    GoGWord rep;
    friend bool operator==(const Vertex&, const Vertex&) = default;
  };

  struct VertexHash {
    std::size_t operator()(const Vertex& v) const noexcept {
      std::size_t h = static_cast<std::size_t>(v.side);
      for (const auto& y : v.rep.syllables)
        h = h * 1000003u + static_cast<std::size_t>(y.factor * 131 + y.elt);
      return h;
    }
  };

  GoGWord canon(int side, GoGWord w) const {
    if (!w.syllables.empty() && w.syllables.back().factor == side) w.syllables.pop_back();
    return w;
  }

  Vertex act(const GoGWord& g, const Vertex& v) const {
    return {v.side, canon(v.side, gog_mul(s, g, v.rep))};
  }

  int dist(const Vertex& a, const Vertex& b) const {
    GoGWord m = gog_mul(s, gog_inv(s, a.rep), b.rep);
    std::vector<Syllable> syl = canon(b.side, m).syllables;
    if (!syl.empty() && syl.front().factor == a.side) syl.erase(syl.begin());
    // path: one edge into the first coset, then one edge per syllable
    if (syl.empty()) return a.side == b.side ? 0 : 1;
    return static_cast<int>(syl.size()) + 1;
  }

  std::vector<Vertex> ball(int radius) const {
    std::vector<Vertex> out;
    std::unordered_set<Vertex, VertexHash> seen;
    std::vector<Vertex> frontier = {{0, {}}};
    seen.insert(frontier.front());
    out.push_back(frontier.front());
    for (int d = 0; d < radius; ++d) {
      std::vector<Vertex> next;
      for (const Vertex& v : frontier) {
        int other = 1 - v.side;
        const FiniteGroupTable& t = *s.factors[v.side].table;
        for (int x = 0; x < t.order; ++x) {
          GoGWord w = v.rep;
          if (x != t.identity) w.syllables.push_back({v.side, x, {}});
          Vertex nb{other, canon(other, w)};
          if (seen.insert(nb).second) {
            out.push_back(nb);
            next.push_back(nb);
          }
        }
      }
      frontier = std::move(next);
    }
    return out;
  }
};

}  // namespace

ElemClass elementary_subgroup(const FreeProduct& s, const std::vector<GoGWord>& raw_gens,
                              int ball_cap) {
  Tree2 tree(s);
  std::vector<GoGWord> gens;
  for (const auto& g : raw_gens) {
    GoGWord n = gog_normal_form(s, g.syllables);
    if (!n.syllables.empty()) gens.push_back(n);
  }
  if (gens.empty()) return ElemClass::Elliptic;

  auto verts = tree.ball(ball_cap);

  // tree translation length of g on this (non-subdivided) tree = min over the
  // ball of d(gv, v); for loxodromic g this is the syllable length, for
  // elliptic g it is 0 at a fixed vertex.
  auto axis_set = [&](const GoGWord& g) {
    int norm = classify(s, g).translation_length;
    std::unordered_set<Tree2::Vertex, Tree2::VertexHash> ax;
    for (const auto& v : verts)
      if (tree.dist(tree.act(g, v), v) == norm) ax.insert(v);
    return ax;
  };

  std::vector<Classification> cls;
  for (const auto& g : gens) cls.push_back(classify(s, g));

  auto preserves_axis = [&](const GoGWord& g, const GoGWord& t) {
    // g * axis(t) = axis(g t g^-1); compare the two axes on the ball window
    GoGWord conj = gog_mul(s, gog_mul(s, g, t), gog_inv(s, g));
    auto a1 = axis_set(t);
    auto a2 = axis_set(conj);
    return a1 == a2;
  };

  int lox = -1;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (cls[i].type == IsomType::Loxodromic) lox = static_cast<int>(i);

  if (lox < 0) {
    // all elliptic: common fixed vertex?
    std::vector<std::vector<char>> fixed(gens.size(), std::vector<char>(verts.size(), 0));
    std::vector<bool> nonempty(gens.size(), false);
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t v = 0; v < verts.size(); ++v)
        if (tree.dist(tree.act(gens[i], verts[v]), verts[v]) == 0) {
          fixed[i][v] = 1;
          nonempty[i] = true;
        }
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (!nonempty[i]) return ElemClass::Undecided;
    bool common = false;
    for (std::size_t v = 0; v < verts.size() && !common; ++v) {
      bool all = true;
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (!fixed[i][v]) {
          all = false;
          break;
        }
      common = all;
    }
    if (common) return ElemClass::Elliptic;
    // no common fixed point: some pair has disjoint fixed subtrees (Helly),
    // and their product is loxodromic
    GoGWord t;
    bool found = false;
    for (std::size_t i = 0; i < gens.size() && !found; ++i)
      for (std::size_t j = i + 1; j < gens.size() && !found; ++j) {
        bool meet = false;
        for (std::size_t v = 0; v < verts.size(); ++v)
          if (fixed[i][v] && fixed[j][v]) {
            meet = true;
            break;
          }
        if (!meet) {
          t = gog_mul(s, gens[i], gens[j]);
          found = true;
        }
      }
    if (!found || classify(s, t).type != IsomType::Loxodromic) return ElemClass::Undecided;
    for (const auto& g : gens)
      if (!preserves_axis(g, t)) return ElemClass::NonElementary;
    return ElemClass::LoxodromicElementary;
  }

  const GoGWord& t = gens[lox];
  for (const auto& g : gens)
    if (!preserves_axis(g, t)) return ElemClass::NonElementary;
  return ElemClass::LoxodromicElementary;
}

namespace {

// All normal-form words with at most max_syllables syllables (finite factors).
void enum_words_rec(const FreeProduct& s, GoGWord& cur, int max_syllables,
                    std::vector<GoGWord>& out) {
  out.push_back(cur);
  if (static_cast<int>(cur.syllables.size()) == max_syllables) return;
  for (int f = 0; f < static_cast<int>(s.factors.size()); ++f) {
    if (!cur.syllables.empty() && cur.syllables.back().factor == f) continue;
    const FiniteGroupTable& t = *s.factors[f].table;
    for (int x = 0; x < t.order; ++x) {
      if (x == t.identity) continue;
      cur.syllables.push_back({f, x, {}});
      enum_words_rec(s, cur, max_syllables, out);
      cur.syllables.pop_back();
    }
  }
}

}  // namespace

NuScanReport nu_scan(const FreeProduct& s, int syllable_bound, int samples, unsigned seed,
                     int exhaustive_syllables) {
  NuScanReport rep;
  auto check_pair = [&](const GoGWord& g, const GoGWord& h) {
    ++rep.pairs_checked;
    // vacuous unless h is loxodromic
    if (classify(s, h).type != IsomType::Loxodromic) return;
    GoGWord g1 = gog_mul(s, gog_mul(s, h, g), gog_inv(s, h));
    GoGWord g2 = gog_mul(s, gog_mul(s, h, g1), gog_inv(s, h));
    ElemClass chain = elementary_subgroup(s, {g, g1, g2});
    if (chain == ElemClass::Undecided) {
      ++rep.undecided;
      return;
    }
    if (chain == ElemClass::NonElementary) return;
    ++rep.chains_elementary;
    ElemClass pair = elementary_subgroup(s, {g, h});
    if (pair == ElemClass::Undecided)
      ++rep.undecided;
    else if (pair == ElemClass::NonElementary)
      ++rep.violations;
  };

  std::vector<GoGWord> small;
  {
    GoGWord cur;
    enum_words_rec(s, cur, exhaustive_syllables, small);
  }
  for (const auto& g : small)
    for (const auto& h : small) check_pair(g, h);

  std::mt19937 rng(seed);
  auto random_word = [&]() {
    std::uniform_int_distribution<int> len_dist(0, syllable_bound);
    int len = len_dist(rng);
    GoGWord w;
    for (int i = 0; i < len; ++i) {
      std::vector<int> choices;
      for (int f = 0; f < static_cast<int>(s.factors.size()); ++f)
        if (w.syllables.empty() || w.syllables.back().factor != f) choices.push_back(f);
      int f = choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
      const FiniteGroupTable& t = *s.factors[f].table;
      std::uniform_int_distribution<int> ed(0, t.order - 2);
      int x = ed(rng);
      if (x >= t.identity) ++x;
      w.syllables.push_back({f, x, {}});
    }
    return w;
  };
  for (int i = 0; i < samples; ++i) check_pair(random_word(), random_word());
  return rep;
}

WreathElt wreath_mul(const WreathElt& a, const WreathElt& b) {
  WreathElt r;
  r.shift = a.shift + b.shift;
  r.support = a.support;
  for (long long x : b.support) {
    long long y = x + a.shift;
    if (!r.support.erase(y)) r.support.insert(y);
  }
  return r;
}

WreathElt wreath_inv(const WreathElt& a) {
  WreathElt r;
  r.shift = -a.shift;
  for (long long x : a.support) r.support.insert(x - a.shift);
  return r;
}

namespace {

WreathElt wreath_pow_helper(const WreathElt& a, long long k) {
  WreathElt r;
  WreathElt base = k >= 0 ? a : wreath_inv(a);
  long long n = k >= 0 ? k : -k;
  for (long long i = 0; i < n; ++i) r = wreath_mul(r, base);
  return r;
}

}  // namespace

HnnWitness hnn_witness(int m) {
  if (m < 1) throw std::invalid_argument("hnn_witness: m must be positive");
  HnnWitness w;
  w.m = m;
  w.h_image = {{}, 1};
  for (int i = 0; i <= m; ++i) w.chain_images.push_back({{static_cast<long long>(i)}, 0});
  WreathElt hinv = wreath_inv(w.h_image);
  for (int i = 0; i < m; ++i) {
    WreathElt conj = wreath_mul(wreath_mul(w.h_image, w.chain_images[i]), hinv);
    if (!(conj == w.chain_images[i + 1])) w.chain_property = false;
  }
  // supports are distinct singletons, hence independent over Z2; verify by
  // symmetric-difference elimination anyway
  {
    std::vector<std::set<long long>> basis;
    for (const auto& e : w.chain_images) {
      std::set<long long> v = e.support;
      for (const auto& b : basis) {
        if (!v.empty() && b.count(*v.begin())) {
          std::set<long long> d;
          std::set_symmetric_difference(v.begin(), v.end(), b.begin(), b.end(),
                                        std::inserter(d, d.begin()));
          v = d;
        }
      }
      if (v.empty()) {
        w.images_independent = false;
        break;
      }
      basis.push_back(v);
    }
  }
  for (int stage : {1, 2, 4}) {
    WreathElt prod;
    for (int i = 0; i < stage * (m + 1); ++i) {
      WreathElt term = wreath_mul(wreath_mul(wreath_pow_helper(w.h_image, i), w.chain_images[0]),
                                  wreath_pow_helper(w.h_image, -i));
      prod = wreath_mul(prod, term);
    }
    w.staged_supports.push_back(prod.support.size());
  }
  return w;
}

// ---- amalgamated products ----

void Amalgam::validate() {
  if (!a || !b) throw std::invalid_argument("amalgam: missing factor tables");
  if (sub_a.size() != sub_b.size()) throw std::invalid_argument("amalgam: subgroup size mismatch");
  std::size_t hs = sub_a.size();
  // sub_a must be a subgroup and sub_b an isomorphic copy under the position map
  std::unordered_map<int, int> pos_a;
  for (std::size_t i = 0; i < hs; ++i) pos_a[sub_a[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < hs; ++i)
    for (std::size_t j = 0; j < hs; ++j) {
      int pa = a->mul(sub_a[i], sub_a[j]);
      auto it = pos_a.find(pa);
      if (it == pos_a.end()) throw std::invalid_argument("amalgam: sub_a not a subgroup");
      if (b->mul(sub_b[i], sub_b[j]) != sub_b[it->second])
        throw std::invalid_argument("amalgam: subgroup map is not a homomorphism");
    }
  auto build = [&](const FiniteGroupTable& g, const std::vector<int>& sub,
                   const std::vector<int>& trans, std::vector<int>& rep, std::vector<int>& hp) {
    if (trans.empty() || trans.front() != g.identity)
      throw std::invalid_argument("amalgam: transversal must start with the identity");
    rep.assign(g.order, -1);
    hp.assign(g.order, -1);
    for (std::size_t t = 0; t < trans.size(); ++t)
      for (std::size_t i = 0; i < sub.size(); ++i) {
        int x = g.mul(trans[t], sub[i]);
        if (rep[x] != -1) throw std::invalid_argument("amalgam: transversal cosets overlap");
        rep[x] = static_cast<int>(t);
        hp[x] = static_cast<int>(i);
      }
    for (int x = 0; x < g.order; ++x)
      if (rep[x] < 0) throw std::invalid_argument("amalgam: transversal does not cover the group");
  };
  build(*a, sub_a, transversal_a, coset_rep_a, h_part_a);
  build(*b, sub_b, transversal_b, coset_rep_b, h_part_b);
}

AmalgamWord amalgam_id() { return {}; }

namespace {

// Right-multiplies x (normal form t1...tk * h) by a single factor element.
void push_factor(const Amalgam& s, AmalgamWord& x, bool in_a, int g) {
  const FiniteGroupTable& f = in_a ? *s.a : *s.b;
  const std::vector<int>& sub = in_a ? s.sub_a : s.sub_b;
  const std::vector<int>& trans = in_a ? s.transversal_a : s.transversal_b;
  const std::vector<int>& rep = in_a ? s.coset_rep_a : s.coset_rep_b;
  const std::vector<int>& hp = in_a ? s.h_part_a : s.h_part_b;

  int h_in_f = sub[x.h];
  if (!x.reps.empty() && x.reps.back().first == in_a) {
    int t_elt = trans[x.reps.back().second];
    int c = f.mul(f.mul(t_elt, h_in_f), g);
    x.reps.pop_back();
    int t = rep[c];
    x.h = hp[c];
    if (t != 0) x.reps.emplace_back(in_a, t);
  } else {
    int c = f.mul(h_in_f, g);
    int t = rep[c];
    x.h = hp[c];
    if (t != 0) x.reps.emplace_back(in_a, t);
  }
}

}  // namespace

AmalgamWord amalgam_from_a(const Amalgam& s, int a) {
  AmalgamWord w;
  push_factor(s, w, true, a);
  return w;
}

AmalgamWord amalgam_from_b(const Amalgam& s, int b) {
  AmalgamWord w;
  push_factor(s, w, false, b);
  return w;
}

AmalgamWord amalgam_mul(const Amalgam& s, const AmalgamWord& x, const AmalgamWord& y) {
  AmalgamWord r = x;
  for (const auto& [in_a, t] : y.reps)
    push_factor(s, r, in_a, (in_a ? s.transversal_a : s.transversal_b)[t]);
  // trailing H part of y
  push_factor(s, r, true, s.sub_a[y.h]);
  return r;
}

AmalgamWord amalgam_inv(const Amalgam& s, const AmalgamWord& x) {
  AmalgamWord r;
  push_factor(s, r, true, s.a->inv[s.sub_a[x.h]]);
  for (auto it = x.reps.rbegin(); it != x.reps.rend(); ++it) {
    const auto& [in_a, t] = *it;
    const FiniteGroupTable& f = in_a ? *s.a : *s.b;
    push_factor(s, r, in_a, f.inv[(in_a ? s.transversal_a : s.transversal_b)[t]]);
  }
  return r;
}

Classification amalgam_classify(const Amalgam& s, const AmalgamWord& x) {
  AmalgamWord w = x;
  // cyclic reduction: conjugate by the trailing syllable while the first and
  // last syllables lie in the same factor; rotation count caps each round
  for (;;) {
    std::size_t k = w.reps.size();
    if (k < 2 || w.reps.front().first != w.reps.back().first) break;
    bool reduced = false;
    AmalgamWord cur = w;
    for (std::size_t rot = 0; rot < k; ++rot) {
      auto [in_a, t] = cur.reps.back();
      AmalgamWord c;
      c.reps.emplace_back(in_a, t);
      c.h = cur.h;
      cur = amalgam_mul(s, c, amalgam_mul(s, cur, amalgam_inv(s, c)));
      if (cur.reps.size() < k) {
        w = cur;
        reduced = true;
        break;
      }
      if (cur.reps.size() < 2 || cur.reps.front().first != cur.reps.back().first) {
        w = cur;
        reduced = true;
        break;
      }
    }
    if (!reduced) break;
  }
  Classification c;
  if (w.reps.size() <= 1) {
    c.type = IsomType::Elliptic;
    c.translation_length = 0;
  } else {
    c.type = IsomType::Loxodromic;
    c.translation_length = static_cast<int>(w.reps.size());
  }
  return c;
}

}  // namespace scq
