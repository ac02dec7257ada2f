#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "scq/bassserre.hpp"

using namespace scq;

namespace {

FreeProduct z2_z3() {
  FreeProduct s;
  Factor a, b;
  a.table = std::make_shared<FiniteGroupTable>(FiniteGroupTable::cyclic(2));
  b.table = std::make_shared<FiniteGroupTable>(FiniteGroupTable::cyclic(3));
  s.factors = {a, b};
  return s;
}

GoGWord w(const FreeProduct& s, std::initializer_list<std::pair<int, int>> syl) {
  std::vector<Syllable> raw;
  for (auto [f, e] : syl) raw.push_back({f, e, {}});
  return gog_normal_form(s, raw);
}

GoGWord random_gog(const FreeProduct& s, std::mt19937& rng, int max_syl) {
  std::uniform_int_distribution<int> len(0, max_syl);
  std::vector<Syllable> raw;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    int f = std::uniform_int_distribution<int>(0, 1)(rng);
    int order = s.factors[f].table->order;
    raw.push_back({f, std::uniform_int_distribution<int>(0, order - 1)(rng), {}});
  }
  return gog_normal_form(s, raw);
}

}  // namespace

TEST_CASE("free product normal forms") {
  auto s = z2_z3();
  // x*x*y -> y
  CHECK(w(s, {{0, 1}, {0, 1}, {1, 1}}) == w(s, {{1, 1}}));
  // y*y*y*x -> x
  CHECK(w(s, {{1, 1}, {1, 1}, {1, 1}, {0, 1}}) == w(s, {{0, 1}}));
  GoGWord xy = w(s, {{0, 1}, {1, 1}});
  CHECK(gog_mul(s, xy, gog_inv(s, xy)).syllables.empty());
  CHECK_THROWS(w(s, {{2, 0}}));
}

TEST_CASE("normal form associativity") {
  auto s = z2_z3();
  std::mt19937 rng(83);
  for (int i = 0; i < 1000; ++i) {
    GoGWord u = random_gog(s, rng, 5), v = random_gog(s, rng, 5), x = random_gog(s, rng, 5);
    CHECK(gog_mul(s, gog_mul(s, u, v), x) == gog_mul(s, u, gog_mul(s, v, x)));
  }
}

TEST_CASE("classification") {
  auto s = z2_z3();
  GoGWord x = w(s, {{0, 1}}), y = w(s, {{1, 1}});
  CHECK(classify(s, x).type == IsomType::Elliptic);
  GoGWord xy = gog_mul(s, x, y);
  CHECK(classify(s, xy).type == IsomType::Loxodromic);
  CHECK(classify(s, xy).translation_length == 2);
  GoGWord conj = gog_mul(s, gog_mul(s, y, xy), gog_inv(s, y));
  CHECK(classify(s, conj).type == IsomType::Loxodromic);
  CHECK(classify(s, conj).translation_length == 2);
}

TEST_CASE("translation length is conjugation invariant") {
  auto s = z2_z3();
  std::mt19937 rng(89);
  for (int i = 0; i < 400; ++i) {
    GoGWord g = random_gog(s, rng, 5), h = random_gog(s, rng, 4);
    GoGWord conj = gog_mul(s, gog_mul(s, h, g), gog_inv(s, h));
    CHECK(classify(s, g).translation_length == classify(s, conj).translation_length);
  }
}

TEST_CASE("elementary subgroup classification") {
  auto s = z2_z3();
  GoGWord x = w(s, {{0, 1}}), y = w(s, {{1, 1}});
  GoGWord xy = gog_mul(s, x, y);
  CHECK(elementary_2gen(s, xy, gog_mul(s, xy, xy)) == ElemClass::LoxodromicElementary);
  CHECK(elementary_2gen(s, x, y) == ElemClass::NonElementary);
  GoGWord yxy = gog_mul(s, gog_mul(s, y, x), gog_inv(s, y));
  CHECK(elementary_2gen(s, x, yxy) == ElemClass::LoxodromicElementary);
  CHECK(elementary_subgroup(s, {x}) == ElemClass::Elliptic);
  CHECK(elementary_subgroup(s, {}) == ElemClass::Elliptic);
  CHECK(elementary_2gen(s, x, gog_mul(s, xy, gog_mul(s, xy, x))) == ElemClass::NonElementary);
}

TEST_CASE("classify agrees with tree BFS oracle") {
  auto s = z2_z3();
  // all normal-form words with at most 5 syllables
  std::vector<GoGWord> words;
  {
    std::vector<GoGWord> frontier = {GoGWord{}};
    words.push_back(GoGWord{});
    for (int len = 0; len < 5; ++len) {
      std::vector<GoGWord> next;
      for (const auto& u : frontier)
        for (int f = 0; f < 2; ++f) {
          if (!u.syllables.empty() && u.syllables.back().factor == f) continue;
          for (int e = 1; e < s.factors[f].table->order; ++e) {
            GoGWord v = u;
            v.syllables.push_back({f, e, {}});
            next.push_back(v);
            words.push_back(v);
          }
        }
      frontier = std::move(next);
    }
  }

  // explicit Bass-Serre tree ball: vertices are cosets rep*G_side with the
  // rep canonicalized by stripping a trailing same-side syllable
  using Key = std::vector<int>;
  auto canon = [&](int side, GoGWord rep) {
    if (!rep.syllables.empty() && rep.syllables.back().factor == side) rep.syllables.pop_back();
    return rep;
  };
  auto keyof = [](int side, const GoGWord& rep) {
    Key k{side};
    for (const auto& y : rep.syllables) {
      k.push_back(y.factor);
      k.push_back(y.elt);
    }
    return k;
  };
  std::map<Key, std::pair<int, GoGWord>> verts;
  std::map<Key, std::vector<Key>> adj;
  {
    std::vector<std::pair<int, GoGWord>> frontier = {{0, GoGWord{}}};
    verts[keyof(0, GoGWord{})] = frontier[0];
    for (int d = 0; d < 18; ++d) {
      std::vector<std::pair<int, GoGWord>> next;
      for (const auto& [side, rep] : frontier) {
        Key from = keyof(side, rep);
        for (int e = 0; e < s.factors[side].table->order; ++e) {
          GoGWord g = rep;
          if (e != 0) g.syllables.push_back({side, e, {}});
          int other = 1 - side;
          GoGWord crep = canon(other, g);
          Key to = keyof(other, crep);
          adj[from].push_back(to);
          if (!verts.count(to)) {
            verts[to] = {other, crep};
            next.push_back({other, crep});
          }
        }
      }
      frontier = std::move(next);
    }
  }
  auto graph_dist = [&](const Key& from, const Key& to) {
    std::map<Key, int> dist{{from, 0}};
    std::vector<Key> frontier = {from};
    while (!frontier.empty()) {
      std::vector<Key> next;
      for (const auto& k : frontier) {
        if (k == to) return dist[k];
        for (const auto& nb : adj[k])
          if (!dist.count(nb)) {
            dist[nb] = dist[k] + 1;
            next.push_back(nb);
          }
      }
      frontier = std::move(next);
    }
    return -1;
  };

  for (const auto& g : words) {
    int best = -1;
    for (const auto& [key, v] : verts) {
      const auto& [side, rep] = v;
      if (static_cast<int>(rep.syllables.size()) > 3) continue;  // sources near origin
      GoGWord moved = canon(side, gog_mul(s, g, rep));
      Key to = keyof(side, moved);
      if (!verts.count(to)) continue;
      int d = graph_dist(key, to);
      if (d >= 0 && (best < 0 || d < best)) best = d;
    }
    REQUIRE(best >= 0);
    Classification c = classify(s, g);
    if (c.type == IsomType::Elliptic) {
      CHECK(best == 0);
    } else {
      CHECK(best == c.translation_length);
    }
  }
}

TEST_CASE("nu scan on Z2*Z3") {
  auto s = z2_z3();
  NuScanReport r = nu_scan(s, 6, 500);
  CHECK(r.pairs_checked > 0);
  CHECK(r.violations == 0);
  CHECK(r.undecided == 0);
}

TEST_CASE("nu scan vacuous on Z2*Z2") {
  FreeProduct s;
  Factor a;
  a.table = std::make_shared<FiniteGroupTable>(FiniteGroupTable::cyclic(2));
  s.factors = {a, a};
  NuScanReport r = nu_scan(s, 4, 100);
  CHECK(r.violations == 0);
}

TEST_CASE("wreath group axioms") {
  std::vector<WreathElt> elems;
  for (long long shift = -2; shift <= 2; ++shift)
    for (int mask = 0; mask < 8; ++mask) {
      WreathElt e;
      e.shift = shift;
      for (int b = 0; b < 3; ++b)
        if (mask & (1 << b)) e.support.insert(b - 1);
      elems.push_back(e);
    }
  for (const auto& a : elems) {
    CHECK(wreath_mul(a, wreath_inv(a)).support.empty());
    CHECK(wreath_mul(a, wreath_inv(a)).shift == 0);
    for (const auto& b : elems)
      for (const auto& c : elems)
        CHECK(wreath_mul(wreath_mul(a, b), c) == wreath_mul(a, wreath_mul(b, c)));
  }
}

TEST_CASE("hnn witness") {
  HnnWitness w1 = hnn_witness(1);
  CHECK(w1.chain_property);
  CHECK(w1.images_independent);
  CHECK(w1.h_image.shift == 1);

  HnnWitness w4 = hnn_witness(4);
  CHECK(w4.chain_property);
  CHECK(w4.images_independent);
  REQUIRE(w4.staged_supports.size() == 3);
  CHECK(w4.staged_supports[0] == 5);
  CHECK(w4.staged_supports[1] == 10);
  CHECK(w4.staged_supports[2] == 20);
  CHECK_THROWS(hnn_witness(0));
}

namespace {

// Z4 *_{Z2} Z4: both factors cyclic of order 4 sharing the order-2 subgroup
Amalgam z4_amalgam() {
  Amalgam s;
  s.a = std::make_shared<FiniteGroupTable>(FiniteGroupTable::cyclic(4));
  s.b = std::make_shared<FiniteGroupTable>(FiniteGroupTable::cyclic(4));
  s.sub_a = {0, 2};
  s.sub_b = {0, 2};
  s.transversal_a = {0, 1};
  s.transversal_b = {0, 1};
  s.validate();
  return s;
}

}  // namespace

TEST_CASE("amalgam validation") {
  auto s = z4_amalgam();
  CHECK(s.coset_rep_a.size() == 4);
  Amalgam bad = s;
  bad.transversal_b = {0, 2};  // 2 lies in H, cosets overlap
  CHECK_THROWS(bad.validate());
  Amalgam bad2 = s;
  bad2.sub_b = {0, 1};  // not closed
  CHECK_THROWS(bad2.validate());
}

TEST_CASE("amalgam arithmetic") {
  auto s = z4_amalgam();
  AmalgamWord a1 = amalgam_from_a(s, 1);
  AmalgamWord b1 = amalgam_from_b(s, 1);
  CHECK(amalgam_mul(s, a1, amalgam_inv(s, a1)) == amalgam_id());
  // a1 * a1 = a2 which lies in H
  AmalgamWord a2 = amalgam_mul(s, a1, a1);
  CHECK(a2.reps.empty());
  CHECK(a2.h == 1);
  // the generator of A equals t * h with t the transversal rep
  AmalgamWord g = amalgam_mul(s, a1, b1);
  CHECK(g.reps.size() == 2);

  // associativity on samples
  std::mt19937 rng(97);
  auto rand_word = [&]() {
    AmalgamWord x = amalgam_id();
    int n = std::uniform_int_distribution<int>(0, 5)(rng);
    for (int i = 0; i < n; ++i) {
      int e = std::uniform_int_distribution<int>(1, 3)(rng);
      x = std::uniform_int_distribution<int>(0, 1)(rng)
              ? amalgam_mul(s, x, amalgam_from_a(s, e))
              : amalgam_mul(s, x, amalgam_from_b(s, e));
    }
    return x;
  };
  for (int i = 0; i < 500; ++i) {
    AmalgamWord u = rand_word(), v = rand_word(), x = rand_word();
    CHECK(amalgam_mul(s, amalgam_mul(s, u, v), x) == amalgam_mul(s, u, amalgam_mul(s, v, x)));
    CHECK(amalgam_mul(s, u, amalgam_inv(s, u)) == amalgam_id());
  }
}

TEST_CASE("amalgam classification") {
  auto s = z4_amalgam();
  CHECK(amalgam_classify(s, amalgam_id()).type == IsomType::Elliptic);
  CHECK(amalgam_classify(s, amalgam_from_a(s, 1)).type == IsomType::Elliptic);
  AmalgamWord ab = amalgam_mul(s, amalgam_from_a(s, 1), amalgam_from_b(s, 1));
  CHECK(amalgam_classify(s, ab).type == IsomType::Loxodromic);
  CHECK(amalgam_classify(s, ab).translation_length == 2);
  // conjugates have the same translation length
  AmalgamWord c = amalgam_from_b(s, 1);
  AmalgamWord conj = amalgam_mul(s, amalgam_mul(s, c, ab), amalgam_inv(s, c));
  CHECK(amalgam_classify(s, conj).translation_length == 2);
}
