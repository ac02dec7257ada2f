#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "scq/dihedral.hpp"

using namespace scq;

namespace {

ProductGroup single_dihedral(int m) {
  ProductGroup g;
  g.dihedral_orders = {m};
  return g;
}

ProductElt rot_elt(const ProductGroup& g, std::size_t i, long long k) {
  ProductElt e = p_id(g);
  e.comps[i] = d_rot(g.dihedral_orders[i], k);
  return e;
}

ProductElt refl_elt(const ProductGroup& g, std::size_t i, long long k = 0) {
  ProductElt e = p_id(g);
  e.comps[i] = d_refl(g.dihedral_orders[i], k);
  return e;
}

// order of a table element
int table_order(const FiniteGroupTable& t, int x) {
  int n = 1, cur = x;
  while (cur != t.identity) {
    cur = t.mul(cur, x);
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("dihedral element arithmetic") {
  DihedralElt r = d_rot(4, 1), s = d_refl(4);
  CHECK(d_mul(r, r) == d_rot(4, 2));
  CHECK(d_mul(d_mul(s, r), s) == d_rot(4, 3));  // s r s = r^-1
  CHECK(d_mul(s, s) == d_id(4));
  CHECK(signature(s));
  CHECK_FALSE(signature(r));
  CHECK(d_inv(d_rot(4, 1)) == d_rot(4, 3));
  CHECK(d_pow(r, 6) == d_rot(4, 2));
  CHECK_THROWS(d_mul(d_rot(4, 0), d_rot(5, 0)));
}

TEST_CASE("infinite dihedral") {
  DihedralElt t = d_rot(0, 1), s = d_refl(0);
  CHECK(d_mul(d_mul(s, t), s) == d_rot(0, -1));
  CHECK(d_pow(t, 50) == d_rot(0, 50));
  CHECK(d_mul(s, s) == d_id(0));
}

TEST_CASE("dihedral arithmetic matches generated tables") {
  for (int m = 1; m <= 8; ++m) {
    FiniteGroupTable t = FiniteGroupTable::dihedral(m);
    REQUIRE(t.order == 2 * m);
    // index encoding: rot + m * refl
    for (int a = 0; a < t.order; ++a)
      for (int b = 0; b < t.order; ++b) {
        DihedralElt da{m, a % m, a >= m}, db{m, b % m, b >= m};
        DihedralElt dc = d_mul(da, db);
        int expect = static_cast<int>(dc.rot) + m * (dc.refl ? 1 : 0);
        CHECK(t.mul(a, b) == expect);
      }
    long long lcm = std::lcm(2ll, static_cast<long long>(m));
    CHECK(t.exponent == (m == 1 ? 2 : lcm));
  }
}

TEST_CASE("table validation") {
  CHECK_THROWS(FiniteGroupTable::from_table(2, {0, 1, 1, 1}));  // no inverse for 1
  CHECK_THROWS(FiniteGroupTable::from_table(2, {0, 0, 0, 0}));  // not a bijection
  auto z2 = FiniteGroupTable::from_table(2, {0, 1, 1, 0});
  CHECK(z2.identity == 0);
  CHECK(z2.exponent == 2);
  auto z6 = FiniteGroupTable::direct_product(FiniteGroupTable::cyclic(2),
                                             FiniteGroupTable::cyclic(3));
  CHECK(z6.order == 6);
  CHECK(z6.exponent == 6);
}

TEST_CASE("product group basics") {
  ProductGroup g;
  g.dihedral_orders = {4, 4};
  CHECK(g.order() == 64);
  auto elems = group_elements(g);
  CHECK(elems.size() == 64);
  ProductElt a = refl_elt(g, 0), b = rot_elt(g, 1, 1);
  CHECK(p_mul(g, a, p_inv(g, a)) == p_id(g));
  CHECK(p_pow(g, b, 4) == p_id(g));
  CHECK(p_comm(g, a, b) == p_mul(g, p_mul(g, a, b), p_mul(g, p_inv(g, a), p_inv(g, b))));
}

TEST_CASE("reflection rank") {
  ProductGroup g;
  g.dihedral_orders = {4, 4};
  CHECK(reflection_rank({rot_elt(g, 0, 1), rot_elt(g, 1, 3)}) == 0);
  CHECK(reflection_rank({refl_elt(g, 0), refl_elt(g, 1)}) == 2);
  ProductElt ss = p_mul(g, refl_elt(g, 0), refl_elt(g, 1));
  CHECK(reflection_rank({ss}) == 1);
  CHECK(reflection_rank({ss, refl_elt(g, 0)}) == 2);
}

TEST_CASE("subgroup machinery") {
  ProductGroup d4 = single_dihedral(4);
  auto subs = all_subgroups(d4);
  CHECK(subs.size() == 10);  // d(4) + sigma(4) = 3 + 7
  ProductGroup d16 = single_dihedral(16);
  CHECK(all_subgroups(d16).size() == 36);  // d(16) + sigma(16) = 5 + 31
  auto cl = subgroup_closure(d4, {refl_elt(d4, 0), rot_elt(d4, 0, 1)});
  CHECK(cl.size() == 8);
}

TEST_CASE("normalizer element on the D16 example") {
  ProductGroup g = single_dihedral(16);
  // A = <s, r^2> has reflection rank 1 and is normalized by h = r
  ProductElt s = refl_elt(g, 0), h = rot_elt(g, 0, 1);
  auto rep = normalizer_element(g, {s, rot_elt(g, 0, 2)}, h, 16);
  CHECK(rep.centralizes_subgroup);
  CHECK(rep.commutators_central);
  CHECK(rep.a == rot_elt(g, 0, 4));  // [r^2, s] = r^4 = h^{n/4}
  CHECK_THROWS(normalizer_element(g, {s}, h, 16));  // r does not normalize <s>
}

TEST_CASE("normalizer element rank zero and guards") {
  ProductGroup g = single_dihedral(16);
  ProductElt h = rot_elt(g, 0, 1);
  auto rep = normalizer_element(g, {rot_elt(g, 0, 2)}, h, 16);
  CHECK(rep.a == p_id(g));
  CHECK(rep.centralizes_subgroup);
  CHECK_THROWS(normalizer_element(g, {refl_elt(g, 0)}, h, 8));  // needs 16 | n
}

TEST_CASE("chains") {
  ProductGroup g = single_dihedral(5);
  auto elems = group_elements(g);
  for (const auto& g0 : elems)
    for (const auto& h : elems) {
      Chain c = make_chain(g, g0, h, 4);
      CHECK(verify_chain(g, c));
      auto v = chain_identity_check(g, c, 1);
      CHECK(v.ok);
    }
  Chain bad = make_chain(g, refl_elt(g, 0), rot_elt(g, 0, 1), 4);
  bad.elems[2] = rot_elt(g, 0, 2);
  CHECK_FALSE(verify_chain(g, bad));
  CHECK_THROWS(chain_identity_check(g, make_chain(g, refl_elt(g, 0), rot_elt(g, 0, 1), 2), 1));
}

TEST_CASE("chain identity in D4xD4 and Dinf") {
  ProductGroup g;
  g.dihedral_orders = {4, 4};
  auto elems = group_elements(g);
  for (std::size_t i = 0; i < elems.size(); i += 7)
    for (std::size_t j = 0; j < elems.size(); j += 5) {
      Chain c = make_chain(g, elems[i], elems[j], 5);
      CHECK(chain_identity_check(g, c, 2).ok);
    }
  ProductGroup dinf = single_dihedral(0);
  for (long long k = -50; k <= 50; k += 9)
    for (long long l = -50; l <= 50; l += 11) {
      for (bool rg : {false, true})
        for (bool rh : {false, true}) {
          ProductElt g0 = p_id(dinf), h = p_id(dinf);
          g0.comps[0] = rg ? d_refl(0, k) : d_rot(0, k);
          h.comps[0] = rh ? d_refl(0, l) : d_rot(0, l);
          Chain c = make_chain(dinf, g0, h, 4);
          CHECK(chain_identity_check(dinf, c, 1).ok);
        }
    }
}

TEST_CASE("dihedral pair embedding D4 mod rotations") {
  FiniteGroupTable d4 = FiniteGroupTable::dihedral(4);
  DihedralPairEmbedding spec;
  spec.e = d4;
  spec.c = {0, 1, 2, 3};  // rotation subgroup
  spec.target.front = std::make_shared<FiniteGroupTable>(FiniteGroupTable::cyclic(2));
  spec.target.dihedral_orders = {4};
  spec.quotient_map = {0, 0, 0, 0, 1, 1, 1, 1};
  spec.gens = {1, 4};  // r, s
  ProductElt ir;
  ir.comps = {d_rot(4, 1)};
  ProductElt is;
  is.front_idx = 1;
  is.comps = {d_refl(4)};
  spec.images = {ir, is};
  auto v = verify_dihedral_pair_embedding(spec);
  CHECK(v.ok);
}

TEST_CASE("dihedral pair embedding Z2xZ2") {
  FiniteGroupTable e =
      FiniteGroupTable::direct_product(FiniteGroupTable::cyclic(2), FiniteGroupTable::cyclic(2));
  DihedralPairEmbedding spec;
  spec.e = e;
  spec.c = {0, 2};  // first factor (index = a*2 + b)
  spec.target.front = std::make_shared<FiniteGroupTable>(FiniteGroupTable::cyclic(2));
  spec.target.dihedral_orders = {1};
  spec.quotient_map = {0, 1, 0, 1};
  spec.gens = {2, 1};
  ProductElt ia;
  ia.comps = {d_refl(1)};
  ProductElt ib;
  ib.front_idx = 1;
  ib.comps = {d_id(1)};
  spec.images = {ia, ib};
  CHECK(verify_dihedral_pair_embedding(spec).ok);
}

TEST_CASE("non injective assignment rejected") {
  FiniteGroupTable z2 = FiniteGroupTable::cyclic(2);
  ProductGroup target;
  target.dihedral_orders = {4};
  auto v = verify_embedding(z2, {1}, target, {p_id(target)});
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.witness.empty());
}

TEST_CASE("exponent facts") {
  for (int m = 2; m <= 8; ++m) {
    FiniteGroupTable t = FiniteGroupTable::dihedral(m);
    CHECK(2 * m % t.exponent == 0);
    for (int x = 0; x < t.order; ++x) CHECK(2 * m % table_order(t, x) == 0);
  }
}
