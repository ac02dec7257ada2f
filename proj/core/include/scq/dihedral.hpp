#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace scq {

/// Element of D_m = <s, r | s^2, (sr)^2, r^m>, stored as (rot, refl) with
/// the law (k,e)(k',e') = (k + (-1)^e k', e xor e').  order == 0 encodes the
/// infinite dihedral group (rot ranges over Z).
struct DihedralElt {
  int order = 1;
  long long rot = 0;
  bool refl = false;

  friend bool operator==(const DihedralElt&, const DihedralElt&) = default;
};

DihedralElt d_id(int order);
DihedralElt d_rot(int order, long long k);
DihedralElt d_refl(int order, long long k = 0);
DihedralElt d_mul(const DihedralElt& a, const DihedralElt& b);
DihedralElt d_inv(const DihedralElt& a);
DihedralElt d_pow(const DihedralElt& a, long long k);
inline bool signature(const DihedralElt& a) { return a.refl; }

/// Finite group given by its multiplication table.  Construction verifies
/// the identity and inverse laws; associativity is checked on all triples up
/// to order 64 and on a deterministic sample above.
struct FiniteGroupTable {
  int order = 1;
  std::vector<int> table;  // row-major: table[a*order + b] = a*b
  int identity = 0;
  std::vector<int> inv;
  long long exponent = 1;

  int mul(int a, int b) const { return table[a * order + b]; }

  static FiniteGroupTable from_table(int order, std::vector<int> flat);
  static FiniteGroupTable trivial();
  static FiniteGroupTable cyclic(int m);
  static FiniteGroupTable dihedral(int m);
  static FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b);
};

/// Direct product Pi = D_{p1} x ... x D_{pk} x E, with an optional leading
/// table factor (used as E/C in embedding checks) and an optional trailing
/// model factor E.
struct ProductGroup {
  std::shared_ptr<const FiniteGroupTable> front;  // optional
  std::vector<int> dihedral_orders;
  std::shared_ptr<const FiniteGroupTable> back;  // optional

  long long order() const;  // 0 when some dihedral factor is infinite
  long long model_exponent() const;
};

struct ProductElt {
  int front_idx = 0;
  std::vector<DihedralElt> comps;
  int back_idx = 0;

  friend bool operator==(const ProductElt&, const ProductElt&) = default;
};

struct ProductEltHash {
  std::size_t operator()(const ProductElt& e) const noexcept;
};

ProductElt p_id(const ProductGroup& g);
ProductElt p_mul(const ProductGroup& g, const ProductElt& a, const ProductElt& b);
ProductElt p_inv(const ProductGroup& g, const ProductElt& a);
ProductElt p_pow(const ProductGroup& g, const ProductElt& a, long long k);
ProductElt p_comm(const ProductGroup& g, const ProductElt& a, const ProductElt& b);

/// Canonical generating set: rotation + reflection per dihedral factor and
/// every element of the table factors.
std::vector<ProductElt> group_generators(const ProductGroup& g);

/// All elements; throws when the order exceeds cap or is infinite.
std::vector<ProductElt> group_elements(const ProductGroup& g, std::size_t cap = 65536);

/// Closure of a generating set; throws when it exceeds cap.
std::vector<ProductElt> subgroup_closure(const ProductGroup& g,
                                         const std::vector<ProductElt>& gens,
                                         std::size_t cap = 65536);

/// All subgroups of a finite product group, as element lists.
std::vector<std::vector<ProductElt>> all_subgroups(const ProductGroup& g, std::size_t cap = 4096);

/// Z2-dimension of the image of <gens> in Pi / Pi_+ (vector of reflection
/// bits over the dihedral factors).
int reflection_rank(const std::vector<ProductElt>& gens);

struct NormalizerReport {
  ProductElt a;
  bool centralizes_subgroup = false;  // h^{n/4} a^-1 centralizes <A>
  bool commutators_central = false;   // [h^{n/4} a^-1, b] central for all b
  bool subgroup_fully_enumerated = true;
};

/// Quarter-turn construction: with r the reflection rank of <a_gens> and
/// rr = h^{n/2^{r+2}}, returns a = prod over eps in {0,1}^r of
/// [rr, s1^eps1 ... sr^epsr] and verifies both conclusions.  Throws when
/// 2^{r+3} * mu does not divide n, a dihedral order does not divide n, or h
/// does not normalize <a_gens>.
NormalizerReport normalizer_element(const ProductGroup& g, const std::vector<ProductElt>& a_gens,
                                    const ProductElt& h, long long n,
                                    std::size_t enum_cap = 512);

/// Chain (g_0, ..., g_m) with g_{i+1} = conj * g_i * conj^-1.
struct Chain {
  std::vector<ProductElt> elems;
  ProductElt conj;
};

Chain make_chain(const ProductGroup& g, const ProductElt& g0, const ProductElt& h, int length);

/// Verifies the conjugation law on an externally supplied chain.
bool verify_chain(const ProductGroup& g, const Chain& c);

struct ChainVerdict {
  bool ok = false;
  std::string witness;
};

/// With u_i = g_i g_{i+1} ... g_{i+mu-1}, checks u3 u2^-1 u0 u1^-1 == 1 and
/// reports the expression of g_{mu+2} in <g_0, ..., g_{mu+1}>.  Throws when
/// the chain is shorter than mu + 2.
ChainVerdict chain_identity_check(const ProductGroup& g, const Chain& c, int mu);

/// Embedding data for a dihedral pair (E, C) of type (model, p): the map
/// gens -> images must extend to an injective homomorphism
/// E -> Q x D_p^k x model, where Q plays E/C via quotient_map.
struct DihedralPairEmbedding {
  FiniteGroupTable e;
  std::vector<int> c;             // subgroup of E, must be normal
  ProductGroup target;            // front = Q, dihedral part, optional model
  std::vector<int> quotient_map;  // E -> Q (front factor), size e.order
  std::vector<int> gens;          // generators of E
  std::vector<ProductElt> images;
};

struct EmbeddingVerdict {
  bool ok = false;
  std::string witness;
};

EmbeddingVerdict verify_dihedral_pair_embedding(const DihedralPairEmbedding& spec);

/// Plain injective-homomorphism check of a table group into a product group.
EmbeddingVerdict verify_embedding(const FiniteGroupTable& e, const std::vector<int>& gens,
                                  const ProductGroup& target,
                                  const std::vector<ProductElt>& images);

}  // namespace scq
