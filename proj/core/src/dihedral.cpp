#include "scq/dihedral.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace scq {

namespace {

long long mod_norm(long long k, int m) {
  if (m == 0) return k;
  long long r = k % m;
  return r < 0 ? r + m : r;
}

}  // namespace

DihedralElt d_id(int order) { return {order, 0, false}; }

DihedralElt d_rot(int order, long long k) { return {order, mod_norm(k, order), false}; }

DihedralElt d_refl(int order, long long k) { return {order, mod_norm(k, order), true}; }

DihedralElt d_mul(const DihedralElt& a, const DihedralElt& b) {
  if (a.order != b.order) throw std::invalid_argument("dihedral order mismatch");
  DihedralElt r;
  r.order = a.order;
  r.rot = mod_norm(a.rot + (a.refl ? -b.rot : b.rot), a.order);
  r.refl = a.refl != b.refl;
  return r;
}

DihedralElt d_inv(const DihedralElt& a) {
  if (a.refl) return a;
  return {a.order, mod_norm(-a.rot, a.order), false};
}

DihedralElt d_pow(const DihedralElt& a, long long k) {
  if (k < 0) return d_pow(d_inv(a), -k);
  DihedralElt r = d_id(a.order);
  DihedralElt base = a;
  while (k > 0) {
    if (k & 1) r = d_mul(r, base);
    base = d_mul(base, base);
    k >>= 1;
  }
  return r;
}

FiniteGroupTable FiniteGroupTable::from_table(int order, std::vector<int> flat) {
  if (order < 1 || flat.size() != static_cast<std::size_t>(order) * order)
    throw std::invalid_argument("bad table size");
  for (int v : flat)
    if (v < 0 || v >= order) throw std::invalid_argument("table entry out of range");
  FiniteGroupTable g;
  g.order = order;
  g.table = std::move(flat);
  // identity
  int id = -1;
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x)
      if (g.mul(e, x) != x || g.mul(x, e) != x) ok = false;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw std::invalid_argument("table has no identity");
  g.identity = id;
  // inverses
  g.inv.assign(order, -1);
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y)
      if (g.mul(x, y) == id && g.mul(y, x) == id) {
        g.inv[x] = y;
        break;
      }
    if (g.inv[x] < 0) throw std::invalid_argument("table element has no inverse");
  }
  // associativity: full up to order 64, deterministic sample above
  auto check = [&](int a, int b, int c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      throw std::invalid_argument("table is not associative");
  };
  if (order <= 64) {
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b)
        for (int c = 0; c < order; ++c) check(a, b, c);
  } else {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    for (int i = 0; i < 200000; ++i) {
      s = s * 6364136223846793005ull + 1442695040888963407ull;
      int a = static_cast<int>((s >> 16) % order);
      int b = static_cast<int>((s >> 32) % order);
      int c = static_cast<int>((s >> 48) % order);
      check(a, b, c);
    }
  }
  // exponent = lcm of element orders
  long long exp = 1;
  for (int x = 0; x < order; ++x) {
    int y = x;
    long long k = 1;
    while (y != id) {
      y = g.mul(y, x);
      ++k;
    }
    exp = std::lcm(exp, k);
  }
  g.exponent = exp;
  return g;
}

FiniteGroupTable FiniteGroupTable::trivial() { return from_table(1, {0}); }

FiniteGroupTable FiniteGroupTable::cyclic(int m) {
  std::vector<int> t(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[a * m + b] = (a + b) % m;
  return from_table(m, std::move(t));
}

FiniteGroupTable FiniteGroupTable::dihedral(int m) {
  if (m < 1) throw std::invalid_argument("dihedral table needs m >= 1");
  int n = 2 * m;
  // index = rot + m*refl
  auto enc = [m](const DihedralElt& e) { return static_cast<int>(e.rot) + m * (e.refl ? 1 : 0); };
  auto dec = [m](int i) { return DihedralElt{m, i % m, i >= m}; };
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = enc(d_mul(dec(a), dec(b)));
  return from_table(n, std::move(t));
}

FiniteGroupTable FiniteGroupTable::direct_product(const FiniteGroupTable& a,
                                                  const FiniteGroupTable& b) {
  int n = a.order * b.order;
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int ax = x / b.order, bx = x % b.order;
      int ay = y / b.order, by = y % b.order;
      t[x * n + y] = a.mul(ax, ay) * b.order + b.mul(bx, by);
    }
  return from_table(n, std::move(t));
}

long long ProductGroup::order() const {
  long long n = 1;
  if (front) n *= front->order;
  for (int p : dihedral_orders) {
    if (p == 0) return 0;  // infinite
    n *= 2LL * p;
  }
  if (back) n *= back->order;
  return n;
}

long long ProductGroup::model_exponent() const {
  long long mu = 1;
  if (front) mu = std::lcm(mu, front->exponent);
  if (back) mu = std::lcm(mu, back->exponent);
  return mu;
}

std::size_t ProductEltHash::operator()(const ProductElt& e) const noexcept {
  std::size_t h = static_cast<std::size_t>(e.front_idx) * 0x9e3779b9u + e.back_idx;
  for (const auto& d : e.comps) {
    h = h * 1000003u + static_cast<std::size_t>(d.rot * 2 + (d.refl ? 1 : 0));
  }
  return h;
}

ProductElt p_id(const ProductGroup& g) {
  ProductElt e;
  e.front_idx = g.front ? g.front->identity : 0;
  for (int p : g.dihedral_orders) e.comps.push_back(d_id(p));
  e.back_idx = g.back ? g.back->identity : 0;
  return e;
}

namespace {

void check_shape(const ProductGroup& g, const ProductElt& a) {
  if (a.comps.size() != g.dihedral_orders.size())
    throw std::invalid_argument("product element shape mismatch");
  for (std::size_t i = 0; i < a.comps.size(); ++i)
    if (a.comps[i].order != g.dihedral_orders[i])
      throw std::invalid_argument("product element order mismatch");
}

}  // namespace

ProductElt p_mul(const ProductGroup& g, const ProductElt& a, const ProductElt& b) {
  check_shape(g, a);
  check_shape(g, b);
  ProductElt r;
  r.front_idx = g.front ? g.front->mul(a.front_idx, b.front_idx) : 0;
  r.comps.reserve(a.comps.size());
  for (std::size_t i = 0; i < a.comps.size(); ++i)
    r.comps.push_back(d_mul(a.comps[i], b.comps[i]));
  r.back_idx = g.back ? g.back->mul(a.back_idx, b.back_idx) : 0;
  return r;
}

ProductElt p_inv(const ProductGroup& g, const ProductElt& a) {
  check_shape(g, a);
  ProductElt r;
  r.front_idx = g.front ? g.front->inv[a.front_idx] : 0;
  for (const auto& d : a.comps) r.comps.push_back(d_inv(d));
  r.back_idx = g.back ? g.back->inv[a.back_idx] : 0;
  return r;
}

ProductElt p_pow(const ProductGroup& g, const ProductElt& a, long long k) {
  if (k < 0) return p_pow(g, p_inv(g, a), -k);
  ProductElt r = p_id(g);
  ProductElt base = a;
  while (k > 0) {
    if (k & 1) r = p_mul(g, r, base);
    base = p_mul(g, base, base);
    k >>= 1;
  }
  return r;
}

ProductElt p_comm(const ProductGroup& g, const ProductElt& a, const ProductElt& b) {
  return p_mul(g, p_mul(g, a, b), p_mul(g, p_inv(g, a), p_inv(g, b)));
}

std::vector<ProductElt> group_generators(const ProductGroup& g) {
  std::vector<ProductElt> out;
  ProductElt id = p_id(g);
  if (g.front) {
    for (int i = 0; i < g.front->order; ++i) {
      if (i == g.front->identity) continue;
      ProductElt e = id;
      e.front_idx = i;
      out.push_back(e);
    }
  }
  for (std::size_t i = 0; i < g.dihedral_orders.size(); ++i) {
    ProductElt rot = id;
    rot.comps[i] = d_rot(g.dihedral_orders[i], 1);
    if (!(rot == id)) out.push_back(rot);
    ProductElt refl = id;
    refl.comps[i] = d_refl(g.dihedral_orders[i]);
    out.push_back(refl);
  }
  if (g.back) {
    for (int i = 0; i < g.back->order; ++i) {
      if (i == g.back->identity) continue;
      ProductElt e = id;
      e.back_idx = i;
      out.push_back(e);
    }
  }
  return out;
}

std::vector<ProductElt> group_elements(const ProductGroup& g, std::size_t cap) {
  long long n = g.order();
  if (n == 0) throw std::invalid_argument("infinite product group");
  if (static_cast<std::size_t>(n) > cap) throw std::invalid_argument("group order above cap");
  std::vector<ProductElt> out;
  out.reserve(static_cast<std::size_t>(n));
  ProductElt cur = p_id(g);
  // mixed-radix counter over (front, comps..., back)
  std::vector<long long> radix;
  radix.push_back(g.front ? g.front->order : 1);
  for (int p : g.dihedral_orders) radix.push_back(2LL * p);
  radix.push_back(g.back ? g.back->order : 1);
  std::vector<long long> digit(radix.size(), 0);
  for (long long c = 0; c < n; ++c) {
    ProductElt e;
    e.front_idx = static_cast<int>(digit[0]);
    for (std::size_t i = 0; i < g.dihedral_orders.size(); ++i) {
      int p = g.dihedral_orders[i];
      long long d = digit[i + 1];
      e.comps.push_back(DihedralElt{p, d % p, d >= p});
    }
    e.back_idx = static_cast<int>(digit.back());
    out.push_back(e);
    for (std::size_t i = digit.size(); i-- > 0;) {
      if (++digit[i] < radix[i]) break;
      digit[i] = 0;
    }
  }
  return out;
}

std::vector<ProductElt> subgroup_closure(const ProductGroup& g,
                                         const std::vector<ProductElt>& gens, std::size_t cap) {
  std::unordered_set<ProductElt, ProductEltHash> seen;
  std::vector<ProductElt> elems;
  auto add = [&](const ProductElt& e) {
    if (seen.insert(e).second) {
      elems.push_back(e);
      return true;
    }
    return false;
  };
  add(p_id(g));
  for (const auto& e : gens) add(e);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems.size() > cap) throw std::runtime_error("subgroup closure cap exceeded");
    ProductElt x = elems[i];
    add(p_inv(g, x));
    for (std::size_t j = 0; j < elems.size(); ++j) {
      add(p_mul(g, x, elems[j]));
      add(p_mul(g, elems[j], x));
      if (elems.size() > cap) throw std::runtime_error("subgroup closure cap exceeded");
    }
  }
  return elems;
}

std::vector<std::vector<ProductElt>> all_subgroups(const ProductGroup& g, std::size_t cap) {
  std::vector<ProductElt> elems = group_elements(g, cap);
  int n = static_cast<int>(elems.size());
  std::unordered_map<ProductElt, int, ProductEltHash> idx;
  for (int i = 0; i < n; ++i) idx[elems[i]] = i;
  std::vector<int> mult(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mult[a * n + b] = idx.at(p_mul(g, elems[a], elems[b]));
  int id = idx.at(p_id(g));

  auto closure = [&](std::vector<int> start) {
    std::vector<char> inb(n, 0);
    std::vector<int> members;
    auto add = [&](int x) {
      if (!inb[x]) {
        inb[x] = 1;
        members.push_back(x);
      }
    };
    add(id);
    for (int x : start) add(x);
    for (std::size_t i = 0; i < members.size(); ++i) {
      int x = members[i];
      for (std::size_t j = 0; j <= i; ++j) {
        add(mult[x * n + members[j]]);
        add(mult[members[j] * n + x]);
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  };

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  queue.push_back(closure({}));
  seen.insert(queue.front());
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<int> h = queue[qi];
    std::vector<char> inh(n, 0);
    for (int x : h) inh[x] = 1;
    for (int gx = 0; gx < n; ++gx) {
      if (inh[gx]) continue;
      std::vector<int> ext = h;
      ext.push_back(gx);
      auto c = closure(ext);
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  std::vector<std::vector<ProductElt>> out;
  out.reserve(queue.size());
  for (const auto& h : queue) {
    std::vector<ProductElt> sub;
    sub.reserve(h.size());
    for (int x : h) sub.push_back(elems[x]);
    out.push_back(std::move(sub));
  }
  return out;
}

int reflection_rank(const std::vector<ProductElt>& gens) {
  std::vector<std::uint64_t> basis;
  for (const auto& e : gens) {
    if (e.comps.size() > 64) throw std::invalid_argument("too many dihedral factors");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < e.comps.size(); ++i)
      if (e.comps[i].refl) v |= 1ull << i;
    for (std::uint64_t b : basis) v = std::min(v, v ^ b);
    if (v) basis.push_back(v);
  }
  return static_cast<int>(basis.size());
}

NormalizerReport normalizer_element(const ProductGroup& g, const std::vector<ProductElt>& a_gens,
                                    const ProductElt& h, long long n, std::size_t enum_cap) {
  for (int p : g.dihedral_orders) {
    if (p == 0) throw std::invalid_argument("infinite dihedral factor unsupported");
    if (n % p != 0) throw std::invalid_argument("a dihedral order does not divide n");
  }
  long long mu = g.model_exponent();
  int r = reflection_rank(a_gens);
  if (r + 3 > 62 || n % ((1LL << (r + 3)) * mu) != 0)
    throw std::invalid_argument("2^{r+3} mu does not divide n");

  NormalizerReport rep;
  std::vector<ProductElt> subgroup;
  try {
    subgroup = subgroup_closure(g, a_gens, enum_cap);
  } catch (const std::runtime_error&) {
    rep.subgroup_fully_enumerated = false;
    subgroup = a_gens;
  }
  {
    std::unordered_set<ProductElt, ProductEltHash> members(subgroup.begin(), subgroup.end());
    members.insert(p_id(g));
    const std::vector<ProductElt>& to_check = rep.subgroup_fully_enumerated ? subgroup : a_gens;
    for (const auto& x : to_check)
      if (!members.count(p_mul(g, p_mul(g, h, x), p_inv(g, h))))
        throw std::invalid_argument("h does not normalize <A>");
  }

  // rank-realizing generators: greedy GF(2) elimination in input order
  std::vector<ProductElt> s;
  {
    std::vector<std::uint64_t> basis;
    for (const auto& e : a_gens) {
      std::uint64_t v = 0;
      for (std::size_t i = 0; i < e.comps.size(); ++i)
        if (e.comps[i].refl) v |= 1ull << i;
      std::uint64_t w = v;
      for (std::uint64_t b : basis) w = std::min(w, w ^ b);
      if (w) {
        basis.push_back(w);
        s.push_back(e);
      }
    }
  }

  ProductElt rr = p_pow(g, h, n >> (r + 2));
  ProductElt a = p_id(g);
  for (std::uint64_t eps = 0; eps < (1ull << r); ++eps) {
    ProductElt word = p_id(g);
    for (int i = 0; i < r; ++i)
      if (eps & (1ull << (r - 1 - i))) word = p_mul(g, word, s[i]);  // s1^e1 ... sr^er, e1 first
    a = p_mul(g, a, p_comm(g, rr, word));
  }
  rep.a = a;

  ProductElt c = p_mul(g, p_pow(g, h, n / 4), p_inv(g, a));
  rep.centralizes_subgroup = true;
  for (const auto& x : subgroup)
    if (!(p_mul(g, c, x) == p_mul(g, x, c))) {
      rep.centralizes_subgroup = false;
      break;
    }

  std::vector<ProductElt> gens = group_generators(g);
  std::vector<ProductElt> bs;
  long long order = g.order();
  if (order > 0 && static_cast<std::size_t>(order) <= 4096)
    bs = group_elements(g);
  else
    bs = gens;
  rep.commutators_central = true;
  for (const auto& b : bs) {
    ProductElt z = p_comm(g, c, b);
    for (const auto& t : gens)
      if (!(p_mul(g, z, t) == p_mul(g, t, z))) {
        rep.commutators_central = false;
        break;
      }
    if (!rep.commutators_central) break;
  }
  return rep;
}

Chain make_chain(const ProductGroup& g, const ProductElt& g0, const ProductElt& h, int length) {
  Chain c;
  c.conj = h;
  c.elems.push_back(g0);
  for (int i = 0; i < length; ++i)
    c.elems.push_back(p_mul(g, p_mul(g, h, c.elems.back()), p_inv(g, h)));
  return c;
}

bool verify_chain(const ProductGroup& g, const Chain& c) {
  for (std::size_t i = 0; i + 1 < c.elems.size(); ++i)
    if (!(c.elems[i + 1] == p_mul(g, p_mul(g, c.conj, c.elems[i]), p_inv(g, c.conj))))
      return false;
  return true;
}

ChainVerdict chain_identity_check(const ProductGroup& g, const Chain& c, int mu) {
  if (mu < 1) throw std::invalid_argument("mu must be positive");
  if (c.elems.size() < static_cast<std::size_t>(mu) + 3)
    throw std::invalid_argument("chain too short for mu");
  auto u = [&](int i) {
    ProductElt p = p_id(g);
    for (int t = i; t < i + mu; ++t) p = p_mul(g, p, c.elems[t]);
    return p;
  };
  ProductElt lhs =
      p_mul(g, p_mul(g, u(3), p_inv(g, u(2))), p_mul(g, u(0), p_inv(g, u(1))));
  ChainVerdict v;
  v.ok = lhs == p_id(g);
  if (v.ok) {
    std::ostringstream os;
    os << "g_" << (mu + 2) << " = (g_3...g_" << (mu + 1) << ")^-1 u_1 u_0^-1 u_2 with u_i = "
       << "g_i...g_" << "{i+" << (mu - 1) << "}";
    v.witness = os.str();
  } else {
    v.witness = "u3 u2^-1 u0 u1^-1 != 1";
  }
  return v;
}

namespace {

struct ExtensionResult {
  bool generated = false;
  std::vector<ProductElt> images;  // per element of E
};

// Extends gens -> images over all of E by BFS on right multiplication.
ExtensionResult extend_map(const FiniteGroupTable& e, const std::vector<int>& gens,
                           const ProductGroup& target, const std::vector<ProductElt>& images) {
  ExtensionResult res;
  res.images.assign(e.order, ProductElt{});
  std::vector<char> known(e.order, 0);
  res.images[e.identity] = p_id(target);
  known[e.identity] = 1;
  std::vector<int> frontier = {e.identity};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        int y = e.mul(x, gens[k]);
        if (!known[y]) {
          known[y] = 1;
          res.images[y] = p_mul(target, res.images[x], images[k]);
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  res.generated = std::all_of(known.begin(), known.end(), [](char c) { return c != 0; });
  return res;
}

}  // namespace

EmbeddingVerdict verify_embedding(const FiniteGroupTable& e, const std::vector<int>& gens,
                                  const ProductGroup& target,
                                  const std::vector<ProductElt>& images) {
  if (gens.size() != images.size()) throw std::invalid_argument("gens/images size mismatch");
  EmbeddingVerdict v;
  auto ext = extend_map(e, gens, target, images);
  if (!ext.generated) {
    v.witness = "generators do not generate E";
    return v;
  }
  for (int x = 0; x < e.order; ++x)
    for (int y = 0; y < e.order; ++y)
      if (!(p_mul(target, ext.images[x], ext.images[y]) == ext.images[e.mul(x, y)])) {
        v.witness = "not a homomorphism at pair (" + std::to_string(x) + "," +
                    std::to_string(y) + ")";
        return v;
      }
  std::unordered_set<ProductElt, ProductEltHash> seen;
  for (int x = 0; x < e.order; ++x)
    if (!seen.insert(ext.images[x]).second) {
      // kernel witness: some nontrivial z with trivial image
      for (int z = 0; z < e.order; ++z)
        if (z != e.identity && ext.images[z] == p_id(target)) {
          v.witness = "kernel contains element " + std::to_string(z);
          return v;
        }
      v.witness = "map is not injective";
      return v;
    }
  v.ok = true;
  return v;
}

EmbeddingVerdict verify_dihedral_pair_embedding(const DihedralPairEmbedding& spec) {
  const FiniteGroupTable& e = spec.e;
  EmbeddingVerdict v;
  // C must be a normal subgroup
  std::vector<char> inc(e.order, 0);
  for (int x : spec.c) {
    if (x < 0 || x >= e.order) throw std::invalid_argument("C element out of range");
    inc[x] = 1;
  }
  if (!inc[e.identity]) {
    v.witness = "C does not contain the identity";
    return v;
  }
  for (int x : spec.c) {
    if (!inc[e.inv[x]]) {
      v.witness = "C not closed under inversion";
      return v;
    }
    for (int y : spec.c)
      if (!inc[e.mul(x, y)]) {
        v.witness = "C not closed under multiplication";
        return v;
      }
  }
  for (int x : spec.c)
    for (int t = 0; t < e.order; ++t)
      if (!inc[e.mul(e.mul(t, x), e.inv[t])]) {
        v.witness = "C is not normal in E";
        return v;
      }
  // quotient_map must be an epimorphism E -> Q with kernel exactly C
  if (!spec.target.front) throw std::invalid_argument("target has no quotient factor Q");
  const FiniteGroupTable& q = *spec.target.front;
  if (spec.quotient_map.size() != static_cast<std::size_t>(e.order))
    throw std::invalid_argument("quotient_map size mismatch");
  for (int x = 0; x < e.order; ++x)
    for (int y = 0; y < e.order; ++y)
      if (q.mul(spec.quotient_map[x], spec.quotient_map[y]) != spec.quotient_map[e.mul(x, y)]) {
        v.witness = "quotient_map is not a homomorphism";
        return v;
      }
  std::vector<char> hit(q.order, 0);
  for (int x = 0; x < e.order; ++x) hit[spec.quotient_map[x]] = 1;
  if (!std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; })) {
    v.witness = "quotient_map is not surjective";
    return v;
  }
  for (int x = 0; x < e.order; ++x) {
    bool ker = spec.quotient_map[x] == q.identity;
    if (ker != static_cast<bool>(inc[x])) {
      v.witness = "kernel of quotient_map differs from C at " + std::to_string(x);
      return v;
    }
  }
  // first component of each image must agree with the quotient map
  for (std::size_t k = 0; k < spec.gens.size(); ++k)
    if (spec.images[k].front_idx != spec.quotient_map[spec.gens[k]]) {
      v.witness = "image of generator " + std::to_string(spec.gens[k]) +
                  " disagrees with quotient_map in the Q factor";
      return v;
    }
  return verify_embedding(e, spec.gens, spec.target, spec.images);
}

}  // namespace scq
