#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "scq/dihedral.hpp"
#include "scq/word.hpp"

namespace scq {

/// Factor of a free product: a finite table group or a free group of the
/// given rank.
struct Factor {
  std::shared_ptr<const FiniteGroupTable> table;  // null for a free factor
  int free_rank = 0;
};

struct FreeProduct {
  std::vector<Factor> factors;
};

/// Syllable: element of one factor (table index or free-group word).
struct Syllable {
  int factor = 0;
  int elt = 0;  // table factor
  Word w;       // free factor

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Normal form in a free product: no identity syllables, adjacent syllables
/// in different factors.
struct GoGWord {
  std::vector<Syllable> syllables;

  friend bool operator==(const GoGWord&, const GoGWord&) = default;
};

GoGWord gog_normal_form(const FreeProduct& s, const std::vector<Syllable>& raw);
GoGWord gog_mul(const FreeProduct& s, const GoGWord& a, const GoGWord& b);
GoGWord gog_inv(const FreeProduct& s, const GoGWord& a);
std::string gog_str(const FreeProduct& s, const GoGWord& a);

enum class IsomType { Elliptic, Loxodromic };

struct Classification {
  IsomType type = IsomType::Elliptic;
  int translation_length = 0;  // cyclically reduced syllable length
};

Classification classify(const FreeProduct& s, const GoGWord& g);

enum class ElemClass { NonElementary, Elliptic, LoxodromicElementary, Undecided };

/// Classification of the subgroup generated by a set of elements, by bounded
/// search in the Bass-Serre tree.  Requires all factors finite.
ElemClass elementary_subgroup(const FreeProduct& s, const std::vector<GoGWord>& gens,
                              int ball_cap = 16);

inline ElemClass elementary_2gen(const FreeProduct& s, const GoGWord& g, const GoGWord& h,
                                 int ball_cap = 16) {
  return elementary_subgroup(s, {g, h}, ball_cap);
}

struct NuScanReport {
  long long pairs_checked = 0;
  long long chains_elementary = 0;  // pairs with (g, hgh^-1, h^2gh^-2) elementary
  long long violations = 0;         // chain elementary but <g,h> not
  long long undecided = 0;
};

/// Samples pairs (g, h) with h loxodromic and checks the implication
/// "(g, hgh^-1, h^2gh^-2) elementary => <g, h> elementary"; also runs an
/// exhaustive scan over words of at most exhaustive_syllables syllables.
NuScanReport nu_scan(const FreeProduct& s, int syllable_bound, int samples,
                     unsigned seed = 12345, int exhaustive_syllables = 3);

/// Element of the wreath group Z2 wr Z: finite support function Z -> Z2 plus
/// a shift.
struct WreathElt {
  std::set<long long> support;
  long long shift = 0;

  friend bool operator==(const WreathElt&, const WreathElt&) = default;
};

WreathElt wreath_mul(const WreathElt& a, const WreathElt& b);
WreathElt wreath_inv(const WreathElt& a);

/// Verification bundle for the HNN example certifying nu_stg >= m: the chain
/// g_0..g_m with conjugator h, pushed through the epimorphism onto Z2 wr Z.
struct HnnWitness {
  int m = 0;
  std::vector<WreathElt> chain_images;  // images of g_0..g_m
  WreathElt h_image;
  bool chain_property = true;        // h g_i h^-1 = g_{i+1} in the image
  bool images_independent = true;    // images generate Z2^{m+1}
  std::vector<std::size_t> staged_supports;  // supports of the staged products
};

HnnWitness hnn_witness(int m);

/// Amalgamated product A *_H B over a common finite subgroup, with coset
/// transversal data.
struct Amalgam {
  std::shared_ptr<const FiniteGroupTable> a;
  std::shared_ptr<const FiniteGroupTable> b;
  std::vector<int> sub_a;  // elements of H inside A (H indexed by position)
  std::vector<int> sub_b;  // image of each H element inside B
  std::vector<int> transversal_a;  // left coset reps of H in A, identity first
  std::vector<int> transversal_b;

  // validated caches, built by validate()
  std::vector<int> coset_rep_a;  // per element of A: index into transversal_a
  std::vector<int> h_part_a;     // per element of A: H index with a = t * h
  std::vector<int> coset_rep_b;
  std::vector<int> h_part_b;
  void validate();
};

/// Normal form h * t1 * t2 * ... with alternating non-trivial coset reps and
/// a leading H part.
struct AmalgamWord {
  int h = 0;                       // index into H
  std::vector<std::pair<bool, int>> reps;  // (true = factor A, transversal index)

  friend bool operator==(const AmalgamWord&, const AmalgamWord&) = default;
};

AmalgamWord amalgam_id();
AmalgamWord amalgam_from_a(const Amalgam& s, int a);
AmalgamWord amalgam_from_b(const Amalgam& s, int b);
AmalgamWord amalgam_mul(const Amalgam& s, const AmalgamWord& x, const AmalgamWord& y);
AmalgamWord amalgam_inv(const Amalgam& s, const AmalgamWord& x);

/// Tree translation length: cyclically reduced syllable length of the
/// alternating part.
Classification amalgam_classify(const Amalgam& s, const AmalgamWord& x);

}  // namespace scq
