#pragma once

#include <optional>
#include <unordered_set>
#include <vector>

#include "scq/rat.hpp"
#include "scq/word.hpp"

namespace scq {

/// Vertices of the Cayley tree of F_rank are reduced words; the metric is
/// d(u, v) = |reduce(u^-1 v)|.
int dist(const Word& u, const Word& v);

/// (x|y)_z = (d(x,z) + d(y,z) - d(x,y)) / 2, exact (integer or half-integer).
Rat gromov_product(const Word& x, const Word& y, const Word& z);

struct TranslationLengths {
  int norm = 0;    // inf_x d(gx, x)
  int stable = 0;  // lim d(g^n x, x)/n; equals norm on a tree
};
TranslationLengths translation_lengths(const Word& g);

/// A bi-infinite geodesic: the vertex set {basepoint * p : p prefix of
/// period^inf or of period^-inf}, with period primitive and cyclically
/// reduced.  Normalized lines compare equal iff they are the same vertex set.
struct PeriodicLine {
  Word basepoint;
  Word period;

  friend bool operator==(const PeriodicLine&, const PeriodicLine&) = default;
};

/// Axis of a loxodromic g.  Throws on elliptic (trivial) input.
PeriodicLine axis(const Word& g);

/// Normalizes so the basepoint is the vertex of the line closest to 1 and the
/// period is the lex-least of the two direction labels at that vertex.
PeriodicLine normalize_line(const PeriodicLine& l);

/// Translate of a line by g.
PeriodicLine translate_line(const Word& g, const PeriodicLine& l);

/// Vertices of the line at signed arc positions [-steps, steps] from the
/// basepoint.
std::vector<Word> line_vertices(const PeriodicLine& l, int steps);

/// Edge-length of l1 intersect l2; nullopt iff the lines coincide.
std::optional<int> axis_overlap(const PeriodicLine& l1, const PeriodicLine& l2);

struct MovQuery {
  int rank = 2;
  std::vector<Word> s;
  int d = 0;
  int ball_radius = 0;
};

/// All vertices x with |x| <= ball_radius and d(gx, x) < d for every g in S.
std::vector<Word> mov_set(const MovQuery& q);

/// All reduced words of length <= radius, in DFS order.
std::vector<Word> ball(int rank, int radius);

struct MargulisReport {
  int overlap = 0;
  Rat bound;
  Rat slack;
  bool pass = false;
};

/// Checks overlap(A_g, A_h) <= |g| + |h| + nu*max(|g|,|h|) + A + 191*delta
/// for a non-elementary pair.  Throws on an elementary pair (conjugate
/// primitive roots up to inversion).
MargulisReport margulis_check(const Word& g, const Word& h, int nu = 1, int a = 0,
                              Rat delta = Rat(0));

}  // namespace scq
