#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "specht/partition.hpp"
#include "specht/residue.hpp"
#include "specht/tableau.hpp"

namespace specht {

/// A lattice path in the type A_1 weight line: pi(0) = 0 and every step is
/// +-1. pi(a) is the first-column count minus the second-column count of the
/// corresponding two-column tableau. Dominant means pi(a) >= 0 throughout;
/// dominant paths correspond to standard tableaux, arbitrary paths to column
/// tableaux. Walls sit at the values m*e - 1 for m > 0.
class Path2 {
 public:
  Path2() : values_{0} {}

  static Path2 from_steps(const std::vector<int>& steps);
  /// Accepts the "+-" and "12" alphabets (1 = up, 2 = down).
  static Path2 from_word(std::string_view word);
  /// Requires a shape with at most two columns.
  static Path2 from_tableau(const StandardTableau& t);

  int length() const { return static_cast<int>(values_.size()) - 1; }
  int value(int a) const { return values_[a]; }
  const std::vector<int>& values() const { return values_; }
  int step(int a) const { return values_[a + 1] - values_[a]; }
  int endpoint() const { return values_.back(); }
  int max_value() const;

  bool dominant() const;
  /// The two-column shape (2^x, 1^y) with y = endpoint; requires dominance.
  Partition shape() const;
  /// Requires dominance.
  StandardTableau to_tableau() const;

  /// Residue word of the corresponding column tableau; dominance not needed.
  ResidueSequence residues(int e) const;

  /// Path degree: sum of the step degrees. Requires dominance.
  int degree(int e) const;

  std::string word(char up = '+', char down = '-') const;

  /// Tail reflection across the wall at m*e - 1; pi(a) must lie on it.
  Path2 reflect_tail(int a, int m, int e) const;
  /// Reflects the segment (r, s] across the wall at m*e - 1; both endpoint
  /// values must lie on it, so the path rejoins itself.
  Path2 reflect_range(int r, int s, int m, int e) const;

  bool operator==(const Path2&) const = default;
  auto operator<=>(const Path2&) const = default;

 private:
  std::vector<int> values_;  // values_[a] = pi(a), values_[0] = 0
};

/// Degree of a single +-1 step u -> v in the A_1 picture: +1 when leaving a
/// wall downwards, -1 when arriving at a wall from above, 0 otherwise.
int step_degree2(int u, int v, int e);

/// Sum of step degrees over consecutive values; works on any segment.
int walk_degree(std::span<const int> values, int e);

/// B(pi): ascending positions b with pi(b) on a wall. Requires dominance.
std::vector<int> wall_hits(const Path2& pi, int e);

/// A wall-to-wall segment pi[begin, end] with equal endpoint values on the
/// wall at wall*e - 1, interior strictly on one side.
struct Arc {
  int begin = 0;
  int end = 0;
  int wall = 0;
  bool positive = false;

  bool operator==(const Arc&) const = default;
};

struct ArcSets {
  std::vector<Arc> positive;
  std::vector<Arc> negative;
};

/// (A+(pi), A-(pi)). Requires dominance.
ArcSets arcs(const Path2& pi, int e);

/// All dominant paths of length n, ordered lexicographically by step word
/// with up before down.
std::vector<Path2> all_dominant_paths(int n);

/// A path in the type A_{k-1} weight lattice recorded as the column index of
/// each step; the point after a steps is the count vector c_{a,*}. Dominant
/// means c_{a,j} >= c_{a,j+1} for all a, j.
class PathK {
 public:
  PathK(int k, std::vector<int> steps);

  static PathK from_tableau(const StandardTableau& t, int k);
  static PathK from_path2(const Path2& pi);

  int k() const { return k_; }
  int length() const { return static_cast<int>(steps_.size()); }
  const std::vector<int>& steps() const { return steps_; }

  /// c_{a,j} for j = 1..k (0-indexed vector).
  std::vector<int> counts(int a) const;
  bool dominant() const;
  Partition shape() const;

  /// Node list of the corresponding column tableau (entry a+1 in column
  /// steps()[a]); defined for any path.
  std::vector<Node> column_nodes() const;
  /// Requires dominance.
  StandardTableau to_tableau() const;
  /// k must be 2.
  Path2 to_path2() const;

  ResidueSequence residues(int e) const;

  /// Requires dominance.
  int degree(int e) const;

  /// Tail reflection across H_{alpha,m} for alpha = eps_r - eps_t (r < t);
  /// the point after a steps must lie on that wall. At step level this swaps
  /// the two column labels in the tail.
  PathK reflect_tail(int a, int r, int t, int m, int e) const;

  bool operator==(const PathK&) const = default;

 private:
  int k_;
  std::vector<int> steps_;
};

/// deg_e(u, v) for count vectors with v - u a single epsilon step, summing
/// the wall-crossing contributions over all positive roots eps_r - eps_t.
int step_degree_k(std::span<const int> u, std::span<const int> v, int e);

}  // namespace specht
