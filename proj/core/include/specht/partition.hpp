#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "specht/residue.hpp"

namespace specht {

/// A box position in a Young diagram, 1-based, rows numbered downwards.
struct Node {
  int row = 0;
  int col = 0;

  bool operator==(const Node&) const = default;
  auto operator<=>(const Node&) const = default;
};

/// res(a, b) = b - a mod e.
Residue node_residue(const Node& node, int e);

/// A partition: weakly decreasing sequence of positive integers. The empty
/// partition is the default value.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Accepts comma-separated parts with exponent sugar: "2,2,1,1",
  /// "2^4,1^21", or "" / "0" for the empty partition.
  static Partition parse(std::string_view text);

  int n() const { return n_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  /// 1-based part, 0 beyond the last row.
  int part(int r) const;
  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const;
  /// Length of column j (1-based).
  int column_length(int j) const;
  bool contains(const Node& node) const;

  /// Dominance order; both partitions must have the same size.
  bool dominates(const Partition& other) const;

  bool two_column() const { return parts_.empty() || parts_.front() <= 2; }
  /// Number of parts equal to 2 (valid for two-column shapes).
  int two_count() const;
  /// Number of parts equal to 1 (valid for two-column shapes).
  int one_count() const;

  /// Rendering with exponent sugar, e.g. "2^4,1^21"; empty as "-".
  std::string str() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// lambda_r - lambda_{r+1} < e for all r (with the trailing zero part).
bool is_e_restricted(const Partition& lambda, int e);

/// All (2^x, 1^y) with 2x + y = n, ordered by descending x.
std::vector<Partition> partitions_two_column(int n);

/// Builds (2^x, 1^y); x, y >= 0.
Partition two_column_partition(int x, int y);

/// All partitions of n, in descending lexicographic order.
std::vector<Partition> partitions_all(int n);

std::vector<Node> addable_nodes(const Partition& lambda);
std::vector<Node> removable_nodes(const Partition& lambda);

}  // namespace specht
