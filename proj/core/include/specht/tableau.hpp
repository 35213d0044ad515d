#pragma once

#include <string>
#include <utility>
#include <vector>

#include "specht/partition.hpp"
#include "specht/residue.hpp"

namespace specht {

/// A standard Young tableau: a bijection from {1..n} onto the diagram of its
/// shape, increasing along rows and down columns. Stored as the node of each
/// entry; the column word (sequence of column indices of 1..n) determines
/// the tableau and is its canonical serialization.
class StandardTableau {
 public:
  StandardTableau() = default;  // the empty tableau

  /// node_of_entry[a] is the box of entry a+1. Validates standardness.
  static StandardTableau from_entries(std::vector<Node> node_of_entry);
  /// rows[r] lists the entries of row r+1 left to right.
  static StandardTableau from_rows(const std::vector<std::vector<int>>& rows);
  /// word[a] is the column of entry a+1.
  static StandardTableau from_column_word(const std::vector<int>& word);

  const Partition& shape() const { return shape_; }
  int n() const { return static_cast<int>(nodes_.size()); }

  Node node_of(int entry) const;
  /// 0 if the box is not part of the diagram.
  int entry_at(const Node& node) const;

  StandardTableau restricted(int m) const;
  Partition shape_of_restriction(int m) const;

  ResidueSequence residues(int e) const;

  /// Recursive degree: contribution of the last node plus the degree of the
  /// restriction; the empty tableau has degree 0.
  int degree(int e) const;

  std::vector<int> column_word() const;
  /// Column word as a digit string ("11212..."); columns must be <= 9.
  std::string column_word_string() const;
  /// Entry values in row reading order (row 1 left to right, then row 2, ...).
  std::vector<int> row_reading_entries() const;

  bool operator==(const StandardTableau&) const = default;
  auto operator<=>(const StandardTableau&) const = default;

 private:
  Partition shape_;
  std::vector<Node> nodes_;  // nodes_[a] = box of entry a+1
};

/// d_{(a,b)}(lambda): addable minus removable nodes of the same residue
/// strictly below the given removable node.
int node_degree_contribution(const Partition& lambda, const Node& node, int e);

/// Tableau dominance: every restriction shape dominates. Shapes must agree.
bool dominates(const StandardTableau& t, const StandardTableau& s);

/// (t^lambda, t_lambda): the row-filled and column-filled tableaux.
std::pair<StandardTableau, StandardTableau> canonical_tableaux(const Partition& lambda);

/// All standard tableaux of the given shape, ordered lexicographically by
/// column word.
std::vector<StandardTableau> enumerate_std(const Partition& lambda);

std::vector<StandardTableau> enumerate_std_with_residue(const Partition& lambda, int e,
                                                        const ResidueSequence& target);

}  // namespace specht
