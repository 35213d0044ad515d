#include "specht/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace specht {

namespace {

// Row lengths of the shape traced out by a node list; throws if some prefix
// is not a partition diagram or the filling is not standard.
Partition shape_from_nodes(const std::vector<Node>& nodes) {
  std::vector<int> row_len;
  for (const Node& nd : nodes) {
    if (nd.row < 1 || nd.col < 1) throw std::invalid_argument("node out of range");
    if (static_cast<int>(row_len.size()) < nd.row) row_len.resize(nd.row, 0);
    if (row_len[nd.row - 1] + 1 != nd.col)
      throw std::invalid_argument("entries must fill rows left to right");
    if (nd.row > 1 && row_len[nd.row - 2] < nd.col)
      throw std::invalid_argument("prefix shapes must be partitions");
    ++row_len[nd.row - 1];
  }
  return Partition(row_len);
}

}  // namespace

StandardTableau StandardTableau::from_entries(std::vector<Node> node_of_entry) {
  StandardTableau t;
  t.shape_ = shape_from_nodes(node_of_entry);
  t.nodes_ = std::move(node_of_entry);
  return t;
}

StandardTableau StandardTableau::from_rows(const std::vector<std::vector<int>>& rows) {
  int n = 0;
  for (const auto& row : rows) n += static_cast<int>(row.size());
  std::vector<Node> nodes(n);
  std::vector<bool> seen(n, false);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      int entry = rows[r][c];
      if (entry < 1 || entry > n || seen[entry - 1])
        throw std::invalid_argument("row filling is not a bijection onto 1..n");
      seen[entry - 1] = true;
      nodes[entry - 1] = Node{static_cast<int>(r) + 1, static_cast<int>(c) + 1};
    }
  return from_entries(std::move(nodes));
}

StandardTableau StandardTableau::from_column_word(const std::vector<int>& word) {
  std::vector<int> col_len;
  std::vector<Node> nodes;
  nodes.reserve(word.size());
  for (int j : word) {
    if (j < 1) throw std::invalid_argument("column indices are 1-based");
    if (static_cast<int>(col_len.size()) < j) col_len.resize(j, 0);
    nodes.push_back(Node{col_len[j - 1] + 1, j});
    ++col_len[j - 1];
  }
  return from_entries(std::move(nodes));
}

Node StandardTableau::node_of(int entry) const {
  if (entry < 1 || entry > n()) throw std::invalid_argument("entry out of range");
  return nodes_[entry - 1];
}

int StandardTableau::entry_at(const Node& node) const {
  for (int a = 0; a < n(); ++a)
    if (nodes_[a] == node) return a + 1;
  return 0;
}

StandardTableau StandardTableau::restricted(int m) const {
  if (m < 0 || m > n()) throw std::invalid_argument("restriction index out of range");
  return from_entries(std::vector<Node>(nodes_.begin(), nodes_.begin() + m));
}

Partition StandardTableau::shape_of_restriction(int m) const {
  if (m < 0 || m > n()) throw std::invalid_argument("restriction index out of range");
  std::vector<int> row_len;
  for (int a = 0; a < m; ++a) {
    const Node& nd = nodes_[a];
    if (static_cast<int>(row_len.size()) < nd.row) row_len.resize(nd.row, 0);
    ++row_len[nd.row - 1];
  }
  return Partition(row_len);
}

ResidueSequence StandardTableau::residues(int e) const {
  ResidueSequence seq(e);
  for (const Node& nd : nodes_) seq.push_back(static_cast<long long>(nd.col) - nd.row);
  return seq;
}

int node_degree_contribution(const Partition& lambda, const Node& node, int e) {
  const Residue i = node_residue(node, e);
  int d = 0;
  for (const Node& a : addable_nodes(lambda))
    if (a.row > node.row && node_residue(a, e) == i) ++d;
  for (const Node& r : removable_nodes(lambda))
    if (r.row > node.row && node_residue(r, e) == i) --d;
  return d;
}

int StandardTableau::degree(int e) const {
  if (e < 2) throw std::invalid_argument("e must be >= 2");
  int deg = 0;
  std::vector<int> row_len = shape_.parts();
  for (int m = n(); m >= 1; --m) {
    Partition current(row_len);
    deg += node_degree_contribution(current, nodes_[m - 1], e);
    if (--row_len[nodes_[m - 1].row - 1] == 0) row_len.pop_back();
  }
  return deg;
}

std::vector<int> StandardTableau::column_word() const {
  std::vector<int> word;
  word.reserve(nodes_.size());
  for (const Node& nd : nodes_) word.push_back(nd.col);
  return word;
}

std::string StandardTableau::column_word_string() const {
  std::string out;
  for (const Node& nd : nodes_) {
    if (nd.col > 9) throw std::invalid_argument("column word string needs columns <= 9");
    out += static_cast<char>('0' + nd.col);
  }
  return out;
}

std::vector<int> StandardTableau::row_reading_entries() const {
  std::vector<int> out(n());
  std::size_t pos = 0;
  std::vector<std::vector<int>> rows(shape_.rows());
  for (int r = 0; r < shape_.rows(); ++r) rows[r].resize(shape_.parts()[r]);
  for (int a = 0; a < n(); ++a) rows[nodes_[a].row - 1][nodes_[a].col - 1] = a + 1;
  for (const auto& row : rows)
    for (int v : row) out[pos++] = v;
  return out;
}

bool dominates(const StandardTableau& t, const StandardTableau& s) {
  if (t.shape() != s.shape())
    throw std::invalid_argument("tableau dominance requires equal shapes");
  const int n = t.n();
  std::vector<int> t_rows, s_rows;
  auto bump = [](std::vector<int>& rows, const Node& nd) {
    if (static_cast<int>(rows.size()) < nd.row) rows.resize(nd.row, 0);
    ++rows[nd.row - 1];
  };
  for (int m = 1; m <= n; ++m) {
    bump(t_rows, t.node_of(m));
    bump(s_rows, s.node_of(m));
    long long tsum = 0, ssum = 0;
    std::size_t r_max = std::max(t_rows.size(), s_rows.size());
    for (std::size_t r = 0; r < r_max; ++r) {
      tsum += r < t_rows.size() ? t_rows[r] : 0;
      ssum += r < s_rows.size() ? s_rows[r] : 0;
      if (tsum < ssum) return false;
    }
  }
  return true;
}

std::pair<StandardTableau, StandardTableau> canonical_tableaux(const Partition& lambda) {
  std::vector<Node> row_fill, col_fill;
  for (int r = 1; r <= lambda.rows(); ++r)
    for (int c = 1; c <= lambda.part(r); ++c) row_fill.push_back(Node{r, c});
  const Partition conj = lambda.conjugate();
  for (int c = 1; c <= conj.rows(); ++c)
    for (int r = 1; r <= conj.part(c); ++r) col_fill.push_back(Node{r, c});
  return {StandardTableau::from_entries(std::move(row_fill)),
          StandardTableau::from_entries(std::move(col_fill))};
}

namespace {

void enumerate_rec(const std::vector<int>& target_cols, std::vector<int>& col_len,
                   std::vector<int>& word, int remaining,
                   std::vector<StandardTableau>& out) {
  if (remaining == 0) {
    out.push_back(StandardTableau::from_column_word(word));
    return;
  }
  for (std::size_t j = 0; j < target_cols.size(); ++j) {
    if (col_len[j] >= target_cols[j]) continue;
    if (j > 0 && col_len[j] >= col_len[j - 1]) continue;
    ++col_len[j];
    word.push_back(static_cast<int>(j) + 1);
    enumerate_rec(target_cols, col_len, word, remaining - 1, out);
    word.pop_back();
    --col_len[j];
  }
}

}  // namespace

std::vector<StandardTableau> enumerate_std(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  std::vector<int> target_cols(conj.parts());
  std::vector<int> col_len(target_cols.size(), 0);
  std::vector<int> word;
  std::vector<StandardTableau> out;
  enumerate_rec(target_cols, col_len, word, lambda.n(), out);
  return out;
}

std::vector<StandardTableau> enumerate_std_with_residue(const Partition& lambda, int e,
                                                        const ResidueSequence& target) {
  std::vector<StandardTableau> out;
  if (static_cast<int>(target.size()) != lambda.n() || target.modulus() != e) return out;
  for (const StandardTableau& t : enumerate_std(lambda))
    if (t.residues(e) == target) out.push_back(t);
  return out;
}

}  // namespace specht
