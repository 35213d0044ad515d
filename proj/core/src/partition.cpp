#include "specht/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace specht {

Residue node_residue(const Node& node, int e) {
  return Residue(static_cast<long long>(node.col) - node.row, e);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string token(text.substr(pos, next - pos));
    pos = next + 1;
    if (token.empty()) throw std::invalid_argument("empty token in partition string");
    int value = 0, repeat = 1;
    std::size_t caret = token.find('^');
    try {
      if (caret == std::string::npos) {
        value = std::stoi(token);
      } else {
        value = std::stoi(token.substr(0, caret));
        repeat = std::stoi(token.substr(caret + 1));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed partition token '" + token + "'");
    }
    if (repeat < 0) throw std::invalid_argument("negative exponent in partition string");
    for (int i = 0; i < repeat; ++i) parts.push_back(value);
  }
  // "0" denotes the empty partition.
  if (parts.size() == 1 && parts[0] == 0) parts.clear();
  return Partition(parts);
}

int Partition::part(int r) const {
  if (r <= 0) throw std::invalid_argument("row index is 1-based");
  return r <= rows() ? parts_[r - 1] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  if (!parts_.empty()) {
    cols.resize(parts_.front());
    for (int j = 1; j <= parts_.front(); ++j)
      cols[j - 1] = static_cast<int>(
          std::count_if(parts_.begin(), parts_.end(), [j](int p) { return p >= j; }));
  }
  return Partition(cols);
}

int Partition::column_length(int j) const {
  if (j <= 0) throw std::invalid_argument("column index is 1-based");
  return static_cast<int>(
      std::count_if(parts_.begin(), parts_.end(), [j](int p) { return p >= j; }));
}

bool Partition::contains(const Node& node) const {
  return node.row >= 1 && node.col >= 1 && node.row <= rows() &&
         node.col <= parts_[node.row - 1];
}

bool Partition::dominates(const Partition& other) const {
  if (n_ != other.n_)
    throw std::invalid_argument("dominance requires partitions of the same n");
  long long self_sum = 0, other_sum = 0;
  int r = std::max(rows(), other.rows());
  for (int i = 1; i <= r; ++i) {
    self_sum += part(i);
    other_sum += other.part(i);
    if (self_sum < other_sum) return false;
  }
  return true;
}

int Partition::two_count() const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), 2));
}

int Partition::one_count() const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), 1));
}

std::string Partition::str() const {
  if (parts_.empty()) return "-";
  std::string out;
  std::size_t i = 0;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(parts_[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

bool is_e_restricted(const Partition& lambda, int e) {
  if (e < 2) throw std::invalid_argument("e must be >= 2");
  for (int r = 1; r <= lambda.rows(); ++r)
    if (lambda.part(r) - lambda.part(r + 1) >= e) return false;
  return true;
}

Partition two_column_partition(int x, int y) {
  std::vector<int> parts(x, 2);
  parts.insert(parts.end(), y, 1);
  return Partition(parts);
}

std::vector<Partition> partitions_two_column(int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  std::vector<Partition> out;
  for (int x = n / 2; x >= 0; --x) out.push_back(two_column_partition(x, n - 2 * x));
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    partitions_rec(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_all(int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> acc;
  partitions_rec(n, n == 0 ? 1 : n, acc, out);
  return out;
}

std::vector<Node> addable_nodes(const Partition& lambda) {
  std::vector<Node> out;
  for (int r = 1; r <= lambda.rows() + 1; ++r)
    if (r == 1 || lambda.part(r - 1) > lambda.part(r))
      out.push_back(Node{r, lambda.part(r) + 1});
  return out;
}

std::vector<Node> removable_nodes(const Partition& lambda) {
  std::vector<Node> out;
  for (int r = 1; r <= lambda.rows(); ++r)
    if (lambda.part(r) > lambda.part(r + 1)) out.push_back(Node{r, lambda.part(r)});
  return out;
}

}  // namespace specht
