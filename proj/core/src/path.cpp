#include "specht/path.hpp"

#include <algorithm>
#include <stdexcept>

namespace specht {

Path2 Path2::from_steps(const std::vector<int>& steps) {
  Path2 p;
  p.values_.reserve(steps.size() + 1);
  for (int s : steps) {
    if (s != 1 && s != -1) throw std::invalid_argument("steps must be +-1");
    p.values_.push_back(p.values_.back() + s);
  }
  return p;
}

Path2 Path2::from_word(std::string_view word) {
  std::vector<int> steps;
  steps.reserve(word.size());
  for (char c : word) {
    switch (c) {
      case '+': case '1': steps.push_back(1); break;
      case '-': case '2': steps.push_back(-1); break;
      default: throw std::invalid_argument("step word must use '+-' or '12'");
    }
  }
  return from_steps(steps);
}

Path2 Path2::from_tableau(const StandardTableau& t) {
  if (!t.shape().two_column())
    throw std::invalid_argument("path form requires at most two columns");
  std::vector<int> steps;
  steps.reserve(t.n());
  for (int a = 1; a <= t.n(); ++a) steps.push_back(t.node_of(a).col == 1 ? 1 : -1);
  return from_steps(steps);
}

int Path2::max_value() const { return *std::max_element(values_.begin(), values_.end()); }

bool Path2::dominant() const {
  return std::all_of(values_.begin(), values_.end(), [](int v) { return v >= 0; });
}

Partition Path2::shape() const {
  if (!dominant()) throw std::invalid_argument("shape requires a dominant path");
  const int y = endpoint();
  return two_column_partition((length() - y) / 2, y);
}

StandardTableau Path2::to_tableau() const {
  if (!dominant()) throw std::invalid_argument("tableau form requires a dominant path");
  std::vector<int> word;
  word.reserve(length());
  for (int a = 0; a < length(); ++a) word.push_back(step(a) == 1 ? 1 : 2);
  return StandardTableau::from_column_word(word);
}

ResidueSequence Path2::residues(int e) const {
  // i_a = j - c_{a,j} with j the column of step a (counts include the step).
  ResidueSequence seq(e);
  int c1 = 0, c2 = 0;
  for (int a = 0; a < length(); ++a) {
    if (step(a) == 1) {
      ++c1;
      seq.push_back(1LL - c1);
    } else {
      ++c2;
      seq.push_back(2LL - c2);
    }
  }
  return seq;
}

int step_degree2(int u, int v, int e) {
  if (u >= e - 1 && (u + 1) % e == 0 && v == u - 1) return 1;
  if (v >= e - 1 && (v + 1) % e == 0 && u == v + 1) return -1;
  return 0;
}

int walk_degree(std::span<const int> values, int e) {
  int deg = 0;
  for (std::size_t a = 0; a + 1 < values.size(); ++a)
    deg += step_degree2(values[a], values[a + 1], e);
  return deg;
}

int Path2::degree(int e) const {
  if (e < 2) throw std::invalid_argument("e must be >= 2");
  if (!dominant()) throw std::invalid_argument("degree requires a dominant path");
  return walk_degree(values_, e);
}

std::string Path2::word(char up, char down) const {
  std::string out;
  out.reserve(length());
  for (int a = 0; a < length(); ++a) out += step(a) == 1 ? up : down;
  return out;
}

Path2 Path2::reflect_tail(int a, int m, int e) const {
  if (a < 0 || a > length()) throw std::invalid_argument("position out of range");
  if (m < 1) throw std::invalid_argument("wall index must be positive");
  const int wall = m * e - 1;
  if (values_[a] != wall) throw std::invalid_argument("path is not on the wall there");
  Path2 p = *this;
  for (int b = a + 1; b <= length(); ++b) p.values_[b] = 2 * wall - p.values_[b];
  return p;
}

Path2 Path2::reflect_range(int r, int s, int m, int e) const {
  if (r < 0 || s > length() || r > s) throw std::invalid_argument("bad segment range");
  const int wall = m * e - 1;
  if (values_[r] != wall || values_[s] != wall)
    throw std::invalid_argument("segment endpoints are not on the wall");
  Path2 p = *this;
  for (int b = r + 1; b < s; ++b) p.values_[b] = 2 * wall - p.values_[b];
  return p;
}

std::vector<int> wall_hits(const Path2& pi, int e) {
  if (e < 2) throw std::invalid_argument("e must be >= 2");
  if (!pi.dominant()) throw std::invalid_argument("wall hits require a dominant path");
  std::vector<int> hits;
  for (int a = 0; a <= pi.length(); ++a) {
    const int v = pi.value(a);
    if (v >= e - 1 && (v + 1) % e == 0) hits.push_back(a);
  }
  return hits;
}

ArcSets arcs(const Path2& pi, int e) {
  ArcSets out;
  const std::vector<int> hits = wall_hits(pi, e);
  for (std::size_t i = 0; i + 1 < hits.size(); ++i) {
    const int b0 = hits[i], b1 = hits[i + 1];
    if (pi.value(b0) != pi.value(b1)) continue;
    Arc arc{b0, b1, (pi.value(b0) + 1) / e, pi.value(b0 + 1) > pi.value(b0)};
    (arc.positive ? out.positive : out.negative).push_back(arc);
  }
  return out;
}

namespace {

void dominant_rec(std::vector<int>& values, int remaining, std::vector<Path2>& out) {
  if (remaining == 0) {
    out.push_back(Path2::from_steps([&] {
      std::vector<int> steps;
      for (std::size_t a = 0; a + 1 < values.size(); ++a)
        steps.push_back(values[a + 1] - values[a]);
      return steps;
    }()));
    return;
  }
  values.push_back(values.back() + 1);
  dominant_rec(values, remaining - 1, out);
  values.pop_back();
  if (values.back() > 0) {
    values.push_back(values.back() - 1);
    dominant_rec(values, remaining - 1, out);
    values.pop_back();
  }
}

}  // namespace

std::vector<Path2> all_dominant_paths(int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  std::vector<Path2> out;
  std::vector<int> values{0};
  dominant_rec(values, n, out);
  return out;
}

PathK::PathK(int k, std::vector<int> steps) : k_(k), steps_(std::move(steps)) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  for (int j : steps_)
    if (j < 1 || j > k) throw std::invalid_argument("step column out of range");
}

PathK PathK::from_tableau(const StandardTableau& t, int k) {
  std::vector<int> steps;
  steps.reserve(t.n());
  for (int a = 1; a <= t.n(); ++a) {
    const Node nd = t.node_of(a);
    if (nd.col > k) throw std::invalid_argument("tableau has entries beyond column k");
    steps.push_back(nd.col);
  }
  return PathK(k, std::move(steps));
}

PathK PathK::from_path2(const Path2& pi) {
  std::vector<int> steps;
  steps.reserve(pi.length());
  for (int a = 0; a < pi.length(); ++a) steps.push_back(pi.step(a) == 1 ? 1 : 2);
  return PathK(2, std::move(steps));
}

Path2 PathK::to_path2() const {
  if (k_ != 2) throw std::invalid_argument("scalar form requires k = 2");
  std::vector<int> steps;
  steps.reserve(steps_.size());
  for (int j : steps_) steps.push_back(j == 1 ? 1 : -1);
  return Path2::from_steps(steps);
}

std::vector<int> PathK::counts(int a) const {
  if (a < 0 || a > length()) throw std::invalid_argument("position out of range");
  std::vector<int> c(k_, 0);
  for (int b = 0; b < a; ++b) ++c[steps_[b] - 1];
  return c;
}

bool PathK::dominant() const {
  std::vector<int> c(k_, 0);
  for (int j : steps_) {
    ++c[j - 1];
    if (j > 1 && c[j - 1] > c[j - 2]) return false;
  }
  return true;
}

Partition PathK::shape() const {
  if (!dominant()) throw std::invalid_argument("shape requires a dominant path");
  const std::vector<int> cols = counts(length());
  std::vector<int> row_len;
  for (int r = 1; r <= (cols.empty() ? 0 : cols[0]); ++r) {
    int len = 0;
    for (int j = 0; j < k_; ++j)
      if (cols[j] >= r) ++len;
    row_len.push_back(len);
  }
  return Partition(row_len);
}

std::vector<Node> PathK::column_nodes() const {
  std::vector<Node> nodes;
  nodes.reserve(steps_.size());
  std::vector<int> c(k_, 0);
  for (int j : steps_) {
    nodes.push_back(Node{++c[j - 1], j});
  }
  return nodes;
}

StandardTableau PathK::to_tableau() const {
  if (!dominant()) throw std::invalid_argument("tableau form requires a dominant path");
  return StandardTableau::from_entries(column_nodes());
}

ResidueSequence PathK::residues(int e) const {
  ResidueSequence seq(e);
  std::vector<int> c(k_, 0);
  for (int j : steps_) {
    ++c[j - 1];
    seq.push_back(static_cast<long long>(j) - c[j - 1]);
  }
  return seq;
}

int step_degree_k(std::span<const int> u, std::span<const int> v, int e) {
  const int k = static_cast<int>(u.size());
  int deg = 0;
  for (int r = 1; r < k; ++r)
    for (int t = r + 1; t <= k; ++t) {
      // (w + rho, eps_r - eps_t) = w_r - w_t + t - r.
      const int pu = u[r - 1] - u[t - 1] + t - r;
      const int pv = v[r - 1] - v[t - 1] + t - r;
      if (pu > 0 && pu % e == 0 && pv < pu) ++deg;
      if (pv > 0 && pv % e == 0 && pu > pv) --deg;
    }
  return deg;
}

int PathK::degree(int e) const {
  if (e < 2) throw std::invalid_argument("e must be >= 2");
  if (!dominant()) throw std::invalid_argument("degree requires a dominant path");
  int deg = 0;
  std::vector<int> c(k_, 0);
  for (int j : steps_) {
    std::vector<int> prev = c;
    ++c[j - 1];
    deg += step_degree_k(prev, c, e);
  }
  return deg;
}

PathK PathK::reflect_tail(int a, int r, int t, int m, int e) const {
  if (a < 0 || a > length()) throw std::invalid_argument("position out of range");
  if (r < 1 || t <= r || t > k_) throw std::invalid_argument("bad positive root");
  const std::vector<int> c = counts(a);
  if (c[r - 1] - c[t - 1] + t - r != m * e)
    throw std::invalid_argument("path is not on the wall there");
  PathK p = *this;
  for (int b = a; b < length(); ++b) {
    if (p.steps_[b] == r) p.steps_[b] = t;
    else if (p.steps_[b] == t) p.steps_[b] = r;
  }
  return p;
}

}  // namespace specht
