#include "rsq/plumbing.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rsq {

std::string goodness_violation(const RealPlumbingGraph& g) {
  for (const auto& c : g.components)
    if (!c.self_nodes.empty()) return "component '" + c.id + "' has self-nodes";
  for (const auto& p : g.points) {
    if (p.at.size() != 2) return "point '" + p.id + "' does not join exactly two components";
    if (p.at[0] == p.at[1]) return "point '" + p.id + "' lies twice on one component";
  }
  return "";
}

IntersectionMatrix intersection_matrix(const RealPlumbingGraph& g) {
  require_valid(g);
  std::string bad = goodness_violation(g);
  if (!bad.empty()) throw DomainError("intersection_matrix: " + bad);

  IntersectionMatrix m;
  std::map<std::string, int> index;
  for (const auto& c : g.components) {
    index[c.id] = m.n();
    m.ids.push_back(c.id);
  }
  m.a.assign(m.ids.size(), std::vector<long long>(m.ids.size(), 0));
  for (size_t i = 0; i < m.ids.size(); ++i) m.a[i][i] = g.components[i].euler;
  for (const auto& p : g.points) {
    int i = index.at(p.at[0]), j = index.at(p.at[1]);
    m.a[i][j] += 1;
    m.a[j][i] += 1;
  }
  return m;
}

namespace {

// Bareiss fraction-free elimination with row pivoting; exact over cpp_int.
BigInt det_big(std::vector<std::vector<BigInt>> a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<std::vector<BigInt>> to_big(const IntersectionMatrix& m, int size) {
  std::vector<std::vector<BigInt>> a(size, std::vector<BigInt>(size));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) a[i][j] = m.a[i][j];
  return a;
}

} // namespace

BigInt determinant(const IntersectionMatrix& m) { return det_big(to_big(m, m.n())); }

bool is_negative_definite(const IntersectionMatrix& m) {
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j)
      if (m.a[i][j] != m.a[j][i]) throw DomainError("is_negative_definite: matrix not symmetric");
  // (-1)^k * (k-th leading principal minor) > 0 for all k
  for (int k = 1; k <= m.n(); ++k) {
    BigInt minor = det_big(to_big(m, k));
    if (k % 2 == 1 ? minor >= 0 : minor <= 0) return false;
  }
  return true;
}

RealPlumbingGraph reduce(const RealPlumbingGraph& g) {
  require_valid(g);
  std::string bad = goodness_violation(g);
  if (!bad.empty()) throw DomainError("reduce: " + bad);

  RealPlumbingGraph cur = g;
  for (;;) {
    std::vector<std::string> cands = blow_down_candidates(cur);
    if (cands.empty()) return cur;
    cur = blow_down(cur, cands.front());
  }
}

BoundaryVerdict boundary_is_s3(const RealPlumbingGraph& g) {
  require_valid(g);
  if (g.empty()) return {BoundaryKind::Sphere3, "empty plumbing bounds the 4-ball"};

  std::string bad = goodness_violation(g);
  if (!bad.empty()) return {BoundaryKind::Indeterminate, bad};
  for (const auto& c : g.components)
    if (c.genus != 0)
      return {BoundaryKind::Indeterminate, "component '" + c.id + "' has positive genus"};
  BipartiteGraph inc = incidence_graph(g);
  if (!inc.connected()) return {BoundaryKind::Indeterminate, "plumbing graph is disconnected"};
  if (!inc.acyclic()) return {BoundaryKind::Indeterminate, "plumbing graph is not a tree"};
  if (!is_negative_definite(intersection_matrix(g)))
    return {BoundaryKind::Indeterminate, "intersection form is not negative definite"};

  RealPlumbingGraph reduced = reduce(g);
  if (reduced.empty()) return {BoundaryKind::Sphere3, "reduces to the empty graph"};
  if (reduced.components.size() == 1 && reduced.points.empty() &&
      reduced.components[0].genus == 0 && reduced.components[0].euler == -1)
    return {BoundaryKind::Sphere3, "reduces to a single (-1)-vertex"};

  std::ostringstream os;
  os << "reduction stops with " << reduced.components.size() << " component(s):";
  for (const auto& c : reduced.components) os << " " << c.id << "(" << c.euler << ")";
  return {BoundaryKind::NotSphere3, os.str()};
}

} // namespace rsq
