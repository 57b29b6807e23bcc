// Shared builders, random generators, and a canonical tree code used by the
// unit tests and the acceptance harness.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "rsq/arrangement.hpp"
#include "rsq/graph.hpp"
#include "rsq/plumbing.hpp"

namespace th {

inline rsq::ComponentVertex comp(const std::string& id, int euler,
                                 rsq::CompReality r = rsq::CompReality::RealPlus,
                                 int genus = 0, const std::string& pair = "") {
  rsq::ComponentVertex c;
  c.id = id;
  c.genus = genus;
  c.euler = euler;
  c.reality = r;
  c.pair = pair;
  return c;
}

inline rsq::IntersectionPoint rpoint(const std::string& id, const std::vector<std::string>& at) {
  rsq::IntersectionPoint p;
  p.id = id;
  p.at = at;
  p.real = true;
  return p;
}

inline rsq::IntersectionPoint ipoint(const std::string& id, const std::vector<std::string>& at,
                                     const std::string& pair) {
  rsq::IntersectionPoint p;
  p.id = id;
  p.at = at;
  p.real = false;
  p.pair = pair;
  return p;
}

// chain c1 - c2 - ... - cn with the given euler numbers, all real+ genus 0
inline rsq::RealPlumbingGraph chain(const std::vector<int>& eulers) {
  rsq::RealPlumbingGraph g;
  for (size_t i = 0; i < eulers.size(); ++i)
    g.components.push_back(comp("c" + std::to_string(i + 1), eulers[i]));
  for (size_t i = 0; i + 1 < eulers.size(); ++i)
    g.points.push_back(rpoint("p" + std::to_string(i + 1),
                              {"c" + std::to_string(i + 1), "c" + std::to_string(i + 2)}));
  return g;
}

// star tree with three legs of the given lengths hanging off a center, every
// component carrying euler -2 (the ADE shapes: T(2,3,5) = E8 etc.)
inline rsq::RealPlumbingGraph star(int leg1, int leg2, int leg3) {
  rsq::RealPlumbingGraph g;
  g.components.push_back(comp("c0", -2));
  int next = 1, pn = 1;
  for (int len : {leg1, leg2, leg3}) {
    std::string prev = "c0";
    for (int i = 0; i < len; ++i) {
      std::string id = "c" + std::to_string(next++);
      g.components.push_back(comp(id, -2));
      g.points.push_back(rpoint("p" + std::to_string(pn++), {prev, id}));
      prev = id;
    }
  }
  return g;
}

// random good tree: n components, eulers in [lo, hi], all real+ genus 0
inline rsq::RealPlumbingGraph random_good_tree(std::mt19937_64& rng, int n, int lo = -6,
                                               int hi = -1) {
  rsq::RealPlumbingGraph g;
  std::uniform_int_distribution<int> euler(lo, hi);
  for (int i = 0; i < n; ++i)
    g.components.push_back(comp("c" + std::to_string(i + 1), euler(rng)));
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    int p = parent(rng);
    g.points.push_back(rpoint("p" + std::to_string(i),
                              {"c" + std::to_string(p + 1), "c" + std::to_string(i + 1)}));
  }
  return g;
}

// random blow-up history over a minimal negative definite base (all euler
// numbers <= -2, so the base has nothing to blow down); the blown-up graph
// stays a negative definite good tree, where blow-down order cannot matter
struct BlownUpTree {
  rsq::RealPlumbingGraph base;
  rsq::RealPlumbingGraph blown;
};

inline BlownUpTree random_blown_up_tree(std::mt19937_64& rng, int base_n, int blowups) {
  BlownUpTree t;
  t.base = random_good_tree(rng, base_n, -6, -2);
  t.blown = t.base;
  for (int i = 0; i < blowups; ++i) {
    if (rng() % 2 == 0 && !t.blown.points.empty()) {
      const auto& p = t.blown.points[rng() % t.blown.points.size()];
      t.blown = rsq::blow_up(t.blown, {rsq::BlowUpLocus::Kind::AtPoint, p.id});
    } else {
      const auto& c = t.blown.components[rng() % t.blown.components.size()];
      t.blown = rsq::blow_up(t.blown, {rsq::BlowUpLocus::Kind::GenericRealOn, c.id});
    }
  }
  return t;
}

// canonical code of a good tree up to relabeling: centers of the component
// tree rooted AHU-style, vertices labeled by (euler, genus, reality)
inline std::string tree_code(const rsq::RealPlumbingGraph& g) {
  int n = static_cast<int>(g.components.size());
  if (n == 0) return "()";
  std::map<std::string, int> idx;
  for (int i = 0; i < n; ++i) idx[g.components[i].id] = i;
  std::vector<std::vector<int>> adj(n);
  for (const auto& p : g.points) {
    int a = idx.at(p.at[0]), b = idx.at(p.at[1]);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // tree centers by repeated leaf stripping
  std::vector<int> deg(n), order;
  for (int i = 0; i < n; ++i) deg[i] = static_cast<int>(adj[i].size());
  std::vector<int> layer;
  std::vector<bool> dead(n, false);
  for (int i = 0; i < n; ++i)
    if (deg[i] <= 1) layer.push_back(i);
  int alive = n;
  std::vector<int> centers = layer;
  while (alive > 2) {
    std::vector<int> next;
    for (int v : layer) {
      dead[v] = true;
      --alive;
      for (int w : adj[v])
        if (!dead[w] && --deg[w] == 1) next.push_back(w);
    }
    layer = next;
    centers = layer;
  }
  if (alive <= 2 && centers.empty()) centers = layer;

  std::function<std::string(int, int)> code = [&](int v, int from) -> std::string {
    const auto& c = g.components[v];
    std::string label = std::to_string(c.euler) + "g" + std::to_string(c.genus) + "r" +
                        std::to_string(static_cast<int>(c.reality));
    std::vector<std::string> kids;
    for (int w : adj[v])
      if (w != from) kids.push_back(code(w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + label;
    for (auto& k : kids) s += k;
    return s + ")";
  };
  std::string best;
  for (int c : centers) {
    std::string s = code(c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

// random rational arrangement: 2k pairwise distinct lines with small integer
// coefficients, random region choice
inline rsq::LineArrangement random_arrangement(std::mt19937_64& rng, int kmax) {
  std::uniform_int_distribution<int> kd(1, kmax);
  std::uniform_int_distribution<int> cd(-9, 9);
  std::uniform_int_distribution<int> rd(0, 1);
  rsq::LineArrangement a;
  a.k = kd(rng);
  a.region_plus = rd(rng) == 1;
  std::vector<std::string> seen;
  while (static_cast<int>(a.lines.size()) < 2 * a.k) {
    rsq::Vec3 v{rsq::Rat(cd(rng)), rsq::Rat(cd(rng)), rsq::Rat(cd(rng))};
    if (rsq::is_zero(v)) continue;
    rsq::Vec3 nl = rsq::projective_normalize(v);
    std::string key = rsq::rational_to_string(nl[0]) + "|" + rsq::rational_to_string(nl[1]) +
                      "|" + rsq::rational_to_string(nl[2]);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    a.lines.push_back(nl);
  }
  return a;
}

} // namespace th
