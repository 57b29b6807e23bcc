#include "rsq/graph.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

#include "rsq/jsonio.hpp"

namespace rsq {

// ===== lookups and the involution =====

const ComponentVertex* RealPlumbingGraph::find_component(const std::string& id) const {
  for (const auto& c : components)
    if (c.id == id) return &c;
  return nullptr;
}

const IntersectionPoint* RealPlumbingGraph::find_point(const std::string& id) const {
  for (const auto& p : points)
    if (p.id == id) return &p;
  return nullptr;
}

std::string RealPlumbingGraph::sigma_component(const std::string& id) const {
  const ComponentVertex* c = find_component(id);
  if (!c) throw DomainError("no component '" + id + "'");
  return c->reality == CompReality::Imaginary ? c->pair : id;
}

std::string RealPlumbingGraph::sigma_point(const std::string& id) const {
  const IntersectionPoint* p = find_point(id);
  if (!p) throw DomainError("no point '" + id + "'");
  return p->real ? id : p->pair;
}

bool natural_id_less(const std::string& a, const std::string& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    bool da = std::isdigit(static_cast<unsigned char>(a[i]));
    bool db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      std::string na = a.substr(i, i2 - i), nb = b.substr(j, j2 - j);
      std::string ta = na.substr(std::min(na.find_first_not_of('0'), na.size() - 1));
      std::string tb = nb.substr(std::min(nb.find_first_not_of('0'), nb.size() - 1));
      if (ta.size() != tb.size()) return ta.size() < tb.size();
      if (ta != tb) return ta < tb;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

// ===== validation =====

namespace {

std::vector<std::string> multiset_sigma(const RealPlumbingGraph& g, const std::vector<std::string>& at) {
  std::vector<std::string> out;
  out.reserve(at.size());
  for (const auto& id : at) out.push_back(g.sigma_component(id));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

std::vector<std::string> validate(const RealPlumbingGraph& g) {
  std::vector<std::string> bad;
  auto complain = [&](const std::string& m) { bad.push_back(m); };

  std::map<std::string, int> seen;
  for (const auto& c : g.components) {
    if (c.id.empty()) complain("component with empty id");
    if (++seen[c.id] == 2) complain("duplicate id '" + c.id + "'");
    if (c.genus < 0) complain("component '" + c.id + "': negative genus");
  }
  for (const auto& p : g.points) {
    if (p.id.empty()) complain("point with empty id");
    if (++seen[p.id] == 2) complain("duplicate id '" + p.id + "'");
  }
  if (!bad.empty()) return bad; // id table broken; the rest would cascade

  for (const auto& c : g.components) {
    if (c.reality == CompReality::Imaginary) {
      const ComponentVertex* d = g.find_component(c.pair);
      if (!d) {
        complain("component '" + c.id + "': pair '" + c.pair + "' does not exist");
        continue;
      }
      if (d->id == c.id) complain("component '" + c.id + "' paired with itself");
      else if (d->reality != CompReality::Imaginary || d->pair != c.id)
        complain("pairing not symmetric between '" + c.id + "' and '" + c.pair + "'");
      else {
        if (d->genus != c.genus || d->euler != c.euler)
          complain("paired components '" + c.id + "','" + d->id + "' differ in genus or euler");
        if (d->self_nodes != c.self_nodes)
          complain("paired components '" + c.id + "','" + d->id + "' differ in self-node markers");
      }
      for (SelfNodeKind k : c.self_nodes)
        if (k == SelfNodeKind::Real)
          complain("component '" + c.id + "': real self-node on an imaginary component");
    } else if (!c.pair.empty()) {
      complain("component '" + c.id + "': real component carries a pair reference");
    }
    if (c.reality == CompReality::RealZero)
      for (SelfNodeKind k : c.self_nodes)
        if (k == SelfNodeKind::Real)
          complain("component '" + c.id + "': real self-node on a component with empty real locus");
  }

  for (const auto& p : g.points) {
    if (p.at.size() < 2) {
      complain("point '" + p.id + "': fewer than two incidences");
      continue;
    }
    bool at_ok = true;
    for (const auto& cid : p.at)
      if (!g.find_component(cid)) {
        complain("point '" + p.id + "': unknown component '" + cid + "'");
        at_ok = false;
      }
    if (!at_ok) continue;

    if (p.real) {
      if (!p.pair.empty()) complain("point '" + p.id + "': real point carries a pair reference");
      if (multiset_sigma(g, p.at) != sorted(p.at))
        complain("point '" + p.id + "': real point with incidences not invariant under conjugation");
      for (const auto& cid : p.at)
        if (g.find_component(cid)->reality == CompReality::RealZero)
          complain("point '" + p.id + "': real point on component '" + cid + "' with empty real locus");
    } else {
      const IntersectionPoint* q = g.find_point(p.pair);
      if (!q) {
        complain("point '" + p.id + "': pair '" + p.pair + "' does not exist");
        continue;
      }
      if (q->id == p.id) complain("point '" + p.id + "' paired with itself");
      else if (q->real || q->pair != p.id)
        complain("pairing not symmetric between points '" + p.id + "' and '" + p.pair + "'");
      else if (multiset_sigma(g, p.at) != sorted(q->at))
        complain("points '" + p.id + "','" + q->id + "': incidences do not correspond under conjugation");
    }
  }
  return bad;
}

void require_valid(const RealPlumbingGraph& g) {
  auto bad = validate(g);
  if (bad.empty()) return;
  std::ostringstream os;
  os << "invalid graph:";
  for (const auto& m : bad) os << " [" << m << "]";
  throw DomainError(os.str());
}

// ===== incidence graph =====

namespace {

// Internal identity for vertices/edges of the incidence graph, rich enough to
// carry the involution. Self-node markers act as point-type vertices.
struct VKey {
  int kind;       // 0 component, 1 point, 2 self-node
  std::string id; // component or point id
  int marker;     // self-node index
  bool operator<(const VKey& o) const {
    return std::tie(kind, id, marker) < std::tie(o.kind, o.id, o.marker);
  }
  bool operator==(const VKey& o) const {
    return kind == o.kind && id == o.id && marker == o.marker;
  }
};

struct EKey {
  VKey pt;         // point-side vertex
  std::string cid; // component id
  int branch;      // occurrence index among equal component ids at that point
  bool operator<(const EKey& o) const {
    return std::tie(pt, cid, branch) < std::tie(o.pt, o.cid, o.branch);
  }
};

struct GammaModel {
  std::vector<VKey> vertices; // components first, then points, then self-nodes
  std::vector<EKey> edges;
};

GammaModel build_gamma(const RealPlumbingGraph& g) {
  GammaModel m;
  for (const auto& c : g.components) m.vertices.push_back({0, c.id, 0});
  for (const auto& p : g.points) m.vertices.push_back({1, p.id, 0});
  for (const auto& c : g.components)
    for (int k = 0; k < static_cast<int>(c.self_nodes.size()); ++k)
      m.vertices.push_back({2, c.id, k});

  for (const auto& p : g.points) {
    std::map<std::string, int> occurrence;
    for (const auto& cid : p.at) {
      int j = occurrence[cid]++;
      m.edges.push_back({{1, p.id, 0}, cid, j});
    }
  }
  for (const auto& c : g.components)
    for (int k = 0; k < static_cast<int>(c.self_nodes.size()); ++k)
      for (int j = 0; j < 2; ++j) m.edges.push_back({{2, c.id, k}, c.id, j});
  return m;
}

VKey sigma_vkey(const RealPlumbingGraph& g, const VKey& v) {
  if (v.kind == 0) return {0, g.sigma_component(v.id), 0};
  if (v.kind == 1) return {1, g.sigma_point(v.id), 0};
  return {2, g.sigma_component(v.id), v.marker};
}

EKey sigma_ekey(const RealPlumbingGraph& g, const EKey& e) {
  if (e.pt.kind == 1) {
    // Branch convention: real branches of real components at real points are
    // fixed; everything else follows the involution occurrence-wise.
    return {sigma_vkey(g, e.pt), g.sigma_component(e.cid), e.branch};
  }
  // self-node edge
  const ComponentVertex* c = g.find_component(e.pt.id);
  if (c->reality != CompReality::Imaginary && c->self_nodes[e.pt.marker] == SelfNodeKind::ConjPair)
    return {e.pt, e.cid, 1 - e.branch}; // the two branches are conjugate
  return {sigma_vkey(g, e.pt), g.sigma_component(e.cid), e.branch};
}

bool uf_connected(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n == 0) return true;
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int parts = n;
  for (auto [a, b] : edges) {
    int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --parts;
    }
  }
  return parts == 1;
}

bool uf_acyclic(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : edges) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

} // namespace

int BipartiteGraph::count(VertexKind k) const {
  int n = 0;
  for (const auto& v : vertices)
    if (v.kind == k) ++n;
  return n;
}
bool BipartiteGraph::connected() const { return uf_connected(static_cast<int>(vertices.size()), edges); }
bool BipartiteGraph::acyclic() const { return uf_acyclic(static_cast<int>(vertices.size()), edges); }

int QuotientGraph::count(VertexKind k) const {
  int n = 0;
  for (const auto& v : vertices)
    if (v.kind == k) ++n;
  return n;
}
bool QuotientGraph::connected() const { return uf_connected(static_cast<int>(vertices.size()), edges); }
bool QuotientGraph::acyclic() const { return uf_acyclic(static_cast<int>(vertices.size()), edges); }

BipartiteGraph incidence_graph(const RealPlumbingGraph& g) {
  require_valid(g);
  GammaModel m = build_gamma(g);
  BipartiteGraph out;
  std::map<VKey, int> index;
  for (const auto& v : m.vertices) {
    index[v] = static_cast<int>(out.vertices.size());
    std::string label = v.kind == 2 ? v.id + "#self" + std::to_string(v.marker) : v.id;
    out.vertices.push_back({label, v.kind == 0 ? VertexKind::Component : VertexKind::Point});
  }
  for (const auto& e : m.edges)
    out.edges.emplace_back(index.at({0, e.cid, 0}), index.at(e.pt));
  return out;
}

QuotientGraph quotient_graph(const RealPlumbingGraph& g) {
  require_valid(g);
  GammaModel m = build_gamma(g);
  QuotientGraph out;

  std::map<VKey, int> orbit_index; // every member key -> orbit vertex index
  for (const auto& v : m.vertices) {
    if (orbit_index.count(v)) continue;
    VKey w = sigma_vkey(g, v);
    int idx = static_cast<int>(out.vertices.size());
    orbit_index[v] = idx;
    orbit_index[w] = idx;
    std::string rep = v.id;
    if (w < v) rep = w.id;
    std::string label = v.kind == 2 ? rep + "#self" + std::to_string(v.marker) : rep;
    out.vertices.push_back({label, v.kind == 0 ? VertexKind::Component : VertexKind::Point,
                            v == w ? 1 : 2});
  }

  std::set<EKey> emitted;
  for (const auto& e : m.edges) {
    if (emitted.count(e)) continue;
    EKey f = sigma_ekey(g, e);
    emitted.insert(e);
    emitted.insert(f);
    out.edges.emplace_back(orbit_index.at({0, e.cid, 0}), orbit_index.at(e.pt));
  }
  return out;
}

// ===== surgery =====

namespace {

int max_numeric_suffix(const RealPlumbingGraph& g, char prefix) {
  int best = 0;
  auto scan = [&](const std::string& id) {
    if (id.size() < 2 || id[0] != prefix) return;
    for (size_t i = 1; i < id.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(id[i]))) return;
    best = std::max(best, std::stoi(id.substr(1)));
  };
  for (const auto& c : g.components) scan(c.id);
  for (const auto& p : g.points) scan(p.id);
  return best;
}

struct FreshIds {
  int next_b, next_q;
  explicit FreshIds(const RealPlumbingGraph& g)
      : next_b(max_numeric_suffix(g, 'b') + 1), next_q(max_numeric_suffix(g, 'q') + 1) {}
  std::string comp() { return "b" + std::to_string(next_b++); }
  std::string point() { return "q" + std::to_string(next_q++); }
};

ComponentVertex* mutable_component(RealPlumbingGraph& g, const std::string& id) {
  for (auto& c : g.components)
    if (c.id == id) return &c;
  return nullptr;
}

void internal_check(const RealPlumbingGraph& g, const char* op) {
  auto bad = validate(g);
  if (!bad.empty())
    throw InternalError(std::string(op) + " produced an invalid graph: " + bad.front());
}

} // namespace

RealPlumbingGraph blow_up(const RealPlumbingGraph& g, const BlowUpLocus& locus) {
  require_valid(g);
  RealPlumbingGraph out = g;
  FreshIds fresh(g);

  if (locus.kind == BlowUpLocus::Kind::GenericRealOn) {
    ComponentVertex* c = mutable_component(out, locus.id);
    if (!c) throw DomainError("no component '" + locus.id + "'");
    if (c->reality != CompReality::RealPlus)
      throw DomainError("generic real point needs a component with nonempty real locus");
    ComponentVertex b{fresh.comp(), 0, -1, CompReality::RealPlus, "", {}};
    c->euler -= 1;
    out.points.push_back({fresh.point(), {b.id, c->id}, true, ""});
    out.components.push_back(b);
    internal_check(out, "blow_up");
    return out;
  }

  if (locus.kind == BlowUpLocus::Kind::GenericConjPairOn) {
    ComponentVertex* c = mutable_component(out, locus.id);
    if (!c) throw DomainError("no component '" + locus.id + "'");
    ComponentVertex b1{fresh.comp(), 0, -1, CompReality::Imaginary, "", {}};
    ComponentVertex b2{fresh.comp(), 0, -1, CompReality::Imaginary, "", {}};
    b1.pair = b2.id;
    b2.pair = b1.id;
    std::string q1 = fresh.point(), q2 = fresh.point();
    if (c->reality == CompReality::Imaginary) {
      ComponentVertex* d = mutable_component(out, c->pair);
      c->euler -= 1;
      d->euler -= 1;
      out.points.push_back({q1, {b1.id, c->id}, false, q2});
      out.points.push_back({q2, {b2.id, d->id}, false, q1});
    } else {
      c->euler -= 2;
      out.points.push_back({q1, {b1.id, c->id}, false, q2});
      out.points.push_back({q2, {b2.id, c->id}, false, q1});
    }
    out.components.push_back(b1);
    out.components.push_back(b2);
    internal_check(out, "blow_up");
    return out;
  }

  // AtPoint
  const IntersectionPoint* p0 = g.find_point(locus.id);
  if (!p0) throw DomainError("no point '" + locus.id + "'");
  IntersectionPoint p = *p0;

  if (p.real) {
    ComponentVertex b{fresh.comp(), 0, -1, CompReality::RealPlus, "", {}};
    std::erase_if(out.points, [&](const IntersectionPoint& q) { return q.id == p.id; });
    // conjugate occurrences of imaginary components pair occurrence-wise
    std::map<std::string, std::vector<std::string>> pending; // comp id -> new point ids awaiting partner
    for (const auto& cid : p.at) {
      ComponentVertex* c = mutable_component(out, cid);
      c->euler -= 1;
      std::string qid = fresh.point();
      if (c->reality != CompReality::Imaginary) {
        out.points.push_back({qid, {b.id, cid}, true, ""});
      } else {
        auto& waiting = pending[c->pair];
        if (!waiting.empty()) {
          std::string partner = waiting.front();
          waiting.erase(waiting.begin());
          out.points.push_back({qid, {b.id, cid}, false, partner});
          for (auto& q : out.points)
            if (q.id == partner) q.pair = qid;
        } else {
          pending[cid].push_back(qid);
          out.points.push_back({qid, {b.id, cid}, false, ""}); // partner filled above
        }
      }
    }
    out.components.push_back(b);
    internal_check(out, "blow_up");
    return out;
  }

  // imaginary point: blow up the conjugate pair equivariantly
  const IntersectionPoint* pbar = g.find_point(p.pair);
  ComponentVertex b1{fresh.comp(), 0, -1, CompReality::Imaginary, "", {}};
  ComponentVertex b2{fresh.comp(), 0, -1, CompReality::Imaginary, "", {}};
  b1.pair = b2.id;
  b2.pair = b1.id;
  std::erase_if(out.points,
                [&](const IntersectionPoint& q) { return q.id == p.id || q.id == pbar->id; });
  for (const auto& cid : p.at) {
    std::string conj = g.sigma_component(cid);
    mutable_component(out, cid)->euler -= 1;  // branch at p
    mutable_component(out, conj)->euler -= 1; // mirror branch at the partner point
    std::string u = fresh.point(), v = fresh.point();
    out.points.push_back({u, {b1.id, cid}, false, v});
    out.points.push_back({v, {b2.id, conj}, false, u});
  }
  out.components.push_back(b1);
  out.components.push_back(b2);
  internal_check(out, "blow_up");
  return out;
}

namespace {

struct BlowDownSite {
  std::string comp;
  std::vector<int> point_indices; // indices into g.points
};

// Throws DomainError when `id` is not eligible.
BlowDownSite check_blow_down_member(const RealPlumbingGraph& g, const std::string& id) {
  const ComponentVertex* c = g.find_component(id);
  if (!c) throw DomainError("no component '" + id + "'");
  if (c->genus != 0) throw DomainError("blow_down '" + id + "': genus is not 0");
  if (c->euler != -1) throw DomainError("blow_down '" + id + "': euler is not -1");
  if (!c->self_nodes.empty()) throw DomainError("blow_down '" + id + "': component has self-nodes");
  BlowDownSite site{id, {}};
  for (int i = 0; i < static_cast<int>(g.points.size()); ++i) {
    const auto& p = g.points[i];
    int mult = static_cast<int>(std::count(p.at.begin(), p.at.end(), id));
    if (mult == 0) continue;
    if (p.at.size() != 2 || p.at[0] == p.at[1])
      throw DomainError("blow_down '" + id + "': point '" + p.id + "' is not simple");
    site.point_indices.push_back(i);
  }
  if (site.point_indices.size() > 2)
    throw DomainError("blow_down '" + id + "': meets more than two points");
  return site;
}

} // namespace

RealPlumbingGraph blow_down(const RealPlumbingGraph& g, const std::string& component_id) {
  require_valid(g);
  const ComponentVertex* c0 = g.find_component(component_id);
  if (!c0) throw DomainError("no component '" + component_id + "'");

  std::vector<std::string> members{component_id};
  if (c0->reality == CompReality::Imaginary) {
    members.push_back(c0->pair);
    for (const auto& p : g.points) {
      bool has_a = std::count(p.at.begin(), p.at.end(), component_id) > 0;
      bool has_b = std::count(p.at.begin(), p.at.end(), c0->pair) > 0;
      if (has_a && has_b)
        throw DomainError("blow_down '" + component_id +
                          "': conjugate components are adjacent; no equivariant blow-down");
    }
  }

  std::vector<BlowDownSite> sites;
  for (const auto& m : members) sites.push_back(check_blow_down_member(g, m));

  RealPlumbingGraph out = g;
  FreshIds fresh(g);
  std::set<std::string> dead_points;
  std::vector<IntersectionPoint> fresh_points;
  std::vector<std::string> fresh_per_member(members.size(), "");

  for (size_t mi = 0; mi < members.size(); ++mi) {
    const auto& site = sites[mi];
    std::vector<std::string> others;
    bool all_dead_real = true;
    for (int pi : site.point_indices) {
      const auto& p = g.points[pi];
      dead_points.insert(p.id);
      if (!p.real) all_dead_real = false;
      others.push_back(p.at[0] == site.comp ? p.at[1] : p.at[0]);
    }
    for (const auto& n : others) mutable_component(out, n)->euler += 1;
    if (others.size() != 2) continue;
    if (members.size() == 1 && others[0] == others[1]) {
      // Both branches land on one real component; the merged node is a
      // self-identification of that component, real or conjugate-pair
      // according to the reality of the two vanished points.
      mutable_component(out, others[0])
          ->self_nodes.push_back(all_dead_real ? SelfNodeKind::Real : SelfNodeKind::ConjPair);
    } else {
      IntersectionPoint np{fresh.point(), {others[0], others[1]}, true, ""};
      fresh_per_member[mi] = np.id;
      fresh_points.push_back(np);
    }
  }

  if (members.size() == 2 && !fresh_per_member[0].empty()) {
    // the two reconnection nodes are conjugate
    for (auto& np : fresh_points) {
      np.real = false;
      np.pair = np.id == fresh_per_member[0] ? fresh_per_member[1] : fresh_per_member[0];
    }
  }

  std::erase_if(out.points, [&](const IntersectionPoint& p) { return dead_points.count(p.id) > 0; });
  std::erase_if(out.components, [&](const ComponentVertex& c) {
    return std::find(members.begin(), members.end(), c.id) != members.end();
  });
  for (auto& np : fresh_points) out.points.push_back(np);
  internal_check(out, "blow_down");
  return out;
}

std::vector<std::string> blow_down_candidates(const RealPlumbingGraph& g) {
  std::vector<std::string> ids;
  for (const auto& c : g.components) {
    if (c.reality == CompReality::Imaginary && natural_id_less(c.pair, c.id)) continue;
    try {
      check_blow_down_member(g, c.id);
      if (c.reality == CompReality::Imaginary) {
        check_blow_down_member(g, c.pair);
        for (const auto& p : g.points)
          if (std::count(p.at.begin(), p.at.end(), c.id) &&
              std::count(p.at.begin(), p.at.end(), c.pair))
            throw DomainError("adjacent pair");
      }
    } catch (const DomainError&) {
      continue;
    }
    ids.push_back(c.id);
  }
  std::sort(ids.begin(), ids.end(), natural_id_less);
  return ids;
}

RealPlumbingGraph induced_subgraph(const RealPlumbingGraph& g, const std::set<std::string>& keep) {
  RealPlumbingGraph out;
  for (const auto& c : g.components) {
    if (!keep.count(c.id)) continue;
    ComponentVertex cc = c;
    if (cc.reality == CompReality::Imaginary && !keep.count(cc.pair)) {
      cc.reality = CompReality::RealPlus;
      cc.pair.clear();
    }
    out.components.push_back(cc);
  }
  std::set<std::string> kept_points;
  for (const auto& p : g.points) {
    bool inside = true;
    for (const auto& cid : p.at)
      if (!keep.count(cid)) inside = false;
    if (inside) kept_points.insert(p.id);
  }
  for (const auto& p : g.points) {
    if (!kept_points.count(p.id)) continue;
    IntersectionPoint pp = p;
    if (!pp.real && !kept_points.count(pp.pair)) {
      pp.real = true;
      pp.pair.clear();
    }
    out.points.push_back(pp);
  }
  internal_check(out, "induced_subgraph");
  return out;
}

// ===== JSON =====

RealPlumbingGraph graph_from_json(const nlohmann::json& j) {
  RealPlumbingGraph g;
  check_keys(j, "graph", {"components"}, {"points"});
  const json& comps = j.at("components");
  expect_array(comps, "components");
  for (size_t i = 0; i < comps.size(); ++i) {
    std::string where = "components[" + std::to_string(i) + "]";
    const json& cj = comps[i];
    check_keys(cj, where, {"id", "genus", "euler", "reality"}, {"self_nodes"});
    ComponentVertex c;
    c.id = get_string(cj, "id", where);
    long long genus = get_int(cj, "genus", where);
    long long euler = get_int(cj, "euler", where);
    if (genus < 0) throw InputError(where + ".genus: must be nonnegative");
    c.genus = static_cast<int>(genus);
    c.euler = static_cast<int>(euler);
    const json& r = cj.at("reality");
    if (r.is_string()) {
      std::string s = r.get<std::string>();
      if (s == "real+") c.reality = CompReality::RealPlus;
      else if (s == "real0") c.reality = CompReality::RealZero;
      else throw InputError(where + ".reality: expected \"real+\", \"real0\", or {\"pair\": id}");
    } else {
      check_keys(r, where + ".reality", {"pair"}, {});
      c.reality = CompReality::Imaginary;
      c.pair = get_string(r, "pair", where + ".reality");
    }
    if (cj.contains("self_nodes")) {
      const json& sn = cj.at("self_nodes");
      expect_array(sn, where + ".self_nodes");
      for (size_t k = 0; k < sn.size(); ++k) {
        if (!sn[k].is_string())
          throw InputError(where + ".self_nodes[" + std::to_string(k) + "]: expected a string");
        std::string s = sn[k].get<std::string>();
        if (s == "real") c.self_nodes.push_back(SelfNodeKind::Real);
        else if (s == "conj_pair") c.self_nodes.push_back(SelfNodeKind::ConjPair);
        else
          throw InputError(where + ".self_nodes[" + std::to_string(k) +
                           "]: expected \"real\" or \"conj_pair\"");
      }
    }
    g.components.push_back(c);
  }
  if (j.contains("points")) {
    const json& pts = j.at("points");
    expect_array(pts, "points");
    for (size_t i = 0; i < pts.size(); ++i) {
      std::string where = "points[" + std::to_string(i) + "]";
      const json& pj = pts[i];
      check_keys(pj, where, {"id", "at", "reality"}, {});
      IntersectionPoint p;
      p.id = get_string(pj, "id", where);
      const json& at = pj.at("at");
      expect_array(at, where + ".at");
      for (size_t k = 0; k < at.size(); ++k) {
        if (!at[k].is_string())
          throw InputError(where + ".at[" + std::to_string(k) + "]: expected a component id");
        p.at.push_back(at[k].get<std::string>());
      }
      const json& r = pj.at("reality");
      if (r.is_string()) {
        if (r.get<std::string>() != "real")
          throw InputError(where + ".reality: expected \"real\" or {\"pair\": id}");
        p.real = true;
      } else {
        check_keys(r, where + ".reality", {"pair"}, {});
        p.real = false;
        p.pair = get_string(r, "pair", where + ".reality");
      }
      g.points.push_back(p);
    }
  }
  return g;
}

nlohmann::json graph_to_json(const RealPlumbingGraph& g) {
  json j;
  j["components"] = json::array();
  for (const auto& c : g.components) {
    json cj;
    cj["id"] = c.id;
    cj["genus"] = c.genus;
    cj["euler"] = c.euler;
    if (c.reality == CompReality::RealPlus) cj["reality"] = "real+";
    else if (c.reality == CompReality::RealZero) cj["reality"] = "real0";
    else cj["reality"] = json{{"pair", c.pair}};
    json sn = json::array();
    for (SelfNodeKind k : c.self_nodes) sn.push_back(k == SelfNodeKind::Real ? "real" : "conj_pair");
    cj["self_nodes"] = sn;
    j["components"].push_back(cj);
  }
  j["points"] = json::array();
  for (const auto& p : g.points) {
    json pj;
    pj["id"] = p.id;
    pj["at"] = p.at;
    if (p.real) pj["reality"] = "real";
    else pj["reality"] = json{{"pair", p.pair}};
    j["points"].push_back(pj);
  }
  return j;
}

} // namespace rsq
