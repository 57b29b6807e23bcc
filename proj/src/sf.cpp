#include "rsq/sf.hpp"

#include <map>

namespace rsq {

const char* sf_reason_name(SfReasonKind k) {
  switch (k) {
    case SfReasonKind::ImaginaryComponent: return "imaginary_component";
    case SfReasonKind::PositiveGenus: return "positive_genus";
    case SfReasonKind::EmptyRealLocus: return "empty_real_locus";
    case SfReasonKind::RealSelfNode: return "real_self_node";
    case SfReasonKind::QuotientGraphNotTree: return "quotient_graph_not_tree";
    case SfReasonKind::QuotientGraphDisconnected: return "quotient_graph_disconnected";
  }
  return "?";
}

SfVerdict is_sf(const RealPlumbingGraph& g) {
  require_valid(g);
  if (g.empty()) throw DomainError("is_sf: empty graph");

  SfVerdict v;
  for (const auto& c : g.components) {
    if (c.reality == CompReality::Imaginary)
      v.reasons.push_back({SfReasonKind::ImaginaryComponent, c.id});
    if (c.genus > 0) v.reasons.push_back({SfReasonKind::PositiveGenus, c.id});
    if (c.reality == CompReality::RealZero)
      v.reasons.push_back({SfReasonKind::EmptyRealLocus, c.id});
    for (SelfNodeKind k : c.self_nodes)
      if (k == SelfNodeKind::Real) {
        v.reasons.push_back({SfReasonKind::RealSelfNode, c.id});
        break;
      }
  }
  QuotientGraph q = quotient_graph(g);
  if (!q.connected()) v.reasons.push_back({SfReasonKind::QuotientGraphDisconnected, ""});
  if (!q.acyclic()) v.reasons.push_back({SfReasonKind::QuotientGraphNotTree, ""});
  v.sf = v.reasons.empty();
  return v;
}

QuotientHomotopy quotient_space_homotopy(const RealPlumbingGraph& g) {
  require_valid(g);
  if (g.empty()) throw DomainError("quotient_space_homotopy: empty graph");

  QuotientHomotopy h;
  QuotientGraph q = quotient_graph(g);
  h.connected = q.connected();
  h.tree = q.tree();

  // chi of each component orbit's plain quotient piece (identifications are
  // charged to the point orbits below): real quotient of genus g has chi 1-g,
  // an imaginary pair contributes one genus-g surface, chi 2-2g.
  int chi = 0;
  bool discs = true;
  h.simply_connected_pieces = true;
  std::map<std::string, bool> counted_pair;
  for (const auto& c : g.components) {
    if (c.reality == CompReality::Imaginary) {
      if (counted_pair[c.id]) continue;
      counted_pair[c.pair] = true;
      chi += 2 - 2 * c.genus;
      discs = false;
      if (c.genus > 0) h.simply_connected_pieces = false;
    } else {
      chi += 1 - c.genus;
      if (c.reality == CompReality::RealZero || c.genus > 0) {
        h.simply_connected_pieces = false;
        discs = false;
      }
    }
  }

  // Gluing corrections: a point orbit where d sheets meet identifies d local
  // pieces to one point, dropping chi by d-1. Degrees are read off the orbit
  // graph, so a conjugate-pair self-node (one edge orbit) costs nothing while
  // a real self-node (two edge orbits) costs 1, matching the geometry.
  std::vector<int> degree(q.vertices.size(), 0);
  for (auto [cv, pv] : q.edges) {
    (void)cv;
    degree[pv] += 1;
  }
  for (size_t i = 0; i < q.vertices.size(); ++i)
    if (q.vertices[i].kind == VertexKind::Point) chi -= degree[i] - 1;
  h.euler_char = chi;

  bool self_nodes_conj = true;
  for (const auto& c : g.components)
    for (SelfNodeKind k : c.self_nodes)
      if (k == SelfNodeKind::Real) self_nodes_conj = false;

  h.contractible = discs && self_nodes_conj && h.tree;
  return h;
}

} // namespace rsq
