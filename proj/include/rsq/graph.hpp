// Resolution graphs with a conjugation involution: data model, validation,
// incidence/quotient graphs, and equivariant blow-up / blow-down surgery.
#pragma once

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rsq/errors.hpp"

namespace rsq {

// ===== data model =====

enum class CompReality { RealPlus, RealZero, Imaginary };
// RealPlus:  component fixed by conjugation, nonempty real point set
// RealZero:  fixed by conjugation, empty real point set
// Imaginary: swapped with a partner component

enum class SelfNodeKind { Real, ConjPair };
// A self-node marker identifies two points of one component:
// Real      -> two real points (both branches fixed by conjugation)
// ConjPair  -> a conjugate pair of points (branches swapped)

struct ComponentVertex {
  std::string id;
  int genus = 0;
  int euler = 0; // normal euler number (self-intersection)
  CompReality reality = CompReality::RealPlus;
  std::string pair; // partner id iff reality == Imaginary
  std::vector<SelfNodeKind> self_nodes;
};

struct IntersectionPoint {
  std::string id;
  std::vector<std::string> at; // component ids, repeats = multiplicity, size >= 2
  bool real = true;
  std::string pair; // partner id iff !real
};

struct RealPlumbingGraph {
  std::vector<ComponentVertex> components;
  std::vector<IntersectionPoint> points;

  const ComponentVertex* find_component(const std::string& id) const;
  const IntersectionPoint* find_point(const std::string& id) const;
  // Involution on ids. Real objects map to themselves.
  std::string sigma_component(const std::string& id) const;
  std::string sigma_point(const std::string& id) const;
  bool empty() const { return components.empty(); }
};

// Convention for parallel branches: at a real point, every branch of a real
// component is fixed by the involution (conjugate-branch identifications are
// expressed with ConjPair self-node markers instead); branches of an imaginary
// component pair up with the partner's branches at the same point.

// ===== validation =====

// Returns all violated invariants, empty when the graph is valid.
std::vector<std::string> validate(const RealPlumbingGraph& g);
void require_valid(const RealPlumbingGraph& g); // throws DomainError listing violations

// ===== incidence and quotient graphs =====

enum class VertexKind { Component, Point };

struct BipartiteGraph {
  struct Vertex {
    std::string id;
    VertexKind kind;
  };
  std::vector<Vertex> vertices;
  // (component vertex index, point vertex index); parallel edges repeat.
  std::vector<std::pair<int, int>> edges;

  int count(VertexKind k) const;
  bool connected() const;
  bool acyclic() const; // multigraph sense: a double edge is a cycle
  bool tree() const { return connected() && acyclic(); }
};

// Vertices: one per component, one per intersection point, one per self-node
// marker (said marker behaving as a point vertex with two edges to its component).
BipartiteGraph incidence_graph(const RealPlumbingGraph& g);

struct QuotientGraph {
  struct Vertex {
    std::string id; // min of the orbit's ids
    VertexKind kind;
    int orbit_size; // 1 or 2
  };
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges; // edge orbits; parallel edges repeat

  int count(VertexKind k) const;
  bool connected() const;
  bool acyclic() const;
  bool tree() const { return connected() && acyclic(); }
};

// Orbits of the involution acting on incidence_graph(g).
QuotientGraph quotient_graph(const RealPlumbingGraph& g);

// ===== surgery =====

struct BlowUpLocus {
  enum class Kind {
    AtPoint,           // id = existing intersection point (imaginary: the pair is blown up)
    GenericRealOn,     // id = component with reality real+; fresh generic real point
    GenericConjPairOn, // id = component; fresh conjugate pair of imaginary points
  };
  Kind kind;
  std::string id;
};

// Equivariant blow-up. New components have genus 0, euler -1, fresh ids bN;
// each component through the blown-up locus loses 1 from euler per branch, and
// the branches are rewired to distinct simple points (fresh ids qN) on the new
// component(s). Throws DomainError when the locus does not exist / fit.
RealPlumbingGraph blow_up(const RealPlumbingGraph& g, const BlowUpLocus& locus);

// Inverse surgery. Precondition: the component has genus 0, euler -1, no
// self-nodes, and meets at most two points, each simple (exactly two distinct
// components). Imaginary components are blown down together with the partner,
// which must not be adjacent to them. Neighbors regain +1 euler per removed
// incidence and are rejoined through a fresh point when two points disappear.
RealPlumbingGraph blow_down(const RealPlumbingGraph& g, const std::string& component_id);

// Components eligible for blow_down, in natural id order (digit runs compare
// numerically). For an eligible imaginary pair only the smaller id is listed.
std::vector<std::string> blow_down_candidates(const RealPlumbingGraph& g);

// Natural order used everywhere a "smallest id" is chosen.
bool natural_id_less(const std::string& a, const std::string& b);

// Plumbing-data restriction: keeps the given components and the points lying
// entirely inside; pair references leaving the set are retagged real+ / real,
// so the result is valid plumbing data (reality semantics are NOT preserved).
RealPlumbingGraph induced_subgraph(const RealPlumbingGraph& g, const std::set<std::string>& keep);

// ===== JSON =====

RealPlumbingGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const RealPlumbingGraph& g);

} // namespace rsq
