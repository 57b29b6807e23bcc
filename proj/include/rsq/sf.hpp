// Decision procedure for smoothly-folding singularity resolutions, plus the
// homotopy-type oracle for the curve quotient that double-checks it.
#pragma once

#include <string>
#include <vector>

#include "rsq/graph.hpp"

namespace rsq {

enum class SfReasonKind {
  ImaginaryComponent,
  PositiveGenus,
  EmptyRealLocus,
  RealSelfNode,
  QuotientGraphNotTree,
  QuotientGraphDisconnected,
};

struct SfReason {
  SfReasonKind kind;
  std::string id; // offending component, empty for graph-level reasons
};

struct SfVerdict {
  bool sf = false;
  std::vector<SfReason> reasons; // every failed condition, not just the first
};

const char* sf_reason_name(SfReasonKind k);

// The folding criterion: every component is real with nonempty real locus and
// genus 0, every self-node is a conjugate-pair identification, and the orbit
// graph is a connected tree. Throws DomainError on invalid or empty graphs.
SfVerdict is_sf(const RealPlumbingGraph& g);

struct QuotientHomotopy {
  int euler_char = 0; // inclusion-exclusion over the orbit graph
  bool connected = false;
  bool simply_connected_pieces = false;
  bool tree = false;
  bool contractible = false;
};

// Models the quotient of the curve by conjugation as a 2-complex: per component
// orbit a disc (real+, genus 0), a sphere (imaginary pair, genus 0), a
// projective plane (real0, genus 0), or the corresponding higher-genus
// quotient; pieces are glued along point orbits. contractible <=> all pieces
// are discs, all self-nodes are conjugate-pair, and the orbit graph is a tree;
// euler_char is computed independently and equals 1 whenever contractible.
QuotientHomotopy quotient_space_homotopy(const RealPlumbingGraph& g);

} // namespace rsq
