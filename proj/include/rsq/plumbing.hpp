// Plumbing bookkeeping: intersection matrices over the integers, exact
// definiteness tests, deterministic (-1)-reduction, and the 3-sphere
// boundary criterion for negative definite trees.
#pragma once

#include <string>
#include <vector>

#include "rsq/graph.hpp"
#include "rsq/rational.hpp"

namespace rsq {

struct IntersectionMatrix {
  std::vector<std::string> ids;            // component ids in input order
  std::vector<std::vector<long long>> a;   // symmetric; diagonal = euler numbers
  int n() const { return static_cast<int>(ids.size()); }
};

// Empty string when the graph is good plumbing data (every point simple:
// exactly two distinct components, and no self-node markers); otherwise the
// first violation.
std::string goodness_violation(const RealPlumbingGraph& g);

// Diagonal = euler numbers, off-diagonal (i,j) = number of points joining the
// two components. Throws DomainError unless the graph is valid and good.
IntersectionMatrix intersection_matrix(const RealPlumbingGraph& g);

// Exact integer determinant (fraction-free elimination with row pivoting).
// The 0x0 matrix has determinant 1.
BigInt determinant(const IntersectionMatrix& m);

// Sylvester test on leading principal minors, computed exactly.
// Throws DomainError if the matrix is not symmetric.
bool is_negative_definite(const IntersectionMatrix& m);

// Repeatedly blows down eligible (-1)-components, smallest id first (natural
// order), until none is left. Deterministic. Requires valid good input.
RealPlumbingGraph reduce(const RealPlumbingGraph& g);

enum class BoundaryKind { Sphere3, NotSphere3, Indeterminate };

struct BoundaryVerdict {
  BoundaryKind kind = BoundaryKind::Indeterminate;
  std::string reason;
};

// For a connected negative definite tree of genus-0 components the boundary is
// a 3-sphere exactly when the reduction reaches the empty graph (equivalently
// a lone (-1)-vertex): such lattices are the unimodular diagonal ones. Inputs
// outside that domain yield Indeterminate with the failed precondition named.
// The empty graph counts as Sphere3 (boundary of the 4-ball).
BoundaryVerdict boundary_is_s3(const RealPlumbingGraph& g);

} // namespace rsq
