// Exact projective line arrangements: the induced cell structure on the real
// projective plane, region signs of the even-degree product form, Euler
// bookkeeping for the complex double plane and its conjugation quotient, and
// the special (pencil / almost-pencil) classes.
#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "rsq/errors.hpp"
#include "rsq/ledger.hpp"
#include "rsq/rational.hpp"

namespace rsq {

struct LineArrangement {
  int k = 0;               // the product form has degree 2k
  std::vector<Vec3> lines; // exactly 2k pairwise distinct rational lines
  bool region_plus = true; // which sign region of the product plays W
};

struct ArrPoint {
  Vec3 coords;            // normalized projective representative
  std::vector<int> lines; // indices of lines through the point
  int multiplicity() const { return static_cast<int>(lines.size()); }
};

struct ArrEdge {
  int line;        // carrier line
  Vec3 sample;     // interior point of the arc
  int face_plus;   // face on the side where the carrier form is positive
  int face_minus;  // ... and negative (positivity measured at this edge's lift)
};

struct ArrFace {
  std::string sign_vector; // canonical (+/-)^2k, first entry '+'
  int sign;                // sign of the degree-2k product on the face
  Vec3 sample;             // rational interior point
};

struct CellComplex {
  long long V = 0, E = 0, F = 0;
  std::vector<ArrPoint> points;
  std::vector<ArrEdge> edges;
  std::vector<ArrFace> faces;
};

// Builds the cell structure: vertices are pairwise intersections, each line is
// cut into arcs, faces are recovered from edge-side sign vectors. Asserts the
// projective-plane Euler relation V - E + F = 1 and the sign alternation
// across every edge. Throws DomainError on repeated/zero lines or size != 2k.
CellComplex build_cell_complex(const LineArrangement& a);

// Sign of the product form on each face, in face order (the alternation
// across edges is already enforced by build_cell_complex).
std::vector<int> sign_regions(const CellComplex& c);

struct ArnoldData {
  long long chi_RA = 0;      // V - E
  long long chi_CA = 0;      // 2 * (#lines) spheres, glued: 4k - sum (m_p - 1)
  long long chi_Abar = 0;    // (chi_CA_used + chi_RA) / 2
  long long chi_W = 0;       // chosen closed region: V - E + F_chosen
  long long chi_W_branch = 0; // the other region, carrying the branch surface
  long long chi_Arnold = 0;  // branch surface: chi_W_branch + chi_Abar - chi_RA
  bool w_empty = false;      // defensive: no chosen-sign face at all
};

// chi_CA_override replaces the arrangement value of chi(CA) consistently
// (used for the nonsingular degree-2k model).
ArnoldData arnold_euler_data(const LineArrangement& a, const CellComplex& c,
                             std::optional<long long> chi_CA_override = std::nullopt);

struct InvariantReport {
  int k = 0;
  bool perturbed = false;
  bool region_plus = true;
  long long V = 0, E = 0, F = 0;
  ArnoldData arnold;
  long long chi_CA_used = 0;
  long long chi_CX = 0;        // 6 - chi_CA_used
  long long chi_RX = 0;        // 2 chi_W - chi_RA
  long long chi_Xbar_route1 = 0; // 4 - chi_Arnold
  long long chi_Xbar_route2 = 0; // (chi_CX + chi_RX) / 2
  long long chi_Xbar = 0;
  long long b2_plus = 0;       // (k-1)(k-2)/2
  bool sw_gate_applicable = false; // k > 3
  std::string sw_note;
};

// Both Euler routes for the quotient of the double plane; they must agree and
// an InternalError is thrown otherwise. With perturbed, chi(CA) of the smooth
// degree-2k curve (2 - (2k-1)(2k-2)) replaces the arrangement value.
InvariantReport quotient_invariants(const LineArrangement& a, bool perturbed);

struct Decomposition {
  enum class Kind { NonOrientable, Orientable, NotApplicable } kind = Kind::NotApplicable;
  long long cp2 = 0, conj_cp2 = 0; // NonOrientable: cp2 = b2_plus
  long long s2xs2 = 0;             // Orientable
};

// Connected-sum shape predicted from chi(Xbar) and b2_plus. Orientability of
// the branch surface is an input, not computed. Negative counts or parity
// failures throw InternalError (the model does not apply).
Decomposition decomposition_prediction(const InvariantReport& r,
                                       std::optional<bool> arnold_orientable);

struct SpecialClassReport {
  enum class Kind { Pencil, AlmostPencil, NotSpecial } kind = Kind::NotSpecial;
  QuotientLedger ledger; // meaningful for the two special kinds
  std::string description;
};

// Pencil (all lines concurrent): quotient is #_(k-1) S^1 x S^3. Almost-pencil
// (all but one through a common point): quotient is S^4.
SpecialClassReport special_class(const LineArrangement& a, const CellComplex& c);

struct EvenBlowupsReport {
  std::vector<int> point_indices; // cell-complex points with even multiplicity > 2
  std::string note;
  // chi bookkeeping after blowing those points up (j of them):
  long long blowups = 0;
  long long chi_W_after = 0;   // chi_W + sum (m/2 - 1)
  long long chi_RB = 0;        // chi_RA + sum (m - 1)
  long long chi_CB = 0;        // chi_CA + sum (m - 1)
  long long chi_CQ = 0;        // 3 + j
  long long chi_Xbar_after = 0;
};

// Points that must be blown up so the branch data descends to a quotient base
// that is still the 4-sphere, with the Euler bookkeeping of the blown-up model.
EvenBlowupsReport even_multiplicity_blowups(const LineArrangement& a, const CellComplex& c);

// ===== canonical families =====

LineArrangement generic_arrangement(int k);       // tangent lines of a conic
LineArrangement pencil_arrangement(int k);        // 2k concurrent lines
LineArrangement almost_pencil_arrangement(int k); // 2k-1 concurrent + 1 generic, k >= 2

// ===== JSON =====

LineArrangement arrangement_from_json(const nlohmann::json& j);
nlohmann::json arrangement_to_json(const LineArrangement& a);

} // namespace rsq
