// Connected-sum ledger for quotient surfaces under one-parameter nodal
// deformations of the branch curve, with the blow-up-stable equivalence
// normal form, path repair, and small perturbation-independence helpers.
#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "rsq/errors.hpp"

namespace rsq {

struct QuotientLedger {
  bool base_is_s4 = true;
  std::string base_name;  // used when !base_is_s4
  int cp2 = 0;            // # CP^2 summands, >= 0
  int conj_cp2 = 0;       // # conj-CP^2 summands, signed running delta
  int s2xs2 = 0;          // # S^2 x S^2 summands, >= 0
  int s1xs3 = 0;          // # S^1 x S^3 summands, >= 0
  int node_count = 0;     // open nodes of the current quotient, >= 0
  bool bus_tracking_valid = true;

  bool operator==(const QuotientLedger&) const = default;
};

enum class EventType {
  RealCurveNode, // crossing a cone-like real node of the moving curve
  BadDotNode,    // dot-like node inside the region; class tracking is lost
  A3Plus,        // tangency model with a node on one side only
  A3Minus,       // tangency model whose nodal side resolves with two extra conj-CP^2
  ResolveNode,   // an imaginary pair of nodes is perturbed away
  CreateNode,    // an imaginary pair of nodes appears
  BlowUpAtSF,    // blow-up at a folding singular point; quotient unchanged
};

enum class RealNodeSide { Preserve, BlowUp };
enum class A3PlusDirection { CreateNode, ResolveNode };
enum class A3MinusDirection { IntoNodal, OutOfNodal };

struct DeformationEvent {
  EventType type = EventType::BlowUpAtSF;
  RealNodeSide side = RealNodeSide::Preserve;            // RealCurveNode
  A3PlusDirection a3_plus = A3PlusDirection::CreateNode; // A3Plus
  A3MinusDirection a3_minus = A3MinusDirection::IntoNodal; // A3Minus
  bool other_curve_real_nonempty = false;                // BadDotNode repairability
};

DeformationEvent ev_real_node(RealNodeSide side);
DeformationEvent ev_bad_dot(bool other_curve_real_nonempty);
DeformationEvent ev_a3_plus(A3PlusDirection dir);
DeformationEvent ev_a3_minus(A3MinusDirection dir);
DeformationEvent ev_resolve_node();
DeformationEvent ev_create_node();
DeformationEvent ev_blow_up_sf();

bool is_nice(const DeformationEvent& e); // everything except BadDotNode

// One transition. Throws DomainError on counter underflow and on any event
// other than BadDotNode applied to a ledger that lost tracking.
QuotientLedger apply_event(const QuotientLedger& l, const DeformationEvent& e);

struct PathResult {
  QuotientLedger final;
  std::vector<QuotientLedger> trace; // state after each event
  std::vector<bool> skipped;         // per event: folded as no-op after tracking loss
  bool nice = false;                 // no BadDotNode anywhere in the stream
  int error_index = -1;              // first offending event, -1 when clean
  std::string error;
};

// Left fold of apply_event. With allow_untracked, events after tracking loss
// are recorded as skipped instead of failing; without it they stop the run
// with error_index set. Underflow always stops the run.
PathResult run_path(const QuotientLedger& initial, const std::vector<DeformationEvent>& events,
                    bool allow_untracked = false);

struct BusNormalForm {
  bool tracked = false;
  std::string base; // "S4" or the named base
  int cp2 = 0;      // with every S^2 x S^2 rewritten to one CP^2 summand
  int s1xs3 = 0;
};

// Drops the conj-CP^2 count and rewrites S^2 x S^2 summands to CP^2 summands
// (legitimate once a conj-CP^2 is spliced on either way). Untracked ledgers
// yield tracked = false.
BusNormalForm bus_normal_form(const QuotientLedger& l);

// nullopt when tracking was lost; otherwise base S^4 with no S^1 x S^3 summand.
std::optional<bool> is_bus_trivial(const QuotientLedger& l);

struct RepairResult {
  bool ok = false;
  std::vector<DeformationEvent> events;  // rewritten stream when ok
  std::vector<size_t> unrepairable;      // indices of bad events that cannot be traded
  std::string advice;                    // scheduling advice when !ok
};

// Trades every BadDotNode whose companion curve has nonempty real locus for a
// RealCurveNode{Preserve} (push the dot across the companion's real locus).
// Bad events without that guard are reported with scheduling advice.
RepairResult repair_path(const std::vector<DeformationEvent>& events);

// Strict monotone window: 0 < pg_res < pg_prime.
bool sw_vanishes(int pg_res, int pg_prime);

struct SimpleSingularitySymbol {
  char family = 'A'; // 'A', 'D', 'E'
  int index = 1;
  std::string real_form;
  bool exceptional_dot_family = false; // the x^(2n)+y^2+z^2 = 0 dot forms
};

struct PerturbationVerdict {
  bool independent = true;
  std::string caveat; // nonempty for the exceptional family
};

// Quotients of small perturbations are diffeo-independent of the perturbation,
// except along the odd-index A-family of dot forms, where the real locus of
// the nearby curve may vanish. Throws DomainError on malformed symbols.
PerturbationVerdict perturbation_independent(const SimpleSingularitySymbol& s);

// ===== JSON =====

struct EventsFile {
  QuotientLedger initial;
  std::vector<DeformationEvent> events;
};

EventsFile events_from_json(const nlohmann::json& j);
nlohmann::json ledger_to_json(const QuotientLedger& l);
nlohmann::json event_to_json(const DeformationEvent& e);
nlohmann::json events_to_json(const std::vector<DeformationEvent>& evs);

} // namespace rsq
