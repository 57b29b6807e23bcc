#include "rsq/ledger.hpp"

#include "rsq/jsonio.hpp"

namespace rsq {

DeformationEvent ev_real_node(RealNodeSide side) {
  DeformationEvent e;
  e.type = EventType::RealCurveNode;
  e.side = side;
  return e;
}
DeformationEvent ev_bad_dot(bool guard) {
  DeformationEvent e;
  e.type = EventType::BadDotNode;
  e.other_curve_real_nonempty = guard;
  return e;
}
DeformationEvent ev_a3_plus(A3PlusDirection dir) {
  DeformationEvent e;
  e.type = EventType::A3Plus;
  e.a3_plus = dir;
  return e;
}
DeformationEvent ev_a3_minus(A3MinusDirection dir) {
  DeformationEvent e;
  e.type = EventType::A3Minus;
  e.a3_minus = dir;
  return e;
}
DeformationEvent ev_resolve_node() {
  DeformationEvent e;
  e.type = EventType::ResolveNode;
  return e;
}
DeformationEvent ev_create_node() {
  DeformationEvent e;
  e.type = EventType::CreateNode;
  return e;
}
DeformationEvent ev_blow_up_sf() {
  DeformationEvent e;
  e.type = EventType::BlowUpAtSF;
  return e;
}

bool is_nice(const DeformationEvent& e) { return e.type != EventType::BadDotNode; }

QuotientLedger apply_event(const QuotientLedger& l, const DeformationEvent& e) {
  if (e.type == EventType::BadDotNode) {
    QuotientLedger out = l;
    out.bus_tracking_valid = false;
    return out;
  }
  if (!l.bus_tracking_valid)
    throw DomainError("apply_event: ledger lost tracking; only a dot-node event is accepted");

  QuotientLedger out = l;
  switch (e.type) {
    case EventType::RealCurveNode:
      if (e.side == RealNodeSide::BlowUp) out.conj_cp2 += 1;
      break;
    case EventType::A3Plus:
      if (e.a3_plus == A3PlusDirection::CreateNode) out.node_count += 1;
      else {
        if (out.node_count == 0) throw DomainError("apply_event: node count underflow");
        out.node_count -= 1;
      }
      break;
    case EventType::A3Minus:
      if (e.a3_minus == A3MinusDirection::IntoNodal) {
        out.node_count += 1;
        out.conj_cp2 += 2;
      } else {
        if (out.node_count == 0) throw DomainError("apply_event: node count underflow");
        out.node_count -= 1;
        out.conj_cp2 -= 2;
      }
      break;
    case EventType::CreateNode: out.node_count += 1; break;
    case EventType::ResolveNode:
      if (out.node_count == 0) throw DomainError("apply_event: node count underflow");
      out.node_count -= 1;
      break;
    case EventType::BlowUpAtSF: break;
    case EventType::BadDotNode: break; // handled above
  }
  return out;
}

PathResult run_path(const QuotientLedger& initial, const std::vector<DeformationEvent>& events,
                    bool allow_untracked) {
  PathResult r;
  r.nice = true;
  QuotientLedger cur = initial;
  for (size_t i = 0; i < events.size(); ++i) {
    const auto& e = events[i];
    if (!is_nice(e)) r.nice = false;
    if (!cur.bus_tracking_valid && is_nice(e)) {
      if (!allow_untracked) {
        r.error_index = static_cast<int>(i);
        r.error = "event after tracking loss";
        r.final = cur;
        return r;
      }
      r.trace.push_back(cur); // frozen: the state is unknown from here on
      r.skipped.push_back(true);
      continue;
    }
    try {
      cur = apply_event(cur, e);
    } catch (const DomainError& err) {
      r.error_index = static_cast<int>(i);
      r.error = err.what();
      r.final = cur;
      return r;
    }
    r.trace.push_back(cur);
    r.skipped.push_back(false);
  }
  r.final = cur;
  return r;
}

BusNormalForm bus_normal_form(const QuotientLedger& l) {
  BusNormalForm nf;
  nf.tracked = l.bus_tracking_valid;
  if (!nf.tracked) return nf;
  nf.base = l.base_is_s4 ? "S4" : l.base_name;
  nf.cp2 = l.cp2 + l.s2xs2; // S^2 x S^2 # conj-CP^2 = CP^2 # 2 conj-CP^2
  nf.s1xs3 = l.s1xs3;
  return nf;
}

std::optional<bool> is_bus_trivial(const QuotientLedger& l) {
  if (!l.bus_tracking_valid) return std::nullopt;
  return l.base_is_s4 && l.s1xs3 == 0;
}

RepairResult repair_path(const std::vector<DeformationEvent>& events) {
  RepairResult r;
  r.events = events;
  for (size_t i = 0; i < events.size(); ++i) {
    if (events[i].type != EventType::BadDotNode) continue;
    if (events[i].other_curve_real_nonempty)
      r.events[i] = ev_real_node(RealNodeSide::Preserve);
    else
      r.unrepairable.push_back(i);
  }
  r.ok = r.unrepairable.empty();
  if (!r.ok) {
    r.events = events;
    r.advice =
        "deform the factor curves one at a time: move C while B is stationary with nonempty "
        "real locus, then move B against the deformed C; when both endpoints of C have empty "
        "real locus, connect C through an auxiliary curve with nonempty real locus first";
  }
  return r;
}

bool sw_vanishes(int pg_res, int pg_prime) { return 0 < pg_res && pg_res < pg_prime; }

PerturbationVerdict perturbation_independent(const SimpleSingularitySymbol& s) {
  if (s.family != 'A' && s.family != 'D' && s.family != 'E')
    throw DomainError("perturbation_independent: family must be A, D, or E");
  if (s.family == 'A' && s.index < 1) throw DomainError("perturbation_independent: A-index must be >= 1");
  if (s.family == 'D' && s.index < 4) throw DomainError("perturbation_independent: D-index must be >= 4");
  if (s.family == 'E' && (s.index < 6 || s.index > 8))
    throw DomainError("perturbation_independent: E-index must be 6, 7, or 8");
  if (s.exceptional_dot_family && (s.family != 'A' || s.index % 2 == 0))
    throw DomainError(
        "perturbation_independent: the exceptional dot family is the odd-index A series");

  PerturbationVerdict v;
  if (s.exceptional_dot_family) {
    v.independent = false;
    v.caveat =
        "dot form of the odd-index A series: the real locus of a small perturbation may be "
        "empty or not, and the two quotients differ";
  }
  return v;
}

// ===== JSON =====

namespace {

QuotientLedger ledger_from_json(const json& j, const std::string& where) {
  check_keys(j, where, {},
             {"base", "cp2", "conj_cp2", "s2xs2", "s1xs3", "node_count", "bus_tracking_valid"});
  QuotientLedger l;
  if (j.contains("base")) {
    const json& b = j.at("base");
    if (b.is_string()) {
      if (b.get<std::string>() != "S4")
        throw InputError(where + ".base: expected \"S4\" or {\"named\": token}");
      l.base_is_s4 = true;
    } else {
      check_keys(b, where + ".base", {"named"}, {});
      l.base_is_s4 = false;
      l.base_name = get_string(b, "named", where + ".base");
    }
  }
  auto nonneg = [&](const char* key, int& slot) {
    if (!j.contains(key)) return;
    long long v = get_int(j, key, where);
    if (v < 0) throw InputError(where + "." + key + ": must be nonnegative");
    slot = static_cast<int>(v);
  };
  nonneg("cp2", l.cp2);
  if (j.contains("conj_cp2")) l.conj_cp2 = static_cast<int>(get_int(j, "conj_cp2", where));
  nonneg("s2xs2", l.s2xs2);
  nonneg("s1xs3", l.s1xs3);
  nonneg("node_count", l.node_count);
  if (j.contains("bus_tracking_valid")) l.bus_tracking_valid = get_bool(j, "bus_tracking_valid", where);
  return l;
}

DeformationEvent event_from_json(const json& j, const std::string& where) {
  expect_object(j, where);
  if (!j.contains("type")) throw InputError(where + ": missing key 'type'");
  std::string type = get_string(j, "type", where);
  if (type == "real_curve_node") {
    check_keys(j, where, {"type", "side"}, {});
    std::string side = get_string(j, "side", where);
    if (side == "preserve") return ev_real_node(RealNodeSide::Preserve);
    if (side == "blow_up") return ev_real_node(RealNodeSide::BlowUp);
    throw InputError(where + ".side: expected \"preserve\" or \"blow_up\"");
  }
  if (type == "bad_dot_node") {
    check_keys(j, where, {"type"}, {"other_curve_real_nonempty"});
    bool guard = j.contains("other_curve_real_nonempty")
                     ? get_bool(j, "other_curve_real_nonempty", where)
                     : false;
    return ev_bad_dot(guard);
  }
  if (type == "a3_plus") {
    check_keys(j, where, {"type", "direction"}, {});
    std::string dir = get_string(j, "direction", where);
    if (dir == "create_node") return ev_a3_plus(A3PlusDirection::CreateNode);
    if (dir == "resolve_node") return ev_a3_plus(A3PlusDirection::ResolveNode);
    throw InputError(where + ".direction: expected \"create_node\" or \"resolve_node\"");
  }
  if (type == "a3_minus") {
    check_keys(j, where, {"type", "direction"}, {});
    std::string dir = get_string(j, "direction", where);
    if (dir == "into_nodal") return ev_a3_minus(A3MinusDirection::IntoNodal);
    if (dir == "out_of_nodal") return ev_a3_minus(A3MinusDirection::OutOfNodal);
    throw InputError(where + ".direction: expected \"into_nodal\" or \"out_of_nodal\"");
  }
  if (type == "resolve_node") {
    check_keys(j, where, {"type"}, {});
    return ev_resolve_node();
  }
  if (type == "create_node") {
    check_keys(j, where, {"type"}, {});
    return ev_create_node();
  }
  if (type == "blow_up_sf") {
    check_keys(j, where, {"type"}, {});
    return ev_blow_up_sf();
  }
  throw InputError(where + ".type: unknown event type '" + type + "'");
}

} // namespace

EventsFile events_from_json(const json& j) {
  check_keys(j, "events file", {"events"}, {"initial"});
  EventsFile f;
  if (j.contains("initial")) f.initial = ledger_from_json(j.at("initial"), "initial");
  const json& evs = j.at("events");
  expect_array(evs, "events");
  for (size_t i = 0; i < evs.size(); ++i)
    f.events.push_back(event_from_json(evs[i], "events[" + std::to_string(i) + "]"));
  return f;
}

json ledger_to_json(const QuotientLedger& l) {
  json j;
  j["base"] = l.base_is_s4 ? json("S4") : json{{"named", l.base_name}};
  j["cp2"] = l.cp2;
  j["conj_cp2"] = l.conj_cp2;
  j["s2xs2"] = l.s2xs2;
  j["s1xs3"] = l.s1xs3;
  j["node_count"] = l.node_count;
  j["bus_tracking_valid"] = l.bus_tracking_valid;
  return j;
}

json event_to_json(const DeformationEvent& e) {
  json j;
  switch (e.type) {
    case EventType::RealCurveNode:
      j["type"] = "real_curve_node";
      j["side"] = e.side == RealNodeSide::Preserve ? "preserve" : "blow_up";
      break;
    case EventType::BadDotNode:
      j["type"] = "bad_dot_node";
      j["other_curve_real_nonempty"] = e.other_curve_real_nonempty;
      break;
    case EventType::A3Plus:
      j["type"] = "a3_plus";
      j["direction"] = e.a3_plus == A3PlusDirection::CreateNode ? "create_node" : "resolve_node";
      break;
    case EventType::A3Minus:
      j["type"] = "a3_minus";
      j["direction"] = e.a3_minus == A3MinusDirection::IntoNodal ? "into_nodal" : "out_of_nodal";
      break;
    case EventType::ResolveNode: j["type"] = "resolve_node"; break;
    case EventType::CreateNode: j["type"] = "create_node"; break;
    case EventType::BlowUpAtSF: j["type"] = "blow_up_sf"; break;
  }
  return j;
}

json events_to_json(const std::vector<DeformationEvent>& evs) {
  json arr = json::array();
  for (const auto& e : evs) arr.push_back(event_to_json(e));
  return arr;
}

} // namespace rsq
