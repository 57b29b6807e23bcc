// rsq: command-line front end. Every subcommand prints one JSON document to
// stdout. Exit codes: 0 = affirmative result, 1 = negative verdict of a
// predicate, 2 = bad input, 3 = internal consistency failure.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "rsq/arrangement.hpp"
#include "rsq/certificate.hpp"
#include "rsq/errors.hpp"
#include "rsq/graph.hpp"
#include "rsq/jsonio.hpp"
#include "rsq/ledger.hpp"
#include "rsq/plumbing.hpp"
#include "rsq/sf.hpp"

namespace {

using rsq::json;

bool g_pretty = false;

void emit(json j) {
  std::cout << (g_pretty ? j.dump(2) : j.dump()) << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw rsq::InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::string& path) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw rsq::InputError(path + ": " + e.what());
  }
}

json normal_form_json(const rsq::BusNormalForm& nf) {
  json j;
  j["tracked"] = nf.tracked;
  j["base"] = nf.base;
  j["cp2"] = nf.cp2;
  j["s1xs3"] = nf.s1xs3;
  return j;
}

json trivial_json(const std::optional<bool>& t) {
  if (!t.has_value()) return nullptr;
  return *t;
}

int cmd_sfcheck(const std::string& file) {
  std::string text = read_file(file);
  rsq::RealPlumbingGraph g = rsq::graph_from_json(parse_json(text, file));
  rsq::SfVerdict v = rsq::is_sf(g);
  rsq::QuotientHomotopy q = rsq::quotient_space_homotopy(g);
  json out;
  out["command"] = "sfcheck";
  out["input_digest"] = rsq::fnv1a_hex(text);
  out["sf"] = v.sf;
  json reasons = json::array();
  for (const auto& r : v.reasons) {
    json rj;
    rj["kind"] = rsq::sf_reason_name(r.kind);
    rj["id"] = r.id;
    reasons.push_back(rj);
  }
  out["reasons"] = reasons;
  json qj;
  qj["euler_char"] = q.euler_char;
  qj["connected"] = q.connected;
  qj["simply_connected_pieces"] = q.simply_connected_pieces;
  qj["tree"] = q.tree;
  qj["contractible"] = q.contractible;
  out["quotient"] = qj;
  emit(out);
  return v.sf ? 0 : 1;
}

int cmd_plumb(const std::string& sub, const std::string& file) {
  std::string text = read_file(file);
  rsq::RealPlumbingGraph g = rsq::graph_from_json(parse_json(text, file));
  json out;
  out["command"] = "plumb." + sub;
  out["input_digest"] = rsq::fnv1a_hex(text);
  if (sub == "matrix" || sub == "definite") {
    rsq::IntersectionMatrix m = rsq::intersection_matrix(g);
    out["ids"] = m.ids;
    out["matrix"] = m.a;
    out["determinant"] = rsq::determinant(m).str();
    if (sub == "matrix") {
      emit(out);
      return 0;
    }
    bool nd = rsq::is_negative_definite(m);
    out["negative_definite"] = nd;
    emit(out);
    return nd ? 0 : 1;
  }
  if (sub == "reduce") {
    rsq::require_valid(g);
    std::string bad = rsq::goodness_violation(g);
    if (!bad.empty()) throw rsq::DomainError("reduce: " + bad);
    json steps = json::array();
    rsq::RealPlumbingGraph cur = g;
    for (;;) {
      auto cands = rsq::blow_down_candidates(cur);
      if (cands.empty()) break;
      steps.push_back(cands.front());
      cur = rsq::blow_down(cur, cands.front());
    }
    out["steps"] = steps;
    out["final"] = rsq::graph_to_json(cur);
    out["final_component_count"] = cur.components.size();
    emit(out);
    return 0;
  }
  // boundary
  rsq::BoundaryVerdict b = rsq::boundary_is_s3(g);
  switch (b.kind) {
    case rsq::BoundaryKind::Sphere3: out["kind"] = "sphere3"; break;
    case rsq::BoundaryKind::NotSphere3: out["kind"] = "not_sphere3"; break;
    case rsq::BoundaryKind::Indeterminate: out["kind"] = "indeterminate"; break;
  }
  out["reason"] = b.reason;
  emit(out);
  return b.kind == rsq::BoundaryKind::Sphere3 ? 0 : 1;
}

int cmd_deform_run(const std::string& file, bool allow_untracked) {
  std::string text = read_file(file);
  rsq::EventsFile ef = rsq::events_from_json(parse_json(text, file));
  rsq::PathResult r = rsq::run_path(ef.initial, ef.events, allow_untracked);
  json out;
  out["command"] = "deform.run";
  out["input_digest"] = rsq::fnv1a_hex(text);
  if (r.error_index >= 0) {
    json err;
    err["kind"] = "domain";
    err["message"] = r.error;
    err["event_index"] = r.error_index;
    out["error"] = err;
    emit(out);
    return 2;
  }
  out["initial"] = rsq::ledger_to_json(ef.initial);
  out["final"] = rsq::ledger_to_json(r.final);
  out["nice"] = r.nice;
  long long skipped = 0;
  for (bool s : r.skipped) skipped += s ? 1 : 0;
  out["skipped_events"] = skipped;
  out["normal_form"] = normal_form_json(rsq::bus_normal_form(r.final));
  auto trivial = rsq::is_bus_trivial(r.final);
  out["bus_trivial"] = trivial_json(trivial);
  emit(out);
  return trivial.has_value() && *trivial ? 0 : 1;
}

int cmd_deform_repair(const std::string& file) {
  std::string text = read_file(file);
  rsq::EventsFile ef = rsq::events_from_json(parse_json(text, file));
  rsq::RepairResult rep = rsq::repair_path(ef.events);
  json out;
  out["command"] = "deform.repair";
  out["input_digest"] = rsq::fnv1a_hex(text);
  out["ok"] = rep.ok;
  if (!rep.ok) {
    out["unrepairable"] = rep.unrepairable;
    out["advice"] = rep.advice;
    emit(out);
    return 1;
  }
  rsq::PathResult r = rsq::run_path(ef.initial, rep.events);
  if (r.error_index >= 0)
    throw rsq::InternalError("repaired stream was rejected: " + r.error);
  out["events"] = rsq::events_to_json(rep.events);
  out["nice"] = r.nice;
  out["final"] = rsq::ledger_to_json(r.final);
  out["normal_form"] = normal_form_json(rsq::bus_normal_form(r.final));
  out["bus_trivial"] = trivial_json(rsq::is_bus_trivial(r.final));
  emit(out);
  return 0;
}

json arrangement_report(const rsq::LineArrangement& a, bool perturbed,
                        std::optional<bool> orientable) {
  rsq::CellComplex c = rsq::build_cell_complex(a);
  rsq::InvariantReport r = rsq::quotient_invariants(a, perturbed);
  json rep;
  rep["k"] = a.k;
  rep["region"] = a.region_plus ? "plus" : "minus";
  rep["V"] = c.V;
  rep["E"] = c.E;
  rep["F"] = c.F;
  json pts = json::array();
  for (const auto& p : c.points) {
    json pj;
    json coords = json::array();
    for (const auto& x : p.coords) coords.push_back(rsq::rational_to_string(x));
    pj["coords"] = coords;
    pj["lines"] = p.lines;
    pj["multiplicity"] = p.multiplicity();
    pts.push_back(pj);
  }
  rep["points"] = pts;
  json faces = json::array();
  for (const auto& f : c.faces) {
    json fj;
    fj["sign_vector"] = f.sign_vector;
    fj["sign"] = f.sign;
    faces.push_back(fj);
  }
  rep["faces"] = faces;
  json inv;
  inv["perturbed"] = r.perturbed;
  inv["chi_RA"] = r.arnold.chi_RA;
  inv["chi_CA"] = r.arnold.chi_CA;
  inv["chi_CA_used"] = r.chi_CA_used;
  inv["chi_Abar"] = r.arnold.chi_Abar;
  inv["chi_W"] = r.arnold.chi_W;
  inv["chi_W_branch"] = r.arnold.chi_W_branch;
  inv["chi_Arnold"] = r.arnold.chi_Arnold;
  inv["chi_CX"] = r.chi_CX;
  inv["chi_RX"] = r.chi_RX;
  inv["chi_Xbar_route1"] = r.chi_Xbar_route1;
  inv["chi_Xbar_route2"] = r.chi_Xbar_route2;
  inv["chi_Xbar"] = r.chi_Xbar;
  inv["b2_plus"] = r.b2_plus;
  inv["sw_gate_applicable"] = r.sw_gate_applicable;
  inv["sw_note"] = r.sw_note;
  rep["invariants"] = inv;
  rsq::Decomposition d = rsq::decomposition_prediction(r, orientable);
  json dj;
  switch (d.kind) {
    case rsq::Decomposition::Kind::NotApplicable:
      dj["kind"] = "not_applicable";
      dj["note"] = "branch-surface orientability was not supplied";
      break;
    case rsq::Decomposition::Kind::NonOrientable:
      dj["kind"] = "non_orientable";
      dj["cp2"] = d.cp2;
      dj["conj_cp2"] = d.conj_cp2;
      break;
    case rsq::Decomposition::Kind::Orientable:
      dj["kind"] = "orientable";
      dj["s2xs2"] = d.s2xs2;
      break;
  }
  rep["decomposition"] = dj;
  rsq::SpecialClassReport sc = rsq::special_class(a, c);
  json sj;
  switch (sc.kind) {
    case rsq::SpecialClassReport::Kind::Pencil: sj["kind"] = "pencil"; break;
    case rsq::SpecialClassReport::Kind::AlmostPencil: sj["kind"] = "almost_pencil"; break;
    case rsq::SpecialClassReport::Kind::NotSpecial: sj["kind"] = "not_special"; break;
  }
  sj["description"] = sc.description;
  if (sc.kind != rsq::SpecialClassReport::Kind::NotSpecial) {
    sj["ledger"] = rsq::ledger_to_json(sc.ledger);
    sj["bus_trivial"] = trivial_json(rsq::is_bus_trivial(sc.ledger));
  }
  rep["special_class"] = sj;
  rsq::EvenBlowupsReport eb = rsq::even_multiplicity_blowups(a, c);
  json ej;
  ej["points"] = eb.point_indices;
  ej["count"] = eb.blowups;
  ej["note"] = eb.note;
  ej["chi_W_after"] = eb.chi_W_after;
  ej["chi_RB"] = eb.chi_RB;
  ej["chi_CB"] = eb.chi_CB;
  ej["chi_CQ"] = eb.chi_CQ;
  ej["chi_Xbar_after"] = eb.chi_Xbar_after;
  rep["even_multiplicity_blowups"] = ej;
  return rep;
}

int cmd_arrange(const std::string& file, bool perturbed, std::optional<bool> orientable) {
  std::string text = read_file(file);
  rsq::LineArrangement a = rsq::arrangement_from_json(parse_json(text, file));
  json out = arrangement_report(a, perturbed, orientable);
  out["command"] = "arrange.analyze";
  out["input_digest"] = rsq::fnv1a_hex(text);
  emit(out);
  return 0;
}

int cmd_doubleplane(int k, const std::string& family) {
  rsq::LineArrangement a;
  if (family == "pencil")
    a = rsq::pencil_arrangement(k);
  else if (family == "almost_pencil")
    a = rsq::almost_pencil_arrangement(k);
  else
    a = rsq::generic_arrangement(k);
  json out = arrangement_report(a, false, std::nullopt);
  out["command"] = "doubleplane";
  out["family"] = family;
  out["arrangement"] = rsq::arrangement_to_json(a);
  out["input_digest"] = rsq::fnv1a_hex("k=" + std::to_string(k) + ";family=" + family);
  emit(out);
  return 0;
}

int cmd_swvanish(int pg_res, int pg_prime) {
  bool v = rsq::sw_vanishes(pg_res, pg_prime);
  json out;
  out["command"] = "swvanish";
  out["input_digest"] =
      rsq::fnv1a_hex("pg_res=" + std::to_string(pg_res) + ";pg_prime=" + std::to_string(pg_prime));
  out["pg_res"] = pg_res;
  out["pg_prime"] = pg_prime;
  out["vanishes"] = v;
  out["note"] = v ? "0 < pg_res < pg_prime: the monotone window applies"
                  : "the monotone window 0 < pg_res < pg_prime fails";
  emit(out);
  return v ? 0 : 1;
}

int cmd_certify(int deg_b, int deg_c, bool rb0, bool rc0, bool rb1, bool rc1) {
  rsq::SplitCertificate cert =
      rsq::split_curve_bus_certificate(deg_b, deg_c, rb0, rc0, rb1, rc1);
  json out = rsq::certificate_to_json(cert);
  out["command"] = "certify";
  out["input_digest"] = rsq::fnv1a_hex(
      "deg_b=" + std::to_string(deg_b) + ";deg_c=" + std::to_string(deg_c) +
      ";rb0=" + std::to_string(rb0) + ";rc0=" + std::to_string(rc0) +
      ";rb1=" + std::to_string(rb1) + ";rc1=" + std::to_string(rc1));
  emit(out);
  return cert.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"real resolution graphs, plumbing reduction, deformation ledgers, "
               "and double-plane quotient bookkeeping"};
  app.require_subcommand(1);
  app.add_flag("--pretty", g_pretty, "indent the JSON output");
  app.fallthrough();

  std::string file;

  auto* sf = app.add_subcommand("sfcheck", "decide the folding criterion for a graph");
  sf->add_option("file", file, "graph JSON file")->required();

  auto* plumb = app.add_subcommand("plumb", "intersection-form and boundary analysis");
  plumb->require_subcommand(1);
  std::string plumb_sub;
  for (const char* name : {"matrix", "definite", "reduce", "boundary"}) {
    auto* s = plumb->add_subcommand(name);
    s->add_option("file", file, "graph JSON file")->required();
    s->callback([&plumb_sub, name] { plumb_sub = name; });
  }

  auto* deform = app.add_subcommand("deform", "run or repair a deformation event stream");
  deform->require_subcommand(1);
  bool allow_untracked = false;
  auto* drun = deform->add_subcommand("run", "fold the events over the initial ledger");
  drun->add_option("file", file, "events JSON file")->required();
  drun->add_flag("--allow-untracked", allow_untracked,
                 "record events after tracking loss as skipped instead of failing");
  auto* drepair = deform->add_subcommand("repair", "trade guarded dot-node events away");
  drepair->add_option("file", file, "events JSON file")->required();

  auto* arrange = app.add_subcommand("arrange", "exact line-arrangement analysis");
  arrange->require_subcommand(1);
  auto* aan = arrange->add_subcommand("analyze", "cell complex, signs, and invariants");
  aan->add_option("file", file, "arrangement JSON file")->required();
  bool perturbed = false, orientable = false, nonorientable = false;
  aan->add_flag("--perturbed", perturbed,
                "use the nonsingular degree-2k model for the complex curve");
  auto* fo = aan->add_flag("--orientable", orientable, "branch surface is orientable");
  auto* fn = aan->add_flag("--nonorientable", nonorientable, "branch surface is non-orientable");
  fo->excludes(fn);
  fn->excludes(fo);

  auto* dp = app.add_subcommand("doubleplane", "analyze a canonical 2k-line family");
  int k = 0;
  dp->add_option("--k", k, "half the number of lines")->required();
  bool fam_pencil = false, fam_almost = false;
  auto* fp = dp->add_flag("--pencil", fam_pencil, "2k concurrent lines");
  auto* fa = dp->add_flag("--almost-pencil", fam_almost, "2k-1 concurrent lines plus one");
  fp->excludes(fa);
  fa->excludes(fp);

  auto* sw = app.add_subcommand("swvanish", "monotone-window vanishing predicate");
  int pg_res = 0, pg_prime = 0;
  sw->add_option("--pg-res", pg_res, "geometric genus of the resolved quotient")->required();
  sw->add_option("--pg-prime", pg_prime, "geometric genus of the smooth comparison surface")
      ->required();

  auto* cert = app.add_subcommand("certify", "split-curve deformation certificate");
  int deg_b = 0, deg_c = 0;
  bool rb0 = false, rc0 = false, rb1 = false, rc1 = false;
  cert->add_option("--deg-b", deg_b, "degree of factor B")->required();
  cert->add_option("--deg-c", deg_c, "degree of factor C")->required();
  cert->add_flag("--rb0", rb0, "factor B has real points at the start");
  cert->add_flag("--rc0", rc0, "factor C has real points at the start");
  cert->add_flag("--rb1", rb1, "factor B has real points at the end");
  cert->add_flag("--rc1", rc1, "factor C has real points at the end");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string command = "?";
  try {
    if (sf->parsed()) {
      command = "sfcheck";
      return cmd_sfcheck(file);
    }
    if (plumb->parsed()) {
      command = "plumb." + plumb_sub;
      return cmd_plumb(plumb_sub, file);
    }
    if (deform->parsed()) {
      if (drun->parsed()) {
        command = "deform.run";
        return cmd_deform_run(file, allow_untracked);
      }
      command = "deform.repair";
      return cmd_deform_repair(file);
    }
    if (arrange->parsed()) {
      command = "arrange.analyze";
      std::optional<bool> orient;
      if (orientable) orient = true;
      if (nonorientable) orient = false;
      return cmd_arrange(file, perturbed, orient);
    }
    if (dp->parsed()) {
      command = "doubleplane";
      return cmd_doubleplane(k, fam_pencil ? "pencil" : fam_almost ? "almost_pencil" : "generic");
    }
    if (sw->parsed()) {
      command = "swvanish";
      return cmd_swvanish(pg_res, pg_prime);
    }
    if (cert->parsed()) {
      command = "certify";
      return cmd_certify(deg_b, deg_c, rb0, rc0, rb1, rc1);
    }
    throw rsq::InternalError("no subcommand dispatched");
  } catch (const rsq::InputError& e) {
    emit(json{{"command", command}, {"error", {{"kind", "input"}, {"message", e.what()}}}});
    return 2;
  } catch (const rsq::DomainError& e) {
    emit(json{{"command", command}, {"error", {{"kind", "domain"}, {"message", e.what()}}}});
    return 2;
  } catch (const rsq::InternalError& e) {
    emit(json{{"command", command}, {"error", {{"kind", "internal"}, {"message", e.what()}}}});
    return 3;
  } catch (const std::exception& e) {
    emit(json{{"command", command}, {"error", {{"kind", "internal"}, {"message", e.what()}}}});
    return 3;
  }
}
