#include "rsq/certificate.hpp"

#include "rsq/errors.hpp"

namespace rsq {

namespace {

// One stage worth of nice events: a real node blown up, then an imaginary
// node pair carried through both tangency models and resolved. Balanced in
// node count and never draws the running conj-CP^2 delta below its start.
std::vector<DeformationEvent> stage_stream() {
  return {ev_real_node(RealNodeSide::BlowUp),
          ev_create_node(),
          ev_a3_minus(A3MinusDirection::IntoNodal),
          ev_a3_minus(A3MinusDirection::OutOfNodal),
          ev_a3_plus(A3PlusDirection::CreateNode),
          ev_a3_plus(A3PlusDirection::ResolveNode),
          ev_resolve_node()};
}

CertificateStage make_stage(const std::string& moving, const std::string& from,
                            const std::string& to, const std::string& stationary,
                            const std::string& guard) {
  CertificateStage s;
  s.moving = moving;
  s.from = from;
  s.to = to;
  s.stationary = stationary;
  s.guard = guard;
  s.events = stage_stream();
  return s;
}

} // namespace

SplitCertificate split_curve_bus_certificate(int deg_b, int deg_c, bool rb0, bool rc0,
                                             bool rb1, bool rc1) {
  if (deg_b < 1 || deg_c < 1)
    throw InputError("certificate: factor degrees must be positive");
  if ((deg_b + deg_c) % 2 != 0)
    throw InputError("certificate: total degree " + std::to_string(deg_b + deg_c) +
                     " is odd; a double plane needs even degree");
  SplitCertificate cert;
  cert.deg_b = deg_b;
  cert.deg_c = deg_c;
  cert.k = (deg_b + deg_c) / 2;

  if (!rb0 && !rc0) {
    cert.reason = "both factors have empty real locus at the start; the whole curve "
                  "has no real points there and the deformation scheme does not apply";
    return cert;
  }
  if (!rb1 && !rc1) {
    cert.reason = "both factors have empty real locus at the end; the whole curve "
                  "has no real points there and the deformation scheme does not apply";
    return cert;
  }

  if (rb0 && rc1) {
    cert.stages.push_back(
        make_stage("C", "C0", "C1", "B0", "stationary B has real points at the start"));
    cert.stages.push_back(
        make_stage("B", "B0", "B1", "C1", "stationary C has real points at the end"));
  } else if (rc0 && rb1) {
    cert.stages.push_back(
        make_stage("B", "B0", "B1", "C0", "stationary C has real points at the start"));
    cert.stages.push_back(
        make_stage("C", "C0", "C1", "B1", "stationary B has real points at the end"));
  } else if (rb0 && rb1) {
    // C is real-empty at both ends: route it through an auxiliary curve
    cert.aux_used = true;
    cert.aux_name = "C'";
    cert.stages.push_back(
        make_stage("C", "C0", "C'", "B0", "stationary B has real points at the start"));
    cert.stages.push_back(
        make_stage("B", "B0", "B1", "C'", "auxiliary C' has real points by construction"));
    cert.stages.push_back(
        make_stage("C", "C'", "C1", "B1", "stationary B has real points at the end"));
  } else if (rc0 && rc1) {
    cert.aux_used = true;
    cert.aux_name = "B'";
    cert.stages.push_back(
        make_stage("B", "B0", "B'", "C0", "stationary C has real points at the start"));
    cert.stages.push_back(
        make_stage("C", "C0", "C1", "B'", "auxiliary B' has real points by construction"));
    cert.stages.push_back(
        make_stage("B", "B'", "B1", "C1", "stationary C has real points at the end"));
  } else {
    throw InternalError("certificate: schedule cases are not exhaustive");
  }

  // quotient at the split end: the decomposition of the tangent-line generic
  // arrangement (plus region, non-orientable branch) works out to equal CP^2
  // and conj-CP^2 counts; the closed form is cross-checked against the
  // arrangement module in the tests
  cert.initial = QuotientLedger{};
  cert.initial.cp2 = (cert.k - 1) * (cert.k - 2) / 2;
  cert.initial.conj_cp2 = cert.initial.cp2;

  std::vector<DeformationEvent> all;
  for (const auto& s : cert.stages)
    all.insert(all.end(), s.events.begin(), s.events.end());
  cert.run = run_path(cert.initial, all);
  if (cert.run.error_index >= 0)
    throw InternalError("certificate stream was rejected: " + cert.run.error);
  if (!cert.run.nice) throw InternalError("certificate stream is not nice");
  cert.normal_form = bus_normal_form(cert.run.final);
  auto trivial = is_bus_trivial(cert.run.final);
  if (!trivial.has_value())
    throw InternalError("certificate lost class tracking on a nice stream");
  cert.bus_trivial = *trivial;
  if (!cert.bus_trivial)
    throw InternalError("certificate stream failed to land on a trivial class");
  cert.ok = true;
  return cert;
}

nlohmann::json certificate_to_json(const SplitCertificate& c) {
  nlohmann::json j;
  j["ok"] = c.ok;
  j["deg_b"] = c.deg_b;
  j["deg_c"] = c.deg_c;
  j["k"] = c.k;
  if (!c.ok) {
    j["reason"] = c.reason;
    return j;
  }
  j["aux_used"] = c.aux_used;
  if (c.aux_used) j["aux_name"] = c.aux_name;
  nlohmann::json stages = nlohmann::json::array();
  for (const auto& s : c.stages) {
    nlohmann::json sj;
    sj["moving"] = s.moving;
    sj["from"] = s.from;
    sj["to"] = s.to;
    sj["stationary"] = s.stationary;
    sj["guard"] = s.guard;
    sj["events"] = events_to_json(s.events);
    stages.push_back(sj);
  }
  j["stages"] = stages;
  j["initial"] = ledger_to_json(c.initial);
  j["final"] = ledger_to_json(c.run.final);
  j["nice"] = c.run.nice;
  nlohmann::json nf;
  nf["tracked"] = c.normal_form.tracked;
  nf["base"] = c.normal_form.base;
  nf["cp2"] = c.normal_form.cp2;
  nf["s1xs3"] = c.normal_form.s1xs3;
  j["normal_form"] = nf;
  j["bus_trivial"] = c.bus_trivial;
  return j;
}

} // namespace rsq
