// Certificates that the quotient stays blow-up-stable trivial when a curve
// splitting into two factors is deformed end to end: a staged schedule (which
// factor moves while the other one's real locus keeps the deformation nice),
// the symbolic event stream for each stage, and the resulting normal form.
#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "rsq/ledger.hpp"

namespace rsq {

struct CertificateStage {
  std::string moving;     // factor that moves in this stage
  std::string from, to;   // symbolic endpoints of the moving factor
  std::string stationary; // factor held fixed
  std::string guard;      // why the stage is admissible
  std::vector<DeformationEvent> events;
};

struct SplitCertificate {
  bool ok = false;
  std::string reason; // failure reason when !ok
  int k = 0;          // total degree is 2k
  int deg_b = 0, deg_c = 0;
  bool aux_used = false;
  std::string aux_name;
  std::vector<CertificateStage> stages;
  QuotientLedger initial;
  PathResult run; // over the concatenated stream
  BusNormalForm normal_form;
  bool bus_trivial = false;
};

// Schedules a deformation of B0 u C0 into B1 u C1 through nice events. The
// r*-flags say whether each factor has nonempty real locus at each endpoint;
// a stage moving one factor needs the stationary one to have real points, and
// a factor with empty real locus at both ends is routed through an auxiliary
// curve. Fails (ok = false) iff both factors are real-empty at an endpoint.
// Throws InputError when deg_b + deg_c is odd or a degree is not positive.
SplitCertificate split_curve_bus_certificate(int deg_b, int deg_c, bool rb0, bool rc0,
                                             bool rb1, bool rc1);

nlohmann::json certificate_to_json(const SplitCertificate& c);

} // namespace rsq
