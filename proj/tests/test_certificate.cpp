#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsq/arrangement.hpp"
#include "rsq/certificate.hpp"
#include "rsq/errors.hpp"

using namespace rsq;

TEST_CASE("degree validation") {
  CHECK_THROWS_AS(split_curve_bus_certificate(0, 2, true, true, true, true), InputError);
  CHECK_THROWS_AS(split_curve_bus_certificate(2, -1, true, true, true, true), InputError);
  CHECK_THROWS_AS(split_curve_bus_certificate(2, 1, true, true, true, true), InputError);
  CHECK_NOTHROW(split_curve_bus_certificate(1, 1, true, true, true, true));
  CHECK_NOTHROW(split_curve_bus_certificate(3, 1, true, true, true, true));
}

TEST_CASE("certifiable exactly when some factor is real at each endpoint") {
  for (int mask = 0; mask < 16; ++mask) {
    bool rb0 = mask & 1, rc0 = mask & 2, rb1 = mask & 4, rc1 = mask & 8;
    auto cert = split_curve_bus_certificate(2, 2, rb0, rc0, rb1, rc1);
    bool expect = (rb0 || rc0) && (rb1 || rc1);
    CHECK(cert.ok == expect);
    if (!expect) {
      CHECK(!cert.reason.empty());
      bool start_empty = !rb0 && !rc0;
      if (start_empty) CHECK(cert.reason.find("start") != std::string::npos);
      else CHECK(cert.reason.find("end") != std::string::npos);
      CHECK(cert.stages.empty());
    } else {
      // every certified schedule runs nice and lands on the trivial class
      CHECK(cert.run.error_index == -1);
      CHECK(cert.run.nice);
      for (const auto& s : cert.stages) {
        CHECK(!s.guard.empty());
        for (const auto& e : s.events) CHECK(is_nice(e));
      }
      CHECK(cert.bus_trivial);
      CHECK(cert.normal_form.base == "S4");
      CHECK(cert.normal_form.s1xs3 == 0);
      CHECK(cert.run.final.node_count == 0);
    }
  }
}

TEST_CASE("schedule shapes: direct two-stage plans and auxiliary three-stage plans") {
  auto direct1 = split_curve_bus_certificate(2, 2, true, false, false, true);
  REQUIRE(direct1.ok);
  CHECK(!direct1.aux_used);
  REQUIRE(direct1.stages.size() == 2);
  CHECK(direct1.stages[0].moving == "C");
  CHECK(direct1.stages[0].stationary == "B0");
  CHECK(direct1.stages[1].moving == "B");
  CHECK(direct1.stages[1].stationary == "C1");

  auto direct2 = split_curve_bus_certificate(2, 2, false, true, true, false);
  REQUIRE(direct2.ok);
  CHECK(!direct2.aux_used);
  REQUIRE(direct2.stages.size() == 2);
  CHECK(direct2.stages[0].moving == "B");
  CHECK(direct2.stages[1].moving == "C");

  // C real-empty at both ends: detour through an auxiliary curve
  auto aux_c = split_curve_bus_certificate(2, 2, true, false, true, false);
  REQUIRE(aux_c.ok);
  CHECK(aux_c.aux_used);
  CHECK(aux_c.aux_name == "C'");
  REQUIRE(aux_c.stages.size() == 3);
  CHECK(aux_c.stages[0].moving == "C");
  CHECK(aux_c.stages[0].to == "C'");
  CHECK(aux_c.stages[1].moving == "B");
  CHECK(aux_c.stages[1].stationary == "C'");
  CHECK(aux_c.stages[2].from == "C'");
  CHECK(aux_c.stages[2].to == "C1");

  auto aux_b = split_curve_bus_certificate(2, 2, false, true, false, true);
  REQUIRE(aux_b.ok);
  CHECK(aux_b.aux_used);
  CHECK(aux_b.aux_name == "B'");
  REQUIRE(aux_b.stages.size() == 3);
  CHECK(aux_b.stages[1].moving == "C");

  // when both factors are real everywhere the direct plan wins
  auto both = split_curve_bus_certificate(2, 2, true, true, true, true);
  REQUIRE(both.ok);
  CHECK(!both.aux_used);
  CHECK(both.stages.size() == 2);
}

TEST_CASE("each stage stream is balanced and never dips the counters") {
  auto cert = split_curve_bus_certificate(3, 3, true, true, true, true);
  REQUIRE(cert.ok);
  for (const auto& s : cert.stages) {
    auto r = run_path(QuotientLedger{}, s.events);
    CHECK(r.error_index == -1); // starts from zero open nodes and stays legal
    CHECK(r.final.node_count == 0);
    CHECK(r.final.conj_cp2 >= 0);
    for (const auto& l : r.trace) CHECK(l.conj_cp2 >= 0);
  }
  // the full run preserves the blow-up-stable data of the initial ledger
  CHECK(cert.normal_form.cp2 == cert.initial.cp2 + cert.initial.s2xs2);
  CHECK(cert.run.final.s1xs3 == cert.initial.s1xs3);
}

TEST_CASE("the starting ledger matches the split-end quotient of the generic model") {
  for (int k = 1; k <= 6; ++k) {
    // re-derive the counts from the geometry: plus region, non-orientable branch
    auto report = quotient_invariants(generic_arrangement(k), false);
    auto dec = decomposition_prediction(report, false);
    REQUIRE(dec.kind == Decomposition::Kind::NonOrientable);

    auto cert = split_curve_bus_certificate(k, k, true, true, true, true);
    REQUIRE(cert.ok);
    CHECK(cert.initial.cp2 == dec.cp2);
    CHECK(cert.initial.conj_cp2 == dec.conj_cp2);
    CHECK(cert.initial.base_is_s4);
    CHECK(cert.initial.s1xs3 == 0);
    CHECK(cert.initial.node_count == 0);
  }
}

TEST_CASE("degrees may split unevenly") {
  auto cert = split_curve_bus_certificate(5, 1, true, true, true, true);
  REQUIRE(cert.ok);
  CHECK(cert.k == 3);
  CHECK(cert.initial.cp2 == 1); // (3-1)(3-2)/2
  CHECK(cert.bus_trivial);
}

TEST_CASE("certificate json carries the schedule or the refusal") {
  auto cert = split_curve_bus_certificate(2, 2, true, false, true, false);
  auto j = certificate_to_json(cert);
  CHECK(j.at("ok") == true);
  CHECK(j.at("aux_used") == true);
  CHECK(j.at("aux_name") == "C'");
  CHECK(j.at("stages").size() == 3);
  CHECK(j.at("stages")[0].at("events").size() == 7);
  CHECK(j.at("bus_trivial") == true);
  CHECK(j.at("normal_form").at("base") == "S4");
  CHECK(j.at("initial").at("cp2") == 0);

  auto no = split_curve_bus_certificate(2, 2, false, false, true, true);
  auto nj = certificate_to_json(no);
  CHECK(nj.at("ok") == false);
  CHECK(!nj.at("reason").get<std::string>().empty());
  CHECK(!nj.contains("stages"));
}
