#include <cmath>

#include <doctest.h>

#include "common.hpp"
#include "qvol/pipeline.hpp"

using qvol::Complex;
using qvol::ErrorCode;
using qvol::JobSpec;
using qvol::kPiSq;
using qvol::PVec;

TEST_SUITE("pipeline") {

TEST_CASE("builtin examples exist and parse back from their own JSON") {
  const auto names = qvol::builtin_example_names();
  REQUIRE(names.size() == 3);
  for (const auto& name : names) {
    const JobSpec job = qvol::builtin_example(name);
    CHECK(!job.pd.crossings.empty());
    CHECK(!job.arc_colors.empty());
    REQUIRE(job.region_colors.has_value());
    REQUIRE(job.p.has_value());
    const std::string text = qvol::jobspec_to_json(job);
    const JobSpec back = qvol::parse_jobspec(text);
    CHECK(qvol::jobspec_to_json(back) == text);
  }
  try {
    (void)qvol::builtin_example("borromean");
    FAIL_CHECK("expected UnknownExample");
  } catch (const qvol::Error& e) {
    CHECK(e.code() == ErrorCode::UnknownExample);
  }
}

TEST_CASE("figure-eight examples produce the reference volumes") {
  const auto minus = qvol::run_job(qvol::builtin_example("fig8_minus"));
  CHECK(minus.vol == doctest::Approx(fixtures::kVolFig8).epsilon(1e-9));
  CHECK(std::abs(minus.cs_mod_pi2) <= 1e-6);
  CHECK(minus.h_residual <= 1e-9);
  CHECK(minus.degenerate_crossings.empty());
  CHECK(minus.crossing_signs == std::vector<int>{-1, -1, +1, +1});
  CHECK(minus.r_integrality <= 1e-9);

  const auto plus = qvol::run_job(qvol::builtin_example("fig8_plus"));
  CHECK(plus.vol == doctest::Approx(-fixtures::kVolFig8).epsilon(1e-9));
  CHECK(std::abs(plus.cs_mod_pi2) <= 1e-6);
}

TEST_CASE("trefoil example produces the reference Chern-Simons value") {
  auto job = qvol::builtin_example("trefoil");
  job.cross_check = true;
  const auto rep = qvol::run_job(job);
  CHECK(std::abs(rep.vol) <= 1e-9);
  CHECK(rep.cs_mod_pi2 == doctest::Approx(fixtures::kPiSq6).epsilon(1e-9));
  CHECK(rep.degenerate_crossings == std::vector<int>{3});
  REQUIRE(rep.cross_check.has_value());
  CHECK(rep.cross_check->tetrahedra.size() == 12);
  CHECK(rep.cross_check->agreement <= 1e-6);
  CHECK(rep.cross_check->max_pq_residual <= 1e-9);
  CHECK(rep.cross_check->max_ptolemy_residual <= 1e-9);
  CHECK(rep.cross_check->max_gluing_defect <= 1e-9);
}

TEST_CASE("reports are byte-deterministic") {
  auto job = qvol::builtin_example("fig8_minus");
  job.cross_check = true;
  const auto a = qvol::report_to_json(qvol::run_job(job));
  const auto b = qvol::report_to_json(qvol::run_job(job));
  CHECK(a == b);
  CHECK(!a.empty());
}

TEST_CASE("searched colorings agree with pinned ones modulo pi^2") {
  auto job = qvol::builtin_example("fig8_minus");
  const auto pinned = qvol::run_job(job);
  job.region_colors.reset();
  job.p.reset();
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    job.seed = seed;
    const auto rep = qvol::run_job(job);
    CHECK(std::abs(rep.vol - pinned.vol) <= 1e-6);
    CHECK(qvol::mod_pi2_dist(rep.cs_mod_pi2, pinned.cs_mod_pi2) <= 1e-6);
    CHECK(rep.h_residual <= 1e-9);
  }
}

TEST_CASE("kink unknot runs through the degenerate-only path") {
  JobSpec job;
  job.pd = qvol::PdCode{fixtures::kKinkPd};
  job.arc_colors = {PVec{{1.0, 0.0}, {1.0, 0.0}}};
  job.seed = 5;
  job.cross_check = true;
  const auto rep = qvol::run_job(job);
  CHECK(std::abs(rep.vol) <= 1e-9);
  CHECK(std::abs(rep.cs_mod_pi2) <= 1e-9);
  CHECK(rep.degenerate_crossings == std::vector<int>{0});
  REQUIRE(rep.cross_check.has_value());
  CHECK(rep.cross_check->tetrahedra.empty());
  CHECK(rep.cross_check->agreement <= 1e-6);
}

TEST_CASE("jobspec parsing errors") {
  auto expect = [](const std::string& text, ErrorCode code) {
    try {
      (void)qvol::parse_jobspec(text);
      FAIL_CHECK("expected error for " << text);
    } catch (const qvol::Error& e) {
      CHECK(e.code() == code);
    }
  };
  expect("{}", ErrorCode::MalformedJob);                 // no pd
  expect("{\"pd\": [[1,1,2,2]]}", ErrorCode::MalformedJob);  // no arc colors
  expect("[1,2]", ErrorCode::MalformedJob);              // not an object
  expect("{\"pd\": [[1,1,2,2]], \"arc_colors\": [[[0,0],[0,0]]]}",
         ErrorCode::MalformedJob);                       // zero vector color
  expect("{\"pd\": [[1,2,3]], \"arc_colors\": [[[1,0],[0,0]]]}",
         ErrorCode::MalformedPd);                        // pd arity
}

TEST_CASE("validation and gate errors carry the right classification") {
  // Wrong arc colors: a validation failure.
  JobSpec bad;
  bad.pd = qvol::PdCode{fixtures::kFig8Pd};
  bad.arc_colors = fixtures::fig8_arcs(fixtures::t_minus());
  bad.arc_colors[0] = PVec{{3.0, 0.0}, {4.0, 0.0}};
  try {
    (void)qvol::run_job(bad);
    FAIL_CHECK("expected RelationViolated");
  } catch (const qvol::Error& e) {
    CHECK(e.code() == ErrorCode::RelationViolated);
    CHECK(qvol::is_validation_error(e.code()));
    const std::string json = qvol::error_to_json(e);
    CHECK(json.find("\"error\"") != std::string::npos);
    CHECK(json.find("RelationViolated") != std::string::npos);
  }

  // An unreachable saddle tolerance: a numerical gate failure.
  auto strict = qvol::builtin_example("trefoil");
  strict.tol.tol_h = 1e-18;
  try {
    (void)qvol::run_job(strict);
    FAIL_CHECK("expected NotAtSaddle");
  } catch (const qvol::Error& e) {
    CHECK(e.code() == ErrorCode::NotAtSaddle);
    CHECK(!qvol::is_validation_error(e.code()));
  }
}

TEST_CASE("tolerance overrides round-trip through JSON") {
  auto job = qvol::builtin_example("trefoil");
  job.tol.tol_h = 3e-7;
  job.tol.tol_agree = 2e-5;
  job.cross_check = true;
  job.debug_degenerate = true;
  const auto back = qvol::parse_jobspec(qvol::jobspec_to_json(job));
  CHECK(back.tol.tol_h == 3e-7);
  CHECK(back.tol.tol_agree == 2e-5);
  CHECK(back.cross_check);
  CHECK(back.debug_degenerate);
}

TEST_CASE("debug_degenerate adds marked rows without changing totals") {
  auto job = qvol::builtin_example("trefoil");
  job.cross_check = true;
  const auto plain = qvol::run_job(job);
  job.debug_degenerate = true;
  const auto dbg = qvol::run_job(job);
  REQUIRE(plain.cross_check.has_value());
  REQUIRE(dbg.cross_check.has_value());
  CHECK(dbg.cross_check->tetrahedra.size() ==
        plain.cross_check->tetrahedra.size() + 4);
  CHECK(std::abs(dbg.cross_check->lhat_sum_re -
                 plain.cross_check->lhat_sum_re) <= 1e-12);
  CHECK(std::abs(dbg.cross_check->lhat_sum_im -
                 plain.cross_check->lhat_sum_im) <= 1e-12);
  CHECK(dbg.vol == plain.vol);
}

}  // TEST_SUITE
