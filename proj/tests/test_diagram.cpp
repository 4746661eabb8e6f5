#include <algorithm>
#include <set>

#include <doctest.h>

#include "common.hpp"
#include "qvol/diagram.hpp"
#include "qvol/errors.hpp"

using qvol::ErrorCode;

namespace {

qvol::LinkDiagram build(const std::vector<std::array<int, 4>>& tuples) {
  return qvol::build_diagram(qvol::PdCode{tuples});
}

void check_error(const std::vector<std::array<int, 4>>& tuples,
                 ErrorCode want) {
  try {
    (void)build(tuples);
    FAIL_CHECK("expected an error, code " << qvol::error_code_name(want));
  } catch (const qvol::Error& e) {
    CHECK(e.code() == want);
  }
}

}  // namespace

TEST_SUITE("diagram") {

TEST_CASE("parse_pd accepts bare arrays and pd objects") {
  const auto a = qvol::parse_pd("[[1,5,2,4],[5,3,6,2],[3,1,4,8],[7,6,8,7]]");
  CHECK(a.crossings.size() == 4);
  CHECK(a.crossings[0] == std::array<int, 4>{1, 5, 2, 4});
  const auto b = qvol::parse_pd(R"({"pd": [[1,2,2,1]]})");
  CHECK(b.crossings.size() == 1);
}

TEST_CASE("parse_pd rejects malformed input") {
  auto expect_malformed = [](const std::string& text) {
    try {
      (void)qvol::parse_pd(text);
      FAIL_CHECK("expected MalformedPd for " << text);
    } catch (const qvol::Error& e) {
      CHECK(e.code() == ErrorCode::MalformedPd);
    }
  };
  expect_malformed("[]");                      // empty
  expect_malformed("[[1,2,3]]");               // arity
  expect_malformed("[[1,2,3,4,5]]");           // arity
  expect_malformed("[[1,2,3,4]]");             // every label once
  expect_malformed("[[1,1,1,2],[2,3,3,4]]");   // label three times
  expect_malformed("not json");                // not JSON at all
  expect_malformed("{\"pd\": 7}");             // wrong shape
  expect_malformed("[[0,1,1,0]]");             // non-positive label
}

TEST_CASE("figure-eight combinatorics") {
  const auto d = build(fixtures::kFig8Pd);
  CHECK(d.crossings.size() == 4);
  CHECK(d.sides.size() == 8);
  CHECK(d.regions.size() == 6);  // Euler: 4 - 8 + 6 = 2
  CHECK(d.components.size() == 1);
  CHECK(d.components[0].size() == 8);

  const std::vector<int> want_signs{-1, -1, +1, +1};
  for (int j = 0; j < 4; ++j) {
    CHECK(d.crossings[j].sign == want_signs[j]);
    CHECK(qvol::crossing_sign(d.crossings[j]) == want_signs[j]);
  }

  REQUIRE(d.arcs.size() == 4);
  CHECK(d.arcs[0] == std::vector<int>{1, 2});
  CHECK(d.arcs[1] == std::vector<int>{3, 4});
  CHECK(d.arcs[2] == std::vector<int>{5, 6});
  CHECK(d.arcs[3] == std::vector<int>{7, 8});
  CHECK(d.arc_of.at(6) == 2);
}

TEST_CASE("trefoil combinatorics") {
  const auto d = build(fixtures::kTrefoilPd);
  CHECK(d.crossings.size() == 4);
  CHECK(d.sides.size() == 8);
  CHECK(d.regions.size() == 6);
  CHECK(d.components.size() == 1);

  const std::vector<int> want_signs{+1, +1, +1, -1};
  for (int j = 0; j < 4; ++j) CHECK(d.crossings[j].sign == want_signs[j]);

  REQUIRE(d.arcs.size() == 4);
  CHECK(d.arcs[0] == std::vector<int>{2, 3});
  CHECK(d.arcs[1] == std::vector<int>{4, 5});
  CHECK(d.arcs[2] == std::vector<int>{6, 7});
  CHECK(d.arcs[3] == std::vector<int>{8, 1});

  // The kink crossing touches only three distinct sides: 7 at two ports.
  const auto& c3 = d.crossings[3];
  CHECK(c3.side_at(qvol::kPortE) == 7);
  CHECK(c3.side_at(qvol::kPortF) == 7);
  CHECK(c3.side_at(qvol::kPortG) == 6);
  CHECK(c3.side_at(qvol::kPortH) == 8);
}

TEST_CASE("port tables match the sign convention") {
  for (const auto* pd : {&fixtures::kFig8Pd, &fixtures::kTrefoilPd}) {
    const auto d = build(*pd);
    for (const auto& c : d.crossings) {
      if (c.sign > 0) {
        // slots a,b,c,d -> ports h,e,f,g
        CHECK(c.port_of_slot == std::array<int, 4>{qvol::kPortH, qvol::kPortE,
                                                   qvol::kPortF, qvol::kPortG});
      } else {
        // slots a,b,c,d -> ports f,g,h,e
        CHECK(c.port_of_slot == std::array<int, 4>{qvol::kPortF, qvol::kPortG,
                                                   qvol::kPortH, qvol::kPortE});
      }
      for (int port = 0; port < 4; ++port) {
        CHECK(c.port_of_slot[c.slot_of_port[port]] == port);
        CHECK(c.side_at_port[port] == c.pd[c.slot_of_port[port]]);
      }
    }
  }
}

TEST_CASE("strand structure: tails, heads, next_side") {
  const auto d = build(fixtures::kFig8Pd);
  std::set<int> seen;
  for (int lab : d.sides) {
    const auto t = d.tail.at(lab);
    const auto h = d.head.at(lab);
    CHECK(!(t == h));
    // The side really attaches where the maps claim.
    CHECK(d.pd.crossings[t.crossing][t.slot] == lab);
    CHECK(d.pd.crossings[h.crossing][h.slot] == lab);
    // Heads arrive at an under-in (0) or over slot (1, 3), never slot 2.
    CHECK(h.slot != 2);
    seen.insert(d.next_side.at(lab));
  }
  // next_side is a permutation of the sides.
  CHECK(seen.size() == d.sides.size());
}

TEST_CASE("regions: boundary sanity and side adjacency") {
  for (const auto* pd : {&fixtures::kFig8Pd, &fixtures::kTrefoilPd}) {
    const auto d = build(*pd);
    // Every directed side appears in exactly one region boundary.
    std::map<std::pair<int, int>, int> uses;
    for (const auto& r : d.regions)
      for (const auto& [lab, dirn] : r.boundary) ++uses[{lab, dirn}];
    CHECK(uses.size() == 2 * d.sides.size());
    for (const auto& [k, n] : uses) CHECK(n == 1);
    for (int lab : d.sides) {
      const int lf = d.left_region.at(lab);
      const int rf = d.right_region.at(lab);
      CHECK(lf != rf);  // no side bounds the same region on both sides here
      // left region contains the forward direction, right the reverse
      auto contains = [&](int reg, int dirn) {
        const auto& b = d.regions[reg].boundary;
        return std::find(b.begin(), b.end(), std::make_pair(lab, dirn)) !=
               b.end();
      };
      CHECK(contains(lf, +1));
      CHECK(contains(rf, -1));
    }
  }
}

TEST_CASE("quadrant regions agree with port geometry") {
  for (const auto* pd : {&fixtures::kFig8Pd, &fixtures::kTrefoilPd}) {
    const auto d = build(*pd);
    for (std::size_t j = 0; j < d.crossings.size(); ++j) {
      const auto& c = d.crossings[j];
      // The quadrant after a port is the left face of the edge departing
      // outward at that port's slot.
      for (int sl = 0; sl < 4; ++sl) {
        const int lab = c.pd[sl];
        const bool outward = (d.tail.at(lab) == qvol::SideEnd{int(j), sl});
        const int face =
            outward ? d.left_region.at(lab) : d.right_region.at(lab);
        CHECK(c.quad_region[qvol::quad_after_port(c.port_of_slot[sl])] == face);
      }
    }
  }
}

TEST_CASE("single kinks build with the expected sign") {
  const auto pos = build(fixtures::kKinkPd);  // [[1,1,2,2]]
  CHECK(pos.crossings.size() == 1);
  CHECK(pos.crossings[0].sign == +1);
  CHECK(pos.regions.size() == 3);
  CHECK(pos.arcs.size() == 1);

  const auto neg = build({{1, 2, 2, 1}});
  CHECK(neg.crossings[0].sign == -1);
  CHECK(neg.regions.size() == 3);
  // North and south quadrants of a positive kink share a region.
  const auto& c = pos.crossings[0];
  CHECK(c.quad_region[qvol::kQuadN] == c.quad_region[qvol::kQuadS]);
}

TEST_CASE("error cases") {
  check_error(fixtures::kNonPlanarPd, ErrorCode::NonPlanar);
  check_error(fixtures::kTrivialCompPd, ErrorCode::TrivialComponent);
  // Two stacked circles with no under-passes at all: orientation of the
  // over-only strands cannot be inferred.
  check_error({{1, 3, 2, 4}, {2, 4, 1, 3}}, ErrorCode::MalformedPd);
}

TEST_CASE("compute_regions standalone agrees with build_diagram") {
  const qvol::PdCode pd{fixtures::kFig8Pd};
  const auto regions = qvol::compute_regions(pd);
  const auto d = qvol::build_diagram(pd);
  REQUIRE(regions.size() == d.regions.size());
  for (std::size_t i = 0; i < regions.size(); ++i)
    CHECK(regions[i].boundary == d.regions[i].boundary);
}

}  // TEST_SUITE
