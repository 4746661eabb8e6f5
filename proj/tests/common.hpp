#pragma once

// Shared fixtures for the test suites: two small links whose colorings and
// invariants are pinned to exact values in the individual suites.

#include <array>
#include <cmath>
#include <map>
#include <vector>

#include "qvol/coloring.hpp"
#include "qvol/diagram.hpp"
#include "qvol/quandle.hpp"

namespace fixtures {

using qvol::Complex;
using qvol::PVec;

// Reference constants.
inline constexpr double kVolFig8 = 2.029883212819307;  // hyperbolic volume
inline const double kPiSq6 = qvol::kPiSq / 6.0;

// --- figure-eight knot -----------------------------------------------------
// 4 crossings, signs (-,-,+,+), arcs {1,2},{3,4},{5,6},{7,8}.
inline const std::vector<std::array<int, 4>> kFig8Pd = {
    {4, 7, 5, 8}, {8, 3, 1, 4}, {2, 6, 3, 5}, {6, 2, 7, 1}};

// The two roots of t^2 + t + 1 = 0.
inline Complex t_minus() { return {-0.5, -std::sqrt(3.0) / 2.0}; }
inline Complex t_plus() { return {-0.5, std::sqrt(3.0) / 2.0}; }

// Arc colors a1 = (0,t), a2 = (1,0), a3 = (-t,1+t), a4 = (-t,t).
inline std::vector<PVec> fig8_arcs(Complex t) {
  const Complex one{1.0, 0.0}, zero{0.0, 0.0};
  return {{zero, t}, {one, zero}, {-t, one + t}, {-t, t}};
}

// Region seed: the region to the right of side 4 has color (1, 1).
inline constexpr int kFig8SeedSide = 4;
inline PVec fig8_seed_color() { return {{1.0, 0.0}, {1.0, 0.0}}; }
inline PVec fig8_p() { return {{2.0, 0.0}, {1.0, 0.0}}; }

// Expected color of the region to the right of each side.
inline std::map<int, PVec> fig8_expected_right(Complex t) {
  const Complex one{1.0, 0.0}, two{2.0, 0.0}, three{3.0, 0.0}, four{4.0, 0.0};
  const PVec s1{one, one};
  const PVec s3{-t - one, t + two};
  const PVec s4{-two * t - one, two * t + three};
  const PVec s5{-two * t - one, t + four};
  const PVec s6{one, t + two};
  return {{1, s6}, {2, s5}, {3, s6}, {4, s1},
          {5, s4}, {6, s5}, {7, s4}, {8, s3}};
}

// Expected z-values per side.
inline std::map<int, Complex> fig8_expected_z(Complex t) {
  const Complex one{1.0, 0.0}, two{2.0, 0.0}, three{3.0, 0.0};
  return {{1, two},
          {2, -two / (two * t + one)},
          {3, one / (t + two)},
          {4, one},
          {5, -three * t - two},
          {6, (three * t + two) / (two * t)},
          {7, {1.5, 0.0}},
          {8, three}};
}

// --- trefoil with a kink ---------------------------------------------------
// 4 crossings, signs (+,+,+,-); the fourth crossing is a degenerate kink.
// Arcs {2,3},{4,5},{6,7},{8,1}.
inline const std::vector<std::array<int, 4>> kTrefoilPd = {
    {1, 5, 2, 4}, {5, 3, 6, 2}, {3, 1, 4, 8}, {7, 6, 8, 7}};

inline std::vector<PVec> trefoil_arcs() {
  const Complex one{1.0, 0.0}, zero{0.0, 0.0};
  const PVec a1{one, zero}, a2{zero, one}, a34{-one, one};
  return {a1, a2, a34, a34};
}

// Region seed: the region to the right of side 1 has color (1, 1).
inline constexpr int kTrefoilSeedSide = 1;
inline PVec trefoil_seed_color() { return {{1.0, 0.0}, {1.0, 0.0}}; }
inline PVec trefoil_p() { return {{2.0, 0.0}, {1.0, 0.0}}; }

inline std::map<int, PVec> trefoil_expected_right() {
  const PVec s2{{1.0, 0.0}, {2.0, 0.0}};
  const PVec s3{{-1.0, 0.0}, {3.0, 0.0}};
  const PVec s5{{1.0, 0.0}, {1.0, 0.0}};
  return {{1, s5}, {2, s2}, {3, s5}, {4, s3}, {5, s5}};
}

inline std::map<int, Complex> trefoil_expected_z() {
  return {{1, {1.5, 0.0}}, {2, {0.5, 0.0}}, {3, {1.0, 0.0}},
          {4, {-2.0, 0.0}}, {5, {2.0, 0.0}}, {6, {3.0, 0.0}},
          {7, {3.0, 0.0}}, {8, {3.0, 0.0}}};
}

// Expected w-values (w_e, w_f, w_g) of the degenerate crossing.
inline std::array<Complex, 3> trefoil_expected_w() {
  return {Complex{0.625, 0.0}, Complex{0.625, 0.0}, Complex{2.5, 0.0}};
}

// --- assembled fixtures ----------------------------------------------------
struct Fixture {
  qvol::LinkDiagram d;
  qvol::ShadowColoring s;
};

inline Fixture make(const std::vector<std::array<int, 4>>& pd_tuples,
                    const std::vector<PVec>& arcs, int seed_side,
                    const PVec& seed_color, const PVec& p) {
  qvol::PdCode pd{pd_tuples};
  Fixture f{qvol::build_diagram(pd), {}};
  const int seed_region = f.d.right_region.at(seed_side);
  f.s.arc_colors = arcs;
  f.s.region_colors =
      qvol::propagate_regions(f.d, arcs, seed_region, seed_color);
  f.s.p = p;
  return f;
}

inline Fixture make_fig8(Complex t) {
  return make(kFig8Pd, fig8_arcs(t), kFig8SeedSide, fig8_seed_color(),
              fig8_p());
}

inline Fixture make_trefoil() {
  return make(kTrefoilPd, trefoil_arcs(), kTrefoilSeedSide,
              trefoil_seed_color(), trefoil_p());
}

// A one-crossing unknot diagram with a positive kink; its only crossing is
// degenerate under any single-arc coloring.
inline const std::vector<std::array<int, 4>> kKinkPd = {{1, 1, 2, 2}};

// A two-crossing code that traces consistently but fails the Euler count
// (its face structure lives on a torus).
inline const std::vector<std::array<int, 4>> kNonPlanarPd = {{4, 3, 1, 2},
                                                             {3, 2, 4, 1}};

// A three-crossing code in which the component {1,2} passes under twice but
// never over.
inline const std::vector<std::array<int, 4>> kTrivialCompPd = {
    {1, 4, 2, 3}, {2, 5, 1, 4}, {5, 3, 6, 6}};

}  // namespace fixtures
