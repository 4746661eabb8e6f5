#include "qvol/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <string>

#include "qvol/errors.hpp"

namespace qvol {
namespace {

double comp_dist(const PVec& a, const PVec& b) {
  return std::max(std::abs(a.alpha - b.alpha), std::abs(a.beta - b.beta));
}

const PVec& arc_color_at(const LinkDiagram& d, const std::vector<PVec>& arcs,
                         int side) {
  return arcs[d.arc_of.at(side)];
}

}  // namespace

std::vector<int> check_arc_relations(const LinkDiagram& d,
                                     const std::vector<PVec>& arc_colors,
                                     double tol, double* out_residual) {
  if (arc_colors.size() != d.arcs.size())
    throw Error(ErrorCode::RelationViolated,
                "expected one arc color per arc",
                {{"arcs", std::to_string(d.arcs.size())},
                 {"colors", std::to_string(arc_colors.size())}});
  std::vector<int> signs;
  double worst = 0.0;
  for (std::size_t j = 0; j < d.crossings.size(); ++j) {
    const Crossing& c = d.crossings[j];
    const PVec& al = arc_colors[d.arc_of.at(c.side_at(kPortH))];
    const PVec& ak = arc_colors[d.arc_of.at(c.side_at(kPortG))];
    const PVec& af = arc_colors[d.arc_of.at(c.side_at(kPortF))];
    const PVec prod = qop(al, ak);
    const double d_plus = comp_dist(prod, af);
    const double d_minus = comp_dist(prod, negate(af));
    const double best = std::min(d_plus, d_minus);
    if (!(best <= tol))
      throw Error(ErrorCode::RelationViolated,
                  "arc colors violate the crossing relation",
                  {{"crossing", std::to_string(j)},
                   {"residual", std::to_string(best)}});
    worst = std::max(worst, best);
    signs.push_back(d_plus <= d_minus ? +1 : -1);
  }
  if (out_residual) *out_residual = worst;
  return signs;
}

std::vector<PVec> propagate_regions(const LinkDiagram& d,
                                    const std::vector<PVec>& arc_colors,
                                    int seed_region, const PVec& seed_color,
                                    double tol) {
  const int nr = int(d.regions.size());
  if (seed_region < 0 || seed_region >= nr)
    throw Error(ErrorCode::InconsistentPropagation,
                "seed region index out of range",
                {{"region", std::to_string(seed_region)}});
  std::vector<PVec> colors(nr);
  std::vector<bool> known(nr, false);
  colors[seed_region] = seed_color;
  known[seed_region] = true;

  std::deque<int> queue{seed_region};
  auto offer = [&](int region, const PVec& value) {
    if (!known[region]) {
      colors[region] = value;
      known[region] = true;
      queue.push_back(region);
    } else if (!(comp_dist(colors[region], value) <= tol)) {
      throw Error(ErrorCode::InconsistentPropagation,
                  "region color disagrees along a second path",
                  {{"region", std::to_string(region)}});
    }
  };

  while (!queue.empty()) {
    const int r = queue.front();
    queue.pop_front();
    for (const int lab : d.sides) {
      const PVec& a = arc_color_at(d, arc_colors, lab);
      if (d.right_region.at(lab) == r)
        offer(d.left_region.at(lab), qop(colors[r], a));
      if (d.left_region.at(lab) == r)
        offer(d.right_region.at(lab), qop_inv(colors[r], a));
    }
  }
  for (int r = 0; r < nr; ++r)
    if (!known[r])
      throw Error(ErrorCode::InconsistentPropagation,
                  "region not reachable from the seed",
                  {{"region", std::to_string(r)}});

  for (const int lab : d.sides) {
    const PVec& a = arc_color_at(d, arc_colors, lab);
    const PVec expect = qop(colors[d.right_region.at(lab)], a);
    if (!(comp_dist(expect, colors[d.left_region.at(lab)]) <= tol))
      throw Error(ErrorCode::InconsistentPropagation,
                  "side fails the left/right closure rule",
                  {{"side", std::to_string(lab)}});
  }
  return colors;
}

bool crossing_degenerate(const LinkDiagram& d, const ShadowColoring& s,
                         int crossing, double tol_sep) {
  const Crossing& c = d.crossings[crossing];
  const PVec& al = s.arc_colors[d.arc_of.at(c.side_at(kPortH))];
  const PVec& ak = s.arc_colors[d.arc_of.at(c.side_at(kPortG))];
  return chordal_distance(hopf(al), hopf(ak)) < tol_sep;
}

Complex z_value(const LinkDiagram& d, const ShadowColoring& s, int side) {
  const PVec& a = arc_color_at(d, s.arc_colors, side);
  const PVec& r = s.region_colors[d.right_region.at(side)];
  return det2(a, s.p) / det2(a, r);
}

std::array<Complex, 3> w_values(const LinkDiagram& d, const ShadowColoring& s,
                                int crossing) {
  const Crossing& c = d.crossings[crossing];
  const PVec& rn = s.region_colors[c.quad_region[kQuadN]];
  const PVec& rw = s.region_colors[c.quad_region[kQuadW]];
  const PVec& rs = s.region_colors[c.quad_region[kQuadS]];
  const PVec& re = s.region_colors[c.quad_region[kQuadE]];
  return {det2(rw, s.p) / det2(rs, s.p), det2(re, s.p) / det2(rs, s.p),
          det2(re, s.p) / det2(rn, s.p)};
}

std::array<PVec, 4> quadrant_colors(const LinkDiagram& d,
                                    const ShadowColoring& s, int crossing) {
  const Crossing& c = d.crossings[crossing];
  std::array<PVec, 4> out{};
  out[kQuadS] = s.region_colors[c.quad_region[kQuadS]];
  // Walk counterclockwise S -> E -> N -> W; consecutive quadrants are
  // separated by the sides at ports f, g, h.
  constexpr int step_quad[3][2] = {
      {kQuadS, kQuadE}, {kQuadE, kQuadN}, {kQuadN, kQuadW}};
  constexpr int step_port[3] = {kPortF, kPortG, kPortH};
  for (int i = 0; i < 3; ++i) {
    const int lab = c.side_at(step_port[i]);
    const PVec& a = arc_color_at(d, s.arc_colors, lab);
    const int from = step_quad[i][0], to = step_quad[i][1];
    if (c.quad_region[to] == d.left_region.at(lab))
      out[to] = qop(out[from], a);
    else
      out[to] = qop_inv(out[from], a);
  }
  return out;
}

double closure_residual(const LinkDiagram& d, const std::vector<PVec>& arcs,
                        const std::vector<PVec>& regions) {
  double worst = 0.0;
  for (const int lab : d.sides) {
    const PVec& a = arc_color_at(d, arcs, lab);
    const PVec expect = qop(regions[d.right_region.at(lab)], a);
    worst = std::max(worst,
                     comp_dist(expect, regions[d.left_region.at(lab)]));
  }
  return worst;
}

GenericityReport check_genericity(const LinkDiagram& d,
                                  const ShadowColoring& s, double tol_sep,
                                  bool strict) {
  GenericityReport rep;
  rep.min_separation = 4.0;  // larger than the chordal diameter
  auto gap = [&](double dist, const std::string& what) {
    rep.min_separation = std::min(rep.min_separation, dist);
    if (dist < tol_sep) {
      rep.ok = false;
      rep.failures.push_back(what + " (gap " + std::to_string(dist) + ")");
    }
  };

  const ExtendedComplex hp = hopf(s.p);
  for (std::size_t i = 0; i < s.arc_colors.size(); ++i)
    gap(chordal_distance(hp, hopf(s.arc_colors[i])),
        "p collides with arc " + std::to_string(i));
  for (std::size_t r = 0; r < s.region_colors.size(); ++r)
    gap(chordal_distance(hp, hopf(s.region_colors[r])),
        "p collides with region " + std::to_string(r));

  for (const int lab : d.sides) {
    const ExtendedComplex ha = hopf(arc_color_at(d, s.arc_colors, lab));
    const ExtendedComplex hr = hopf(s.region_colors[d.right_region.at(lab)]);
    const ExtendedComplex hl = hopf(s.region_colors[d.left_region.at(lab)]);
    const std::string tag = "side " + std::to_string(lab);
    gap(chordal_distance(ha, hr), tag + ": arc vs right region");
    gap(chordal_distance(ha, hl), tag + ": arc vs left region");
    gap(chordal_distance(hr, hl), tag + ": right vs left region");
  }

  if (strict && !rep.ok)
    throw Error(ErrorCode::GenericityViolated,
                "coloring is not generic: " + rep.failures.front(),
                {{"failures", std::to_string(rep.failures.size())}});
  return rep;
}

ShadowColoring find_generic_coloring(
    const LinkDiagram& d, const std::vector<PVec>& arc_colors,
    std::uint64_t seed, const std::optional<std::vector<PVec>>& region_colors,
    const std::optional<PVec>& p, double tol_sep, int max_tries) {
  check_arc_relations(d, arc_colors);
  const double margin = std::max(tol_sep, 1e-6);

  if (region_colors && p) {
    ShadowColoring s{arc_colors, *region_colors, *p};
    check_genericity(d, s, margin, /*strict=*/true);
    return s;
  }

  std::mt19937_64 rng(seed);
  for (int tries = 0; tries < max_tries; ++tries) {
    const int radius = std::min(2 + tries / 25, 50);
    std::uniform_int_distribution<int> pick(-radius, radius);
    auto draw = [&] {
      PVec v;
      do {
        v = PVec{Complex(double(pick(rng)), 0.0),
                 Complex(double(pick(rng)), 0.0)};
      } while (is_zero_vector(v));
      return v;
    };
    ShadowColoring s;
    s.arc_colors = arc_colors;
    const PVec seed_color = region_colors ? PVec{} : draw();
    s.p = p ? *p : draw();
    try {
      s.region_colors = region_colors
                            ? *region_colors
                            : propagate_regions(d, arc_colors, 0, seed_color);
      if (check_genericity(d, s, margin, /*strict=*/false).ok) return s;
    } catch (const Error&) {
      // Retry with the next candidate.
    }
  }
  throw Error(ErrorCode::SearchExhausted,
              "no generic coloring found",
              {{"tries", std::to_string(max_tries)}});
}

}  // namespace qvol
