#include "qvol/triangulation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "qvol/errors.hpp"

namespace qvol {
namespace {

// Corner letter over a port: e, f, g, h -> A, B, C, D.  The two octahedron
// apexes are F (over-strand level, corners A, C) and E (under-strand level,
// corners B, D).
char apex_of_corner(char corner) {
  return (corner == 'B' || corner == 'D') ? 'E' : 'F';
}

SignedTetrahedron make_tet(int sigma, const std::array<PVec, 4>& coords,
                           int crossing, int quad, const char* letters,
                           bool cancelling) {
  SignedTetrahedron t;
  t.sigma = sigma;
  t.coords = coords;
  t.crossing = crossing;
  t.quad = quad;
  for (int i = 0; i < 4; ++i) {
    t.letters[i] = letters[i];
    t.hopf_images[i] = hopf(coords[i]);
  }
  t.cancelling = cancelling;
  return t;
}

// ---- signed union-find over (crossing, letter-pair) keys ------------------

using LetterPair = std::pair<char, char>;
using Key = std::pair<int, LetterPair>;

int ordered_sign(char a, char b) { return a < b ? +1 : -1; }

Key make_key(int crossing, char a, char b) {
  return {crossing, {std::min(a, b), std::max(a, b)}};
}

struct SignedDsu {
  std::map<Key, Key> parent;
  std::map<Key, int> sign;  // value(x) = sign(x) * value(parent(x))

  std::pair<Key, int> find(const Key& x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent[x] = x;
      sign[x] = +1;
      return {x, +1};
    }
    if (it->second == x) return {x, +1};
    const auto [root, s] = find(it->second);
    parent[x] = root;
    sign[x] *= s;
    return {root, sign[x]};
  }

  // Impose value(x) = s * value(y).
  void unite(const Key& x, const Key& y, int s) {
    const auto [rx, sx] = find(x);
    const auto [ry, sy] = find(y);
    if (rx == ry) {
      if (sx != s * sy)
        throw Error(ErrorCode::GluingMismatch,
                    "edge identified with itself under opposite orientations");
      return;
    }
    parent[rx] = ry;
    sign[rx] = sx * s * sy;
  }

  // Impose det_{jA}(a1, b1) = det_{jB}(a2, b2) on the canonical sorted keys.
  void unite_oriented(int jA, char a1, char b1, int jB, char a2, char b2) {
    unite(make_key(jA, a1, b1), make_key(jB, a2, b2),
          ordered_sign(a1, b1) * ordered_sign(a2, b2));
  }
};

Complex snapped_tuple(const SignedTetrahedron& t) {
  return snap_below_cut(cross_ratio_tuple(t));
}

}  // namespace

std::vector<SignedTetrahedron> build_tetrahedra(const LinkDiagram& d,
                                                const ShadowColoring& s,
                                                bool include_degenerate) {
  std::vector<SignedTetrahedron> tets;
  for (std::size_t j = 0; j < d.crossings.size(); ++j) {
    const Crossing& c = d.crossings[j];
    const PVec& al = s.arc_colors[d.arc_of.at(c.side_at(kPortH))];
    const PVec& ak = s.arc_colors[d.arc_of.at(c.side_at(kPortG))];
    const PVec alk = qop(al, ak);
    if (!crossing_degenerate(d, s, int(j))) {
      const PVec& cn = s.region_colors[c.quad_region[kQuadN]];
      const PVec& cw = s.region_colors[c.quad_region[kQuadW]];
      const PVec& cs = s.region_colors[c.quad_region[kQuadS]];
      const PVec& ce = s.region_colors[c.quad_region[kQuadE]];
      tets.push_back(make_tet(+1, {al, ak, cn, s.p}, int(j), kQuadN, "EFCD",
                              false));
      tets.push_back(make_tet(-1, {al, ak, cw, s.p}, int(j), kQuadW, "EFAD",
                              false));
      tets.push_back(make_tet(+1, {alk, ak, cs, s.p}, int(j), kQuadS, "EFAB",
                              false));
      tets.push_back(make_tet(-1, {alk, ak, ce, s.p}, int(j), kQuadE, "EFCB",
                              false));
    } else if (include_degenerate) {
      // The octahedron collapses; its four residual tetrahedra cancel in
      // sign-equal pairs and are emitted for inspection only.
      PVec base, shifted;
      if (c.sign == +1) {
        base = s.region_colors[c.quad_region[kQuadW]];
        shifted = qop(base, al);
        const PVec base_k = qop(base, ak), shifted_k = qop(shifted, ak);
        tets.push_back(make_tet(-1, {ak, base, shifted, s.p}, int(j), -1,
                                "FACD", true));
        tets.push_back(make_tet(+1, {al, base, shifted, s.p}, int(j), -1,
                                "EACD", true));
        tets.push_back(make_tet(-1, {alk, base_k, shifted_k, s.p}, int(j), -1,
                                "EACB", true));
        tets.push_back(make_tet(+1, {ak, base_k, shifted_k, s.p}, int(j), -1,
                                "FACB", true));
      } else {
        base = s.region_colors[c.quad_region[kQuadN]];
        shifted = qop(base, al);
        const PVec base_k = qop(base, ak), shifted_k = qop(shifted, ak);
        tets.push_back(make_tet(-1, {ak, shifted, base, s.p}, int(j), -1,
                                "FACD", true));
        tets.push_back(make_tet(+1, {al, shifted, base, s.p}, int(j), -1,
                                "EACD", true));
        tets.push_back(make_tet(-1, {alk, shifted_k, base_k, s.p}, int(j), -1,
                                "EACB", true));
        tets.push_back(make_tet(+1, {ak, shifted_k, base_k, s.p}, int(j), -1,
                                "FACB", true));
      }
    }
  }
  return tets;
}

Complex slot_det(const SignedTetrahedron& t, int slot) {
  const auto [i1, i2] = kSlotPairs[slot];
  return det2(t.coords[i1], t.coords[i2]);
}

Complex cross_ratio_tuple(const SignedTetrahedron& t) {
  return (slot_det(t, 2) * slot_det(t, 3)) /
         (slot_det(t, 1) * slot_det(t, 4));
}

Complex cross_ratio(const SignedTetrahedron& t) {
  const Complex u = cross_ratio_tuple(t);
  return t.sigma == +1 ? u : 1.0 / u;
}

double ptolemy_residual(const SignedTetrahedron& t) {
  return std::abs(slot_det(t, 1) * slot_det(t, 4) -
                  slot_det(t, 0) * slot_det(t, 5) -
                  slot_det(t, 2) * slot_det(t, 3));
}

double shape_consistency(const std::vector<SignedTetrahedron>& tets,
                         const LinkDiagram& d, const ShadowColoring& s) {
  double worst = 0.0;
  for (const SignedTetrahedron& t : tets) {
    if (t.cancelling) continue;
    const Crossing& c = d.crossings[t.crossing];
    const Complex ze = z_value(d, s, c.side_at(kPortE));
    const Complex zf = z_value(d, s, c.side_at(kPortF));
    const Complex zg = z_value(d, s, c.side_at(kPortG));
    const Complex zh = z_value(d, s, c.side_at(kPortH));
    Complex want;
    switch (t.quad) {
      case kQuadS: want = zf / ze; break;
      case kQuadE: want = zg / zf; break;
      case kQuadN: want = zh / zg; break;
      default: want = ze / zh; break;
    }
    worst = std::max(worst, std::abs(cross_ratio(t) - want));
  }
  return worst;
}

EdgeClassSet build_edge_classes(const std::vector<SignedTetrahedron>& tets,
                                const LinkDiagram& d, double tol) {
  SignedDsu dsu;

  // Twist identifications within every octahedron.
  for (int j = 0; j < int(d.crossings.size()); ++j) {
    dsu.unite_oriented(j, 'E', 'A', j, 'E', 'C');
    dsu.unite_oriented(j, 'F', 'B', j, 'F', 'D');
  }

  // Crossings without volume tetrahedra are degenerate: their octahedra
  // collapse, identifying the two apexes seen from every corner.
  std::set<int> live;
  for (const SignedTetrahedron& t : tets)
    if (!t.cancelling) live.insert(t.crossing);
  for (int j = 0; j < int(d.crossings.size()); ++j) {
    if (live.count(j)) continue;
    for (const char x : {'A', 'B', 'C', 'D'})
      dsu.unite_oriented(j, x, 'E', j, x, 'F');
  }

  // Fan identifications along every side, from its tail octahedron to its
  // head octahedron.
  for (const int lab : d.sides) {
    const SideEnd ta = d.tail.at(lab), he = d.head.at(lab);
    const int port_a = d.crossings[ta.crossing].port_of_slot[ta.slot];
    const int port_b = d.crossings[he.crossing].port_of_slot[he.slot];
    const char xa = corner_letter(port_a), xb = corner_letter(port_b);
    const char apex_a = apex_of_corner(xa), apex_b = apex_of_corner(xb);
    const char ya_left = corner_letter((port_a + 1) % 4);
    const char ya_right = corner_letter((port_a + 3) % 4);
    const char yb_left = corner_letter((port_b + 3) % 4);
    const char yb_right = corner_letter((port_b + 1) % 4);
    const int jA = ta.crossing, jB = he.crossing;
    for (const auto& [ya, yb] : {std::pair<char, char>{ya_left, yb_left},
                                 std::pair<char, char>{ya_right, yb_right}}) {
      if (apex_a == apex_b) {
        dsu.unite_oriented(jA, xa, ya, jB, xb, yb);
        dsu.unite_oriented(jA, xa, apex_a, jB, xb, apex_b);
        dsu.unite_oriented(jA, ya, apex_a, jB, yb, apex_b);
      } else {
        dsu.unite_oriented(jA, xa, ya, jB, yb, xb);
        dsu.unite_oriented(jA, xa, apex_a, jB, yb, apex_b);
        dsu.unite_oriented(jA, ya, apex_a, jB, xb, apex_b);
      }
    }
  }

  // Collect slot instances per root, in scan order.
  EdgeClassSet out;
  out.slot_class.assign(tets.size(), {-1, -1, -1, -1, -1, -1});
  out.slot_kappa.assign(tets.size(), {0, 0, 0, 0, 0, 0});
  std::map<Key, int> class_of_root;
  for (std::size_t ti = 0; ti < tets.size(); ++ti) {
    const SignedTetrahedron& t = tets[ti];
    if (t.cancelling) continue;
    for (int si = 0; si < 6; ++si) {
      const auto [i1, i2] = kSlotPairs[si];
      const char l1 = t.letters[i1], l2 = t.letters[i2];
      const auto [root, fsign] = dsu.find(make_key(t.crossing, l1, l2));
      const int kappa = ordered_sign(l1, l2) * fsign;
      auto it = class_of_root.find(root);
      int cid;
      if (it == class_of_root.end()) {
        cid = int(out.classes.size());
        class_of_root.emplace(root, cid);
        out.classes.push_back({});
        out.classes.back().g = double(kappa) * slot_det(t, si);
      } else {
        cid = it->second;
      }
      out.classes[cid].members.push_back({int(ti), si});
      out.slot_class[ti][si] = cid;
      out.slot_kappa[ti][si] = kappa;
    }
  }

  // Determinant moduli must agree across every class; the residual sign
  // freedom (quandle relations hold only up to sign) lands in the even part
  // of the flattening integers.
  for (const EdgeClass& cl : out.classes) {
    const double g0 = std::abs(cl.g);
    for (const auto& [ti, si] : cl.members) {
      const double gm = std::abs(slot_det(tets[ti], si));
      if (std::abs(gm - g0) > tol * std::max(1.0, g0))
        throw Error(ErrorCode::GluingMismatch,
                    "identified edges carry different determinant moduli",
                    {{"tet", std::to_string(ti)},
                     {"slot", std::to_string(si)}});
    }
  }
  return out;
}

FlattenedTetrahedron flatten(const SignedTetrahedron& t,
                             const EdgeClassSet& classes, int tet_index,
                             bool strict, double tol) {
  if (t.cancelling || classes.slot_class.at(tet_index)[0] < 0)
    throw Error(ErrorCode::DegenerateTetrahedron,
                "cancelling tetrahedron has no flattening",
                {{"tet", std::to_string(tet_index)}});
  std::array<Complex, 6> g;
  for (int si = 0; si < 6; ++si) {
    g[si] = slot_det(t, si);
    if (std::abs(g[si]) == 0.0)
      throw Error(ErrorCode::DegenerateTetrahedron,
                  "tetrahedron has a vanishing edge determinant",
                  {{"tet", std::to_string(tet_index)},
                   {"slot", std::to_string(si)}});
  }
  const Complex u0 = (g[2] * g[3]) / (g[1] * g[4]);
  Complex omu = (g[0] * g[5]) / (g[1] * g[4]);
  if (std::abs((1.0 - u0) - omu) > tol * std::max(1.0, std::abs(u0)))
    throw Error(ErrorCode::GluingMismatch,
                "edge determinants violate the Ptolemy relation",
                {{"tet", std::to_string(tet_index)}});
  const Complex u = snap_below_cut(u0);
  if (u != u0) omu = 1.0 - u;

  std::array<Complex, 6> cval;
  for (int si = 0; si < 6; ++si) {
    const int cid = classes.slot_class.at(tet_index)[si];
    cval[si] = double(classes.slot_kappa.at(tet_index)[si]) *
               classes.classes.at(cid).g;
  }
  const Complex ipi{0.0, kPi};
  const Complex p_raw = (-clog(u) + clog(cval[2]) + clog(cval[3]) -
                         clog(cval[1]) - clog(cval[4])) /
                        ipi;
  const Complex q_raw = (clog(omu) + clog(cval[1]) + clog(cval[4]) -
                         clog(cval[0]) - clog(cval[5])) /
                        ipi;
  FlattenedTetrahedron ft;
  ft.z = u;
  ft.sigma = t.sigma;
  ft.p = int(std::lround(p_raw.real()));
  ft.q = int(std::lround(q_raw.real()));
  ft.pq_residual = std::max(std::abs(p_raw - double(ft.p)),
                            std::abs(q_raw - double(ft.q)));
  if (strict && ft.pq_residual > tol)
    throw Error(ErrorCode::NotIntegral,
                "flattening exponents are not integral",
                {{"tet", std::to_string(tet_index)},
                 {"residual", std::to_string(ft.pq_residual)}});
  return ft;
}

Complex lhat(const FlattenedTetrahedron& ft) {
  return lhat_term(ft.z, ft.p, ft.q);
}

Complex total_complex_volume(const std::vector<SignedTetrahedron>& tets,
                             const EdgeClassSet& classes, bool strict,
                             double tol) {
  Complex total{};
  for (std::size_t ti = 0; ti < tets.size(); ++ti) {
    if (tets[ti].cancelling) continue;
    const FlattenedTetrahedron ft =
        flatten(tets[ti], classes, int(ti), strict, tol);
    total += double(ft.sigma) * lhat(ft);
  }
  return total;
}

std::vector<Complex> gluing_products(const std::vector<SignedTetrahedron>& tets,
                                     const EdgeClassSet& classes, bool strict,
                                     double tol) {
  std::vector<Complex> prods;
  for (const EdgeClass& cl : classes.classes) {
    Complex prod{1.0, 0.0};
    for (const auto& [ti, si] : cl.members) {
      const Complex u = snapped_tuple(tets[ti]);
      Complex factor;
      switch (si) {
        case 0:
        case 5: factor = u; break;
        case 1:
        case 4: factor = 1.0 - 1.0 / u; break;
        default: factor = 1.0 / (1.0 - u); break;
      }
      prod *= tets[ti].sigma == +1 ? factor : 1.0 / factor;
    }
    if (strict && std::abs(prod - Complex{1.0, 0.0}) > tol)
      throw Error(ErrorCode::GluingMismatch,
                  "shape parameters do not multiply to 1 around an edge",
                  {{"defect", std::to_string(std::abs(prod - 1.0))}});
    prods.push_back(prod);
  }
  return prods;
}

}  // namespace qvol
