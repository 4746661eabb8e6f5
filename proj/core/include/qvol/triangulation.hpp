#pragma once

#include <array>
#include <utility>
#include <vector>

#include "qvol/coloring.hpp"
#include "qvol/complexmath.hpp"
#include "qvol/diagram.hpp"

namespace qvol {

// A signed ideal tetrahedron of the octahedral decomposition, with ordered
// vertex decorations in C^2 \ {0}.  Each non-degenerate crossing contributes
// four tetrahedra, one per quadrant, in the order N, W, S, E with signs
// +, -, +, -.  Degenerate crossings contribute none to the volume sum; with
// `include_degenerate` they contribute four explicitly cancelling tetrahedra
// (marked `cancelling`) useful for inspection.
struct SignedTetrahedron {
  int sigma = 0;                       // +1 / -1
  std::array<PVec, 4> coords{};        // vertex decorations (v0, v1, v2, v3)
  std::array<ExtendedComplex, 4> hopf_images{};
  int crossing = -1;
  int quad = -1;                       // Quad enum; -1 for cancelling tetras
  std::array<char, 4> letters{};       // vertex names for reports
  bool cancelling = false;
};

std::vector<SignedTetrahedron> build_tetrahedra(const LinkDiagram& d,
                                                const ShadowColoring& s,
                                                bool include_degenerate = false);

// Vertex-pair slots of a tetrahedron, in the fixed order
// (01), (02), (03), (12), (13), (23).
inline constexpr std::array<std::pair<int, int>, 6> kSlotPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// det2 of the two vertex decorations at a slot.
Complex slot_det(const SignedTetrahedron& t, int slot);

// Cross-ratio in determinant form, [g03 g12] / [g02 g13]; its complement
// 1 - u equals [g01 g23] / [g02 g13] by the Ptolemy identity.
Complex cross_ratio_tuple(const SignedTetrahedron& t);

// The shape parameter of the signed tetrahedron: tuple form raised to sigma.
Complex cross_ratio(const SignedTetrahedron& t);

// |g02 g13 - g01 g23 - g03 g12| (should vanish).
double ptolemy_residual(const SignedTetrahedron& t);

// Check each quadrant tetrahedron's sigma-adjusted shape against the matching
// z-ratio of the crossing (S: z_f/z_e, E: z_g/z_f, N: z_h/z_g, W: z_e/z_h);
// returns the max modulus of the differences.
double shape_consistency(const std::vector<SignedTetrahedron>& tets,
                         const LinkDiagram& d, const ShadowColoring& s);

// --- Edge identification ---------------------------------------------------
// Long edges of the octahedra are glued across the diagram; classes are
// computed by union-find over (crossing, corner-pair) keys with parity
// tracking.  Every class receives one determinant value G (from its first
// member); all members must agree in |det| within tol.
struct EdgeClass {
  std::vector<std::pair<int, int>> members;  // (tet index, slot)
  Complex g;                                 // chosen determinant value
};

struct EdgeClassSet {
  std::vector<EdgeClass> classes;
  // per tetrahedron: class id and orientation sign of each slot
  std::vector<std::array<int, 6>> slot_class;
  std::vector<std::array<int, 6>> slot_kappa;
};

EdgeClassSet build_edge_classes(const std::vector<SignedTetrahedron>& tets,
                                const LinkDiagram& d, double tol = 1e-9);

// --- Flattening ------------------------------------------------------------
struct FlattenedTetrahedron {
  Complex z;        // snapped cross-ratio (tuple form)
  int p = 0;
  int q = 0;
  int sigma = 0;
  double pq_residual = 0.0;  // distance of (p, q) from integrality
};

// Integers p, q from the five edge determinants of a tetrahedron:
//   p pi i = -log u + log G03 + log G12 - log G02 - log G13
//   q pi i =  log(1-u) + log G02 + log G13 - log G01 - log G23
// with per-slot signed determinants kappa G.  Throws Error(NotIntegral) when
// `strict` and a residual exceeds tol.
FlattenedTetrahedron flatten(const SignedTetrahedron& t,
                             const EdgeClassSet& classes, int tet_index,
                             bool strict = true, double tol = 1e-9);

// Extended dilogarithm of a flattening:
//   Lhat = Li2(u) + (log u log(1-u))/2 + (pi i / 2)(q log u + p log(1-u))
//          - pi^2/6.
Complex lhat(const FlattenedTetrahedron& ft);

// Sum of sigma * Lhat over all non-cancelling tetrahedra.
Complex total_complex_volume(const std::vector<SignedTetrahedron>& tets,
                             const EdgeClassSet& classes, bool strict = true,
                             double tol = 1e-9);

// Per-class product of shape factors (slot (01),(23) -> u; (02),(13) ->
// 1 - 1/u; (03),(12) -> 1/(1-u)), each raised to sigma; all must equal 1.
// Throws Error(GluingMismatch) when `strict` and a product strays by more
// than tol.
std::vector<Complex> gluing_products(const std::vector<SignedTetrahedron>& tets,
                                     const EdgeClassSet& classes,
                                     bool strict = false, double tol = 1e-9);

}  // namespace qvol
