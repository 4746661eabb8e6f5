#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qvol {

// ---------------------------------------------------------------------------
// PD code convention (normative for this repo):
//   Each crossing is a 4-tuple [a, b, c, d] of side labels listed counter-
//   clockwise starting at the incoming under-strand side a.  The under-strand
//   leaves at slot c; the over-strand occupies slots {b, d} and its direction
//   is inferred by tracing strands globally.  The crossing is positive exactly
//   when the over-strand enters at slot d.
//
// Ports:
//   Each crossing's four strand stubs carry canonical cyclic names e, f, g, h
//   (counterclockwise).  The over-strand always runs g -> e.  At a positive
//   crossing the under-strand runs h -> f (slots map a,b,c,d -> h,e,f,g); at a
//   negative crossing it runs f -> h (slots map a,b,c,d -> f,g,h,e).
//
// Corners and quadrants:
//   Corner letters A, B, C, D name the octahedron vertices over the ports
//   e, f, g, h respectively.  The quadrant (sector) between counterclockwise-
//   consecutive ports is named S = (e,f), E = (f,g), N = (g,h), W = (h,e).
// ---------------------------------------------------------------------------

enum Port : int { kPortE = 0, kPortF = 1, kPortG = 2, kPortH = 3 };
enum Quad : int { kQuadN = 0, kQuadW = 1, kQuadS = 2, kQuadE = 3 };

inline char port_letter(int port) { return "efgh"[port]; }
inline char corner_letter(int port) { return "ABCD"[port]; }
inline char quad_letter(int quad) { return "NWSE"[quad]; }

// Quadrant lying counterclockwise after a port: e->S, f->E, g->N, h->W.
inline int quad_after_port(int port) {
  constexpr int table[4] = {kQuadS, kQuadE, kQuadN, kQuadW};
  return table[port];
}

// The two ports bounding a quadrant, in counterclockwise order.
inline std::pair<int, int> quad_ports(int quad) {
  switch (quad) {
    case kQuadS: return {kPortE, kPortF};
    case kQuadE: return {kPortF, kPortG};
    case kQuadN: return {kPortG, kPortH};
    default: return {kPortH, kPortE};
  }
}

struct PdCode {
  std::vector<std::array<int, 4>> crossings;
};

// Parse a PD code from JSON: either {"pd": [[a,b,c,d], ...]} or a bare
// [[a,b,c,d], ...] array.  Throws Error(MalformedPd) when the list is empty,
// a tuple has the wrong arity, or a label does not occur exactly twice.
PdCode parse_pd(const std::string& json_text);

// One end of a side: the crossing and PD slot where it attaches.
struct SideEnd {
  int crossing = -1;
  int slot = -1;
  friend bool operator==(const SideEnd&, const SideEnd&) = default;
};

struct Crossing {
  std::array<int, 4> pd{};            // side labels at slots a, b, c, d
  int sign = 0;                       // +1 / -1
  std::array<int, 4> port_of_slot{};  // PD slot -> Port
  std::array<int, 4> slot_of_port{};  // Port -> PD slot
  std::array<int, 4> side_at_port{};  // Port -> side label
  std::array<int, 4> quad_region{};   // Quad -> region index
  int over_arc = -1;                  // arc indices (0-based)
  int under_in_arc = -1;
  int under_out_arc = -1;

  int side_at(int port) const { return side_at_port[port]; }
};

// A face of the diagram: cyclic boundary of (side label, direction) pairs,
// direction +1 when the face traversal follows the side's orientation.
struct Region {
  std::vector<std::pair<int, int>> boundary;
};

struct LinkDiagram {
  PdCode pd;
  std::vector<int> sides;          // sorted distinct side labels
  std::vector<Crossing> crossings;
  std::map<int, SideEnd> tail;     // side -> end where it departs a crossing
  std::map<int, SideEnd> head;     // side -> end where it arrives
  std::map<int, int> next_side;    // successor along the strand
  std::vector<std::vector<int>> components;  // side labels per link component
  std::vector<std::vector<int>> arcs;        // ordered side labels per arc
  std::map<int, int> arc_of;                 // side -> arc index
  std::vector<Region> regions;
  std::map<int, int> left_region;   // side -> region index on its left
  std::map<int, int> right_region;  // side -> region index on its right

  int side_at(int crossing, int port) const {
    return crossings[crossing].side_at_port[port];
  }
  std::size_t crossing_count() const { return crossings.size(); }
};

// Build the full diagram: strand orientations, signs, ports, arcs, faces.
// Throws Error(MalformedPd) for inconsistent strand orientations,
// Error(NonPlanar) when face extraction fails the Euler check, and
// Error(TrivialComponent) when a component never passes under (or never
// passes over) another strand.
LinkDiagram build_diagram(const PdCode& pd);

// The sign already stored on a Crossing (kept as a named operation so the
// sign rule has a single documented home).
int crossing_sign(const Crossing& c);

// Face extraction alone (left-face traversal of the 4-valent planar graph).
// Throws Error(NonPlanar) on an Euler-check failure.
std::vector<Region> compute_regions(const PdCode& pd);

}  // namespace qvol
