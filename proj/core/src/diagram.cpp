#include "qvol/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "qvol/errors.hpp"

namespace qvol {
namespace {

using nlohmann::json;

[[noreturn]] void bad_pd(const std::string& what,
                         std::map<std::string, std::string> details = {}) {
  throw Error(ErrorCode::MalformedPd, "malformed PD code: " + what,
              std::move(details));
}

// Occurrences of every side label as (crossing, slot) ends.
std::map<int, std::vector<SideEnd>> side_ends(const PdCode& pd) {
  std::map<int, std::vector<SideEnd>> occ;
  for (int j = 0; j < int(pd.crossings.size()); ++j)
    for (int sl = 0; sl < 4; ++sl)
      occ[pd.crossings[j][sl]].push_back({j, sl});
  return occ;
}

struct Orientation {
  // role per (crossing, slot): +1 incoming, -1 outgoing.
  std::vector<std::array<int, 4>> role;
  std::map<int, SideEnd> tail;  // the outgoing end of each side
  std::map<int, SideEnd> head;  // the incoming end
};

// Strand orientations from the under-strand seeds (slot a incoming, slot c
// outgoing) propagated through two local rules: the two ends of a side have
// opposite roles, and the two over-strand slots b, d of a crossing have
// opposite roles.
Orientation orient_strands(const PdCode& pd,
                           const std::map<int, std::vector<SideEnd>>& occ) {
  Orientation o;
  o.role.assign(pd.crossings.size(), {0, 0, 0, 0});
  for (auto& r : o.role) {
    r[0] = +1;
    r[2] = -1;
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [lab, ends] : occ) {
      (void)lab;
      int& r0 = o.role[ends[0].crossing][ends[0].slot];
      int& r1 = o.role[ends[1].crossing][ends[1].slot];
      if (r0 != 0 && r1 == 0) {
        r1 = -r0;
        changed = true;
      } else if (r1 != 0 && r0 == 0) {
        r0 = -r1;
        changed = true;
      }
    }
    for (auto& r : o.role) {
      if (r[1] != 0 && r[3] == 0) {
        r[3] = -r[1];
        changed = true;
      } else if (r[3] != 0 && r[1] == 0) {
        r[1] = -r[3];
        changed = true;
      }
    }
  }

  for (int j = 0; j < int(o.role.size()); ++j)
    for (int sl = 0; sl < 4; ++sl)
      if (o.role[j][sl] == 0)
        bad_pd("strand orientation undetermined",
               {{"crossing", std::to_string(j)}, {"slot", std::to_string(sl)}});

  for (const auto& [lab, ends] : occ) {
    const int r0 = o.role[ends[0].crossing][ends[0].slot];
    const int r1 = o.role[ends[1].crossing][ends[1].slot];
    if (r0 + r1 != 0)
      bad_pd("side is not traversed head to tail",
             {{"side", std::to_string(lab)}});
    o.tail[lab] = r0 == -1 ? ends[0] : ends[1];
    o.head[lab] = r0 == +1 ? ends[0] : ends[1];
  }
  return o;
}

// Left-face traversal: arrive at a crossing along a directed side, leave
// through the previous slot (counterclockwise), keeping the face on the left.
std::vector<Region> trace_faces(const PdCode& pd, const Orientation& o,
                                std::map<std::pair<int, int>, int>* face_of) {
  std::vector<int> sides;
  for (const auto& [lab, end] : o.tail) {
    (void)end;
    sides.push_back(lab);
  }
  std::sort(sides.begin(), sides.end());

  std::vector<Region> regions;
  for (const int lab0 : sides) {
    for (const int dirn0 : {+1, -1}) {
      if (face_of->count({lab0, dirn0})) continue;
      const int id = int(regions.size());
      Region face;
      std::pair<int, int> cur{lab0, dirn0};
      do {
        face.boundary.push_back(cur);
        (*face_of)[cur] = id;
        const SideEnd at =
            cur.second == +1 ? o.head.at(cur.first) : o.tail.at(cur.first);
        const int q = (at.slot + 3) % 4;
        const int nlab = pd.crossings[at.crossing][q];
        const int ndirn =
            o.tail.at(nlab) == SideEnd{at.crossing, q} ? +1 : -1;
        cur = {nlab, ndirn};
      } while (cur != std::make_pair(lab0, dirn0));
      regions.push_back(std::move(face));
    }
  }

  const long chi = long(pd.crossings.size()) - long(sides.size()) +
                   long(regions.size());
  if (chi != 2)
    throw Error(ErrorCode::NonPlanar,
                "diagram is not planar: Euler characteristic " +
                    std::to_string(chi),
                {{"faces", std::to_string(regions.size())}});
  return regions;
}

}  // namespace

PdCode parse_pd(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    bad_pd(std::string("invalid JSON: ") + e.what());
  }
  if (doc.is_object()) {
    if (!doc.contains("pd")) bad_pd("object form requires a \"pd\" key");
    doc = doc["pd"];
  }
  if (!doc.is_array() || doc.empty())
    bad_pd("expected a non-empty array of crossings");

  PdCode pd;
  for (const auto& entry : doc) {
    if (!entry.is_array() || entry.size() != 4)
      bad_pd("each crossing must be a 4-tuple of side labels");
    std::array<int, 4> row{};
    for (int sl = 0; sl < 4; ++sl) {
      if (!entry[sl].is_number_integer())
        bad_pd("side labels must be integers");
      row[sl] = entry[sl].get<int>();
      if (row[sl] <= 0)
        bad_pd("side labels must be positive",
               {{"label", std::to_string(row[sl])}});
    }
    pd.crossings.push_back(row);
  }

  std::map<int, int> count;
  for (const auto& row : pd.crossings)
    for (const int lab : row) ++count[lab];
  for (const auto& [lab, n] : count)
    if (n != 2)
      bad_pd("every side label must occur exactly twice",
             {{"label", std::to_string(lab)}, {"count", std::to_string(n)}});
  return pd;
}

int crossing_sign(const Crossing& c) { return c.sign; }

std::vector<Region> compute_regions(const PdCode& pd) {
  const auto occ = side_ends(pd);
  for (const auto& [lab, ends] : occ)
    if (ends.size() != 2)
      bad_pd("every side label must occur exactly twice",
             {{"label", std::to_string(lab)}});
  const Orientation o = orient_strands(pd, occ);
  std::map<std::pair<int, int>, int> face_of;
  return trace_faces(pd, o, &face_of);
}

LinkDiagram build_diagram(const PdCode& pd) {
  LinkDiagram d;
  d.pd = pd;

  const auto occ = side_ends(pd);
  for (const auto& [lab, ends] : occ) {
    if (ends.size() != 2)
      bad_pd("every side label must occur exactly twice",
             {{"label", std::to_string(lab)}});
    d.sides.push_back(lab);
  }

  const Orientation o = orient_strands(pd, occ);
  d.tail = o.tail;
  d.head = o.head;

  // Crossing signs and slot <-> port dictionaries.  The over-strand always
  // runs g -> e; it enters at slot d for a positive crossing, slot b for a
  // negative one.
  d.crossings.resize(pd.crossings.size());
  for (int j = 0; j < int(pd.crossings.size()); ++j) {
    Crossing& c = d.crossings[j];
    c.pd = pd.crossings[j];
    c.sign = o.role[j][3] == +1 ? +1 : -1;
    const std::array<int, 4> ports =
        c.sign == +1
            ? std::array<int, 4>{kPortH, kPortE, kPortF, kPortG}
            : std::array<int, 4>{kPortF, kPortG, kPortH, kPortE};
    c.port_of_slot = ports;
    for (int sl = 0; sl < 4; ++sl) {
      c.slot_of_port[ports[sl]] = sl;
      c.side_at_port[ports[sl]] = c.pd[sl];
    }
  }

  // Strand successors: from the incoming end, leave through the partner slot
  // (the outgoing under-slot c after an under-pass, the opposite over-slot
  // otherwise).
  for (const int lab : d.sides) {
    const SideEnd at = d.head.at(lab);
    const int out_sl = at.slot == 0 ? 2 : 4 - at.slot;
    d.next_side[lab] = pd.crossings[at.crossing][out_sl];
  }

  // Link components; every component must pass both under and over somewhere,
  // otherwise its meridian is forced to the identity.
  std::set<int> seen;
  for (const int lab0 : d.sides) {
    if (seen.count(lab0)) continue;
    std::vector<int> comp;
    int unders = 0, overs = 0;
    int cur = lab0;
    do {
      comp.push_back(cur);
      seen.insert(cur);
      const int hs = d.head.at(cur).slot;
      if (hs == 0)
        ++unders;
      else
        ++overs;
      cur = d.next_side.at(cur);
    } while (cur != lab0);
    if (unders == 0 || overs == 0)
      throw Error(ErrorCode::TrivialComponent,
                  "component never passes " +
                      std::string(unders == 0 ? "under" : "over") +
                      " another strand",
                  {{"first_side", std::to_string(lab0)}});
    d.components.push_back(std::move(comp));
  }

  // Arcs: maximal over-strand runs between consecutive under-passes.
  for (const int lab0 : d.sides) {
    if (d.tail.at(lab0).slot != 2) continue;  // arcs begin after an under-pass
    std::vector<int> arc{lab0};
    int cur = lab0;
    while (d.head.at(cur).slot != 0) {
      cur = d.next_side.at(cur);
      arc.push_back(cur);
    }
    const int idx = int(d.arcs.size());
    for (const int lab : arc) d.arc_of[lab] = idx;
    d.arcs.push_back(std::move(arc));
  }
  if (d.arc_of.size() != d.sides.size())
    bad_pd("arc decomposition does not cover every side");

  // Faces and the region dictionaries.
  std::map<std::pair<int, int>, int> face_of;
  d.regions = trace_faces(pd, o, &face_of);
  for (const int lab : d.sides) {
    d.left_region[lab] = face_of.at({lab, +1});
    d.right_region[lab] = face_of.at({lab, -1});
  }

  // Quadrant regions: the face seen from the crossing between a port and its
  // counterclockwise neighbour, read off the outward-directed side at each
  // slot.
  for (int j = 0; j < int(pd.crossings.size()); ++j) {
    Crossing& c = d.crossings[j];
    for (int sl = 0; sl < 4; ++sl) {
      const int lab = c.pd[sl];
      const int dirn = d.tail.at(lab) == SideEnd{j, sl} ? +1 : -1;
      c.quad_region[quad_after_port(c.port_of_slot[sl])] =
          face_of.at({lab, dirn});
    }
    c.over_arc = d.arc_of.at(c.side_at_port[kPortG]);
    c.under_in_arc = d.arc_of.at(c.pd[0]);
    c.under_out_arc = d.arc_of.at(c.pd[2]);
  }

  return d;
}

}  // namespace qvol
