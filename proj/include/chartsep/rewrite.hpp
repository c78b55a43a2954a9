// Copyright 2026 The chartsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Surgery: rerouting two same-label edges along an arc. The arc is given
// combinatorially as a dual walk: it leaves edge e1 from the face on the
// left of dart a1, crosses the listed edges transversely (each crossing
// dart g is crossed from the face on its left), and lands on e2 arriving
// from the face on the left of a2. The two new strands run along the two
// sides of the arc; every crossed edge gains exactly two crossings; all
// black and white vertices are untouched.

#ifndef CHARTSEP_REWRITE_HPP
#define CHARTSEP_REWRITE_HPP

#include <set>
#include <vector>

#include "chartsep/chart.hpp"

namespace chartsep {

struct SurgeryWalk {
  Dart a1 = kNoDart;
  std::vector<Dart> crossings;
  Dart a2 = kNoDart;
};

namespace detail {

// Remove scaffold chords that have become redundant (both sides of a tree
// chord lie in one face; a chord whose sides differ closes a cycle and is
// dropped, merging the faces back).
inline void scrub_scaffolds(Map& m) {
  bool removed = true;
  while (removed) {
    removed = false;
    for (Dart d = 0; d < m.dart_bound(); ++d) {
      if (!m.alive(d) || m.kind_[d] != DartKind::scaffold || d > m.opp_[d]) continue;
      if (m.face_of(d) != m.face_of(m.opp(d))) {
        Mutator mu(m);
        mu.remove_edge(d);
        m = mu.finish();
        removed = true;
        break;
      }
    }
  }
}

inline bool connected(const Map& m) {
  if (m.empty()) return true;
  std::vector<std::uint8_t> seen(m.dart_bound(), 0);
  Dart start = m.outer_anchor_;
  std::vector<Dart> stack{start};
  seen[start] = 1;
  std::size_t cnt = 0;
  while (!stack.empty()) {
    Dart d = stack.back();
    stack.pop_back();
    ++cnt;
    for (Dart e : {m.opp_[d], m.nxt_[d]})
      if (!seen[e]) {
        seen[e] = 1;
        stack.push_back(e);
      }
  }
  return cnt == m.alive_darts();
}

}  // namespace detail

// Core edit shared by the public surgery and the frontier machinery. The
// caller has validated the walk. Operates on raw arrays; derived data of
// the mutator is stale throughout.
inline void surgery_splice(Mutator& mu, const SurgeryWalk& w) {
  Map& m = mu.m;
  const Dart a1 = w.a1, a2 = w.a2;
  const Dart b1 = m.opp_[a1], b2 = m.opp_[a2];
  const Label lab = m.label_[a1];
  const bool fwd1 = m.fwd_[a1] != 0;
  const std::size_t t = w.crossings.size();

  if (t == 0 && a1 == a2) {
    // both cuts on one edge, entered and left from the same side: the
    // through strand is combinatorially unchanged and the middle piece
    // closes into a floating loop next to the edge's far side
    Dart q = mu.add_dart(DartKind::real, lab, fwd1);
    Dart qb = mu.add_dart(DartKind::real, lab, !fwd1);
    mu.set_pair(q, qb);
    mu.rot_new_vertex(q, qb);
    // the loop's outer side faces the face right of a1; anchor the chord
    // at the loop dart whose left side is that outer face
    Dart ext = fwd1 ? qb : q;
    Dart s = mu.add_dart(DartKind::scaffold);
    Dart sb = mu.add_dart(DartKind::scaffold);
    mu.set_pair(s, sb);
    mu.rot_insert_after(ext, s);
    mu.rot_insert_after(mu.rot_prev(a1), sb);
    return;
  }

  if (t == 0) {
    // plain reroute between two edges
    mu.set_pair(a1, b2);
    mu.set_pair(b1, a2);
    return;
  }

  // Crossing stations. At station i the left rail (nearer the head of the
  // crossing dart) passes through vertex xL_i and the right rail through
  // xR_i; ccw rotations are (hL, pL, mL, nL) and (mR, pR, tR, nR) where
  // p*/n* point backward/forward along the corridor.
  std::vector<Dart> hL(t), mL(t), pL(t), nL(t), mR(t), tR(t), pR(t), nR(t);
  for (std::size_t i = 0; i < t; ++i) {
    Dart g = w.crossings[i];
    Dart gb = m.opp_[g];
    Label cl = m.label_[g];
    bool gf = m.fwd_[g] != 0;
    hL[i] = mu.add_dart(DartKind::real, cl, gf);
    mL[i] = mu.add_dart(DartKind::real, cl, !gf);
    pL[i] = mu.add_dart(DartKind::real, lab, !fwd1);
    nL[i] = mu.add_dart(DartKind::real, lab, fwd1);
    mR[i] = mu.add_dart(DartKind::real, cl, gf);
    tR[i] = mu.add_dart(DartKind::real, cl, !gf);
    pR[i] = mu.add_dart(DartKind::real, lab, fwd1);
    nR[i] = mu.add_dart(DartKind::real, lab, !fwd1);
    // rotations at the two new crossings
    m.nxt_[hL[i]] = pL[i];
    m.nxt_[pL[i]] = mL[i];
    m.nxt_[mL[i]] = nL[i];
    m.nxt_[nL[i]] = hL[i];
    m.nxt_[mR[i]] = pR[i];
    m.nxt_[pR[i]] = tR[i];
    m.nxt_[tR[i]] = nR[i];
    m.nxt_[nR[i]] = mR[i];
    // crossed edge pieces: tail piece {g, tR}, middle {mR, mL}, head {hL, gb}
    mu.set_pair(g, tR[i]);
    mu.set_pair(mR[i], mL[i]);
    mu.set_pair(hL[i], gb);
  }
  // rail segments between consecutive stations
  for (std::size_t i = 0; i + 1 < t; ++i) {
    mu.set_pair(nL[i], pL[i + 1]);
    mu.set_pair(nR[i], pR[i + 1]);
  }
  // end attachments
  if (a1 == a2) {
    // one edge cut twice from the same side: the tail piece feeds the left
    // rail, the head piece ends it, and the middle piece closes the right
    // rail into a loop
    mu.set_pair(a1, pL[0]);
    mu.set_pair(b1, nL[t - 1]);
    mu.set_pair(nR[t - 1], pR[0]);
  } else {
    mu.set_pair(a1, pL[0]);
    mu.set_pair(b1, pR[0]);
    mu.set_pair(a2, nR[t - 1]);
    mu.set_pair(b2, nL[t - 1]);
  }
}

inline void validate_surgery_walk(const Chart& c, const SurgeryWalk& w) {
  const Map& m = c.map;
  require(m.is_real(w.a1) && m.is_real(w.a2), Errc::bad_endpoint,
          "surgery endpoints must lie on chart edges");
  const Label lab = m.label(w.a1);
  require(m.label(w.a2) == lab, Errc::bad_endpoint,
          "surgery endpoints must lie on edges of one label");
  require(m.fwd(w.a1) == m.fwd(w.a2), Errc::orientation_mismatch,
          "rerouted strands would not close coherently");
  std::uint32_t f = m.face_of(w.a1);
  std::set<Dart> seen;
  for (Dart g : w.crossings) {
    require(m.is_real(g), Errc::bad_endpoint, "walk crosses a non-edge");
    int dl = static_cast<int>(m.label(g)) - static_cast<int>(lab);
    require(dl > 1 || dl < -1, Errc::label_conflict,
            "arc crosses an edge of label " + std::to_string(m.label(g)) +
                " within one of label " + std::to_string(lab));
    require(m.face_of(g) == f, Errc::bad_endpoint, "walk steps are not face-connected");
    require(seen.insert(m.edge_rep(g)).second, Errc::bad_endpoint,
            "walk crosses an edge twice");
    f = m.face_of(m.opp(g));
  }
  require(f == m.face_of(w.a2), Errc::bad_endpoint, "walk does not reach the target edge");
}

inline Chart surgery(const Chart& c, const SurgeryWalk& w) {
  validate_surgery_walk(c, w);
  Mutator mu(c.map);
  const Dart b1 = mu.m.opp_[w.a1], b2 = mu.m.opp_[w.a2];
  surgery_splice(mu, w);
  Map nm = mu.finish();
  if (!detail::connected(nm)) {
    // a reroute between two edges of one component can split it in two;
    // the pieces stay adjacent across the corridor zone
    check(w.crossings.empty() && w.a1 != w.a2, "unexpected disconnection in surgery");
    Mutator mu2(nm);
    mu2.add_chord(b2, b1);
    nm = mu2.finish();
  }
  detail::scrub_scaffolds(nm);
  nm.check_invariants();
  return Chart{std::move(nm), c.n};
}

// ---------------------------------------------------------------------------
// Poke: transport whole components through one edge. The components listed
// in `tops` (direct children of the face on `door`'s left, together with
// everything nested inside them) re-appear on the other side of the door
// edge, enclosed by a fresh closed edge carrying the door's label. The
// door edge itself is unchanged. This realizes the movable-disk shift:
// cutting the door twice around a staged attachment point and rerouting
// pops the disk contents across, circled by the new loop.
// ---------------------------------------------------------------------------
inline Chart poke(const Chart& c, Dart door, const std::vector<std::uint32_t>& tops) {
  const Map& m = c.map;
  require(m.is_real(door), Errc::bad_exit_point, "door must be a chart edge");
  const std::uint32_t fin = m.face_of(door);
  require(fin != m.face_of(m.opp(door)), Errc::bad_exit_point,
          "door edge has the same face on both sides");
  Map::Forest fo = m.nesting_forest();
  std::set<std::uint32_t> closure;
  for (std::uint32_t tc : tops) {
    require(tc < m.ncomps(), Errc::bad_endpoint, "no such component");
    require(fo.outer_face[tc] == fin, Errc::bad_endpoint,
            "component is not directly inside the door's face");
    closure.insert(tc);
  }
  require(!closure.empty(), Errc::bad_endpoint, "nothing to transport");
  for (std::uint32_t x = 0; x < m.ncomps(); ++x) {
    for (std::uint32_t p = fo.parent[x]; p != kNoId; p = fo.parent[p])
      if (closure.count(p)) {
        closure.insert(x);
        break;
      }
  }
  require(!closure.count(m.comp_of_dart(door)), Errc::bad_exit_point,
          "cannot transport the door's own component");

  // Plan the restaging of the door face: every chord lying in it is
  // rebuilt so that each top hangs from the staged subdivision point and
  // the remaining cycles form a canonical chain.
  std::vector<Dart> chords_to_drop;
  for (Dart d = 0; d < m.dart_bound(); ++d) {
    if (!m.alive(d) || m.kind_[d] != DartKind::scaffold || d > m.opp(d)) continue;
    if (m.face_of(d) == fin && m.face_of(m.opp(d)) == fin) chords_to_drop.push_back(d);
  }
  // cycles of the door face: the enclosing component's stretch plus each
  // child's outward cycle, anchored at their minimal darts
  std::vector<Dart> chain_anchors;  // non-transported cycles, chain order
  {
    std::map<std::uint32_t, Dart> anchor_of_comp;
    for (Dart d = 0; d < m.dart_bound(); ++d) {
      if (!m.is_real(d) || m.face_of(d) != fin) continue;
      std::uint32_t cc = m.comp_of_dart(d);
      if (!anchor_of_comp.count(cc)) anchor_of_comp[cc] = d;
    }
    // enclosing component first (the one whose own outer face differs)
    for (auto& [cc, d] : anchor_of_comp)
      if (fo.outer_face[cc] != fin && !closure.count(cc)) chain_anchors.push_back(d);
    for (auto& [cc, d] : anchor_of_comp)
      if (fo.outer_face[cc] == fin && !closure.count(cc)) chain_anchors.push_back(d);
  }
  std::vector<Dart> top_anchors;
  for (std::uint32_t tc : tops) {
    Dart best = kNoDart;
    for (Dart d = 0; d < m.dart_bound(); ++d)
      if (m.is_real(d) && m.comp_of_dart(d) == tc && m.face_of(d) == fin) {
        best = d;
        break;
      }
    check(best != kNoDart, "top has no dart on the door face");
    top_anchors.push_back(best);
  }

  Mutator mu(c.map);
  for (Dart d : chords_to_drop) mu.remove_edge(d);
  auto [p, q] = mu.subdivide(door);
  // canonical chain among the staying cycles
  for (std::size_t i = 0; i + 1 < chain_anchors.size(); ++i)
    mu.add_chord(chain_anchors[i], chain_anchors[i + 1]);
  // tops hang from the staged point; the wedge after q lies in the door face
  for (Dart ta : top_anchors) mu.add_chord(ta, q);
  // the cut-and-reroute around the staged point
  SurgeryWalk w;
  w.a1 = door;
  w.a2 = q;
  surgery_splice(mu, w);
  // the new loop and its contents sit beyond the door; hook them to the
  // far side (wedges after the two head-side darts)
  Dart x_bar = mu.m.opp_[door];  // == old opposite, restored by the splice
  mu.add_chord(x_bar, p);
  Map nm = mu.finish();
  detail::scrub_scaffolds(nm);
  nm.check_invariants();
  Chart out{std::move(nm), c.n};
  return out;
}

}  // namespace chartsep

#endif  // CHARTSEP_REWRITE_HPP
