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
// Dart-based planar maps.
//
// A map is a set of darts (half-edges) with an opposite involution and a
// counterclockwise rotation `nxt` at each vertex. Vertices are rotation
// orbits; faces are orbits of phi(d) = prv(opp(d)), and face_of(d) is the
// face on the LEFT of d. The map is kept connected: besides the real chart
// darts it may contain invisible "scaffold" edges (tree chords joining
// nested or side-by-side components through a face) and, transiently,
// "frontier" darts that reify a separating curve. Because scaffold chords
// never separate a face, faces of the connected structure correspond 1:1
// to complementary domains of the real chart, and V - E + F = 2 holds
// globally.

#ifndef CHARTSEP_MAP_HPP
#define CHARTSEP_MAP_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chartsep/base.hpp"

namespace chartsep {

enum class DartKind : std::uint8_t { real = 0, scaffold = 1, frontier = 2 };

inline constexpr std::uint32_t kNoId = 0xffffffffu;

// Embedding data for disconnected charts: one anchor dart per root
// component (its face orbit faces the unbounded domain) and one
// (anchor, host) pair per nested component (the anchor's orbit is the
// component's outward cycle, the host dart's orbit is the face of another
// component it sits in).
struct Placements {
  struct Nest {
    Dart anchor = kNoDart;
    Dart host = kNoDart;
  };
  std::vector<Dart> roots;
  std::vector<Nest> nests;
};

// Connectivity-free description of the real chart structure.
struct BareMap {
  std::vector<Dart> opp, nxt;
  std::vector<Label> label;        // may be empty (all zero)
  std::vector<std::uint8_t> fwd;   // may be empty (all false)
};

struct DualWalk {
  std::uint32_t from_face = kNoId;
  std::uint32_t to_face = kNoId;
  std::vector<Dart> steps;  // dart g per step: crossing g's edge from face_of(g)
};

class Map {
 public:
  // ---- raw state ----
  std::vector<Dart> opp_, nxt_;
  std::vector<DartKind> kind_;
  std::vector<Label> label_;
  std::vector<std::uint8_t> fwd_;
  std::vector<std::uint8_t> alive_;
  Dart outer_anchor_ = kNoDart;

  // ---- derived (valid after finalize) ----
  std::vector<Dart> prv_;
  std::vector<std::uint32_t> vert_, face_;
  std::vector<Dart> vrep_, frep_;
  std::vector<std::uint32_t> comp_;  // per dart; real darts only, else kNoId
  std::vector<Dart> crep_;
  std::uint32_t outer_face_ = kNoId;

  std::size_t dart_bound() const { return opp_.size(); }
  bool alive(Dart d) const { return d < alive_.size() && alive_[d]; }
  bool is_real(Dart d) const { return alive(d) && kind_[d] == DartKind::real; }
  Dart opp(Dart d) const { return opp_[d]; }
  Dart nxt(Dart d) const { return nxt_[d]; }
  Dart prv(Dart d) const { return prv_[d]; }
  Label label(Dart d) const { return label_[d]; }
  bool fwd(Dart d) const { return fwd_[d] != 0; }
  std::uint32_t vertex_of(Dart d) const { return vert_[d]; }
  std::uint32_t face_of(Dart d) const { return face_[d]; }
  std::uint32_t nverts() const { return static_cast<std::uint32_t>(vrep_.size()); }
  std::uint32_t nfaces() const { return static_cast<std::uint32_t>(frep_.size()); }
  std::uint32_t ncomps() const { return static_cast<std::uint32_t>(crep_.size()); }
  Dart vertex_rep(std::uint32_t v) const { return vrep_[v]; }
  Dart face_rep(std::uint32_t f) const { return frep_[f]; }
  Dart comp_rep(std::uint32_t c) const { return crep_[c]; }
  std::uint32_t outer_face() const { return outer_face_; }
  Dart edge_rep(Dart d) const { return std::min(d, opp_[d]); }

  std::size_t alive_darts() const {
    std::size_t n = 0;
    for (Dart d = 0; d < dart_bound(); ++d)
      if (alive_[d]) ++n;
    return n;
  }
  std::size_t nedges() const { return alive_darts() / 2; }

  bool empty() const { return alive_darts() == 0; }

  // Number of complementary domains (the outer one exists even when the
  // map has no darts at all).
  std::uint32_t domain_count() const { return empty() ? 1u : nfaces(); }

  template <typename F>
  void for_each_dart(F f) const {
    for (Dart d = 0; d < dart_bound(); ++d)
      if (alive_[d]) f(d);
  }

  // Real edge representatives, ascending.
  std::vector<Dart> segments() const {
    std::vector<Dart> out;
    for (Dart d = 0; d < dart_bound(); ++d)
      if (is_real(d) && d < opp_[d]) out.push_back(d);
    return out;
  }

  std::vector<Dart> darts_of_vertex(std::uint32_t v) const {
    std::vector<Dart> out;
    Dart d0 = vrep_[v], d = d0;
    do {
      out.push_back(d);
      d = nxt_[d];
    } while (d != d0);
    return out;
  }

  std::vector<Dart> real_darts_of_vertex(std::uint32_t v) const {
    std::vector<Dart> out;
    for (Dart d : darts_of_vertex(v))
      if (kind_[d] == DartKind::real) out.push_back(d);
    return out;
  }

  std::uint32_t real_degree(std::uint32_t v) const {
    return static_cast<std::uint32_t>(real_darts_of_vertex(v).size());
  }

  Dart phi(Dart d) const { return prv_[opp_[d]]; }

  std::vector<Dart> darts_of_face(std::uint32_t f) const {
    std::vector<Dart> out;
    Dart d0 = frep_[f], d = d0;
    do {
      out.push_back(d);
      d = phi(d);
    } while (d != d0);
    return out;
  }

  std::uint32_t comp_of_dart(Dart d) const { return comp_[d]; }
  std::uint32_t comp_of_vertex(std::uint32_t v) const {
    for (Dart d : darts_of_vertex(v))
      if (kind_[d] == DartKind::real) return comp_[d];
    return kNoId;
  }

  // ---- derived recomputation ----
  void finalize() {
    const std::size_t n = dart_bound();
    check(opp_.size() == n && nxt_.size() == n && kind_.size() == n && label_.size() == n &&
              fwd_.size() == n && alive_.size() == n,
          "map arrays out of sync");
    prv_.assign(n, kNoDart);
    for (Dart d = 0; d < n; ++d) {
      if (!alive_[d]) continue;
      check(opp_[d] < n && alive_[opp_[d]] && opp_[opp_[d]] == d && opp_[d] != d,
            "opposite is not a fixed-point-free involution");
      check(kind_[d] == kind_[opp_[d]], "edge kind mismatch");
      check(nxt_[d] < n && alive_[nxt_[d]], "rotation leaves alive set");
      check(prv_[nxt_[d]] == kNoDart, "rotation is not a permutation");
      prv_[nxt_[d]] = d;
      if (kind_[d] == DartKind::real) {
        check(label_[d] == label_[opp_[d]], "edge label mismatch");
        check((fwd_[d] != 0) != (fwd_[opp_[d]] != 0), "edge orientation mismatch");
      }
    }
    for (Dart d = 0; d < n; ++d)
      if (alive_[d]) check(prv_[d] != kNoDart, "rotation is not surjective");

    assign_orbits([this](Dart d) { return nxt_[d]; }, vert_, vrep_);
    assign_orbits([this](Dart d) { return phi_raw(d); }, face_, frep_);
    assign_components();

    if (outer_anchor_ != kNoDart) {
      check(alive(outer_anchor_), "outer anchor dead");
      outer_face_ = face_[outer_anchor_];
    } else {
      check(empty(), "nonempty map without outer anchor");
      outer_face_ = kNoId;
    }
  }

  // Structural sanity: connectivity and global planarity. Scaffold tree
  // shape is checked only when `canonical` (no frontier machinery present).
  void check_invariants(bool canonical = true) const {
    if (empty()) return;
    // connectivity over opp & nxt
    std::vector<std::uint8_t> seen(dart_bound(), 0);
    std::vector<Dart> stack{outer_anchor_};
    seen[outer_anchor_] = 1;
    std::size_t cnt = 0;
    while (!stack.empty()) {
      Dart d = stack.back();
      stack.pop_back();
      ++cnt;
      for (Dart e : {opp_[d], nxt_[d]}) {
        if (!seen[e]) {
          seen[e] = 1;
          stack.push_back(e);
        }
      }
    }
    check(cnt == alive_darts(), "map is disconnected");
    const long euler = static_cast<long>(nverts()) - static_cast<long>(nedges()) +
                       static_cast<long>(nfaces());
    check(euler == 2, "Euler characteristic is not 2");
    if (canonical) {
      std::size_t nscaffold = 0;
      for (Dart d = 0; d < dart_bound(); ++d) {
        if (!alive_[d]) continue;
        check(kind_[d] != DartKind::frontier, "frontier darts outside a system");
        if (kind_[d] == DartKind::scaffold && d < opp_[d]) ++nscaffold;
      }
      check(nscaffold + 1 == ncomps() || (ncomps() == 0 && nscaffold == 0),
            "scaffold chords do not form a component tree");
    }
  }

  // ---- nesting forest over real components ----

  // BFS distance of every face from the outer face, crossing real edges.
  std::vector<std::uint32_t> face_depths() const {
    std::vector<std::uint32_t> dist(nfaces(), kNoId);
    if (nfaces() == 0) return dist;
    std::vector<std::uint32_t> queue{outer_face_};
    dist[outer_face_] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::uint32_t f = queue[i];
      for (Dart d : darts_of_face(f)) {
        if (kind_[d] != DartKind::real) continue;
        std::uint32_t g = face_[opp_[d]];
        if (dist[g] == kNoId) {
          dist[g] = dist[f] + 1;
          queue.push_back(g);
        }
      }
    }
    return dist;
  }

  // The unique face incident to component c that faces the unbounded side.
  std::uint32_t comp_outer_face(std::uint32_t c, const std::vector<std::uint32_t>& depth) const {
    std::uint32_t best = kNoId;
    for (Dart d = 0; d < dart_bound(); ++d) {
      if (!is_real(d) || comp_[d] != c) continue;
      std::uint32_t f = face_[d];
      if (best == kNoId || depth[f] < depth[best]) best = f;
    }
    check(best != kNoId, "component without incident face");
    return best;
  }

  struct Forest {
    std::vector<std::uint32_t> parent;      // per comp, kNoId for roots
    std::vector<std::uint32_t> outer_face;  // per comp: o(C)
    std::vector<std::uint32_t> depth;       // per comp: nesting depth
  };

  Forest nesting_forest() const {
    Forest fo;
    fo.parent.assign(ncomps(), kNoId);
    fo.outer_face.assign(ncomps(), kNoId);
    fo.depth.assign(ncomps(), 0);
    if (ncomps() == 0) return fo;
    auto fdepth = face_depths();
    for (std::uint32_t c = 0; c < ncomps(); ++c)
      fo.outer_face[c] = comp_outer_face(c, fdepth);
    // parent(C): the unique component incident to o(C) whose own outer face
    // differs from o(C); absent when o(C) is the outer face.
    for (std::uint32_t c = 0; c < ncomps(); ++c) {
      std::uint32_t f = fo.outer_face[c];
      if (f == outer_face_) continue;
      std::uint32_t par = kNoId;
      for (Dart d : darts_of_face(f)) {
        if (kind_[d] != DartKind::real) continue;
        std::uint32_t c2 = comp_[d];
        if (c2 != c && fo.outer_face[c2] != f) {
          check(par == kNoId || par == c2, "ambiguous enclosing component");
          par = c2;
        }
      }
      check(par != kNoId, "bounded component without enclosing component");
      fo.parent[c] = par;
    }
    for (std::uint32_t c = 0; c < ncomps(); ++c) {
      std::uint32_t d = 0, x = c;
      while (fo.parent[x] != kNoId) {
        x = fo.parent[x];
        ++d;
        check(d <= ncomps(), "nesting forest has a cycle");
      }
      fo.depth[c] = d;
    }
    return fo;
  }

  // Derive serializable placements from the current embedding.
  Placements read_placements() const {
    Placements p;
    if (ncomps() == 0) return p;
    Forest fo = nesting_forest();
    for (std::uint32_t c = 0; c < ncomps(); ++c) {
      Dart anchor = kNoDart;
      for (Dart d = 0; d < dart_bound(); ++d)
        if (is_real(d) && comp_[d] == c && face_[d] == fo.outer_face[c]) {
          anchor = d;
          break;
        }
      check(anchor != kNoDart, "component has no dart on its outer face");
      if (fo.parent[c] == kNoId) {
        p.roots.push_back(anchor);
      } else {
        Dart host = kNoDart;
        for (Dart d = 0; d < dart_bound(); ++d)
          if (is_real(d) && comp_[d] == fo.parent[c] && face_[d] == fo.outer_face[c]) {
            host = d;
            break;
          }
        check(host != kNoDart, "enclosing component has no dart on host face");
        p.nests.push_back({anchor, host});
      }
    }
    return p;
  }

 private:
  Dart phi_raw(Dart d) const { return prv_[opp_[d]]; }

  template <typename Next>
  void assign_orbits(Next next, std::vector<std::uint32_t>& id, std::vector<Dart>& rep) {
    id.assign(dart_bound(), kNoId);
    rep.clear();
    for (Dart d = 0; d < dart_bound(); ++d) {
      if (!alive_[d] || id[d] != kNoId) continue;
      std::uint32_t o = static_cast<std::uint32_t>(rep.size());
      rep.push_back(d);
      Dart x = d;
      do {
        id[x] = o;
        x = next(x);
      } while (x != d);
    }
  }

  void assign_components() {
    comp_.assign(dart_bound(), kNoId);
    crep_.clear();
    for (Dart d = 0; d < dart_bound(); ++d) {
      if (!is_real(d) || comp_[d] != kNoId) continue;
      std::uint32_t c = static_cast<std::uint32_t>(crep_.size());
      crep_.push_back(d);
      std::vector<Dart> stack{d};
      comp_[d] = c;
      while (!stack.empty()) {
        Dart x = stack.back();
        stack.pop_back();
        // neighbors: opposite dart, and real darts around the same vertex
        std::vector<Dart> nb{opp_[x]};
        Dart y = nxt_[x];
        while (y != x) {
          if (kind_[y] == DartKind::real) nb.push_back(y);
          y = nxt_[y];
        }
        for (Dart z : nb)
          if (kind_[z] == DartKind::real && comp_[z] == kNoId) {
            comp_[z] = c;
            stack.push_back(z);
          }
      }
    }
  }
};

// ---------------------------------------------------------------------------
// Mutation helper. Edits raw arrays of a copy; derived data is stale until
// finish(). Rotation edits follow the corner rule: the ccw wedge from d to
// nxt(d) belongs to face_of(d), so inserting after d puts the new dart into
// that face.
// ---------------------------------------------------------------------------
class Mutator {
 public:
  Map m;

  explicit Mutator(const Map& src) : m(src) {}

  Dart add_dart(DartKind k, Label l = 0, bool f = false) {
    Dart d = static_cast<Dart>(m.dart_bound());
    m.opp_.push_back(kNoDart);
    m.nxt_.push_back(kNoDart);
    m.kind_.push_back(k);
    m.label_.push_back(l);
    m.fwd_.push_back(f ? 1 : 0);
    m.alive_.push_back(1);
    return d;
  }

  void set_pair(Dart a, Dart b) {
    m.opp_[a] = b;
    m.opp_[b] = a;
  }

  // Insert s into the rotation right after d (into the wedge d -> nxt(d)).
  void rot_insert_after(Dart d, Dart s) {
    m.nxt_[s] = m.nxt_[d];
    m.nxt_[d] = s;
  }

  void rot_new_vertex(Dart a, Dart b) {
    m.nxt_[a] = b;
    m.nxt_[b] = a;
  }

  void rot_new_vertex(Dart a) { m.nxt_[a] = a; }

  Dart rot_prev(Dart d) const {
    Dart x = d;
    while (m.nxt_[x] != d) x = m.nxt_[x];
    return x;
  }

  void rot_remove(Dart d) {
    Dart p = rot_prev(d);
    if (p != d) m.nxt_[p] = m.nxt_[d];
    m.nxt_[d] = kNoDart;
  }

  void kill(Dart d) {
    m.alive_[d] = 0;
    m.opp_[d] = kNoDart;
  }

  // Remove a whole edge from the structure.
  void remove_edge(Dart d) {
    Dart b = m.opp_[d];
    rot_remove(d);
    rot_remove(b);
    kill(d);
    kill(b);
  }

  // Scaffold chord between the wedge after c1 and the wedge after c2.
  std::pair<Dart, Dart> add_chord(Dart c1, Dart c2) {
    Dart s = add_dart(DartKind::scaffold);
    Dart t = add_dart(DartKind::scaffold);
    set_pair(s, t);
    rot_insert_after(c1, s);
    rot_insert_after(c2, t);
    return {s, t};
  }

  // Split edge {x, opp(x)} with a new degree-2 vertex. Returns (p, q):
  // p pairs with x, q with the old opposite; rotation at the new vertex is
  // (p, q). Labels and orientation flow through.
  std::pair<Dart, Dart> subdivide(Dart x) {
    Dart xb = m.opp_[x];
    Dart p = add_dart(m.kind_[x], m.label_[x], !(m.fwd_[x] != 0));
    Dart q = add_dart(m.kind_[x], m.label_[x], m.fwd_[x] != 0);
    set_pair(x, p);
    set_pair(q, xb);
    rot_new_vertex(p, q);
    return {p, q};
  }

  // Remove a transient degree-2 real vertex, fusing its two segments.
  // Scaffold chords attached at the vertex are re-anchored onto the
  // matching side of the fused edge at the neighboring vertices.
  void smooth_subdivision(std::uint32_t v_rep_dart) {
    // v_rep_dart: any dart at the vertex
    std::vector<Dart> rot;
    Dart d0 = static_cast<Dart>(v_rep_dart), d = d0;
    do {
      rot.push_back(d);
      d = m.nxt_[d];
    } while (d != d0);
    std::vector<Dart> reals;
    for (Dart x : rot)
      if (m.kind_[x] == DartKind::real) reals.push_back(x);
    check(reals.size() == 2, "smooth: vertex is not a subdivision point");
    Dart r1 = reals[0], r2 = reals[1];
    check(m.opp_[r1] != r2, "smooth: vertex is essential for a closed edge");
    Dart m1 = m.opp_[r1], m2 = m.opp_[r2];
    // Reposition chords: wedges ccw from r1 up to r2 lie in face_of(r1);
    // its corner at the far vertex of r1 is the wedge after prv_rot(m1).
    // Symmetrically for the other side.
    std::vector<Dart> side1, side2;  // scaffold darts at v by side
    for (Dart x = m.nxt_[r1]; x != r2; x = m.nxt_[x]) side1.push_back(x);
    for (Dart x = m.nxt_[r2]; x != r1; x = m.nxt_[x]) side2.push_back(x);
    for (Dart s : side1) {
      rot_remove(s);
      rot_insert_after(rot_prev(m1), s);
    }
    for (Dart s : side2) {
      rot_remove(s);
      rot_insert_after(rot_prev(m2), s);
    }
    // Drop r1, r2 and fuse.
    m.nxt_[r1] = kNoDart;
    m.nxt_[r2] = kNoDart;
    kill(r1);
    kill(r2);
    set_pair(m1, m2);
    if (m.outer_anchor_ == r1 || m.outer_anchor_ == r2) m.outer_anchor_ = m1;
  }

  Map finish() {
    m.finalize();
    return std::move(m);
  }
};

// ---------------------------------------------------------------------------
// Construction from bare structure + placements.
// ---------------------------------------------------------------------------
inline Map build_map(const BareMap& bare, const Placements& pl) {
  const std::size_t n = bare.opp.size();
  require(bare.nxt.size() == n, Errc::dangling_dart, "opposite/next size mismatch");
  Map m;
  m.opp_ = bare.opp;
  m.nxt_ = bare.nxt;
  m.kind_.assign(n, DartKind::real);
  m.label_ = bare.label.empty() ? std::vector<Label>(n, 1) : bare.label;
  m.fwd_.resize(n);
  if (bare.fwd.empty()) {
    for (Dart d = 0; d < n; ++d) m.fwd_[d] = d < bare.opp[d] ? 1 : 0;
  } else {
    m.fwd_ = bare.fwd;
  }
  m.alive_.assign(n, 1);
  require(m.label_.size() == n && m.fwd_.size() == n, Errc::dangling_dart,
          "label/orientation size mismatch");
  for (Dart d = 0; d < n; ++d) {
    require(bare.opp[d] < n && bare.opp[bare.opp[d]] == d && bare.opp[d] != d,
            Errc::non_involution, "opposite must be a fixed-point-free involution");
    require(bare.nxt[d] < n, Errc::dangling_dart, "rotation leaves dart set");
  }
  {
    std::vector<std::uint8_t> hit(n, 0);
    for (Dart d = 0; d < n; ++d) {
      require(!hit[bare.nxt[d]], Errc::dangling_dart, "rotation is not a permutation");
      hit[bare.nxt[d]] = 1;
    }
  }

  if (n == 0) {
    require(pl.roots.empty() && pl.nests.empty(), Errc::dangling_dart,
            "placements refer to an empty map");
    m.finalize();
    return m;
  }

  // Orbits of the bare structure.
  Map probe = m;
  probe.outer_anchor_ = 0;  // placeholder; not used below
  probe.finalize();

  // Validate: one declaration per component.
  std::vector<int> declared(probe.ncomps(), 0);
  auto comp_of = [&](Dart d) {
    require(d < n, Errc::dangling_dart, "placement dart out of range");
    return probe.comp_of_dart(d);
  };
  for (Dart r : pl.roots) declared[comp_of(r)]++;
  for (auto& nst : pl.nests) declared[comp_of(nst.anchor)]++;
  for (std::uint32_t c = 0; c < probe.ncomps(); ++c)
    require(declared[c] == 1, Errc::dangling_dart,
            "each component needs exactly one placement declaration");
  for (auto& nst : pl.nests)
    require(comp_of(nst.anchor) != comp_of(nst.host), Errc::dangling_dart,
            "component cannot be nested in itself");

  // Group bare face orbits into merged faces.
  const std::uint32_t nf = probe.nfaces();
  const std::uint32_t kOuterClass = nf;  // virtual node for the unbounded side
  std::vector<std::uint32_t> uf(nf + 1);
  for (std::uint32_t i = 0; i <= nf; ++i) uf[i] = i;
  std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  std::vector<std::uint8_t> is_anchor_orbit(nf, 0);
  for (Dart r : pl.roots) {
    is_anchor_orbit[probe.face_of(r)] = 1;
    uf[find(probe.face_of(r))] = find(kOuterClass);
  }
  for (auto& nst : pl.nests) {
    is_anchor_orbit[probe.face_of(nst.anchor)] = 1;
    uf[find(probe.face_of(nst.anchor))] = find(probe.face_of(nst.host));
  }

  // Chord chains per merged class: enclosing orbit first (if any), then
  // anchor orbits sorted by representative dart.
  std::map<std::uint32_t, std::vector<std::uint32_t>> classes;
  for (std::uint32_t f = 0; f < nf; ++f) classes[find(f)].push_back(f);
  Mutator mu(m);
  for (auto& [root, orbits] : classes) {
    std::vector<std::uint32_t> enclosing, anchors;
    for (std::uint32_t f : orbits)
      (is_anchor_orbit[f] ? anchors : enclosing).push_back(f);
    bool outer_class = find(kOuterClass) == root;
    require(enclosing.size() <= (outer_class ? 0u : 1u), Errc::dangling_dart,
            "placements do not describe a plane embedding");
    std::sort(anchors.begin(), anchors.end(),
              [&](std::uint32_t a, std::uint32_t b) { return probe.face_rep(a) < probe.face_rep(b); });
    std::vector<std::uint32_t> chain = enclosing;
    chain.insert(chain.end(), anchors.begin(), anchors.end());
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      mu.add_chord(probe.face_rep(chain[i]), probe.face_rep(chain[i + 1]));
  }

  require(!pl.roots.empty(), Errc::dangling_dart, "nonempty map needs a root component");
  mu.m.outer_anchor_ = pl.roots.front();
  Map out = mu.finish();
  // Global planarity check: connectivity + Euler.
  if (static_cast<long>(out.nverts()) - static_cast<long>(out.nedges()) +
          static_cast<long>(out.nfaces()) !=
      2) {
    fail(Errc::non_planar, "map does not embed in the plane (Euler check failed)");
  }
  {
    std::vector<std::uint8_t> seen(out.dart_bound(), 0);
    std::vector<Dart> stack{out.outer_anchor_};
    seen[out.outer_anchor_] = 1;
    std::size_t cnt = 0;
    while (!stack.empty()) {
      Dart d = stack.back();
      stack.pop_back();
      ++cnt;
      for (Dart e : {out.opp_[d], out.nxt_[d]})
        if (!seen[e]) {
          seen[e] = 1;
          stack.push_back(e);
        }
    }
    require(cnt == out.alive_darts(), Errc::non_planar,
            "placements do not connect the components");
  }
  return out;
}

// Canonical form: smooth transient subdivision points (every closed real
// edge keeps exactly one vertex), drop all virtual darts, re-derive
// placements and rebuild canonical scaffold chords. Dart ids are compacted
// in order, so equal embeddings produce byte-equal serializations.
inline Map canonicalized(const Map& src);

// ---------------------------------------------------------------------------
// Edge deletion (restriction to a subgraph).
// ---------------------------------------------------------------------------
namespace detail {

// Ghost-delete the given real edges in place: bridges become scaffold
// chords (preserving the embedding), non-bridges disappear. The result is
// a valid connected map whose faces are the complementary domains of the
// restricted chart, with junk scaffold junctions left behind.
inline Map ghost_delete(const Map& src, const std::vector<Dart>& edge_reps) {
  Map cur = src;
  std::vector<Dart> todo = edge_reps;
  std::sort(todo.begin(), todo.end());
  for (Dart e : todo) {
    require(cur.is_real(e), Errc::dangling_dart, "delete_edges: not a real edge");
    if (cur.face_of(e) == cur.face_of(cur.opp(e))) {
      // bridge: keep the embedding, make the edge invisible
      Mutator mu(cur);
      mu.m.kind_[e] = DartKind::scaffold;
      mu.m.kind_[mu.m.opp_[e]] = DartKind::scaffold;
      mu.m.label_[e] = 0;
      mu.m.label_[mu.m.opp_[e]] = 0;
      cur = mu.finish();
    } else {
      Mutator mu(cur);
      if (mu.m.outer_anchor_ == e || mu.m.outer_anchor_ == mu.m.opp_[e]) {
        // re-anchor to a surviving dart of the outer face
        Dart na = kNoDart;
        for (Dart d : cur.darts_of_face(cur.outer_face()))
          if (d != e && d != cur.opp(e)) {
            na = d;
            break;
          }
        if (na == kNoDart)
          for (Dart d : cur.darts_of_face(cur.face_of(cur.opp(e))))
            if (d != e && d != cur.opp(e)) {
              na = d;
              break;
            }
        mu.m.outer_anchor_ = na;  // kNoDart when the map empties
      }
      mu.remove_edge(e);
      cur = mu.finish();
    }
  }
  return cur;
}

}  // namespace detail

// Restriction of the map to the complement of `edge_reps`: rotation system
// restricted, faces merged accordingly, isolated vertices removed. Returns
// a canonical map with compacted dart ids together with the id mapping
// old real dart -> new dart (kNoDart for deleted ones).
struct DeleteResult {
  Map map;
  std::vector<Dart> dart_map;
};

inline DeleteResult delete_edges(const Map& src, const std::vector<Dart>& edge_reps) {
  Map ghost = detail::ghost_delete(src, edge_reps);
  // Extract surviving bare structure with compact ids.
  std::vector<Dart> remap(ghost.dart_bound(), kNoDart);
  std::vector<Dart> order;
  for (Dart d = 0; d < ghost.dart_bound(); ++d)
    if (ghost.is_real(d)) {
      remap[d] = static_cast<Dart>(order.size());
      order.push_back(d);
    }
  BareMap bare;
  bare.opp.resize(order.size());
  bare.nxt.resize(order.size());
  bare.label.resize(order.size());
  bare.fwd.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    Dart d = order[i];
    bare.opp[i] = remap[ghost.opp(d)];
    // next real dart in rotation
    Dart x = ghost.nxt(d);
    while (ghost.kind_[x] != DartKind::real) x = ghost.nxt(x);
    bare.nxt[i] = remap[x];
    bare.label[i] = ghost.label(d);
    bare.fwd[i] = ghost.fwd(d) ? 1 : 0;
  }
  Placements pl = ghost.read_placements();
  Placements plc;
  for (Dart r : pl.roots) plc.roots.push_back(remap[r]);
  for (auto& nst : pl.nests) plc.nests.push_back({remap[nst.anchor], remap[nst.host]});
  DeleteResult res{build_map(bare, plc), {}};
  res.dart_map.assign(src.dart_bound(), kNoDart);
  for (Dart d = 0; d < src.dart_bound(); ++d)
    if (d < ghost.dart_bound() && remap[d] != kNoDart) res.dart_map[d] = remap[d];
  return res;
}

inline Map canonicalized(const Map& src) {
  // Smooth transient real subdivision points first (degree-2 real vertices
  // that are not the sole vertex of a closed edge and carry equal labels).
  Map cur = src;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t v = 0; v < cur.nverts(); ++v) {
      auto reals = cur.real_darts_of_vertex(v);
      if (reals.size() != 2) continue;
      Dart r1 = reals[0], r2 = reals[1];
      if (cur.opp(r1) == r2) continue;                    // lone vertex of a hoop
      if (cur.label(r1) != cur.label(r2)) continue;       // not a subdivision point
      if (cur.fwd(r1) == cur.fwd(r2)) continue;           // incoherent flow: leave for validation
      Mutator mu(cur);
      mu.smooth_subdivision(cur.vertex_rep(v));
      cur = mu.finish();
      changed = true;
      break;
    }
  }
  if (cur.empty()) {
    Map m;
    m.finalize();
    return m;
  }
  Placements pl = cur.read_placements();
  // Rebuild with real darts preserved in place.
  BareMap bare;
  const std::size_t n = cur.dart_bound();
  std::vector<Dart> remap(n, kNoDart);
  std::vector<Dart> order;
  for (Dart d = 0; d < n; ++d)
    if (cur.is_real(d)) {
      remap[d] = static_cast<Dart>(order.size());
      order.push_back(d);
    }
  bare.opp.resize(order.size());
  bare.nxt.resize(order.size());
  bare.label.resize(order.size());
  bare.fwd.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    Dart d = order[i];
    bare.opp[i] = remap[cur.opp(d)];
    Dart x = cur.nxt(d);
    while (cur.kind_[x] != DartKind::real) x = cur.nxt(x);
    bare.nxt[i] = remap[x];
    bare.label[i] = cur.label(d);
    bare.fwd[i] = cur.fwd(d) ? 1 : 0;
  }
  Placements plc;
  for (Dart r : pl.roots) plc.roots.push_back(remap[r]);
  for (auto& nst : pl.nests) plc.nests.push_back({remap[nst.anchor], remap[nst.host]});
  return build_map(bare, plc);
}

// ---------------------------------------------------------------------------
// Shortest dual walk between faces, crossing only real edges accepted by
// `crossable` (called on the edge representative). Ties are broken toward
// the lexicographically smallest sequence of crossed darts.
// ---------------------------------------------------------------------------
inline std::optional<DualWalk> dual_path(const Map& m, std::uint32_t from, std::uint32_t to,
                                         const std::function<bool(Dart)>& crossable) {
  DualWalk w;
  w.from_face = from;
  w.to_face = to;
  if (from == to) return w;
  struct Entry {
    bool reached = false;
    std::vector<Dart> path;
  };
  std::vector<Entry> best(m.nfaces());
  best[from].reached = true;
  std::vector<std::uint32_t> frontier{from};
  while (!frontier.empty() && !best[to].reached) {
    // collect candidate extensions
    std::map<std::uint32_t, std::vector<Dart>> cand;  // face -> best path
    for (std::uint32_t f : frontier) {
      for (Dart g : m.darts_of_face(f)) {
        if (m.kind_[g] != DartKind::real) continue;
        if (!crossable(m.edge_rep(g))) continue;
        std::uint32_t nf = m.face_of(m.opp(g));
        if (best[nf].reached) continue;
        std::vector<Dart> p = best[f].path;
        p.push_back(g);
        auto it = cand.find(nf);
        if (it == cand.end() || p < it->second) cand[nf] = std::move(p);
      }
    }
    frontier.clear();
    for (auto& [f, p] : cand) {
      best[f].reached = true;
      best[f].path = p;
      frontier.push_back(f);
    }
  }
  if (!best[to].reached) return std::nullopt;
  w.steps = best[to].path;
  return w;
}

}  // namespace chartsep

#endif  // CHARTSEP_MAP_HPP
