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
// Charts: labeled oriented planar maps subject to four local conditions,
//   (i)   every vertex has degree 1, 4, or 6 (subdivision points aside),
//   (ii)  labels lie in 1..n-1,
//   (iii) the six arcs at a degree-6 vertex alternate labels i, i+1 and are
//         oriented three-in then three-out,
//   (iv)  at a degree-4 vertex diagonal arcs share a label, flow through
//         coherently, and the two labels differ by more than 1.
// Degree-1 vertices are black, degree-4 crossings, degree-6 white.

#ifndef CHARTSEP_CHART_HPP
#define CHARTSEP_CHART_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chartsep/map.hpp"

namespace chartsep {

struct Chart {
  Map map;
  std::uint16_t n = 2;  // strand count; edge labels range over 1..n-1
};

enum class VertexKind { black, subdivision, crossing, white, invalid };

inline VertexKind vertex_kind(const Chart& c, std::uint32_t v) {
  switch (c.map.real_degree(v)) {
    case 1: return VertexKind::black;
    case 2: return VertexKind::subdivision;
    case 4: return VertexKind::crossing;
    case 6: return VertexKind::white;
    default: return VertexKind::invalid;
  }
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------
struct Violation {
  std::string condition;  // "i".."iv" per the chart conditions above
  std::string message;
  Dart where = kNoDart;
};

inline std::vector<Violation> validate_chart(const Chart& c) {
  std::vector<Violation> out;
  const Map& m = c.map;
  auto add = [&](const char* cond, std::string msg, Dart d) {
    out.push_back({cond, std::move(msg), d});
  };
  for (Dart e : m.segments()) {
    if (m.label(e) < 1 || m.label(e) >= c.n)
      add("ii", "edge label " + std::to_string(m.label(e)) + " outside 1.." +
                    std::to_string(c.n - 1),
          e);
  }
  for (std::uint32_t v = 0; v < m.nverts(); ++v) {
    auto reals = m.real_darts_of_vertex(v);
    if (reals.empty()) continue;  // junction of virtual chords only
    switch (reals.size()) {
      case 1:
        break;
      case 2: {
        Dart r1 = reals[0], r2 = reals[1];
        if (m.label(r1) != m.label(r2))
          add("i", "subdivision point joins labels " + std::to_string(m.label(r1)) + " and " +
                       std::to_string(m.label(r2)),
              r1);
        else if (m.opp(r1) != r2 && m.fwd(r1) == m.fwd(r2))
          add("i", "subdivision point reverses orientation", r1);
        break;
      }
      case 4: {
        for (int d = 0; d < 2; ++d) {
          Dart a = reals[d], b = reals[d + 2];
          if (m.label(a) != m.label(b))
            add("iv", "diagonal arcs at a crossing carry different labels", a);
          else if (m.fwd(a) == m.fwd(b))
            add("iv", "diagonal arcs at a crossing are not oriented coherently", a);
        }
        int i = m.label(reals[0]), j = m.label(reals[1]);
        if (std::abs(i - j) <= 1)
          add("iv", "crossing labels " + std::to_string(i) + "," + std::to_string(j) +
                        " must differ by more than 1",
              reals[0]);
        break;
      }
      case 6: {
        // labels alternate i, i+1
        int l0 = m.label(reals[0]), l1 = m.label(reals[1]);
        bool ok = std::abs(l0 - l1) == 1;
        for (int t = 0; t < 6 && ok; ++t)
          if (m.label(reals[t]) != (t % 2 ? l1 : l0)) ok = false;
        if (!ok) {
          add("iii", "arcs at a degree-6 vertex must alternate labels i, i+1", reals[0]);
        }
        // three consecutive inward, three outward (cyclically):
        // exactly two sign changes around the cycle and three inward arcs
        int flips = 0, inward = 0;
        for (int t = 0; t < 6; ++t) {
          if (m.fwd(reals[t]) != m.fwd(reals[(t + 1) % 6])) ++flips;
          if (!m.fwd(reals[t])) ++inward;
        }
        if (!(flips == 2 && inward == 3))
          add("iii", "arcs at a degree-6 vertex must be oriented three-in, three-out", reals[0]);
        break;
      }
      default:
        add("i", "vertex of degree " + std::to_string(reals.size()) +
                     " (only 1, 4, 6 and subdivision points allowed)",
            reals[0]);
    }
  }
  return out;
}

inline bool is_valid(const Chart& c) { return validate_chart(c).empty(); }

// ---------------------------------------------------------------------------
// White / black vertex inventory
// ---------------------------------------------------------------------------

// The smaller of the two labels meeting at a white vertex.
inline Label white_pair_label(const Chart& c, std::uint32_t v) {
  Label lo = 0xffff;
  for (Dart d : c.map.real_darts_of_vertex(v)) lo = std::min(lo, c.map.label(d));
  return lo;
}

struct WhiteVertex {
  std::uint32_t vertex;
  Label pair;  // white lies in the intersection of labels pair, pair+1
};

inline std::vector<WhiteVertex> whites(const Chart& c) {
  std::vector<WhiteVertex> out;
  for (std::uint32_t v = 0; v < c.map.nverts(); ++v)
    if (vertex_kind(c, v) == VertexKind::white) out.push_back({v, white_pair_label(c, v)});
  return out;
}

inline std::vector<std::uint32_t> blacks(const Chart& c) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < c.map.nverts(); ++v)
    if (vertex_kind(c, v) == VertexKind::black) out.push_back(v);
  return out;
}

// Black and white vertices incident to an edge whose label satisfies pred.
template <typename Pred>
inline std::vector<std::uint32_t> bw_vertices(const Chart& c, Pred label_pred) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < c.map.nverts(); ++v) {
    VertexKind k = vertex_kind(c, v);
    if (k != VertexKind::black && k != VertexKind::white) continue;
    for (Dart d : c.map.real_darts_of_vertex(v))
      if (label_pred(c.map.label(d))) {
        out.push_back(v);
        break;
      }
  }
  return out;
}

inline int white_count(const Chart& c) { return static_cast<int>(whites(c).size()); }

// w(Gamma_i `intersect` Gamma_{i+1})
inline int white_count_pair(const Chart& c, Label i) {
  int n = 0;
  for (auto& w : whites(c))
    if (w.pair == i) ++n;
  return n;
}

// w(Gamma_i)
inline int white_count_label(const Chart& c, Label i) {
  int n = 0;
  for (auto& w : whites(c))
    if (w.pair == i || w.pair + 1 == i) ++n;
  return n;
}

// ---------------------------------------------------------------------------
// Label subgraphs: Gamma_m consists of all label-m edges; its vertices are
// black and white vertices only, so its edges chain through crossings and
// subdivision points.
// ---------------------------------------------------------------------------
struct LabelEdge {
  std::vector<Dart> darts;  // directed traversal: one dart per segment
  bool closed = false;
  std::uint32_t end1 = kNoId, end2 = kNoId;  // vertices when open
};

struct LabelSubgraph {
  Label m = 0;
  std::vector<LabelEdge> edges;
  std::vector<std::uint32_t> vertices;  // black/white vertices incident to label m
};

// Continue a directed traversal through a pass-through vertex; returns
// kNoDart at a black or white vertex.
inline Dart next_along(const Chart& c, Dart d) {
  const Map& m = c.map;
  Dart back = m.opp(d);  // dart at the head vertex pointing back
  std::uint32_t v = m.vertex_of(back);
  auto reals = m.real_darts_of_vertex(v);
  if (reals.size() == 2) {
    return reals[0] == back ? reals[1] : reals[0];
  }
  if (reals.size() == 4) {
    for (int i = 0; i < 4; ++i)
      if (reals[i] == back) return reals[(i + 2) % 4];
  }
  return kNoDart;
}

inline LabelSubgraph subgraph(const Chart& c, Label m) {
  require(m >= 1 && m < c.n, Errc::label_out_of_range,
          "label " + std::to_string(m) + " outside 1.." + std::to_string(c.n - 1));
  LabelSubgraph sg;
  sg.m = m;
  const Map& mp = c.map;
  std::set<Dart> seen;  // segment reps already assigned to an edge
  for (Dart e : mp.segments()) {
    if (mp.label(e) != m || seen.count(e)) continue;
    // walk backward to the start of the chain (or detect a closed loop)
    Dart d = e;
    bool closed = false;
    while (true) {
      Dart back = next_along(c, mp.opp(d));  // continue against the traversal
      if (back == kNoDart) break;
      d = mp.opp(back);
      if (d == e) {
        closed = true;
        break;
      }
    }
    LabelEdge le;
    le.closed = closed;
    Dart x = d;
    while (true) {
      le.darts.push_back(x);
      seen.insert(mp.edge_rep(x));
      Dart nx = next_along(c, x);
      if (nx == kNoDart || nx == d) break;
      x = nx;
    }
    if (!closed) {
      le.end1 = mp.vertex_of(d);
      le.end2 = mp.vertex_of(mp.opp(le.darts.back()));
    }
    sg.edges.push_back(std::move(le));
  }
  for (std::uint32_t v = 0; v < mp.nverts(); ++v) {
    VertexKind k = vertex_kind(c, v);
    if (k != VertexKind::black && k != VertexKind::white) continue;
    for (Dart d : mp.real_darts_of_vertex(v))
      if (mp.label(d) == m) {
        sg.vertices.push_back(v);
        break;
      }
  }
  return sg;
}

// Embedding of the label subgraph: all other edges erased.
inline Map subgraph_embedding(const Chart& c, Label m) {
  std::vector<Dart> del;
  for (Dart e : c.map.segments())
    if (c.map.label(e) != m) del.push_back(e);
  return delete_edges(c.map, del).map;
}

// (hoops, rings): closed label-m edges without any vertices at all, and
// closed label-m edges through at least one crossing but no white vertex.
inline std::pair<std::vector<LabelEdge>, std::vector<LabelEdge>> classify_closed_edges(
    const Chart& c, Label m) {
  std::vector<LabelEdge> hoops, rings;
  for (auto& e : subgraph(c, m).edges) {
    if (!e.closed) continue;
    bool has_crossing = false;
    for (Dart d : e.darts)
      if (vertex_kind(c, c.map.vertex_of(d)) == VertexKind::crossing) has_crossing = true;
    (has_crossing ? rings : hoops).push_back(e);
  }
  return {hoops, rings};
}

// ---------------------------------------------------------------------------
// Types
// ---------------------------------------------------------------------------
struct TypeVector {
  Label m = 1;                // first label of the window
  std::vector<int> counts;    // n_1..n_p

  bool operator==(const TypeVector& o) const { return m == o.m && counts == o.counts; }
};

enum class TypeStatus { ok, none, noncontiguous };

struct TypeResult {
  TypeStatus status = TypeStatus::none;
  TypeVector type;
};

inline TypeResult chart_type(const Chart& c) {
  TypeResult r;
  auto ws = whites(c);
  if (ws.empty()) return r;
  for (auto& w : ws) {
    // a white vertex with non-consecutive labels has no pair; such charts
    // fail validation and carry no type
    Label lo = 0xffff, hi = 0;
    for (Dart d : c.map.real_darts_of_vertex(w.vertex)) {
      lo = std::min(lo, c.map.label(d));
      hi = std::max(hi, c.map.label(d));
    }
    if (hi != lo + 1) {
      r.status = TypeStatus::noncontiguous;
      return r;
    }
  }
  Label lo = 0xffff, hi = 0;
  for (auto& w : ws) {
    lo = std::min(lo, w.pair);
    hi = std::max(hi, w.pair);
  }
  r.status = TypeStatus::ok;
  r.type.m = lo;
  r.type.counts.assign(hi - lo + 1, 0);
  for (auto& w : ws) r.type.counts[w.pair - lo]++;
  return r;
}

inline std::string type_to_string(const TypeVector& t, bool with_m = true) {
  std::ostringstream os;
  os << "(";
  if (with_m) os << t.m << "; ";
  for (std::size_t i = 0; i < t.counts.size(); ++i) {
    if (i) os << ",";
    os << t.counts[i];
  }
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Zero labels: k with Gamma_k `intersect` Gamma_{k+1} empty, white vertices
// at some label <= k and some label > k.
// ---------------------------------------------------------------------------
inline std::vector<Label> zero_labels(const Chart& c) {
  std::vector<Label> out;
  auto ws = whites(c);
  for (Label k = 1; k + 1 < c.n; ++k) {
    bool pair_k = false, below = false, above = false;
    for (auto& w : ws) {
      if (w.pair == k) pair_k = true;
      if (w.pair + 1 <= k) below = true;   // white of Gamma_i, i <= k
      if (w.pair >= k + 1) above = true;   // white of Gamma_j, j > k
    }
    if (!pair_k && below && above) out.push_back(k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Separability. Groups are unions of root subtrees of the nesting forest
// (two disjoint disks can only split the chart along whole root subtrees),
// each root forced by the white vertices its subtree contains.
// ---------------------------------------------------------------------------
struct SplitWitness {
  Label k = 0;
  std::vector<std::uint32_t> group_a, group_b;  // component ids; a: labels <= k
};

inline std::optional<SplitWitness> separable_at(const Chart& c, Label k) {
  const Map& m = c.map;
  if (m.ncomps() == 0) return std::nullopt;
  Map::Forest fo = m.nesting_forest();
  std::vector<std::uint32_t> root(m.ncomps());
  for (std::uint32_t x = 0; x < m.ncomps(); ++x) {
    std::uint32_t r = x;
    while (fo.parent[r] != kNoId) r = fo.parent[r];
    root[x] = r;
  }
  std::vector<int> need(m.ncomps(), 0);  // bitmask per root: 1 = A, 2 = B
  for (auto& w : whites(c)) {
    std::uint32_t r = root[m.comp_of_vertex(w.vertex)];
    if (w.pair == k) return std::nullopt;  // lies in both windows
    need[r] |= (w.pair + 1 <= k) ? 1 : 2;
  }
  bool have_a = false, have_b = false;
  for (std::uint32_t x = 0; x < m.ncomps(); ++x) {
    if (root[x] != x) continue;
    if (need[x] == 3) return std::nullopt;  // subtree forced both ways
    if (need[x] == 1) have_a = true;
    if (need[x] == 2) have_b = true;
  }
  if (!have_a || !have_b) return std::nullopt;
  SplitWitness w;
  w.k = k;
  for (std::uint32_t x = 0; x < m.ncomps(); ++x) {
    // unconstrained subtrees go with the low side
    (need[root[x]] == 2 ? w.group_b : w.group_a).push_back(x);
  }
  return w;
}

// ---------------------------------------------------------------------------
// Reflection: relabel every edge k -> n-k (Corollary-style normalization).
// ---------------------------------------------------------------------------
inline Chart reflected(const Chart& c) {
  Chart out = c;
  for (Dart d = 0; d < out.map.dart_bound(); ++d)
    if (out.map.is_real(d)) out.map.label_[d] = static_cast<Label>(out.map.label_[d] ? c.n - out.map.label_[d] : 0);
  out.map.finalize();
  return out;
}

inline Chart canonical(const Chart& c) { return Chart{canonicalized(c.map), c.n}; }

}  // namespace chartsep

#endif  // CHARTSEP_CHART_HPP
