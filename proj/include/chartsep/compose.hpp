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
// Building blocks for assembling charts from small fragments: hoops, free
// arcs (two black vertices joined by one edge), and the 2-white-vertex
// bundle of six parallel strands. Fragments use local dart ids; Assembly
// offsets them and records placements.

#ifndef CHARTSEP_COMPOSE_HPP
#define CHARTSEP_COMPOSE_HPP

#include <utility>
#include <vector>

#include "chartsep/chart.hpp"

namespace chartsep {

struct Fragment {
  BareMap bare;
  Dart outer = 0;                 // dart whose face orbit faces outward
  std::vector<Dart> pockets;      // darts anchoring the usable inner faces
};

// Closed label-m edge with one subdivision vertex. Dart 1 bounds the
// outside, dart 0 the inside (the single pocket). `forward0` orients the
// edge along dart 0.
inline Fragment hoop(Label m, bool forward0 = true) {
  Fragment f;
  f.bare.opp = {1, 0};
  f.bare.nxt = {1, 0};
  f.bare.label = {m, m};
  f.bare.fwd = {static_cast<std::uint8_t>(forward0 ? 1 : 0),
                static_cast<std::uint8_t>(forward0 ? 0 : 1)};
  f.outer = 1;
  f.pockets = {0};
  return f;
}

// One label-m edge joining two black vertices. No pockets.
inline Fragment free_arc(Label m) {
  Fragment f;
  f.bare.opp = {1, 0};
  f.bare.nxt = {0, 1};
  f.bare.label = {m, m};
  f.bare.fwd = {1, 0};
  f.outer = 0;
  return f;
}

// Two white vertices joined by six parallel strands alternating labels
// i, i+1; carries exactly two white vertices, both in the (i, i+1)
// intersection. Pockets are the five bigons between consecutive strands.
inline Fragment white_bundle(Label i) {
  Fragment f;
  f.bare.opp.resize(12);
  f.bare.nxt.resize(12);
  f.bare.label.resize(12);
  f.bare.fwd.resize(12);
  for (Dart t = 0; t < 6; ++t) {
    Dart a = t, b = 6 + t;
    f.bare.opp[a] = b;
    f.bare.opp[b] = a;
    f.bare.nxt[a] = (t + 1) % 6;                   // w1 rotation: a1..a6 ccw
    f.bare.nxt[b] = 6 + (t + 5) % 6;               // w2 rotation: b6..b1 ccw
    f.bare.label[a] = f.bare.label[b] = (t % 2 == 0) ? i : static_cast<Label>(i + 1);
    f.bare.fwd[a] = t >= 3 ? 1 : 0;                // three in, three out
    f.bare.fwd[b] = t >= 3 ? 0 : 1;
  }
  f.outer = 5;                    // face between strands 6 and 1
  f.pockets = {0, 1, 2, 3, 4};    // bigons between strands t, t+1
  return f;
}

// Handle to a placed fragment: global dart = handle.base + local dart.
struct Placed {
  Dart base = 0;
  Dart outer = 0;
  std::vector<Dart> pockets;

  Dart pocket(std::size_t i) const { return pockets.at(i); }
};

class Assembly {
 public:
  explicit Assembly(std::uint16_t n) : n_(n) {}

  // Place a fragment as a root component (in the unbounded face).
  Placed add_root(const Fragment& f) {
    Placed p = append(f);
    pl_.roots.push_back(p.outer);
    return p;
  }

  // Place a fragment inside the face anchored by `host` (a global dart of a
  // previously placed fragment, e.g. placed.pocket(0)).
  Placed add_nested(const Fragment& f, Dart host) {
    Placed p = append(f);
    pl_.nests.push_back({p.outer, host});
    return p;
  }

  Chart build() const {
    Chart c;
    c.map = build_map(bare_, pl_);
    c.n = n_;
    return c;
  }

 private:
  Placed append(const Fragment& f) {
    Placed p;
    p.base = static_cast<Dart>(bare_.opp.size());
    for (std::size_t d = 0; d < f.bare.opp.size(); ++d) {
      bare_.opp.push_back(f.bare.opp[d] + p.base);
      bare_.nxt.push_back(f.bare.nxt[d] + p.base);
      bare_.label.push_back(f.bare.label.empty() ? 1 : f.bare.label[d]);
      bare_.fwd.push_back(f.bare.fwd.empty() ? (d % 2 == 0) : f.bare.fwd[d]);
    }
    p.outer = f.outer + p.base;
    for (Dart d : f.pockets) p.pockets.push_back(d + p.base);
    return p;
  }

  std::uint16_t n_;
  BareMap bare_;
  Placements pl_;
};

}  // namespace chartsep

#endif  // CHARTSEP_COMPOSE_HPP
