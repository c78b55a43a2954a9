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

#include <catch2/catch_amalgamated.hpp>

#include "chartsep/compose.hpp"
#include "chartsep/map.hpp"

using namespace chartsep;

namespace {

Chart single_hoop(Label m = 3, std::uint16_t n = 5) {
  Assembly a(n);
  a.add_root(hoop(m));
  return a.build();
}

}  // namespace

TEST_CASE("single hoop: V=1 E=1 F=2, one outer") {
  Chart c = single_hoop();
  const Map& m = c.map;
  REQUIRE(m.nverts() == 1);
  REQUIRE(m.nedges() == 1);
  REQUIRE(m.nfaces() == 2);
  REQUIRE(m.outer_face() == m.face_of(1));
  REQUIRE(m.face_of(0) != m.face_of(1));
  m.check_invariants();
}

TEST_CASE("empty map has one domain") {
  Assembly a(4);
  Chart c = a.build();
  REQUIRE(c.map.empty());
  REQUIRE(c.map.domain_count() == 1);
}

TEST_CASE("two side-by-side hoops: 3 faces, two roots") {
  Assembly a(5);
  a.add_root(hoop(2));
  a.add_root(hoop(2));
  Chart c = a.build();
  REQUIRE(c.map.nfaces() == 3);
  REQUIRE(c.map.ncomps() == 2);
  auto fo = c.map.nesting_forest();
  REQUIRE(fo.parent[0] == kNoId);
  REQUIRE(fo.parent[1] == kNoId);
  c.map.check_invariants();
}

TEST_CASE("two nested hoops: 3 faces, chain of length 1, middle face adjacent to both") {
  Assembly a(5);
  Placed outer = a.add_root(hoop(2));
  a.add_nested(hoop(2), outer.pocket(0));
  Chart c = a.build();
  const Map& m = c.map;
  REQUIRE(m.nfaces() == 3);
  auto fo = m.nesting_forest();
  REQUIRE(fo.parent[0] == kNoId);
  REQUIRE(fo.parent[1] == 0);
  REQUIRE(fo.depth[1] == 1);
  // middle face touches segments of both components
  std::uint32_t middle = fo.outer_face[1];
  std::set<std::uint32_t> comps;
  for (Dart d : m.darts_of_face(middle))
    if (m.is_real(d)) comps.insert(m.comp_of_dart(d));
  REQUIRE(comps == std::set<std::uint32_t>{0, 1});
  m.check_invariants();
}

TEST_CASE("star map: V=7 E=6 F=1") {
  // one central vertex with six pendant edges
  BareMap b;
  b.opp.resize(12);
  b.nxt.resize(12);
  for (Dart t = 0; t < 6; ++t) {
    b.opp[t] = 6 + t;
    b.opp[6 + t] = t;
    b.nxt[t] = (t + 1) % 6;  // center rotation
    b.nxt[6 + t] = 6 + t;    // pendant vertices
  }
  Placements pl;
  pl.roots = {0};
  Map m = build_map(b, pl);
  REQUIRE(m.nverts() == 7);
  REQUIRE(m.nedges() == 6);
  REQUIRE(m.nfaces() == 1);
  m.check_invariants();
}

TEST_CASE("opposite with a fixed point is rejected") {
  BareMap b;
  b.opp = {0, 1};
  b.nxt = {0, 1};
  Placements pl;
  pl.roots = {0};
  REQUIRE_THROWS_AS(build_map(b, pl), Error);
}

TEST_CASE("delete all edges yields the empty map") {
  Chart c = single_hoop();
  auto res = delete_edges(c.map, c.map.segments());
  REQUIRE(res.map.empty());
  REQUIRE(res.map.domain_count() == 1);
}

TEST_CASE("delete nothing is the identity on faces and nesting") {
  Assembly a(5);
  Placed outer = a.add_root(hoop(2));
  a.add_nested(hoop(2), outer.pocket(0));
  Chart c = a.build();
  auto res = delete_edges(c.map, {});
  REQUIRE(res.map.nfaces() == 3);
  REQUIRE(res.map.ncomps() == 2);
}

TEST_CASE("nested hoops, delete inner: 2 faces") {
  Assembly a(5);
  Placed outer = a.add_root(hoop(2));
  Placed inner = a.add_nested(hoop(2), outer.pocket(0));
  Chart c = a.build();
  // the inner hoop's segment rep is its smaller dart id
  Dart inner_seg = c.map.edge_rep(inner.base);
  auto res = delete_edges(c.map, {inner_seg});
  REQUIRE(res.map.nfaces() == 2);
  REQUIRE(res.map.ncomps() == 1);
  res.map.check_invariants();
}

TEST_CASE("nesting forest: empty map") {
  Assembly a(4);
  Chart c = a.build();
  auto fo = c.map.nesting_forest();
  REQUIRE(fo.parent.empty());
}

TEST_CASE("dual path basics") {
  Assembly a(5);
  Placed h1 = a.add_root(hoop(2));
  a.add_nested(hoop(2), h1.pocket(0));
  Chart c = a.build();
  const Map& m = c.map;
  auto all = [](Dart) { return true; };
  auto none = [](Dart) { return false; };

  SECTION("from == to: empty walk") {
    auto w = dual_path(m, m.outer_face(), m.outer_face(), all);
    REQUIRE(w.has_value());
    REQUIRE(w->steps.empty());
  }
  SECTION("one crossable edge between adjacent faces") {
    std::uint32_t inner_pocket = m.face_of(h1.pocket(0));
    auto w = dual_path(m, m.outer_face(), inner_pocket, all);
    REQUIRE(w.has_value());
    REQUIRE(w->steps.size() == 1);
    REQUIRE(m.face_of(w->steps[0]) == m.outer_face());
  }
  SECTION("no crossable edges: absent") {
    std::uint32_t inner_pocket = m.face_of(h1.pocket(0));
    auto w = dual_path(m, m.outer_face(), inner_pocket, none);
    REQUIRE_FALSE(w.has_value());
  }
  SECTION("depth 2 needs two steps") {
    auto fo = m.nesting_forest();
    std::uint32_t deepest = fo.outer_face[1];  // inner hoop's outer face = annulus
    // the inner hoop's inside:
    std::uint32_t inside = kNoId;
    for (std::uint32_t f = 0; f < m.nfaces(); ++f)
      if (f != m.outer_face() && f != deepest) inside = f;
    auto w = dual_path(m, m.outer_face(), inside, all);
    REQUIRE(w.has_value());
    REQUIRE(w->steps.size() == 2);
  }
}

TEST_CASE("dual path minimality matches a brute-force BFS oracle") {
  // a small zoo: nested and side-by-side hoops
  Assembly a(6);
  Placed h1 = a.add_root(hoop(2));
  Placed h2 = a.add_nested(hoop(3), h1.pocket(0));
  a.add_nested(hoop(5), h2.pocket(0));
  Placed h4 = a.add_root(hoop(4));
  a.add_nested(hoop(2), h4.pocket(0));
  Chart c = a.build();
  const Map& m = c.map;
  auto all = [](Dart) { return true; };
  // oracle: plain BFS distances
  std::vector<std::vector<std::uint32_t>> adj(m.nfaces());
  for (Dart e : m.segments()) {
    adj[m.face_of(e)].push_back(m.face_of(m.opp(e)));
    adj[m.face_of(m.opp(e))].push_back(m.face_of(e));
  }
  for (std::uint32_t s = 0; s < m.nfaces(); ++s) {
    std::vector<int> dist(m.nfaces(), -1);
    dist[s] = 0;
    std::vector<std::uint32_t> q{s};
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::uint32_t t : adj[q[i]])
        if (dist[t] < 0) {
          dist[t] = dist[q[i]] + 1;
          q.push_back(t);
        }
    for (std::uint32_t t = 0; t < m.nfaces(); ++t) {
      auto w = dual_path(m, s, t, all);
      REQUIRE(w.has_value());
      REQUIRE(static_cast<int>(w->steps.size()) == dist[t]);
      // walk consistency: consecutive steps share faces
      std::uint32_t cur = s;
      for (Dart g : w->steps) {
        REQUIRE(m.face_of(g) == cur);
        cur = m.face_of(m.opp(g));
      }
      REQUIRE(cur == t);
    }
  }
}

TEST_CASE("nesting forest parent agrees with a brute-force reachability test") {
  Assembly a(6);
  Placed h1 = a.add_root(hoop(2));
  Placed h2 = a.add_nested(hoop(3), h1.pocket(0));
  a.add_nested(hoop(5), h2.pocket(0));
  Placed h4 = a.add_root(hoop(4));
  a.add_nested(hoop(2), h4.pocket(0));
  Chart c = a.build();
  const Map& m = c.map;
  auto fo = m.nesting_forest();
  // X is a descendant of Y iff every face path from X's incident faces to
  // the outer face crosses an edge of Y.
  auto is_descendant = [&](std::uint32_t x, std::uint32_t y) {
    // BFS from X's faces avoiding Y's edges; descendant iff outer unreachable
    std::vector<std::uint8_t> seen(m.nfaces(), 0);
    std::vector<std::uint32_t> q;
    for (Dart d = 0; d < m.dart_bound(); ++d)
      if (m.is_real(d) && m.comp_of_dart(d) == x && !seen[m.face_of(d)]) {
        seen[m.face_of(d)] = 1;
        q.push_back(m.face_of(d));
      }
    for (std::size_t i = 0; i < q.size(); ++i)
      for (Dart d : m.darts_of_face(q[i])) {
        if (!m.is_real(d) || m.comp_of_dart(d) == y) continue;
        std::uint32_t f = m.face_of(m.opp(d));
        if (!seen[f]) {
          seen[f] = 1;
          q.push_back(f);
        }
      }
    return !seen[m.outer_face()];
  };
  for (std::uint32_t x = 0; x < m.ncomps(); ++x)
    for (std::uint32_t y = 0; y < m.ncomps(); ++y) {
      if (x == y) continue;
      bool anc = false;  // y ancestor of x per forest
      for (std::uint32_t p = fo.parent[x]; p != kNoId; p = fo.parent[p])
        if (p == y) anc = true;
      REQUIRE(anc == is_descendant(x, y));
    }
}

TEST_CASE("canonicalization is stable and preserves structure") {
  Assembly a(6);
  Placed h1 = a.add_root(hoop(2));
  a.add_nested(white_bundle(4), h1.pocket(0));
  Chart c = a.build();
  Map m1 = canonicalized(c.map);
  Map m2 = canonicalized(m1);
  REQUIRE(m1.nfaces() == c.map.nfaces());
  REQUIRE(m1.ncomps() == c.map.ncomps());
  REQUIRE(m2.nverts() == m1.nverts());
  REQUIRE(m2.nedges() == m1.nedges());
  m1.check_invariants();
}
