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

#include "chartsep/chart.hpp"
#include "chartsep/compose.hpp"

using namespace chartsep;

namespace {

// Disjoint union of two white bundles at the given pair labels.
Chart two_bundles(Label lo, Label hi, std::uint16_t n) {
  Assembly a(n);
  a.add_root(white_bundle(lo));
  a.add_root(white_bundle(hi));
  return a.build();
}

}  // namespace

TEST_CASE("single hoop in an n=5 chart is valid") {
  Assembly a(5);
  a.add_root(hoop(3));
  Chart c = a.build();
  REQUIRE(is_valid(c));
}

TEST_CASE("white bundle is a valid chart with two whites in one pair") {
  Assembly a(6);
  a.add_root(white_bundle(2));
  Chart c = a.build();
  REQUIRE(is_valid(c));
  REQUIRE(white_count(c) == 2);
  REQUIRE(white_count_pair(c, 2) == 2);
  REQUIRE(white_count_pair(c, 3) == 0);
  REQUIRE(white_count_label(c, 2) == 2);
  REQUIRE(white_count_label(c, 3) == 2);
  REQUIRE(white_count_label(c, 4) == 0);
}

TEST_CASE("label out of range is reported") {
  Assembly a(3);
  a.add_root(hoop(5));  // labels must lie in 1..2
  Chart c = a.build();
  auto report = validate_chart(c);
  REQUIRE_FALSE(report.empty());
  REQUIRE(report[0].condition == "ii");
}

TEST_CASE("crossing with labels differing by one violates condition iv") {
  // two strands crossing: vertex of degree 4 with labels i, i+1
  BareMap b;
  b.opp.resize(8);
  b.nxt.resize(8);
  // center vertex darts 0..3 (ccw), pendant ends 4..7
  for (Dart t = 0; t < 4; ++t) {
    b.opp[t] = 4 + t;
    b.opp[4 + t] = t;
    b.nxt[t] = (t + 1) % 4;
    b.nxt[4 + t] = 4 + t;
  }
  b.label = {2, 3, 2, 3, 2, 3, 2, 3};
  b.fwd = {1, 1, 0, 0, 0, 0, 1, 1};
  Placements pl;
  pl.roots = {0};
  Chart c{build_map(b, pl), 5};
  auto report = validate_chart(c);
  bool found = false;
  for (auto& v : report)
    if (v.condition == "iv") found = true;
  REQUIRE(found);
}

TEST_CASE("degree-5 vertex violates condition i") {
  BareMap b;
  b.opp.resize(10);
  b.nxt.resize(10);
  for (Dart t = 0; t < 5; ++t) {
    b.opp[t] = 5 + t;
    b.opp[5 + t] = t;
    b.nxt[t] = (t + 1) % 5;
    b.nxt[5 + t] = 5 + t;
  }
  Placements pl;
  pl.roots = {0};
  Chart c{build_map(b, pl), 9};
  auto report = validate_chart(c);
  REQUIRE_FALSE(report.empty());
  REQUIRE(report[0].condition == "i");
}

TEST_CASE("subgraph: empty when no label-m edges") {
  Assembly a(6);
  a.add_root(hoop(2));
  Chart c = a.build();
  auto sg = subgraph(c, 4);
  REQUIRE(sg.edges.empty());
  REQUIRE(sg.vertices.empty());
}

TEST_CASE("subgraph: white vertex appears exactly in its two labels") {
  Assembly a(6);
  a.add_root(white_bundle(3));
  Chart c = a.build();
  REQUIRE(subgraph(c, 3).vertices.size() == 2);
  REQUIRE(subgraph(c, 4).vertices.size() == 2);
  REQUIRE(subgraph(c, 2).vertices.empty());
  REQUIRE(subgraph(c, 5).vertices.empty());
}

TEST_CASE("subgraph: label out of range throws") {
  Assembly a(4);
  a.add_root(hoop(2));
  Chart c = a.build();
  REQUIRE_THROWS_AS(subgraph(c, 4), Error);
  REQUIRE_THROWS_AS(subgraph(c, 0), Error);
}

TEST_CASE("chart_type basics") {
  SECTION("no whites: absent") {
    Assembly a(5);
    a.add_root(hoop(2));
    Chart c = a.build();
    REQUIRE(chart_type(c).status == TypeStatus::none);
  }
  SECTION("four whites in one pair: (1; 4)") {
    Assembly a(3);
    a.add_root(white_bundle(1));
    a.add_root(white_bundle(1));
    Chart c = a.build();
    auto r = chart_type(c);
    REQUIRE(r.status == TypeStatus::ok);
    REQUIRE(r.type.m == 1);
    REQUIRE(r.type.counts == std::vector<int>{4});
  }
  SECTION("interior zeros are allowed: (1; 2,0,0,2)") {
    Chart c = two_bundles(1, 4, 6);
    auto r = chart_type(c);
    REQUIRE(r.status == TypeStatus::ok);
    REQUIRE(r.type.m == 1);
    REQUIRE(r.type.counts == std::vector<int>{2, 0, 0, 2});
  }
}

TEST_CASE("zero labels") {
  SECTION("gap between pairs 1 and 4 gives {2, 3}") {
    Chart c = two_bundles(1, 4, 6);
    REQUIRE(zero_labels(c) == std::vector<Label>{2, 3});
  }
  SECTION("no whites above: empty") {
    Assembly a(3);
    a.add_root(white_bundle(1));
    Chart c = a.build();
    REQUIRE(zero_labels(c).empty());
  }
  SECTION("adjacent pairs: empty") {
    Chart c = two_bundles(1, 2, 4);  // pairs 1 and 2 touch at label 2
    REQUIRE(zero_labels(c).empty());
  }
}

TEST_CASE("separable_at") {
  SECTION("side-by-side split at k = 2 and 3") {
    Chart c = two_bundles(1, 4, 6);
    for (int k : {2, 3}) {
      auto w = separable_at(c, static_cast<Label>(k));
      REQUIRE(w.has_value());
      REQUIRE(w->group_a.size() == 1);
      REQUIRE(w->group_b.size() == 1);
    }
    REQUIRE_FALSE(separable_at(c, 1).has_value());
  }
  SECTION("nested high part cannot be split off") {
    Assembly a(6);
    Placed low = a.add_root(white_bundle(1));
    a.add_nested(white_bundle(4), low.pocket(1));
    Chart c = a.build();
    REQUIRE_FALSE(separable_at(c, 2).has_value());
    REQUIRE_FALSE(separable_at(c, 3).has_value());
  }
  SECTION("whites only below k: absent") {
    Assembly a(6);
    a.add_root(white_bundle(1));
    Chart c = a.build();
    REQUIRE_FALSE(separable_at(c, 3).has_value());
  }
}

TEST_CASE("separable_at agrees with brute-force two-coloring oracle") {
  // enumerate all downward-closed 2-colorings of the nesting forest
  auto oracle = [](const Chart& c, Label k) {
    const Map& m = c.map;
    auto fo = m.nesting_forest();
    std::uint32_t nc = m.ncomps();
    if (nc == 0 || nc > 16) return false;
    auto ws = whites(c);
    for (std::uint32_t mask = 0; mask < (1u << nc); ++mask) {
      // group B = set bits; a downward-closed pair of groups forces every
      // child into its parent's group
      bool ok = true;
      for (std::uint32_t x = 0; x < nc && ok; ++x)
        if (fo.parent[x] != kNoId &&
            (((mask >> x) & 1) != ((mask >> fo.parent[x]) & 1)))
          ok = false;
      if (!ok) continue;
      int wa = 0, wb = 0;
      for (auto& w : ws) {
        bool inb = (mask >> m.comp_of_vertex(w.vertex)) & 1;
        if (inb) {
          if (w.pair <= k) ok = false;  // B side may not touch labels <= k
          ++wb;
        } else {
          if (w.pair + 1 > k) ok = false;
          ++wa;
        }
      }
      if (ok && wa > 0 && wb > 0) return true;
    }
    return false;
  };

  std::vector<Chart> zoo;
  zoo.push_back(two_bundles(1, 4, 6));
  {
    Assembly a(6);
    Placed low = a.add_root(white_bundle(1));
    a.add_nested(white_bundle(4), low.pocket(1));
    zoo.push_back(a.build());
  }
  {
    Assembly a(7);
    Placed h = a.add_root(hoop(3));
    a.add_nested(white_bundle(1), h.pocket(0));
    a.add_root(white_bundle(5));
    zoo.push_back(a.build());
  }
  {
    Assembly a(7);
    a.add_root(white_bundle(1));
    a.add_root(white_bundle(3));
    a.add_root(white_bundle(5));
    zoo.push_back(a.build());
  }
  for (const Chart& c : zoo)
    for (Label k = 1; k + 1 < c.n; ++k)
      REQUIRE(separable_at(c, k).has_value() == oracle(c, k));
}

TEST_CASE("separable implies zero (converse direction)") {
  std::vector<Chart> zoo;
  zoo.push_back(two_bundles(1, 4, 6));
  zoo.push_back(two_bundles(2, 4, 6));
  {
    Assembly a(7);
    a.add_root(white_bundle(1));
    a.add_root(white_bundle(3));
    a.add_root(white_bundle(5));
    zoo.push_back(a.build());
  }
  for (const Chart& c : zoo) {
    auto zs = zero_labels(c);
    for (Label k = 1; k + 1 < c.n; ++k)
      if (separable_at(c, k).has_value())
        REQUIRE(std::find(zs.begin(), zs.end(), k) != zs.end());
  }
}

TEST_CASE("classify closed edges") {
  SECTION("single hoop") {
    Assembly a(5);
    a.add_root(hoop(2));
    Chart c = a.build();
    auto [hoops, rings] = classify_closed_edges(c, 2);
    REQUIRE(hoops.size() == 1);
    REQUIRE(rings.empty());
  }
  SECTION("free arc is neither") {
    Assembly a(5);
    a.add_root(free_arc(2));
    Chart c = a.build();
    auto [hoops, rings] = classify_closed_edges(c, 2);
    REQUIRE(hoops.empty());
    REQUIRE(rings.empty());
  }
}

TEST_CASE("white pair partition: sum over pairs equals total white count") {
  Assembly a(7);
  a.add_root(white_bundle(1));
  a.add_root(white_bundle(3));
  a.add_root(white_bundle(5));
  Chart c = a.build();
  int total = 0;
  for (Label i = 1; i + 1 < c.n; ++i) total += white_count_pair(c, i);
  REQUIRE(total == white_count(c));
  REQUIRE(total == 6);
}

TEST_CASE("reflection reverses type counts") {
  Chart c = two_bundles(1, 4, 6);  // type (1; 2,0,0,2) in an n=6 chart
  Chart r = reflected(c);
  REQUIRE(is_valid(r));
  auto tr = chart_type(r);
  REQUIRE(tr.status == TypeStatus::ok);
  auto to = chart_type(c);
  std::vector<int> rev(to.type.counts.rbegin(), to.type.counts.rend());
  REQUIRE(tr.type.counts == rev);
}

TEST_CASE("subdivision points are transparent to subgraph chains") {
  // a hoop's closed edge has no chart vertices even though the map needs one
  Assembly a(5);
  a.add_root(hoop(2));
  Chart c = a.build();
  auto sg = subgraph(c, 2);
  REQUIRE(sg.edges.size() == 1);
  REQUIRE(sg.edges[0].closed);
  REQUIRE(sg.vertices.empty());
}
