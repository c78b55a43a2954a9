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
// Enumeration of admissible minimal-chart types. Minimality facts are taken
// as axiom data: there is no minimal chart with 1, 2, 3, 5, or 7 white
// vertices, and a minimal chart of type (n_1, ..., n_p) satisfies
//   (a) n_1 > 1 and n_p > 1,
//   (b) n_1 = 2 (resp. n_p = 2) implies n_2 > 1 (resp. n_{p-1} > 1),
//   (c) n_1 = 3 (resp. n_p = 3) implies n_2 > 1 (resp. n_{p-1} > 1).

#ifndef CHARTSEP_ENUMERATE_HPP
#define CHARTSEP_ENUMERATE_HPP

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "chartsep/base.hpp"
#include "chartsep/chart.hpp"

namespace chartsep {

struct MinimalityAxioms {
  std::set<int> forbidden_white_counts = {1, 2, 3, 5, 7};

  bool count_allowed(int w) const { return w >= 4 && !forbidden_white_counts.count(w); }

  // End constraints (a)-(c) on a count vector.
  bool admits(const std::vector<int>& c) const {
    if (c.empty()) return false;
    int p = static_cast<int>(c.size());
    if (c.front() <= 1 || c.back() <= 1) return false;                      // (a)
    if ((c.front() == 2 || c.front() == 3) && p >= 2 && c[1] <= 1) return false;        // (b),(c)
    if ((c.back() == 2 || c.back() == 3) && p >= 2 && c[p - 2] <= 1) return false;      // (b),(c)
    return true;
  }
};

// Normal form under relabeling k -> n-k (which reverses the count vector):
// the lexicographically larger of the vector and its reversal, realizing
// the conventions n_1 >= n_p and, on ties with p >= 4, n_2 >= n_{p-1}.
inline std::vector<int> normalize_counts(std::vector<int> c) {
  std::vector<int> r(c.rbegin(), c.rend());
  return std::max(c, r);
}

inline TypeVector normalize_type(const TypeVector& t) {
  TypeVector out;
  out.m = t.m;
  out.counts = normalize_counts(t.counts);
  return out;
}

// Output order: shorter vectors first, lexicographically descending within
// one length (the order the classification lists use).
struct TypeOrder {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
  }
};

// All normalized count vectors (n_1, ..., n_p) summing to w that satisfy
// the minimality constraints. By default every n_i >= 1 (the premise that
// the chart is not zero at any label); with allow_interior_zero interior
// entries may vanish and p is capped at w.
inline std::vector<std::vector<int>> admissible_types(int w, const MinimalityAxioms& ax,
                                                      bool allow_interior_zero = false) {
  require(w >= 4, Errc::w_too_small, "no minimal chart has fewer than 4 white vertices");
  std::set<std::vector<int>, TypeOrder> out;
  const int maxp = w;  // with every n_i >= 1 this is no restriction
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int depth) -> void {
    if (rest == 0 && !cur.empty()) {
      if (ax.admits(cur)) out.insert(normalize_counts(cur));
      return;
    }
    if (depth >= maxp) return;
    int lo = allow_interior_zero && !cur.empty() ? 0 : 1;
    for (int v = lo; v <= rest; ++v) {
      if (rest - v == 0 && v == 0) continue;  // the last entry must be positive
      cur.push_back(v);
      self(self, rest - v, depth + 1);
      cur.pop_back();
    }
  };
  rec(rec, w, 0);
  return {out.begin(), out.end()};
}

// Unordered pairs of factor types for a separable minimal chart with w
// whites: both factors must themselves be admissible minimal charts, so
// both white counts avoid the forbidden set.
inline std::vector<std::pair<std::vector<int>, std::vector<int>>> separable_products(
    int w, const MinimalityAxioms& ax) {
  require(w >= 8, Errc::w_too_small, "a separable minimal chart needs at least 8 white vertices");
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (int w1 = 4; w1 <= w / 2; ++w1) {
    int w2 = w - w1;
    if (!ax.count_allowed(w1) || !ax.count_allowed(w2)) continue;
    auto t1 = admissible_types(w1, ax);
    auto t2 = admissible_types(w2, ax);
    for (auto& a : t1)
      for (auto& b : t2) {
        auto lo = a, hi = b;
        if (TypeOrder{}(hi, lo)) std::swap(lo, hi);
        out.emplace_back(lo, hi);
      }
  }
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) {
    TypeOrder lt;
    if (a.first != b.first) return lt(a.first, b.first);
    return lt(a.second, b.second);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// A chart with w whites belongs to the first class when w is odd and no
// smaller odd count admits a minimal chart.
inline bool first_class_check(int w, const MinimalityAxioms& ax) {
  if (w % 2 == 0) return false;
  for (int v = 1; v < w; v += 2)
    if (ax.count_allowed(v)) return false;
  return true;
}

inline std::string counts_to_string(const std::vector<int>& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  s += ")";
  return s;
}

}  // namespace chartsep

#endif  // CHARTSEP_ENUMERATE_HPP
