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
// Canonical chart documents. Line-oriented plain text:
//
//   chart 1                  header, format version
//   n <strands>              labels range over 1..n-1
//   darts <N>                dart ids are 0..N-1
//   d <id> <opposite> <next> one line per dart, ascending ids; `next` is the
//                            counterclockwise successor around the vertex
//   e <dart> <label> <fwd>   one line per edge, keyed by its smaller dart;
//                            fwd is 1 when that dart points along the
//                            edge's orientation
//   outer <dart>             one line per root component: a dart whose face
//                            orbit borders the unbounded domain
//   nest <anchor> <host>     one line per nested component: anchor's orbit
//                            is the component's outward cycle, host's orbit
//                            is the face of another component containing it
//
// `#` starts a comment line. Serialization always emits the canonical form
// (sections in the order above, ascending keys, single spaces); parsing a
// canonical document and re-serializing reproduces it byte for byte.

#ifndef CHARTSEP_IO_HPP
#define CHARTSEP_IO_HPP

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "chartsep/chart.hpp"

namespace chartsep {

inline std::string serialize_chart(const Chart& chart) {
  Chart c = canonical(chart);
  const Map& m = c.map;
  // canonical() compacts real darts to 0..N-1 and rebuilds scaffolds after
  // them, so the real section is dense
  Dart nreal = 0;
  for (Dart d = 0; d < m.dart_bound(); ++d)
    if (m.is_real(d)) {
      check(d == nreal, "canonical map has non-dense real darts");
      ++nreal;
    }
  std::ostringstream os;
  os << "chart 1\n";
  os << "n " << c.n << "\n";
  os << "darts " << nreal << "\n";
  for (Dart d = 0; d < nreal; ++d) {
    // next real dart in rotation
    Dart x = m.nxt(d);
    while (!m.is_real(x)) x = m.nxt(x);
    os << "d " << d << " " << m.opp(d) << " " << x << "\n";
  }
  for (Dart d = 0; d < nreal; ++d) {
    if (d < m.opp(d)) os << "e " << d << " " << m.label(d) << " " << (m.fwd(d) ? 1 : 0) << "\n";
  }
  Placements pl = m.read_placements();
  std::sort(pl.roots.begin(), pl.roots.end());
  std::sort(pl.nests.begin(), pl.nests.end(),
            [](const Placements::Nest& a, const Placements::Nest& b) { return a.anchor < b.anchor; });
  for (Dart r : pl.roots) os << "outer " << r << "\n";
  for (auto& nst : pl.nests) os << "nest " << nst.anchor << " " << nst.host << "\n";
  return os.str();
}

namespace detail {

struct LineLexer {
  std::istringstream in;
  int lineno = 0;
  std::string line;

  explicit LineLexer(const std::string& text) : in(text) {}

  // next non-comment, non-blank line split into tokens; empty at EOF
  std::vector<std::string> next() {
    while (std::getline(in, line)) {
      ++lineno;
      std::istringstream ls(line);
      std::vector<std::string> toks;
      std::string t;
      while (ls >> t) toks.push_back(t);
      if (toks.empty() || toks[0][0] == '#') continue;
      return toks;
    }
    return {};
  }
};

inline long parse_int(const std::string& s, int lineno, const char* what) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (...) {
    pos = 0;
  }
  if (pos != s.size() || v < 0)
    fail(Errc::syntax_error,
         std::string("line ") + std::to_string(lineno) + ": expected " + what + ", got '" + s + "'");
  return v;
}

}  // namespace detail

// Parse a chart document. Throws SyntaxError with line information on
// malformed input and SemanticError when the described chart violates one
// of the chart conditions (the condition id is included in the message).
inline Chart parse_chart(const std::string& text) {
  detail::LineLexer lx(text);
  auto expect = [&](const std::vector<std::string>& toks, const char* head, std::size_t ntok) {
    if (toks.empty() || toks[0] != head || toks.size() != ntok)
      fail(Errc::syntax_error, std::string("line ") + std::to_string(lx.lineno) + ": expected '" +
                                   head + "' record");
  };
  auto toks = lx.next();
  expect(toks, "chart", 2);
  if (toks[1] != "1")
    fail(Errc::syntax_error, "unsupported format version " + toks[1]);
  toks = lx.next();
  expect(toks, "n", 2);
  long n = detail::parse_int(toks[1], lx.lineno, "strand count");
  if (n < 2) fail(Errc::syntax_error, "strand count must be at least 2");
  toks = lx.next();
  expect(toks, "darts", 2);
  long nd = detail::parse_int(toks[1], lx.lineno, "dart count");
  if (nd % 2 != 0) fail(Errc::syntax_error, "dart count must be even");

  BareMap bare;
  bare.opp.assign(nd, kNoDart);
  bare.nxt.assign(nd, kNoDart);
  bare.label.assign(nd, 0);
  bare.fwd.assign(nd, 0);
  std::vector<std::uint8_t> have_edge(nd, 0);
  Placements pl;

  auto dart_id = [&](const std::string& s) {
    long v = detail::parse_int(s, lx.lineno, "dart id");
    if (v >= nd)
      fail(Errc::syntax_error,
           std::string("line ") + std::to_string(lx.lineno) + ": dart " + s + " out of range");
    return static_cast<Dart>(v);
  };

  long seen_darts = 0;
  for (toks = lx.next(); !toks.empty(); toks = lx.next()) {
    if (toks[0] == "d") {
      if (toks.size() != 4)
        fail(Errc::syntax_error, "line " + std::to_string(lx.lineno) + ": d <id> <opp> <next>");
      Dart id = dart_id(toks[1]);
      if (bare.opp[id] != kNoDart)
        fail(Errc::syntax_error, "line " + std::to_string(lx.lineno) + ": duplicate dart " + toks[1]);
      bare.opp[id] = dart_id(toks[2]);
      bare.nxt[id] = dart_id(toks[3]);
      ++seen_darts;
    } else if (toks[0] == "e") {
      if (toks.size() != 4)
        fail(Errc::syntax_error, "line " + std::to_string(lx.lineno) + ": e <dart> <label> <fwd>");
      Dart id = dart_id(toks[1]);
      long lab = detail::parse_int(toks[2], lx.lineno, "label");
      long f = detail::parse_int(toks[3], lx.lineno, "orientation flag");
      if (f > 1) fail(Errc::syntax_error, "line " + std::to_string(lx.lineno) + ": fwd must be 0 or 1");
      have_edge[id] = 1;
      bare.label[id] = static_cast<Label>(lab);
      bare.fwd[id] = static_cast<std::uint8_t>(f);
    } else if (toks[0] == "outer") {
      if (toks.size() != 2)
        fail(Errc::syntax_error, "line " + std::to_string(lx.lineno) + ": outer <dart>");
      pl.roots.push_back(dart_id(toks[1]));
    } else if (toks[0] == "nest") {
      if (toks.size() != 3)
        fail(Errc::syntax_error, "line " + std::to_string(lx.lineno) + ": nest <anchor> <host>");
      pl.nests.push_back({dart_id(toks[1]), dart_id(toks[2])});
    } else {
      fail(Errc::syntax_error,
           "line " + std::to_string(lx.lineno) + ": unknown record '" + toks[0] + "'");
    }
  }
  if (seen_darts != nd) fail(Errc::syntax_error, "missing dart records");
  for (Dart d = 0; d < static_cast<Dart>(nd); ++d) {
    Dart o = bare.opp[d];
    if (have_edge[d]) {
      if (d > o) fail(Errc::syntax_error, "edge record must use the smaller dart of the pair");
      bare.label[o] = bare.label[d];
      bare.fwd[o] = bare.fwd[d] ? 0 : 1;
    } else if (d < o && !have_edge[d]) {
      fail(Errc::syntax_error, "missing edge record for dart " + std::to_string(d));
    }
  }

  Chart c;
  try {
    c.map = build_map(bare, pl);
  } catch (const Error& e) {
    if (e.code() == Errc::non_involution || e.code() == Errc::non_planar ||
        e.code() == Errc::dangling_dart)
      throw;
    throw Error(Errc::syntax_error, e.what());
  }
  c.n = static_cast<std::uint16_t>(n);
  auto report = validate_chart(c);
  if (!report.empty()) {
    std::ostringstream os;
    os << "chart violates condition (" << report[0].condition << "): " << report[0].message;
    if (report.size() > 1) os << " (+" << report.size() - 1 << " more)";
    fail(Errc::semantic_error, os.str());
  }
  return c;
}

inline std::string read_file(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  require(f != nullptr, Errc::syntax_error, "cannot open " + path);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, got);
  std::fclose(f);
  return out;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  require(f != nullptr, Errc::syntax_error, "cannot write " + path);
  std::fwrite(content.data(), 1, content.size(), f);
  std::fclose(f);
}

}  // namespace chartsep

#endif  // CHARTSEP_IO_HPP
