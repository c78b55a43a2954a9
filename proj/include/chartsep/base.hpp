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

#ifndef CHARTSEP_BASE_HPP
#define CHARTSEP_BASE_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace chartsep {

using Dart = std::uint32_t;
inline constexpr Dart kNoDart = std::numeric_limits<Dart>::max();

using Label = std::uint16_t;

enum class Errc {
  non_involution,
  non_planar,
  dangling_dart,
  label_out_of_range,
  label_conflict,
  orientation_mismatch,
  bad_endpoint,
  invalid_system,
  hypothesis_violated,
  not_maximal_vertex,
  not_zero_at_label,
  arc_not_clean,
  bad_exit_point,
  path_blocked,
  w_too_small,
  syntax_error,
  semantic_error,
  unsupported_configuration,
  internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::non_involution: return "NonInvolution";
    case Errc::non_planar: return "NonPlanar";
    case Errc::dangling_dart: return "DanglingDart";
    case Errc::label_out_of_range: return "LabelOutOfRange";
    case Errc::label_conflict: return "LabelConflict";
    case Errc::orientation_mismatch: return "OrientationMismatch";
    case Errc::bad_endpoint: return "BadEndpoint";
    case Errc::invalid_system: return "InvalidSystem";
    case Errc::hypothesis_violated: return "HypothesisViolated";
    case Errc::not_maximal_vertex: return "NotMaximalVertex";
    case Errc::not_zero_at_label: return "NotZeroAtLabel";
    case Errc::arc_not_clean: return "ArcNotClean";
    case Errc::bad_exit_point: return "BadExitPoint";
    case Errc::path_blocked: return "PathBlocked";
    case Errc::w_too_small: return "WTooSmall";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::semantic_error: return "SemanticError";
    case Errc::unsupported_configuration: return "UnsupportedConfiguration";
    case Errc::internal: return "InternalError";
  }
  return "InternalError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

// Internal consistency check; failures indicate a bug, not bad input.
inline void check(bool ok, const char* what) {
  if (!ok) throw Error(Errc::internal, what);
}

}  // namespace chartsep

#endif  // CHARTSEP_BASE_HPP
