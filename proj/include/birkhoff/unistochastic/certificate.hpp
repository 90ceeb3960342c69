// Copyright 2026 The birkhoff-lab developers
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

#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "birkhoff/bracelet/bracelet.hpp"
#include "birkhoff/core/unitary_witness.hpp"

namespace birkhoff {

enum class Verdict { kUnistochastic, kNotUnistochastic, kUnknown };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kUnistochastic:
      return "unistochastic";
    case Verdict::kNotUnistochastic:
      return "not_unistochastic";
    default:
      return "unknown";
  }
}

// Machine-checkable answer to "is B unistochastic?". Either a certified
// unitary witness, a genuine bracelet violation (the necessary condition
// fails), or an explicit "unknown" from the heuristic search. Unknown never
// claims non-membership; it only reports the best residual reached.
class Certificate {
 public:
  static Certificate unistochastic(UnitaryWitness witness) {
    Certificate c(Verdict::kUnistochastic);
    c.witness_ = std::move(witness);
    return c;
  }

  static Certificate not_unistochastic(BraceletReport violation) {
    if (violation.holds || !violation.violating_pair) {
      throw InternalError(
          "non-membership requires an actual bracelet violation");
    }
    Certificate c(Verdict::kNotUnistochastic);
    c.violation_ = std::move(violation);
    return c;
  }

  static Certificate unknown(double best_residual, int restarts_used) {
    Certificate c(Verdict::kUnknown);
    c.best_residual_ = best_residual;
    c.restarts_used_ = restarts_used;
    return c;
  }

  Verdict verdict() const { return verdict_; }
  const std::optional<UnitaryWitness>& witness() const { return witness_; }
  const std::optional<BraceletReport>& violation() const { return violation_; }
  double best_residual() const { return best_residual_; }
  int restarts_used() const { return restarts_used_; }

  // Exit-code convention used by the command line tool.
  int exit_code() const {
    switch (verdict_) {
      case Verdict::kUnistochastic:
        return 0;
      case Verdict::kNotUnistochastic:
        return 1;
      default:
        return 2;
    }
  }

 private:
  explicit Certificate(Verdict verdict) : verdict_(verdict) {}

  Verdict verdict_;
  std::optional<UnitaryWitness> witness_;
  std::optional<BraceletReport> violation_;
  double best_residual_ = 0.0;
  int restarts_used_ = 0;
};

inline nlohmann::json certificate_to_json(
    const Certificate& c,
    const std::optional<std::string>& witness_file = std::nullopt) {
  nlohmann::json out;
  out["verdict"] = verdict_name(c.verdict());
  switch (c.verdict()) {
    case Verdict::kUnistochastic:
      out["residual"] = c.witness()->unitarity_residual();
      break;
    case Verdict::kUnknown:
      out["residual"] = c.best_residual();
      out["restarts_used"] = c.restarts_used();
      break;
    case Verdict::kNotUnistochastic:
      out["residual"] = nullptr;
      break;
  }
  if (witness_file && c.verdict() == Verdict::kUnistochastic) {
    out["witness_file"] = *witness_file;
  }
  if (c.violation()) {
    const ViolatingPair& pair = *c.violation()->violating_pair;
    out["violation"] = {{"axis", axis_name(pair.axis)},
                        {"k", pair.k},
                        {"l", pair.l},
                        {"j", pair.j}};
  }
  return out;
}

}  // namespace birkhoff
