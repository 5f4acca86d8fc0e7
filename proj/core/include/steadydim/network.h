// Copyright 2026 The steadydim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef STEADYDIM_NETWORK_H_
#define STEADYDIM_NETWORK_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "steadydim/ratmat.h"

namespace steadydim {

/// Species index -> positive stoichiometric coefficient. Empty is the zero
/// complex.
using Complex = std::map<std::size_t, std::uint32_t>;

struct Reaction {
  Complex reactant;
  Complex product;
  std::string label;

  friend bool operator==(const Reaction&, const Reaction&) = default;
};

struct ReactionNetwork {
  std::vector<std::string> species;
  std::vector<Reaction> reactions;

  std::size_t num_species() const { return species.size(); }
  std::size_t num_reactions() const { return reactions.size(); }

  friend bool operator==(const ReactionNetwork&, const ReactionNetwork&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line;
  std::size_t column;
  std::string message;
};

/// Parses the line-oriented reaction DSL:
///
///   # comment
///   0 <-> X1 ; k1, k2
///   X1 + X2 -> 2 X1 ; k3
///   X1 + 2*X3 -> X4
///
/// Species are numbered by first appearance. A reversible arrow yields the
/// forward reaction immediately followed by the reverse one. Omitted labels
/// are filled in as k<position>, skipping names already in use.
ReactionNetwork ParseNetwork(std::string_view text);

/// Throws std::invalid_argument when the network violates its invariants
/// (unique species, all referenced, no self-loops, at least one reaction,
/// unique labels).
void ValidateNetwork(const ReactionNetwork& net);

/// "X1 + X2 -> 2 X1 ; k3"
std::string RenderReaction(const ReactionNetwork& net, const Reaction& r);
/// One reaction per line; reparses to an identical network.
std::string RenderNetwork(const ReactionNetwork& net);

/// The matrices defining the steady-state systems N(k o x^B) = 0 and
/// Wx = c of a mass-action network.
struct NetworkMatrices {
  RatMatrix gamma;  // n x r stoichiometric matrix (s x r for raw input)
  RatMatrix b;      // n x r reactant matrix
  RatMatrix n_mat;  // s x r, full row rank, same row space as gamma
  RatMatrix w_mat;  // d x n conservation laws, w_mat * gamma = 0
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t s = 0;
  std::size_t d = 0;
};

NetworkMatrices BuildMatrices(const ReactionNetwork& net);

/// Bypasses the parser: N (s x r, full row rank), B (n x r, arbitrary
/// integer entries allowed, including negative exponents) and W (d x n with
/// d = n - s, full row rank). gamma is set to N. Throws std::invalid_argument
/// on inconsistent shapes or ranks.
NetworkMatrices MatricesFromRaw(RatMatrix n_mat, RatMatrix b, RatMatrix w_mat);

}  // namespace steadydim

#endif  // STEADYDIM_NETWORK_H_
