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
#include "steadydim/network.h"

#include <cctype>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>

namespace steadydim {
namespace {

constexpr std::uint32_t kMaxCoefficient = 1000000;

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r'; }
bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// A slice of one input line; columns are 1-based byte offsets into the line.
struct Span {
  std::string_view text;
  std::size_t column;

  Span Trimmed() const {
    std::size_t b = 0;
    std::size_t e = text.size();
    while (b < e && IsSpace(text[b])) ++b;
    while (e > b && IsSpace(text[e - 1])) --e;
    return {text.substr(b, e - b), column + b};
  }
  Span Sub(std::size_t pos, std::size_t len = std::string_view::npos) const {
    return {text.substr(pos, len), column + pos};
  }
};

std::vector<Span> Split(Span s, char sep) {
  std::vector<Span> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.text.size(); ++i) {
    if (i == s.text.size() || s.text[i] == sep) {
      parts.push_back(s.Sub(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

class LineParser {
 public:
  LineParser(std::size_t line, std::vector<std::string>& species,
             std::unordered_map<std::string, std::size_t>& index)
      : line_(line), species_(species), index_(index) {}

  [[noreturn]] void Fail(std::size_t column, const std::string& msg) const {
    throw ParseError(line_, column, msg);
  }

  Complex ParseComplex(Span raw, const char* side) {
    Span s = raw.Trimmed();
    if (s.text.empty()) {
      Fail(s.column, std::string("missing ") + side + " complex");
    }
    if (s.text == "0") return {};
    Complex c;
    for (const Span& part : Split(s, '+')) ParseTerm(part.Trimmed(), c);
    return c;
  }

  std::string ParseLabel(Span raw) {
    Span s = raw.Trimmed();
    if (s.text.empty()) Fail(s.column, "empty rate label");
    if (!IsIdentStart(s.text[0])) Fail(s.column, "rate label must start with a letter or '_'");
    for (std::size_t i = 1; i < s.text.size(); ++i) {
      if (!IsIdentChar(s.text[i])) {
        Fail(s.column + i, std::string("unexpected character '") + s.text[i] +
                               "' in rate label");
      }
    }
    return std::string(s.text);
  }

 private:
  void ParseTerm(Span t, Complex& c) {
    if (t.text.empty()) Fail(t.column, "empty term in complex");
    std::size_t i = 0;
    std::uint64_t coef = 1;
    if (std::isdigit(static_cast<unsigned char>(t.text[0]))) {
      coef = 0;
      while (i < t.text.size() && std::isdigit(static_cast<unsigned char>(t.text[i]))) {
        coef = coef * 10 + static_cast<std::uint64_t>(t.text[i] - '0');
        if (coef > kMaxCoefficient) Fail(t.column, "coefficient too large");
        ++i;
      }
      if (coef == 0) Fail(t.column, "zero coefficient ('0' denotes the empty complex on its own)");
      while (i < t.text.size() && IsSpace(t.text[i])) ++i;
      if (i < t.text.size() && t.text[i] == '*') {
        ++i;
        while (i < t.text.size() && IsSpace(t.text[i])) ++i;
      }
    }
    if (i >= t.text.size()) Fail(t.column + i, "expected species name");
    if (!IsIdentStart(t.text[i])) {
      Fail(t.column + i, std::string("unexpected character '") + t.text[i] + "'");
    }
    std::size_t start = i;
    while (i < t.text.size() && IsIdentChar(t.text[i])) ++i;
    if (i < t.text.size()) {
      Fail(t.column + i, std::string("unexpected character '") + t.text[i] + "'");
    }
    std::string name(t.text.substr(start));
    auto [it, inserted] = index_.try_emplace(name, species_.size());
    if (inserted) species_.push_back(name);
    c[it->second] += static_cast<std::uint32_t>(coef);
    if (c[it->second] > kMaxCoefficient) Fail(t.column, "coefficient too large");
  }

  std::size_t line_;
  std::vector<std::string>& species_;
  std::unordered_map<std::string, std::size_t>& index_;
};

std::string RenderComplex(const ReactionNetwork& net, const Complex& c) {
  if (c.empty()) return "0";
  std::string out;
  for (const auto& [sp, coef] : c) {
    if (!out.empty()) out += " + ";
    if (coef != 1) out += std::to_string(coef) + " ";
    out += net.species.at(sp);
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line(line),
      column(column),
      message(message) {}

ReactionNetwork ParseNetwork(std::string_view text) {
  ReactionNetwork net;
  std::unordered_map<std::string, std::size_t> index;
  // Labels already taken, and reactions still waiting for an automatic one.
  std::set<std::string> used_labels;
  std::vector<std::size_t> unlabeled;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    Span full{line, 1};
    if (full.Trimmed().text.empty()) continue;

    LineParser lp(line_no, net.species, index);
    Span body = full;
    std::optional<Span> labels;
    if (auto semi = line.find(';'); semi != std::string_view::npos) {
      body = full.Sub(0, semi);
      labels = full.Sub(semi + 1);
    }

    std::size_t arrow = body.text.find("->");
    if (arrow == std::string_view::npos) {
      if (auto bad = body.text.find_first_of("<>="); bad != std::string_view::npos) {
        lp.Fail(body.column + bad, "unknown arrow; expected '->' or '<->'");
      }
      lp.Fail(body.Trimmed().column, "expected '->' or '<->'");
    }
    bool reversible = arrow > 0 && body.text[arrow - 1] == '<';
    std::size_t lhs_end = reversible ? arrow - 1 : arrow;
    std::size_t arrow_col = body.column + lhs_end;
    if (body.text.find("->", arrow + 2) != std::string_view::npos) {
      lp.Fail(body.column + body.text.find("->", arrow + 2),
              "more than one arrow on a line");
    }
    Span lhs = body.Sub(0, lhs_end);
    Span rhs = body.Sub(arrow + 2);
    if (auto bad = lhs.text.find_first_of("<>=;,"); bad != std::string_view::npos) {
      lp.Fail(lhs.column + bad, std::string("unexpected character '") + lhs.text[bad] + "'");
    }
    if (auto bad = rhs.text.find_first_of("<>=,"); bad != std::string_view::npos) {
      lp.Fail(rhs.column + bad, std::string("unexpected character '") + rhs.text[bad] + "'");
    }

    Complex reactant = lp.ParseComplex(lhs, "reactant");
    Complex product = lp.ParseComplex(rhs, "product");
    if (reactant == product) {
      lp.Fail(arrow_col, "self-loop: reactant and product complexes are identical");
    }

    std::vector<std::pair<std::string, std::size_t>> names;
    if (labels) {
      for (const Span& part : Split(*labels, ',')) {
        names.emplace_back(lp.ParseLabel(part), part.Trimmed().column);
      }
      const std::size_t want = reversible ? 2 : 1;
      if (names.size() != want) {
        lp.Fail(labels->column, reversible
                                    ? "'<->' needs two comma-separated rate labels"
                                    : "'->' takes exactly one rate label");
      }
      for (const auto& [name, col] : names) {
        if (!used_labels.insert(name).second) {
          lp.Fail(col, "duplicate rate label '" + name + "'");
        }
      }
    }

    auto push = [&](Complex from, Complex to, std::size_t which) {
      Reaction r{std::move(from), std::move(to), {}};
      if (names.empty()) {
        unlabeled.push_back(net.reactions.size());
      } else {
        r.label = names[which].first;
      }
      net.reactions.push_back(std::move(r));
    };
    push(reactant, product, 0);
    if (reversible) push(product, reactant, 1);
  }

  if (net.reactions.empty()) throw ParseError(1, 1, "network has no reactions");

  std::size_t counter = 0;
  for (std::size_t slot : unlabeled) {
    counter = std::max(counter, slot + 1);
    std::string name;
    do {
      name = "k" + std::to_string(counter++);
    } while (used_labels.count(name));
    used_labels.insert(name);
    net.reactions[slot].label = name;
  }
  return net;
}

void ValidateNetwork(const ReactionNetwork& net) {
  if (net.reactions.empty()) {
    throw std::invalid_argument("network has no reactions");
  }
  std::set<std::string> names(net.species.begin(), net.species.end());
  if (names.size() != net.species.size()) {
    throw std::invalid_argument("duplicate species name");
  }
  std::vector<bool> referenced(net.species.size(), false);
  std::set<std::string> labels;
  for (const auto& r : net.reactions) {
    if (r.reactant == r.product) throw std::invalid_argument("self-loop reaction");
    if (!labels.insert(r.label).second) {
      throw std::invalid_argument("duplicate rate label '" + r.label + "'");
    }
    for (const Complex* c : {&r.reactant, &r.product}) {
      for (const auto& [sp, coef] : *c) {
        if (sp >= net.species.size()) {
          throw std::invalid_argument("species index out of range");
        }
        if (coef == 0) throw std::invalid_argument("zero coefficient stored");
        referenced[sp] = true;
      }
    }
  }
  for (std::size_t i = 0; i < referenced.size(); ++i) {
    if (!referenced[i]) {
      throw std::invalid_argument("species '" + net.species[i] + "' is not used");
    }
  }
}

std::string RenderReaction(const ReactionNetwork& net, const Reaction& r) {
  return RenderComplex(net, r.reactant) + " -> " + RenderComplex(net, r.product) +
         " ; " + r.label;
}

std::string RenderNetwork(const ReactionNetwork& net) {
  std::string out;
  for (const auto& r : net.reactions) out += RenderReaction(net, r) + "\n";
  return out;
}

NetworkMatrices BuildMatrices(const ReactionNetwork& net) {
  ValidateNetwork(net);
  NetworkMatrices m;
  m.n = net.num_species();
  m.r = net.num_reactions();
  m.gamma = RatMatrix(m.n, m.r);
  m.b = RatMatrix(m.n, m.r);
  for (std::size_t i = 0; i < m.r; ++i) {
    const Reaction& rx = net.reactions[i];
    for (const auto& [sp, coef] : rx.reactant) {
      m.b(sp, i) = coef;
      m.gamma(sp, i) -= coef;
    }
    for (const auto& [sp, coef] : rx.product) m.gamma(sp, i) += coef;
  }
  m.n_mat = RowBasis(m.gamma);
  m.w_mat = LeftKernelBasis(m.gamma);
  m.s = m.n_mat.rows();
  m.d = m.w_mat.rows();
  return m;
}

NetworkMatrices MatricesFromRaw(RatMatrix n_mat, RatMatrix b, RatMatrix w_mat) {
  NetworkMatrices m;
  m.n = b.rows();
  m.r = b.cols();
  m.s = n_mat.rows();
  m.d = w_mat.rows();
  if (m.s > 0 && n_mat.cols() != m.r) {
    throw std::invalid_argument("N and B must have the same number of columns");
  }
  if (m.d > 0 && w_mat.cols() != m.n) {
    throw std::invalid_argument("W must have one column per species");
  }
  if (m.s + m.d != m.n) {
    throw std::invalid_argument("rows(N) + rows(W) must equal the species count");
  }
  if (Rank(n_mat) != m.s) throw std::invalid_argument("N must have full row rank");
  if (Rank(w_mat) != m.d) throw std::invalid_argument("W must have full row rank");
  if (!b.IsIntegral() || !n_mat.IsIntegral() || !w_mat.IsIntegral()) {
    throw std::invalid_argument("N, B and W must have integer entries");
  }
  if (m.s == 0) n_mat = RatMatrix(0, m.r);
  if (m.d == 0) w_mat = RatMatrix(0, m.n);
  m.gamma = n_mat;
  m.n_mat = std::move(n_mat);
  m.b = std::move(b);
  m.w_mat = std::move(w_mat);
  return m;
}

}  // namespace steadydim
