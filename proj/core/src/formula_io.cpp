// Copyright 2026 The depprof Authors. All rights reserved.
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

#include "depprof/formula_io.hpp"

#include <cctype>
#include <unordered_set>

#include "depprof/errors.hpp"
#include "json_codec.hpp"

namespace depprof {
namespace {

constexpr std::string_view kVariablesHeader = "variables:";

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_identifier(std::string_view s) {
  if (s.empty() || !is_ident_start(s.front())) return false;
  for (char c : s)
    if (!is_ident_char(c)) return false;
  return s != "true" && s != "false";
}

class FormulaParser {
 public:
  FormulaParser(std::string_view text, NormalizedFormula& out) : text_(text), out_(out) {}

  void parse() {
    skip_ws();
    if (peek_word("true")) {
      pos_ += 4;
      skip_ws();
      if (!at_end()) fail("unexpected input after 'true'");
      return;
    }
    std::vector<Block> blocks;
    blocks.push_back(parse_block());
    skip_ws();
    while (accept('&')) blocks.push_back(parse_block());
    skip_ws();
    if (!at_end()) fail("expected '&' or end of formula");
    for (auto& b : blocks) out_.add_block(std::move(b));
  }

 private:
  Block parse_block() {
    skip_ws();
    if (!accept('(')) return Block{Term({parse_literal()})};
    skip_ws();
    Block block;
    if (peek_word("false")) {
      pos_ += 5;
      expect(')');
      return block;
    }
    block.push_back(parse_term());
    while (accept('|')) block.push_back(parse_term());
    expect(')');
    return block;
  }

  Term parse_term() {
    skip_ws();
    if (peek_word("true")) {
      pos_ += 4;
      return Term{};
    }
    if (accept('(')) {
      skip_ws();
      if (peek_word("true")) {
        pos_ += 4;
        expect(')');
        return Term{};
      }
      auto lits = parse_chain();
      expect(')');
      return Term(std::move(lits));
    }
    return Term(parse_chain());
  }

  std::vector<Literal> parse_chain() {
    std::vector<Literal> lits{parse_literal()};
    while (accept('&')) lits.push_back(parse_literal());
    return lits;
  }

  Literal parse_literal() {
    skip_ws();
    const bool negated = accept('!');
    skip_ws();
    const auto start = pos_;
    if (at_end() || !is_ident_start(text_[pos_])) fail("expected a variable name");
    while (!at_end() && is_ident_char(text_[pos_])) ++pos_;
    const auto name = text_.substr(start, pos_ - start);
    if (name == "true" || name == "false") fail("'" + std::string(name) + "' is not a variable");
    return Literal{out_.add_variable(name), negated};
  }

  bool peek_word(std::string_view w) const {
    if (text_.substr(pos_, w.size()) != w) return false;
    const auto after = pos_ + w.size();
    return after >= text_.size() || !is_ident_char(text_[after]);
  }
  bool accept(char c) {
    skip_ws();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("formula column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  NormalizedFormula& out_;
};

std::string literal_text(const NormalizedFormula& phi, const Literal& l) {
  return (l.negated ? "!" : "") + phi.variables()[l.var];
}

std::vector<std::size_t> first_appearance_order(const NormalizedFormula& phi) {
  std::vector<std::size_t> order;
  std::unordered_set<std::size_t> seen;
  for (const auto& b : phi.blocks())
    for (const auto& t : b)
      for (const auto& l : t.literals())
        if (seen.insert(l.var).second) order.push_back(l.var);
  return order;
}

}  // namespace

NormalizedFormula parse_formula(const std::string& text) {
  NormalizedFormula phi;
  std::string_view body = text;
  // Optional declaration line.
  const auto first = body.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && body.substr(first).starts_with(kVariablesHeader)) {
    const auto eol = body.find('\n', first);
    auto decl = body.substr(first + kVariablesHeader.size(),
                            eol == std::string_view::npos ? std::string_view::npos
                                                          : eol - first - kVariablesHeader.size());
    std::size_t start = 0;
    while (start <= decl.size()) {
      const auto comma = decl.find(',', start);
      auto name = decl.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      const auto b = name.find_first_not_of(" \t\r");
      const auto e = name.find_last_not_of(" \t\r");
      name = b == std::string_view::npos ? std::string_view{} : name.substr(b, e - b + 1);
      if (!name.empty()) {
        if (!is_identifier(name)) throw InputError("invalid variable name '" + std::string(name) + "'");
        if (phi.find_variable(name)) throw InputError("duplicate variable '" + std::string(name) + "'");
        phi.add_variable(name);
      }
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    body = eol == std::string_view::npos ? std::string_view{} : body.substr(eol + 1);
  }
  FormulaParser(body, phi).parse();
  return phi;
}

std::string formula_to_text(const NormalizedFormula& phi) {
  for (const auto& v : phi.variables())
    if (!is_identifier(v)) throw InputError("variable '" + v + "' is not representable in the text format; use JSON");
  std::string out;
  const auto order = first_appearance_order(phi);
  bool natural = order.size() == phi.num_variables();
  for (std::size_t i = 0; natural && i < order.size(); ++i) natural = order[i] == i;
  if (!natural) {
    out += kVariablesHeader;
    for (std::size_t i = 0; i < phi.num_variables(); ++i) out += (i ? "," : " ") + phi.variables()[i];
    out += '\n';
  }
  if (phi.blocks().empty()) return out + "true";
  for (std::size_t b = 0; b < phi.blocks().size(); ++b) {
    const auto& block = phi.blocks()[b];
    if (b) out += " & ";
    out += '(';
    if (block.empty()) out += "false";
    for (std::size_t t = 0; t < block.size(); ++t) {
      if (t) out += " | ";
      const auto& lits = block[t].literals();
      if (lits.empty()) {
        out += "true";
      } else if (lits.size() == 1) {
        out += literal_text(phi, lits.front());
      } else {
        out += '(';
        for (std::size_t i = 0; i < lits.size(); ++i) out += (i ? " & " : "") + literal_text(phi, lits[i]);
        out += ')';
      }
    }
    out += ')';
  }
  return out;
}

std::string formula_to_json(const NormalizedFormula& phi) { return detail::encode(phi).dump(); }

NormalizedFormula formula_from_json(const std::string& json) { return detail::decode_formula(detail::parse_json(json)); }

namespace detail {

Json encode(const NormalizedFormula& phi) {
  Json j;
  j["variables"] = phi.variables();
  Json blocks = Json::array();
  for (const auto& block : phi.blocks()) {
    Json terms = Json::array();
    for (const auto& t : block) {
      Json lits = Json::array();
      for (const auto& l : t.literals()) lits.push_back(literal_text(phi, l));
      terms.push_back(std::move(lits));
    }
    blocks.push_back(std::move(terms));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

NormalizedFormula decode_formula(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("blocks")) throw InputError("formula JSON needs a \"blocks\" array");
    std::vector<std::string> vars;
    if (j.contains("variables")) vars = j.at("variables").get<std::vector<std::string>>();
    NormalizedFormula phi(vars);
    for (const auto& jb : j.at("blocks")) {
      Block block;
      for (const auto& jt : jb) {
        std::vector<Literal> lits;
        for (const auto& jl : jt) {
          auto s = jl.get<std::string>();
          const bool negated = !s.empty() && s.front() == '!';
          if (negated) s.erase(0, 1);
          if (s.empty()) throw InputError("empty literal in formula JSON");
          lits.push_back({phi.add_variable(s), negated});
        }
        block.emplace_back(std::move(lits));
      }
      phi.add_block(std::move(block));
    }
    return phi;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed formula JSON: ") + e.what());
  }
}

}  // namespace detail
}  // namespace depprof
