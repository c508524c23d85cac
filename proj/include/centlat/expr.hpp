#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "centlat/group.hpp"
#include "centlat/homs.hpp"

namespace centlat {

// Group expression language:
//
//   expr := FAMILY "(" INT ")"
//         | "product(" expr "," expr ")"
//         | "semidirect(" INT "," INT "," INT ")"
//         | "quotient(" expr "," "[" [word ("," word)*] "]" ")"
//         | "table(" STRING ")"
//   word := term ("*" term)*
//   term := IDENT ("^" SINT)?
//
// FAMILY is one of cyclic, dihedral, quaternion, semidihedral, cover_dq,
// cover_qsd. Identifiers may contain dots so product labels like l.x work.

struct Term {
  std::string generator;
  std::optional<long long> exponent;

  friend bool operator==(const Term&, const Term&) = default;
};

struct Word {
  std::vector<Term> terms;

  friend bool operator==(const Word&, const Word&) = default;
};

struct GroupExpr;
using ExprPtr = std::shared_ptr<const GroupExpr>;

struct FamilyExpr {
  std::string family;
  std::size_t n;
};
struct ProductExpr {
  ExprPtr left;
  ExprPtr right;
};
struct SemidirectExpr {
  std::size_t m;
  std::size_t k;
  std::size_t a;
};
struct QuotientExpr {
  ExprPtr inner;
  std::vector<Word> words;
};
struct TableExpr {
  std::string path;
};

struct GroupExpr {
  std::variant<FamilyExpr, ProductExpr, SemidirectExpr, QuotientExpr, TableExpr> node;
};

bool operator==(const GroupExpr& a, const GroupExpr& b);

struct ParseError {
  std::size_t line;    // 1-based
  std::size_t column;  // 0-based offset within the line
  std::vector<std::string> expected;
  std::string message;
};

// Throws Error(kParseError) whose text carries line, column and the expected
// token set; parse_group_expr_detailed exposes the same data structurally.
ExprPtr parse_group_expr(std::string_view text);
std::variant<ExprPtr, ParseError> parse_group_expr_detailed(std::string_view text);

std::string to_string(const GroupExpr& e);
std::string to_string(const Word& w);

struct Evaluated {
  FiniteGroup group;
  std::optional<GroupHom> projection;  // set for quotient expressions
};

// Resolves a word through the group's generator labels.
Element eval_word(const FiniteGroup& g, const Word& w);

Evaluated eval_group_expr(const GroupExpr& e, std::size_t order_cap = kDefaultOrderCap);

}  // namespace centlat
