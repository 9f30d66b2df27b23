#pragma once

// Guarded-command programs for concrete behaviours, and their def/ref sets.

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace c2ka::gcl {

struct Variable {
  std::string base;
  std::optional<int> index;

  auto operator<=>(const Variable&) const = default;
};

std::string to_string(const Variable& v);
/// Parses `base` or `base[N]`.
Variable parse_variable(std::string_view text);

using VarSet = std::set<Variable>;

std::string to_string(const VarSet& vars);

/// Identifiers of uppercase letters, digits and underscores denote constants.
bool is_constant_name(std::string_view name);

struct Expression {
  enum class Kind { Var, Const, Number, Null, Bool, Stimulus, Call, Binary };

  Kind kind = Kind::Null;
  // Var: base name, Const/Stimulus/Call: identifier, Number/Bool: literal text, Binary: operator.
  std::string text;
  std::optional<int> index;  // Var only
  std::vector<Expression> args;  // Call arguments, or lhs and rhs of Binary

  bool operator==(const Expression&) const = default;
};

struct Statement;

struct Branch {
  Expression guard;
  std::vector<Statement> body;

  bool operator==(const Branch& other) const;
};

struct Statement {
  enum class Kind { Assign, Receive, IfFi, Skip };

  Kind kind = Kind::Skip;
  Variable target;            // Assign
  Expression value;           // Assign
  std::string binder;         // Receive
  std::vector<Branch> branches;  // IfFi

  bool operator==(const Statement& other) const;
};

struct Program {
  std::vector<Statement> body;

  bool operator==(const Program& other) const;
};

/// Grammar:
///   program  := [ stmt { ";" stmt } ]
///   stmt     := lvalue ":=" expr | "receive" IDENT | "skip"
///             | "if" "(" expr ")" "->" program { "[]" "(" expr ")" "->" program } "fi"
///   lvalue   := IDENT [ "[" INT "]" ]
/// Expressions use = != < <= > >= + - * / with the usual precedence.
/// Unindexed identifiers found in `known_stimuli` are stimulus literals inside guards.
/// Throws SyntaxError, or UnknownConstruct for loops and other statements outside the fragment.
Program parse_program(std::string_view text, const std::set<std::string>& known_stimuli = {});

std::string render(const Program& p);
std::string render(const Expression& e);

/// Assignment targets, flow-insensitive, minus constants and receive-bound names.
VarSet def_vars(const Program& p);
/// Variables read by right-hand sides, guards and call arguments, minus receive-bound names.
VarSet ref_vars(const Program& p);

}  // namespace c2ka::gcl
