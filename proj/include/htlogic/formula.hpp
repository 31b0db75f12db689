#pragma once

// Propositional formulas over variables with the connectives
// and, or, implies, not and the two perception operators S1, S2.
//
// Concrete syntax (ASCII is emitted, Unicode accepted on input):
//
//   formula := imp
//   imp     := or ( "->" imp )?          right-associative
//   or      := and ( "|" and )*          left-associative
//   and     := unary ( "&" unary )*      left-associative
//   unary   := ("~" | "S1" | "S2") unary | atom
//   atom    := IDENT | "(" formula ")"
//
// Unicode aliases: ∧ for &, ∨ for |, ⇒ for ->, ¬ for ~.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "htlogic/errors.hpp"

namespace htlogic {

enum class Connective : std::uint8_t { Var, And, Or, Implies, Not, S1, S2 };

bool is_unary(Connective c) noexcept;
bool is_binary(Connective c) noexcept;

/// True for names usable as propositional variables: a letter followed by
/// letters, digits or underscores, other than the reserved words S1 and S2.
bool is_identifier(std::string_view name) noexcept;

/// Immutable formula tree. Copies share structure.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula negation(Formula operand);
  static Formula s1(Formula operand);
  static Formula s2(Formula operand);

  static Formula unary(Connective c, Formula operand);
  static Formula binary(Connective c, Formula lhs, Formula rhs);

  Connective kind() const noexcept;
  bool is_var() const noexcept { return kind() == Connective::Var; }

  /// Variable name; only meaningful for Var nodes.
  const std::string& name() const noexcept;

  /// Operand of a unary node, or left operand of a binary node.
  const Formula& lhs() const;
  const Formula& rhs() const;
  const Formula& operand() const { return lhs(); }

  std::size_t depth() const noexcept;
  std::size_t size() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Connective kind;
  std::string name;
  std::vector<Formula> children;
  std::size_t depth;
  std::size_t size;
};

inline Connective Formula::kind() const noexcept { return node_->kind; }
inline const std::string& Formula::name() const noexcept { return node_->name; }
inline std::size_t Formula::depth() const noexcept { return node_->depth; }
inline std::size_t Formula::size() const noexcept { return node_->size; }

Formula parse_formula(std::string_view text);

/// Minimal-parentheses rendering; parse_formula(render_formula(f)) == f.
std::string render_formula(const Formula& f);

/// Variables occurring in `f`, sorted and without duplicates.
std::vector<std::string> variables(const Formula& f);
std::vector<std::string> variables(std::span<const Formula> fs);

/// Every formula of depth at most `max_depth` over `vars`, in order of
/// increasing depth. Throws ResourceError when more than `cap` formulas
/// would be produced.
std::vector<Formula> enumerate_formulas(std::span<const std::string> vars, std::size_t max_depth,
                                        std::size_t cap = 1'000'000);

/// A random formula of depth at most `max_depth` over `vars`.
Formula random_formula(std::mt19937_64& rng, std::span<const std::string> vars,
                       std::size_t max_depth);

/// The first `n` variable names of p, q, r, s, t, u, v, x1, x2, ...
std::vector<std::string> default_variables(std::size_t n);

}  // namespace htlogic
