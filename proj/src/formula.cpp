#include "htlogic/formula.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <sstream>

namespace htlogic {

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       const std::string& found)
    : Error([&] {
        std::ostringstream msg;
        msg << "parse error at offset " << position << ": found " << found;
        if (!expected.empty()) {
          msg << ", expected one of:";
          for (const auto& e : expected) msg << ' ' << e;
        }
        return msg.str();
      }()),
      position_(position),
      expected_(std::move(expected)) {}

bool is_unary(Connective c) noexcept {
  return c == Connective::Not || c == Connective::S1 || c == Connective::S2;
}

bool is_binary(Connective c) noexcept {
  return c == Connective::And || c == Connective::Or || c == Connective::Implies;
}

bool is_identifier(std::string_view name) noexcept {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char ch : name) {
    auto u = static_cast<unsigned char>(ch);
    if (!std::isalnum(u) && ch != '_') return false;
  }
  return name != "S1" && name != "S2";
}

Formula Formula::var(std::string name) {
  if (!is_identifier(name)) throw StructureError("invalid variable name '" + name + "'");
  return Formula(std::make_shared<const Node>(Node{Connective::Var, std::move(name), {}, 0, 1}));
}

Formula Formula::unary(Connective c, Formula operand) {
  if (!is_unary(c)) throw StructureError("not a unary connective");
  std::size_t d = operand.depth() + 1;
  std::size_t s = operand.size() + 1;
  return Formula(std::make_shared<const Node>(Node{c, {}, {std::move(operand)}, d, s}));
}

Formula Formula::binary(Connective c, Formula lhs, Formula rhs) {
  if (!is_binary(c)) throw StructureError("not a binary connective");
  std::size_t d = std::max(lhs.depth(), rhs.depth()) + 1;
  std::size_t s = lhs.size() + rhs.size() + 1;
  return Formula(
      std::make_shared<const Node>(Node{c, {}, {std::move(lhs), std::move(rhs)}, d, s}));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  return binary(Connective::And, std::move(lhs), std::move(rhs));
}
Formula Formula::disj(Formula lhs, Formula rhs) {
  return binary(Connective::Or, std::move(lhs), std::move(rhs));
}
Formula Formula::implies(Formula lhs, Formula rhs) {
  return binary(Connective::Implies, std::move(lhs), std::move(rhs));
}
Formula Formula::negation(Formula operand) { return unary(Connective::Not, std::move(operand)); }
Formula Formula::s1(Formula operand) { return unary(Connective::S1, std::move(operand)); }
Formula Formula::s2(Formula operand) { return unary(Connective::S2, std::move(operand)); }

const Formula& Formula::lhs() const {
  if (node_->children.empty()) throw StructureError("variable has no operands");
  return node_->children[0];
}

const Formula& Formula::rhs() const {
  if (node_->children.size() < 2) throw StructureError("formula has no right operand");
  return node_->children[1];
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  if (a.is_var()) return a.name() == b.name();
  const auto& ac = a.node_->children;
  const auto& bc = b.node_->children;
  return std::equal(ac.begin(), ac.end(), bc.begin(), bc.end());
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { Ident, S1, S2, Not, And, Or, Imp, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> tokenize(std::string_view src) {
  struct Alias {
    std::string_view spelling;
    Tok kind;
  };
  static constexpr std::array<Alias, 10> kSymbols{{
      {"->", Tok::Imp},
      {"&", Tok::And},
      {"|", Tok::Or},
      {"~", Tok::Not},
      {"\xE2\x88\xA7", Tok::And},  // ∧
      {"\xE2\x88\xA8", Tok::Or},   // ∨
      {"\xE2\x87\x92", Tok::Imp},  // ⇒
      {"\xC2\xAC", Tok::Not},      // ¬
      {"(", Tok::LParen},
      {")", Tok::RParen},
  }};

  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    auto ch = static_cast<unsigned char>(src[i]);
    if (std::isspace(ch)) {
      ++i;
      continue;
    }
    if (std::isalpha(ch)) {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      std::string word(src.substr(i, j - i));
      Tok kind = word == "S1" ? Tok::S1 : word == "S2" ? Tok::S2 : Tok::Ident;
      out.push_back({kind, i, std::move(word)});
      i = j;
      continue;
    }
    bool matched = false;
    for (const auto& sym : kSymbols) {
      if (src.substr(i).starts_with(sym.spelling)) {
        out.push_back({sym.kind, i, std::string(sym.spelling)});
        i += sym.spelling.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw ParseError(i, {}, "unexpected character '" + std::string(1, src[i]) + "'");
    }
  }
  out.push_back({Tok::End, src.size(), ""});
  return out;
}

constexpr std::size_t kMaxNesting = 4096;

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Formula parse() {
    Formula f = imp();
    if (peek().kind != Tok::End) fail({"'&'", "'|'", "'->'", "end of input"});
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(peek().pos, std::move(expected), describe(peek()));
  }

  void enter() {
    if (++nesting_ > kMaxNesting) throw ParseError(peek().pos, {}, "nesting deeper than limit");
  }

  Formula imp() {
    Formula lhs = disj();
    if (peek().kind != Tok::Imp) return lhs;
    advance();
    enter();
    Formula rhs = imp();
    --nesting_;
    return Formula::implies(std::move(lhs), std::move(rhs));
  }

  Formula disj() {
    Formula acc = conj();
    while (peek().kind == Tok::Or) {
      advance();
      acc = Formula::disj(std::move(acc), conj());
    }
    return acc;
  }

  Formula conj() {
    Formula acc = unary();
    while (peek().kind == Tok::And) {
      advance();
      acc = Formula::conj(std::move(acc), unary());
    }
    return acc;
  }

  Formula unary() {
    // Prefix chains are folded iteratively.
    std::vector<Connective> prefix;
    for (;;) {
      Tok k = peek().kind;
      if (k == Tok::Not) prefix.push_back(Connective::Not);
      else if (k == Tok::S1) prefix.push_back(Connective::S1);
      else if (k == Tok::S2) prefix.push_back(Connective::S2);
      else break;
      advance();
      if (prefix.size() + nesting_ > kMaxNesting)
        throw ParseError(peek().pos, {}, "nesting deeper than limit");
    }
    Formula f = atom();
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) f = Formula::unary(*it, std::move(f));
    return f;
  }

  Formula atom() {
    const Token& t = peek();
    if (t.kind == Tok::Ident) {
      advance();
      return Formula::var(t.text);
    }
    if (t.kind == Tok::LParen) {
      advance();
      enter();
      Formula f = imp();
      --nesting_;
      if (peek().kind != Tok::RParen) fail({"'&'", "'|'", "'->'", "')'"});
      advance();
      return f;
    }
    fail({"identifier", "'('", "'~'", "'S1'", "'S2'"});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t nesting_ = 0;
};

int precedence(Connective c) {
  switch (c) {
    case Connective::Implies: return 1;
    case Connective::Or: return 2;
    case Connective::And: return 3;
    case Connective::Not:
    case Connective::S1:
    case Connective::S2: return 4;
    case Connective::Var: return 5;
  }
  return 5;
}

void render_into(const Formula& f, int min_prec, std::string& out) {
  int prec = precedence(f.kind());
  bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (f.kind()) {
    case Connective::Var: out += f.name(); break;
    case Connective::Not:
      out += '~';
      render_into(f.operand(), 4, out);
      break;
    case Connective::S1:
    case Connective::S2:
      out += f.kind() == Connective::S1 ? "S1 " : "S2 ";
      render_into(f.operand(), 4, out);
      break;
    case Connective::And:
      render_into(f.lhs(), 3, out);
      out += " & ";
      render_into(f.rhs(), 4, out);
      break;
    case Connective::Or:
      render_into(f.lhs(), 2, out);
      out += " | ";
      render_into(f.rhs(), 3, out);
      break;
    case Connective::Implies:
      render_into(f.lhs(), 2, out);
      out += " -> ";
      render_into(f.rhs(), 1, out);
      break;
  }
  if (parens) out += ')';
}

void collect_variables(const Formula& f, std::set<std::string>& acc) {
  if (f.is_var()) {
    acc.insert(f.name());
    return;
  }
  collect_variables(f.lhs(), acc);
  if (is_binary(f.kind())) collect_variables(f.rhs(), acc);
}

constexpr std::array<Connective, 3> kUnary{Connective::Not, Connective::S1, Connective::S2};
constexpr std::array<Connective, 3> kBinary{Connective::And, Connective::Or, Connective::Implies};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(tokenize(text)).parse(); }

std::string render_formula(const Formula& f) {
  std::string out;
  render_into(f, 1, out);
  return out;
}

std::vector<std::string> variables(const Formula& f) {
  std::set<std::string> acc;
  collect_variables(f, acc);
  return {acc.begin(), acc.end()};
}

std::vector<std::string> variables(std::span<const Formula> fs) {
  std::set<std::string> acc;
  for (const auto& f : fs) collect_variables(f, acc);
  return {acc.begin(), acc.end()};
}

std::vector<Formula> enumerate_formulas(std::span<const std::string> vars, std::size_t max_depth,
                                        std::size_t cap) {
  // Count first so oversized requests fail before allocating.
  double total = static_cast<double>(vars.size());
  for (std::size_t d = 1; d <= max_depth; ++d) total = vars.size() + 3 * total + 3 * total * total;
  if (total > static_cast<double>(cap)) {
    throw ResourceError("enumerating formulas of depth <= " + std::to_string(max_depth) +
                        " would exceed the cap of " + std::to_string(cap));
  }

  std::vector<Formula> all;
  all.reserve(static_cast<std::size_t>(total));
  for (const auto& v : vars) all.push_back(Formula::var(v));
  std::size_t prev_begin = 0;
  for (std::size_t d = 1; d <= max_depth; ++d) {
    const std::size_t prev_end = all.size();
    for (Connective c : kUnary)
      for (std::size_t i = prev_begin; i < prev_end; ++i) all.push_back(Formula::unary(c, all[i]));
    for (Connective c : kBinary) {
      for (std::size_t i = 0; i < prev_end; ++i) {
        for (std::size_t j = 0; j < prev_end; ++j) {
          if (i < prev_begin && j < prev_begin) continue;  // depth would be < d
          all.push_back(Formula::binary(c, all[i], all[j]));
        }
      }
    }
    prev_begin = prev_end;
  }
  return all;
}

Formula random_formula(std::mt19937_64& rng, std::span<const std::string> vars,
                       std::size_t max_depth) {
  if (vars.empty()) throw StructureError("random_formula needs at least one variable");
  std::uniform_int_distribution<std::size_t> pick_var(0, vars.size() - 1);
  std::uniform_int_distribution<int> pick_shape(0, 7);
  int shape = max_depth == 0 ? 0 : pick_shape(rng);
  if (shape <= 1) return Formula::var(vars[pick_var(rng)]);
  if (shape <= 4) return Formula::unary(kUnary[shape - 2], random_formula(rng, vars, max_depth - 1));
  Formula lhs = random_formula(rng, vars, max_depth - 1);
  Formula rhs = random_formula(rng, vars, max_depth - 1);
  return Formula::binary(kBinary[shape - 5], std::move(lhs), std::move(rhs));
}

std::vector<std::string> default_variables(std::size_t n) {
  static const std::array<const char*, 7> kNames{"p", "q", "r", "s", "t", "u", "v"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(i < kNames.size() ? kNames[i] : "x" + std::to_string(i - kNames.size() + 1));
  return out;
}

}  // namespace htlogic
