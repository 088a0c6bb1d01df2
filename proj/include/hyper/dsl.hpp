#pragma once

// A small language for stating identities over hypercomplex expressions.
//
//   identity := expr "==" expr
//   expr     := term (("+" | "-") term)*
//   term     := factor ("*" factor)*
//   factor   := number | ident | "i0" | "e" digit | call | "(" expr ")" | "-" factor
//   call     := name "(" expr ("," expr)* ")"
//
// Numbers are integers or rationals written "p/q". Functions:
//
//   conj(v) im(v)                  vector -> vector
//   re(v) normsq(v)                vector -> scalar
//   inner(v,w)                     vector, vector -> scalar
//   cross(v,w) acomm(v,w)          pair commutator / anticommutator
//   cross3 acomm3 assoc (u,v,w)    triple brackets of (u conj(v)) w
//   gramdet(u,v,w)                 determinant of the 3x3 Gram matrix
//
// `*` is left-associative and is NEVER reassociated: in dimension 8
// "a*b*c" means (a*b)*c, which differs from a*(b*c). Write the parentheses.
//
// Every expression has a sort (vector or scalar) that is checked while
// parsing. scalar*vector and vector*scalar scale; a bare numeric literal
// used where a vector is expected stands for that multiple of i0, so
// "assoc(u1,u2,u3) == 0" is well-sorted.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hyper/decomp.hpp"
#include "hyper/gram.hpp"
#include "hyper/hnum.hpp"

namespace hyper::dsl {

enum class Sort { Vector, Scalar };

enum class Op {
  Var,
  Const,
  Lift,  // numeric literal promoted to c*i0
  Unit,
  Basis,
  Add,
  Sub,
  Neg,
  Mul,        // vector*vector or scalar*scalar, in source order
  ScalarMul,  // one scalar operand, one vector operand, in source order
  Conj,
  Im,
  Re,
  Inner,
  NormSq,
  Cross2,
  Acomm2,
  Cross3,
  Acomm3,
  Assoc3,
  GramDet,
};

struct Expr {
  Op op = Op::Const;
  Sort sort = Sort::Scalar;
  std::string name;    // Var
  Rational value;      // Const
  std::size_t index{};  // Basis
  std::vector<Expr> args;
  std::size_t column = 0;  // 1-based, for diagnostics; ignored by ==

  friend bool operator==(const Expr& a, const Expr& b) {
    return a.op == b.op && a.sort == b.sort && a.name == b.name && a.value == b.value &&
           a.index == b.index && a.args == b.args;
  }
};

struct Identity {
  Expr lhs;
  Expr rhs;
  std::vector<std::string> free_vars;  // sorted, unique
  std::string source;

  friend bool operator==(const Identity& a, const Identity& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs && a.free_vars == b.free_vars;
  }
};

/// Syntax, arity or sort error, with the 1-based column it was detected at.
class syntax_error : public std::runtime_error {
 public:
  syntax_error(const std::string& what, std::size_t column)
      : std::runtime_error("column " + std::to_string(column) + ": " + what), column_(column) {}
  [[nodiscard]] std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Unbound variable, basis element outside the dimension, and the like.
class eval_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

struct FunctionInfo {
  std::string_view name;
  Op op;
  std::size_t arity;
  Sort result;
};

inline constexpr FunctionInfo kFunctions[] = {
    {"conj", Op::Conj, 1, Sort::Vector},       {"im", Op::Im, 1, Sort::Vector},
    {"re", Op::Re, 1, Sort::Scalar},           {"normsq", Op::NormSq, 1, Sort::Scalar},
    {"inner", Op::Inner, 2, Sort::Scalar},     {"cross", Op::Cross2, 2, Sort::Vector},
    {"acomm", Op::Acomm2, 2, Sort::Vector},    {"cross3", Op::Cross3, 3, Sort::Vector},
    {"acomm3", Op::Acomm3, 3, Sort::Vector},   {"assoc", Op::Assoc3, 3, Sort::Vector},
    {"gramdet", Op::GramDet, 3, Sort::Scalar},
};

inline const FunctionInfo* find_function(std::string_view name) {
  for (const auto& f : kFunctions)
    if (f.name == name) return &f;
  return nullptr;
}

inline const FunctionInfo* find_function(Op op) {
  for (const auto& f : kFunctions)
    if (f.op == op) return &f;
  return nullptr;
}

enum class Tok { Number, Ident, LParen, RParen, Comma, Plus, Minus, Star, EqEq, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < src.size() && src[j] == '/') {
        std::size_t k = j + 1;
        while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
        if (k == j + 1) throw syntax_error("expected denominator after '/'", j + 2);
        j = k;
      }
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), col});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), col});
      i = j;
    } else if (c == '=' && i + 1 < src.size() && src[i + 1] == '=') {
      out.push_back({Tok::EqEq, "==", col});
      i += 2;
    } else {
      Tok kind;
      switch (c) {
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case ',': kind = Tok::Comma; break;
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        default: throw syntax_error(std::string("unexpected character '") + c + "'", col);
      }
      out.push_back({kind, std::string(1, c), col});
      ++i;
    }
  }
  out.push_back({Tok::End, "", src.size() + 1});
  return out;
}

inline std::string sort_name(Sort s) { return s == Sort::Vector ? "vector" : "scalar"; }

inline bool is_literal(const Expr& e) {
  return e.op == Op::Const || (e.op == Op::Neg && is_literal(e.args[0]));
}

inline Expr lift(Expr e) {
  Expr r;
  r.op = Op::Lift;
  r.sort = Sort::Vector;
  r.column = e.column;
  r.args.push_back(std::move(e));
  return r;
}

/// Coerces `e` to a vector if it is a literal, else requires it to be one.
inline Expr want_vector(Expr e, std::string_view context) {
  if (e.sort == Sort::Vector) return e;
  if (is_literal(e)) return lift(std::move(e));
  throw syntax_error("expected a vector for " + std::string(context) + ", found a scalar", e.column);
}

inline Expr make_node(Op op, Sort sort, std::size_t column, std::vector<Expr> args) {
  Expr e;
  e.op = op;
  e.sort = sort;
  e.column = column;
  e.args = std::move(args);
  return e;
}

/// Unifies the sorts of the two sides of +, - or ==.
inline void unify(Expr& a, Expr& b, std::string_view what, std::size_t column) {
  if (a.sort == b.sort) return;
  if (a.sort == Sort::Scalar && is_literal(a)) {
    a = lift(std::move(a));
    return;
  }
  if (b.sort == Sort::Scalar && is_literal(b)) {
    b = lift(std::move(b));
    return;
  }
  throw syntax_error("sort mismatch in " + std::string(what) + ": " + sort_name(a.sort) + " vs " +
                         sort_name(b.sort),
                     column);
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Identity parse_identity() {
    Identity id;
    id.lhs = expr();
    const auto& eq = peek();
    if (eq.kind != Tok::EqEq) throw syntax_error("expected '=='", eq.column);
    advance();
    id.rhs = expr();
    if (peek().kind != Tok::End)
      throw syntax_error("unexpected '" + peek().text + "'", peek().column);
    unify(id.lhs, id.rhs, "'=='", eq.column);
    std::set<std::string> vars;
    collect(id.lhs, vars);
    collect(id.rhs, vars);
    id.free_vars.assign(vars.begin(), vars.end());
    return id;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_++]; }

  void expect(Tok kind, std::string_view what) {
    if (peek().kind != kind) {
      const auto& t = peek();
      throw syntax_error("expected " + std::string(what) + (t.kind == Tok::End ? " before end of input" : ", found '" + t.text + "'"),
                         t.column);
    }
    advance();
  }

  static void collect(const Expr& e, std::set<std::string>& vars) {
    if (e.op == Op::Var) vars.insert(e.name);
    for (const auto& a : e.args) collect(a, vars);
  }

  Expr expr() {
    Expr lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token op = advance();
      Expr rhs = term();
      unify(lhs, rhs, "'" + op.text + "'", op.column);
      const Sort s = lhs.sort;
      lhs = make_node(op.kind == Tok::Plus ? Op::Add : Op::Sub, s, op.column,
                      {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = factor();
    while (peek().kind == Tok::Star) {
      const Token op = advance();
      Expr rhs = factor();
      if (lhs.sort == rhs.sort) {
        const Sort s = lhs.sort;
        lhs = make_node(Op::Mul, s, op.column, {std::move(lhs), std::move(rhs)});
      } else {
        lhs = make_node(Op::ScalarMul, Sort::Vector, op.column, {std::move(lhs), std::move(rhs)});
      }
    }
    return lhs;
  }

  Expr factor() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        advance();
        Expr e;
        e.op = Op::Const;
        e.sort = Sort::Scalar;
        e.column = t.column;
        try {
          e.value = scalar_traits<Rational>::parse(t.text);
        } catch (const parse_error& ex) {
          throw syntax_error(ex.what(), t.column);
        }
        return e;
      }
      case Tok::Minus: {
        advance();
        Expr inner = factor();
        const Sort s = inner.sort;
        return make_node(Op::Neg, s, t.column, {std::move(inner)});
      }
      case Tok::LParen: {
        advance();
        Expr e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Ident:
        return identifier();
      case Tok::End:
        throw syntax_error("unexpected end of input", t.column);
      default:
        throw syntax_error("unexpected '" + t.text + "'", t.column);
    }
  }

  Expr identifier() {
    const Token t = advance();
    if (const auto* f = find_function(t.text)) {
      if (peek().kind != Tok::LParen)
        throw syntax_error("'" + t.text + "' is a function and needs arguments", t.column);
      advance();
      std::vector<Expr> args;
      args.push_back(expr());
      while (peek().kind == Tok::Comma) {
        advance();
        args.push_back(expr());
      }
      expect(Tok::RParen, "')' or ','");
      if (args.size() != f->arity)
        throw syntax_error("'" + t.text + "' takes " + std::to_string(f->arity) + " argument" +
                               (f->arity == 1 ? "" : "s") + ", got " + std::to_string(args.size()),
                           t.column);
      for (auto& a : args) a = want_vector(std::move(a), "argument of '" + t.text + "'");
      return make_node(f->op, f->result, t.column, std::move(args));
    }
    if (peek().kind == Tok::LParen)
      throw syntax_error("unknown function '" + t.text + "'", t.column);
    Expr e;
    e.sort = Sort::Vector;
    e.column = t.column;
    if (t.text == "i0") {
      e.op = Op::Unit;
    } else if (t.text.size() == 2 && t.text[0] == 'e' &&
               std::isdigit(static_cast<unsigned char>(t.text[1]))) {
      e.op = Op::Basis;
      e.index = static_cast<std::size_t>(t.text[1] - '0');
    } else {
      e.op = Op::Var;
      e.name = t.text;
    }
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

inline bool is_binary_infix(Op op) {
  return op == Op::Add || op == Op::Sub || op == Op::Mul || op == Op::ScalarMul;
}

}  // namespace detail

/// Parses one identity. Throws syntax_error.
[[nodiscard]] inline Identity parse(std::string_view text) {
  Identity id = detail::Parser(text).parse_identity();
  id.source = std::string(text);
  return id;
}

/// Fully parenthesized rendering; parse(to_string(e)) yields an equal tree.
[[nodiscard]] inline std::string to_string(const Expr& e) {
  using detail::is_binary_infix;
  auto sub = [](const Expr& a) { return to_string(a); };
  switch (e.op) {
    case Op::Var: return e.name;
    case Op::Const: return e.value.get_str();
    case Op::Lift: return sub(e.args[0]);
    case Op::Unit: return "i0";
    case Op::Basis: return "e" + std::to_string(e.index);
    case Op::Neg: {
      const auto& a = e.args[0];
      return is_binary_infix(a.op) || a.op == Op::Neg ? "-(" + sub(a) + ")" : "-" + sub(a);
    }
    case Op::Add: return "(" + sub(e.args[0]) + " + " + sub(e.args[1]) + ")";
    case Op::Sub: return "(" + sub(e.args[0]) + " - " + sub(e.args[1]) + ")";
    case Op::Mul:
    case Op::ScalarMul: return "(" + sub(e.args[0]) + " * " + sub(e.args[1]) + ")";
    default: {
      const auto* f = detail::find_function(e.op);
      std::string out(f->name);
      out += '(';
      for (std::size_t k = 0; k < e.args.size(); ++k) {
        if (k) out += ", ";
        out += sub(e.args[k]);
      }
      return out + ')';
    }
  }
}

[[nodiscard]] inline std::string to_string(const Identity& id) {
  return to_string(id.lhs) + " == " + to_string(id.rhs);
}

// ---------------------------------------------------------------------------
// Evaluation

template <class S>
using Value = std::variant<HNum<S>, S>;

template <class S>
using Env = std::map<std::string, HNum<S>, std::less<>>;

namespace detail {

template <class S>
S from_rational(const Rational& r) {
  if constexpr (std::is_same_v<S, Rational>)
    return r;
  else
    return r.get_d();
}

template <class S>
class Evaluator {
 public:
  Evaluator(const Env<S>& env, std::size_t dim) : env_(env), dim_(dim) {}

  Value<S> eval(const Expr& e) const {
    if (e.sort == Sort::Vector) return vec(e);
    return scal(e);
  }

  HNum<S> vec(const Expr& e) const {
    switch (e.op) {
      case Op::Var: {
        auto it = env_.find(e.name);
        if (it == env_.end()) throw eval_error("unbound variable '" + e.name + "'");
        if (it->second.dim() != dim_)
          throw eval_error("variable '" + e.name + "' has dimension " +
                           std::to_string(it->second.dim()) + ", expected " + std::to_string(dim_));
        return it->second;
      }
      case Op::Lift: {
        auto r = HNum<S>(dim_);
        r[0] = scal(e.args[0]);
        return r;
      }
      case Op::Unit: return HNum<S>::unit(dim_);
      case Op::Basis:
        if (e.index >= dim_)
          throw eval_error("basis element e" + std::to_string(e.index) +
                           " does not exist in dimension " + std::to_string(dim_));
        return HNum<S>::basis(dim_, e.index);
      case Op::Add: return add(vec(e.args[0]), vec(e.args[1]));
      case Op::Sub: return sub(vec(e.args[0]), vec(e.args[1]));
      case Op::Neg: return negate(vec(e.args[0]));
      case Op::Mul: return mul(vec(e.args[0]), vec(e.args[1]));
      case Op::ScalarMul:
        if (e.args[0].sort == Sort::Scalar) return scale(scal(e.args[0]), vec(e.args[1]));
        return scale(scal(e.args[1]), vec(e.args[0]));
      case Op::Conj: return conj(vec(e.args[0]));
      case Op::Im: return imaginary_part(vec(e.args[0]));
      case Op::Cross2: return cross2(vec(e.args[0]), vec(e.args[1]));
      case Op::Acomm2: return acomm2(vec(e.args[0]), vec(e.args[1]));
      case Op::Cross3: return cross3(vec(e.args[0]), vec(e.args[1]), vec(e.args[2]));
      case Op::Acomm3: return acomm3(vec(e.args[0]), vec(e.args[1]), vec(e.args[2]));
      case Op::Assoc3: return assoc3(vec(e.args[0]), vec(e.args[1]), vec(e.args[2]));
      default: throw eval_error("internal: scalar node in vector position");
    }
  }

  S scal(const Expr& e) const {
    switch (e.op) {
      case Op::Const: return from_rational<S>(e.value);
      case Op::Add: return S(scal(e.args[0]) + scal(e.args[1]));
      case Op::Sub: return S(scal(e.args[0]) - scal(e.args[1]));
      case Op::Neg: return S(-scal(e.args[0]));
      case Op::Mul: return S(scal(e.args[0]) * scal(e.args[1]));
      case Op::Re: return real_coeff(vec(e.args[0]));
      case Op::NormSq: return norm_sq(vec(e.args[0]));
      case Op::Inner: return inner(vec(e.args[0]), vec(e.args[1]));
      case Op::GramDet: return det3(gram(vec(e.args[0]), vec(e.args[1]), vec(e.args[2])));
      default: throw eval_error("internal: vector node in scalar position");
    }
  }

 private:
  const Env<S>& env_;
  std::size_t dim_;
};

}  // namespace detail

/// Evaluates `e` with `*` applied exactly in source order.
template <class S>
[[nodiscard]] Value<S> eval(const Expr& e, const Env<S>& env, std::size_t dim) {
  require_valid_dim(dim);
  return detail::Evaluator<S>(env, dim).eval(e);
}

// ---------------------------------------------------------------------------
// Randomized identity checking

enum class Backend { Exact, Binary64 };

[[nodiscard]] inline std::string_view backend_name(Backend b) {
  return b == Backend::Exact ? scalar_traits<Rational>::name : scalar_traits<double>::name;
}

enum class Status { Pass, Fail, ParseError, Error };

[[nodiscard]] inline std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::ParseError: return "PARSE_ERROR";
    case Status::Error: return "ERROR";
  }
  return "?";
}

struct CheckOptions {
  std::size_t dim = 8;
  Backend backend = Backend::Exact;
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  long coeff_range = 9;
  std::optional<Tolerance> tolerance;  // required iff backend == Binary64
  bool basis_sweep = false;            // also try every assignment of basis elements
};

struct CheckReport {
  std::string identity;
  std::size_t dim = 0;
  Backend backend = Backend::Exact;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string max_deviation = "0";
  /// Variable -> coefficient list of the first failing trial.
  std::optional<std::vector<std::pair<std::string, std::string>>> witness;
  Status status = Status::Pass;
  std::string message;  // diagnostics for PARSE_ERROR / ERROR
};

inline constexpr std::size_t kMaxSweepVars = 4;

namespace detail {

template <class S>
struct Deviation {
  S max_abs{0};
  bool ok = true;
};

template <class S>
Deviation<S> compare(const Value<S>& lhs, const Value<S>& rhs, const std::optional<Tolerance>& tol) {
  std::vector<std::pair<S, S>> pairs;
  if (const auto* a = std::get_if<HNum<S>>(&lhs)) {
    const auto& b = std::get<HNum<S>>(rhs);
    for (std::size_t k = 0; k < a->dim(); ++k) pairs.emplace_back((*a)[k], b[k]);
  } else {
    pairs.emplace_back(std::get<S>(lhs), std::get<S>(rhs));
  }
  Deviation<S> d;
  if constexpr (scalar_traits<S>::exact) {
    for (const auto& [x, y] : pairs) {
      S diff = scalar_traits<S>::abs(S(x - y));
      if (diff > d.max_abs) d.max_abs = diff;
    }
    d.ok = d.max_abs == 0;
  } else {
    double scale = 0;
    for (const auto& [x, y] : pairs) {
      d.max_abs = std::max(d.max_abs, std::fabs(x - y));
      scale = std::max({scale, std::fabs(x), std::fabs(y)});
    }
    d.ok = d.max_abs <= tol->bound(scale);
  }
  return d;
}

template <class S>
CheckReport run_check(const Identity& id, const CheckOptions& opt) {
  CheckReport rep;
  rep.identity = id.source.empty() ? to_string(id) : id.source;
  rep.dim = opt.dim;
  rep.backend = opt.backend;
  rep.seed = opt.seed;

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<long> coeff(-opt.coeff_range, opt.coeff_range);
  S worst(0);

  auto run_trial = [&](Env<S>& env) {
    const Evaluator<S> ev(env, opt.dim);
    const auto d = compare<S>(ev.eval(id.lhs), ev.eval(id.rhs), opt.tolerance);
    ++rep.trials;
    if (d.max_abs > worst) worst = d.max_abs;
    if (d.ok) return;
    if (rep.failures++ == 0) {
      std::vector<std::pair<std::string, std::string>> w;
      for (const auto& name : id.free_vars) w.emplace_back(name, to_coeff_list(env.at(name)));
      rep.witness = std::move(w);
    }
  };

  try {
    Env<S> env;
    for (std::size_t t = 0; t < opt.trials; ++t) {
      for (const auto& name : id.free_vars) {
        HNum<S> u(opt.dim);
        for (auto& c : u.coeffs()) c = S(coeff(rng));
        env.insert_or_assign(name, std::move(u));
      }
      run_trial(env);
    }
    if (opt.basis_sweep) {
      const std::size_t n = id.free_vars.size();
      if (n > kMaxSweepVars)
        throw eval_error("basis sweep supports at most " + std::to_string(kMaxSweepVars) +
                         " variables");
      std::size_t total = 1;
      for (std::size_t k = 0; k < n; ++k) total *= opt.dim;
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        // First variable varies slowest.
        for (std::size_t k = n; k-- > 0;) {
          env.insert_or_assign(id.free_vars[k], HNum<S>::basis(opt.dim, c % opt.dim));
          c /= opt.dim;
        }
        run_trial(env);
      }
    }
  } catch (const eval_error& ex) {
    rep.status = Status::Error;
    rep.message = ex.what();
    return rep;
  }
  rep.max_deviation = scalar_traits<S>::to_string(worst);
  rep.status = rep.failures == 0 ? Status::Pass : Status::Fail;
  return rep;
}

}  // namespace detail

/// Samples every free variable with integer coefficients uniform in
/// [-coeff_range, coeff_range] from a generator seeded with `seed`, and
/// compares both sides. Deterministic in (identity, options).
///
/// PASS means no counterexample was found in the sample; it is not a proof.
[[nodiscard]] inline CheckReport check_identity(const Identity& id, const CheckOptions& opt) {
  require_valid_dim(opt.dim);
  if (opt.trials < 1 && !opt.basis_sweep) throw std::invalid_argument("trials must be at least 1");
  if ((opt.backend == Backend::Binary64) != opt.tolerance.has_value())
    throw std::invalid_argument("a tolerance is required for binary64 and not allowed for exact");
  if (opt.backend == Backend::Exact) return detail::run_check<Rational>(id, opt);
  return detail::run_check<double>(id, opt);
}

/// Parses and checks; a syntax error yields a PARSE_ERROR report.
[[nodiscard]] inline CheckReport check_text(std::string_view text, const CheckOptions& opt) {
  try {
    auto id = parse(text);
    return check_identity(id, opt);
  } catch (const syntax_error& ex) {
    CheckReport rep;
    rep.identity = std::string(text);
    rep.dim = opt.dim;
    rep.backend = opt.backend;
    rep.seed = opt.seed;
    rep.status = Status::ParseError;
    rep.message = ex.what();
    return rep;
  }
}

// ---------------------------------------------------------------------------
// Identity files

struct IdentityLine {
  std::size_t line = 0;  // 1-based
  std::string text;
  std::vector<std::size_t> dims;  // empty: every dimension

  [[nodiscard]] bool applies_to(std::size_t dim) const {
    return dims.empty() || std::find(dims.begin(), dims.end(), dim) != dims.end();
  }
};

/// One identity per line; '#' starts a comment. A line may begin with
/// "@dims 1,2,4" to restrict the dimensions it is checked in.
[[nodiscard]] inline std::vector<IdentityLine> read_identities(std::string_view content) {
  std::vector<IdentityLine> out;
  std::size_t line_no = 0;
  while (!content.empty()) {
    ++line_no;
    auto nl = content.find('\n');
    std::string_view line = content.substr(0, nl);
    content.remove_prefix(nl == std::string_view::npos ? content.size() : nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
      return s;
    };
    line = trim(line);
    if (line.empty()) continue;
    IdentityLine item;
    item.line = line_no;
    if (line.starts_with("@dims")) {
      line.remove_prefix(5);
      line = trim(line);
      auto sp = line.find_first_of(" \t");
      std::string_view list = line.substr(0, sp);
      line = trim(sp == std::string_view::npos ? std::string_view{} : line.substr(sp));
      while (!list.empty()) {
        auto comma = list.find(',');
        auto tok = list.substr(0, comma);
        std::size_t d = 0;
        for (char c : tok) {
          if (!std::isdigit(static_cast<unsigned char>(c)))
            throw parse_error("line " + std::to_string(line_no) + ": malformed @dims list");
          d = d * 10 + static_cast<std::size_t>(c - '0');
        }
        if (!valid_dim(d))
          throw parse_error("line " + std::to_string(line_no) + ": invalid dimension in @dims");
        item.dims.push_back(d);
        list.remove_prefix(comma == std::string_view::npos ? list.size() : comma + 1);
      }
    }
    item.text = std::string(line);
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace hyper::dsl
