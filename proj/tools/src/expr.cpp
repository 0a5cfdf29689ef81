#include "tower_cli/expr.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>

namespace tower::cli {

namespace {

using Kind = Expr::Kind;

constexpr std::uint64_t kMaxFoldExponent = 1U << 16;

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::Literal: return "Lit";
    case Kind::Var: return "Var";
    case Kind::Let: return "Let";
    case Kind::Add: return "Add";
    case Kind::Sub: return "Sub";
    case Kind::Mul: return "Mul";
    case Kind::Div: return "Div";
    case Kind::Pow: return "Pow";
    case Kind::Neg: return "Neg";
    case Kind::Abs: return "Abs";
    case Kind::Inv: return "Inv";
    case Kind::Sup: return "Sup";
    case Kind::Between: return "Between";
  }
  return "?";
}

ExprPtr literal(Dyadic d) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Literal;
  e->value = std::move(d);
  return e;
}

ExprPtr node(Kind k, std::vector<ExprPtr> args, std::string name = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->args = std::move(args);
  e->name = std::move(name);
  return e;
}

bool is_natural_literal(const ExprPtr& e) {
  return e->kind == Kind::Literal && e->value.is_integer() && e->value.sign() != Sign::Negative;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::SyntaxError, "column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::optional<std::string> peek_ident() {
    skip_space();
    std::size_t end = pos_;
    if (end >= text_.size() || !(std::isalpha(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
      return std::nullopt;
    }
    while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
    return std::string(text_.substr(pos_, end - pos_));
  }

  std::string ident() {
    auto id = peek_ident();
    if (!id) fail("expected an identifier");
    pos_ += id->size();
    return *id;
  }

  ExprPtr expr() {
    if (auto id = peek_ident(); id && *id == "let") {
      pos_ += 3;
      std::string name = ident();
      if (name == "let" || name == "in" || functions().count(name)) fail("'" + name + "' cannot be bound");
      expect('=');
      ExprPtr bound = expr();
      skip_space();
      if (auto kw = peek_ident(); !kw || *kw != "in") fail("expected 'in'");
      pos_ += 2;
      scope_.push_back(name);
      ExprPtr body = expr();
      scope_.pop_back();
      return node(Kind::Let, {bound, body}, name);
    }
    return sum();
  }

  ExprPtr sum() {
    ExprPtr lhs = product();
    while (true) {
      if (accept('+')) {
        lhs = node(Kind::Add, {lhs, product()});
      } else if (accept('-')) {
        lhs = node(Kind::Sub, {lhs, product()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr product() {
    ExprPtr lhs = unary();
    while (true) {
      if (accept('*')) {
        lhs = node(Kind::Mul, {lhs, unary()});
      } else if (accept('/')) {
        ExprPtr rhs = unary();
        if (lhs->kind == Kind::Literal && rhs->kind == Kind::Literal && rhs->value.sign() == Sign::Positive) {
          if (auto r = exact_reciprocal(rhs->value)) {
            lhs = literal(lhs->value * *r);
            continue;
          }
        }
        lhs = node(Kind::Div, {lhs, rhs});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    if (accept('-')) {
      ExprPtr inner = unary();
      if (inner->kind == Kind::Literal) return literal(neg(inner->value));
      return node(Kind::Neg, {inner});
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    ExprPtr exponent = unary();
    if (!is_natural_literal(exponent)) {
      pos_ = at;
      fail("exponent must be a natural number literal");
    }
    if (base->kind == Kind::Literal && exponent->value <= Dyadic(static_cast<std::int64_t>(kMaxFoldExponent))) {
      return literal(pow(base->value, static_cast<std::uint64_t>(exponent->value.numerator())));
    }
    return node(Kind::Pow, {base, exponent});
  }

  static const std::map<std::string, Kind>& functions() {
    static const std::map<std::string, Kind> table{
        {"abs", Kind::Abs}, {"inv", Kind::Inv}, {"sup", Kind::Sup}, {"between", Kind::Between}};
    return table;
  }

  ExprPtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (accept('(')) {
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (auto id = peek_ident()) {
      const std::size_t at = pos_;
      pos_ += id->size();
      if (auto f = functions().find(*id); f != functions().end()) {
        expect('(');
        std::vector<ExprPtr> args{expr()};
        while (accept(',')) args.push_back(expr());
        expect(')');
        const std::size_t want = f->second == Kind::Between ? 2 : 1;
        if (f->second == Kind::Sup ? args.empty() : args.size() != want) {
          pos_ = at;
          fail(*id + " expects " + (f->second == Kind::Sup ? std::string("at least 1") : std::to_string(want)) +
               " argument(s)");
        }
        return node(f->second, std::move(args));
      }
      if (*id == "let" || *id == "in") {
        pos_ = at;
        fail("unexpected keyword '" + *id + "'");
      }
      if (std::find(scope_.begin(), scope_.end(), *id) == scope_.end()) {
        pos_ = at;
        fail("unbound identifier '" + *id + "'");
      }
      return node(Kind::Var, {}, *id);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  ExprPtr number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      const std::size_t frac = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == frac) fail("digits expected after '.'");
    }
    const std::string_view lexeme = text_.substr(start, pos_ - start);
    try {
      return literal(Dyadic::parse(lexeme));
    } catch (const Error&) {
      pos_ = start;
      fail("'" + std::string(lexeme) + "' is not a dyadic rational");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
};

// ---- evaluation -------------------------------------------------------------

Real as_real(const Value& v) {
  if (const auto* d = std::get_if<Dyadic>(&v)) return Real::from_dyadic(*d);
  return std::get<Real>(v);
}

const Dyadic* exact(const Value& v) { return std::get_if<Dyadic>(&v); }

class Evaluator {
 public:
  explicit Evaluator(const EvalOptions& o)
      : prec_(o.precision), probe_(o.inverse_probe == 0 ? o.precision + 64 : o.inverse_probe) {}

  Value eval(const Expr& e) {
    switch (e.kind) {
      case Kind::Literal: return e.value;
      case Kind::Var: {
        for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
          if (it->first == e.name) return it->second;
        }
        throw Error(Errc::SyntaxError, "unbound identifier '" + e.name + "'");
      }
      case Kind::Let: {
        env_.emplace_back(e.name, eval(*e.args[0]));
        Value body = eval(*e.args[1]);
        env_.pop_back();
        return body;
      }
      case Kind::Add: return binary(e, [](const Dyadic& a, const Dyadic& b) { return a + b; }, [](const Real& a, const Real& b) { return a + b; });
      case Kind::Sub: return binary(e, [](const Dyadic& a, const Dyadic& b) { return a - b; }, [](const Real& a, const Real& b) { return a - b; });
      case Kind::Mul: {
        Value a = eval(*e.args[0]);
        Value b = eval(*e.args[1]);
        if ((exact(a) && exact(a)->is_zero()) || (exact(b) && exact(b)->is_zero())) return Dyadic();
        if (exact(a) && exact(b)) return *exact(a) * *exact(b);
        return as_real(a) * as_real(b);
      }
      case Kind::Div: {
        Value a = eval(*e.args[0]);
        Value b = eval(*e.args[1]);
        Value inv = invert(b);
        if (exact(a) && exact(a)->is_zero()) return Dyadic();
        if (exact(a) && exact(inv)) return *exact(a) * *exact(inv);
        return as_real(a) * as_real(inv);
      }
      case Kind::Pow: {
        Value base = eval(*e.args[0]);
        const auto m = static_cast<std::uint64_t>(e.args[1]->value.numerator());
        if (const auto* d = exact(base)) return pow(*d, m);
        return pow(std::get<Real>(base), m);
      }
      case Kind::Neg: {
        Value a = eval(*e.args[0]);
        if (const auto* d = exact(a)) return neg(*d);
        return neg(std::get<Real>(a));
      }
      case Kind::Abs: {
        Value a = eval(*e.args[0]);
        if (const auto* d = exact(a)) return abs(*d);
        return Real(abs(std::get<Real>(a)));
      }
      case Kind::Inv: return invert(eval(*e.args[0]));
      case Kind::Sup: {
        std::vector<Value> vs;
        for (const auto& a : e.args) vs.push_back(eval(*a));
        if (std::all_of(vs.begin(), vs.end(), [](const Value& v) { return exact(v) != nullptr; })) {
          Dyadic m = *exact(vs.front());
          for (const auto& v : vs) m = max(m, *exact(v));
          return m;
        }
        std::vector<Real> rs;
        for (const auto& v : vs) rs.push_back(as_real(v));
        return sup_finite(rs);
      }
      case Kind::Between: {
        Value a = eval(*e.args[0]);
        Value b = eval(*e.args[1]);
        if (exact(a) && exact(b)) return between(*exact(a), *exact(b));
        if (auto d = dyadic_between(as_real(a), as_real(b), prec_)) return *d;
        throw Error(Errc::BadOrder, "between: operands not separated up to precision " + std::to_string(prec_));
      }
    }
    throw Error(Errc::SyntaxError, "unknown expression node");
  }

 private:
  template <class F, class G>
  Value binary(const Expr& e, F exact_op, G real_op) {
    Value a = eval(*e.args[0]);
    Value b = eval(*e.args[1]);
    if (exact(a) && exact(b)) return exact_op(*exact(a), *exact(b));
    return real_op(as_real(a), as_real(b));
  }

  Value invert(const Value& v) {
    if (const auto* d = exact(v)) {
      if (d->is_zero()) throw Error(Errc::DivisionNearZero, "division by exact zero");
      if (auto r = exact_reciprocal(*d)) return *r;
    }
    try {
      return inverse(as_real(v), probe_);
    } catch (const Error& err) {
      if (err.code() != Errc::NotBoundedAwayFromZero) throw;
      throw Error(Errc::DivisionNearZero, "divisor indistinguishable from 0 up to precision " + std::to_string(probe_));
    }
  }

  unsigned prec_;
  unsigned probe_;
  std::vector<std::pair<std::string, Value>> env_;
};

}  // namespace

std::string Expr::to_string() const {
  switch (kind) {
    case Kind::Literal: return value.to_string();
    case Kind::Var: return name;
    case Kind::Sup: {
      std::string out = "Sup[";
      for (std::size_t i = 0; i < args.size(); ++i) out += (i ? ", " : "") + args[i]->to_string();
      return out + "]";
    }
    default: {
      std::string out = std::string(kind_name(kind)) + "(";
      if (kind == Kind::Let) out += name + ", ";
      for (std::size_t i = 0; i < args.size(); ++i) out += (i ? ", " : "") + args[i]->to_string();
      return out + ")";
    }
  }
}

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

Value evaluate(const Expr& e, const EvalOptions& options) { return Evaluator(options).eval(e); }

std::string format_value(const Value& v, unsigned precision) {
  if (const auto* d = std::get_if<Dyadic>(&v)) return d->to_string();
  return std::get<Real>(v).approx(precision).to_string(precision);
}

}  // namespace tower::cli
