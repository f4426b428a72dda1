#include "cadec/formula.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cadec/detail/lexer.hpp"
#include "cadec/errors.hpp"

namespace cadec {

std::string rel_to_string(Rel r) {
  switch (r) {
    case Rel::kEq: return "=";
    case Rel::kNeq: return "!=";
    case Rel::kLt: return "<";
    case Rel::kLe: return "<=";
    case Rel::kGt: return ">";
    case Rel::kGe: return ">=";
  }
  return "?";
}

bool rel_holds(Rel r, int sign) {
  switch (r) {
    case Rel::kEq: return sign == 0;
    case Rel::kNeq: return sign != 0;
    case Rel::kLt: return sign < 0;
    case Rel::kLe: return sign <= 0;
    case Rel::kGt: return sign > 0;
    case Rel::kGe: return sign >= 0;
  }
  return false;
}

QFFPtr QFF::make_atom(MultiPoly p, Rel rel) {
  auto f = std::make_shared<QFF>();
  f->kind_ = Kind::kAtom;
  f->poly_ = std::move(p);
  f->rel_ = rel;
  return f;
}

QFFPtr QFF::make_and(std::vector<QFFPtr> children) {
  if (children.size() == 1) return children[0];
  auto f = std::make_shared<QFF>();
  f->kind_ = Kind::kAnd;
  f->children_ = std::move(children);
  return f;
}

QFFPtr QFF::make_or(std::vector<QFFPtr> children) {
  if (children.size() == 1) return children[0];
  auto f = std::make_shared<QFF>();
  f->kind_ = Kind::kOr;
  f->children_ = std::move(children);
  return f;
}

QFFPtr QFF::make_not(QFFPtr child) {
  auto f = std::make_shared<QFF>();
  f->kind_ = Kind::kNot;
  f->children_ = {std::move(child)};
  return f;
}

std::string QFF::to_string() const {
  switch (kind_) {
    case Kind::kAtom:
      return poly_.to_string() + " " + rel_to_string(rel_) + " 0";
    case Kind::kNot: {
      const QFF& c = *children_[0];
      bool atom = c.kind() == Kind::kAtom;
      return atom ? "~(" + c.to_string() + ")" : "~(" + c.to_string() + ")";
    }
    case Kind::kAnd:
    case Kind::kOr: {
      std::string op = kind_ == Kind::kAnd ? " /\\ " : " \\/ ";
      std::string out;
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) out += op;
        const QFF& c = *children_[i];
        bool paren = c.kind() == Kind::kAnd || c.kind() == Kind::kOr;
        out += paren ? "(" + c.to_string() + ")" : c.to_string();
      }
      return out;
    }
  }
  return "?";
}

namespace {

using detail::Tok;
using detail::Token;

struct ParseFail {
  std::string msg;
  std::size_t pos;
};

class FormulaParser {
 public:
  FormulaParser(const std::vector<Token>& toks, VarOrderPtr order)
      : toks_(toks), order_(std::move(order)) {}

  QFFPtr parse() {
    QFFPtr f = parse_or();
    if (cur().kind != Tok::kEnd) fail("trailing input after formula");
    return f;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseFail{msg, cur().pos}; }

  QFFPtr parse_or() {
    std::vector<QFFPtr> cs{parse_and()};
    while (cur().kind == Tok::kOr) {
      ++pos_;
      cs.push_back(parse_and());
    }
    return QFF::make_or(std::move(cs));
  }

  QFFPtr parse_and() {
    std::vector<QFFPtr> cs{parse_unary()};
    while (cur().kind == Tok::kAnd) {
      ++pos_;
      cs.push_back(parse_unary());
    }
    return QFF::make_and(std::move(cs));
  }

  QFFPtr parse_unary() {
    if (cur().kind == Tok::kNot) {
      ++pos_;
      return QFF::make_not(parse_unary());
    }
    if (cur().kind == Tok::kLParen) {
      // try a parenthesized sub-formula; fall back to a polynomial atom
      std::size_t save = pos_;
      try {
        ++pos_;
        QFFPtr inner = parse_or();
        if (cur().kind != Tok::kRParen) fail("expected ')'");
        ++pos_;
        return inner;
      } catch (const ParseFail&) {
        pos_ = save;
      }
    }
    return parse_atom();
  }

  QFFPtr parse_atom() {
    MultiPoly lhs = parse_poly();
    Rel rel;
    switch (cur().kind) {
      case Tok::kEq: rel = Rel::kEq; break;
      case Tok::kNeq: rel = Rel::kNeq; break;
      case Tok::kLt: rel = Rel::kLt; break;
      case Tok::kLe: rel = Rel::kLe; break;
      case Tok::kGt: rel = Rel::kGt; break;
      case Tok::kGe: rel = Rel::kGe; break;
      default: fail("expected relation");
    }
    ++pos_;
    MultiPoly rhs = parse_poly();
    return QFF::make_atom(lhs - rhs, rel);
  }

  MultiPoly parse_poly() {
    MultiPoly acc = parse_term();
    while (cur().kind == Tok::kPlus || cur().kind == Tok::kMinus) {
      bool minus = cur().kind == Tok::kMinus;
      ++pos_;
      MultiPoly t = parse_term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  MultiPoly parse_term() {
    bool neg = false;
    while (cur().kind == Tok::kMinus || cur().kind == Tok::kPlus) {
      if (cur().kind == Tok::kMinus) neg = !neg;
      ++pos_;
    }
    MultiPoly acc = parse_factor();
    while (cur().kind == Tok::kStar) {
      ++pos_;
      acc = acc * parse_factor();
    }
    return neg ? -acc : acc;
  }

  MultiPoly parse_factor() {
    MultiPoly base = parse_base();
    if (cur().kind == Tok::kCaret) {
      ++pos_;
      if (cur().kind != Tok::kNumber ||
          mpz_cmp_ui(mpq_denref(cur().value.get_mpq_t()), 1) != 0)
        fail("exponent must be a nonnegative integer");
      unsigned long e = mpz_get_ui(mpq_numref(cur().value.get_mpq_t()));
      ++pos_;
      return base.pow(e);
    }
    return base;
  }

  MultiPoly parse_base() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::kNumber:
        ++pos_;
        return MultiPoly::constant(order_, t.value);
      case Tok::kIdent: {
        int idx = order_->index_of(t.text);
        if (idx < 0) throw ParseFail{"unknown variable '" + t.text + "'", t.pos};
        ++pos_;
        return MultiPoly::variable(order_, static_cast<std::size_t>(idx));
      }
      case Tok::kLParen: {
        ++pos_;
        MultiPoly inner = parse_poly();
        if (cur().kind != Tok::kRParen) fail("expected ')'");
        ++pos_;
        return inner;
      }
      case Tok::kMinus:
        ++pos_;
        return -parse_base();
      default:
        fail("expected polynomial");
    }
  }

  const std::vector<Token>& toks_;
  VarOrderPtr order_;
  std::size_t pos_ = 0;
};

}  // namespace

VarOrderPtr parse_order_spec(const std::string& text) {
  // names separated by '>' (highest first) or ','/whitespace (highest first)
  std::vector<std::string> names;
  std::string cur;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      cur += c;
    } else if (c == '>' || c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) names.push_back(cur);
      cur.clear();
    } else {
      throw ParseError("unexpected character in variable order", 0);
    }
  }
  if (!cur.empty()) names.push_back(cur);
  if (names.empty()) throw ParseError("empty variable order", 0);
  std::reverse(names.begin(), names.end());  // store lowest first
  return VarOrder::make(std::move(names));
}

ParsedFormula parse_formula(const std::string& text, VarOrderPtr order_override) {
  std::string body = text;
  VarOrderPtr order = std::move(order_override);
  // optional header line: vars: z > y > x > w
  std::size_t start = body.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && body.compare(start, 5, "vars:") == 0) {
    std::size_t eol = body.find('\n', start);
    std::string spec = body.substr(start + 5, eol == std::string::npos
                                                  ? std::string::npos
                                                  : eol - start - 5);
    if (!order) order = parse_order_spec(spec);
    body = eol == std::string::npos ? "" : body.substr(eol + 1);
  }
  std::vector<Token> toks = detail::lex(body);
  if (!order) {
    std::set<std::string> names;
    for (const auto& t : toks)
      if (t.kind == Tok::kIdent) names.insert(t.text);
    if (names.empty()) throw ParseError("formula has no variables", 0);
    order = VarOrder::make(std::vector<std::string>(names.begin(), names.end()));
  }
  FormulaParser parser(toks, order);
  try {
    return {parser.parse(), order};
  } catch (const ParseFail& f) {
    throw ParseError(f.msg, f.pos);
  }
}

namespace {

void collect_polys(const QFFPtr& f, PolySet& out) {
  if (f->kind() == QFF::Kind::kAtom) {
    out.insert(f->poly());
    return;
  }
  for (const auto& c : f->children()) collect_polys(c, out);
}

void collect_explicit_ecs(const QFFPtr& f, PolySet& out) {
  if (f->kind() == QFF::Kind::kAtom) {
    if (f->rel() == Rel::kEq) out.insert(f->poly());
    return;
  }
  if (f->kind() == QFF::Kind::kAnd)
    for (const auto& c : f->children()) collect_explicit_ecs(c, out);
}

}  // namespace

PolySet defining_polynomials(const QFFPtr& f) {
  PolySet out;
  collect_polys(f, out);
  return out;
}

PolySet explicit_ecs(const QFFPtr& f) {
  PolySet out;
  collect_explicit_ecs(f, out);
  return out;
}

bool eval_truth(const QFFPtr& f, const SamplePoint& s) {
  switch (f->kind()) {
    case QFF::Kind::kAtom:
      return rel_holds(f->rel(), sign_at(f->poly(), s));
    case QFF::Kind::kNot:
      return !eval_truth(f->children()[0], s);
    case QFF::Kind::kAnd:
      for (const auto& c : f->children())
        if (!eval_truth(c, s)) return false;
      return true;
    case QFF::Kind::kOr:
      for (const auto& c : f->children())
        if (eval_truth(c, s)) return true;
      return false;
  }
  return false;
}

bool eval_truth_rational(const QFFPtr& f, const std::vector<Rat>& point) {
  switch (f->kind()) {
    case QFF::Kind::kAtom:
      return rel_holds(f->rel(), sign_of(f->poly().eval_full(point)));
    case QFF::Kind::kNot:
      return !eval_truth_rational(f->children()[0], point);
    case QFF::Kind::kAnd:
      for (const auto& c : f->children())
        if (!eval_truth_rational(c, point)) return false;
      return true;
    case QFF::Kind::kOr:
      for (const auto& c : f->children())
        if (eval_truth_rational(c, point)) return true;
      return false;
  }
  return false;
}

QFFPtr nnf(const QFFPtr& f, bool negate) {
  switch (f->kind()) {
    case QFF::Kind::kAtom: {
      if (!negate) return f;
      Rel r = f->rel();
      Rel flipped;
      switch (r) {
        case Rel::kEq: flipped = Rel::kNeq; break;
        case Rel::kNeq: flipped = Rel::kEq; break;
        case Rel::kLt: flipped = Rel::kGe; break;
        case Rel::kLe: flipped = Rel::kGt; break;
        case Rel::kGt: flipped = Rel::kLe; break;
        case Rel::kGe: flipped = Rel::kLt; break;
      }
      return QFF::make_atom(f->poly(), flipped);
    }
    case QFF::Kind::kNot:
      return nnf(f->children()[0], !negate);
    case QFF::Kind::kAnd:
    case QFF::Kind::kOr: {
      std::vector<QFFPtr> cs;
      for (const auto& c : f->children()) cs.push_back(nnf(c, negate));
      bool is_and = (f->kind() == QFF::Kind::kAnd) != negate;
      return is_and ? QFF::make_and(std::move(cs)) : QFF::make_or(std::move(cs));
    }
  }
  return f;
}

}  // namespace cadec
