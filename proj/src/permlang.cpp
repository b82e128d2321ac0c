#include "symlift/permlang.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <variant>
#include <vector>

namespace symlift::permlang {

namespace {

using perm::Expr;
using perm::ExprPtr;

struct Token {
  enum class Kind { Number, Ident, Symbol, End };
  Kind kind;
  std::string text;
  std::uint64_t value = 0;
  std::size_t pos = 0;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        ++i;
      }
      out.push_back({Token::Kind::Number, std::string(text.substr(start, i - start)), v, start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      out.push_back({Token::Kind::Ident, std::string(text.substr(start, i - start)), 0, start});
      continue;
    }
    switch (c) {
      case '(': case ')': case '[': case ']': case '{': case '}':
      case ',': case '*': case '^': case '\'': case '-':
        out.push_back({Token::Kind::Symbol, std::string(1, c), 0, i});
        ++i;
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Token::Kind::End, "", 0, text.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const perm::AtomRegistry& atoms)
      : toks_(std::move(tokens)), atoms_(atoms) {}

  ExprPtr run() {
    ExprPtr e = parse_expr();
    if (!at_end()) throw ParseError("trailing input after expression", peek().pos);
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool is_symbol(const Token& t, char c) const {
    return t.kind == Token::Kind::Symbol && t.text[0] == c;
  }
  void expect_symbol(char c, const char* what) {
    if (!is_symbol(peek(), c)) throw ParseError(std::string("expected ") + what, peek().pos);
    next();
  }

  ExprPtr parse_expr() {
    std::vector<ExprPtr> terms{parse_term()};
    while (is_symbol(peek(), '*')) {
      next();
      terms.push_back(parse_term());
    }
    return perm::prod(std::move(terms));
  }

  ExprPtr parse_term() {
    if (is_symbol(peek(), '[')) {
      next();
      ExprPtr lhs = parse_expr();
      expect_symbol(',', "',' in commutator");
      ExprPtr rhs = parse_expr();
      expect_symbol(']', "']' closing commutator");
      return perm::comm(std::move(lhs), std::move(rhs));
    }
    ExprPtr base = parse_factor();
    if (is_symbol(peek(), '^')) {
      next();
      if (is_symbol(peek(), '{')) {
        next();
        ExprPtr by = parse_expr();
        expect_symbol('}', "'}' closing conjugation");
        return perm::conj(std::move(base), std::move(by));
      }
      bool negative = false;
      if (is_symbol(peek(), '-')) { negative = true; next(); }
      if (peek().kind != Token::Kind::Number)
        throw ParseError("expected integer exponent or '{'", peek().pos);
      long long k = static_cast<long long>(next().value);
      return perm::pow(std::move(base), negative ? -k : k);
    }
    return base;
  }

  ExprPtr parse_factor() {
    ExprPtr e = parse_primary();
    while (is_symbol(peek(), '\'')) {
      next();
      e = perm::inv(std::move(e));
    }
    return e;
  }

  ExprPtr parse_primary() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Ident) {
      next();
      if (is_symbol(peek(), '[') && atoms_.has_family(t.text)) {
        next();
        if (peek().kind != Token::Kind::Number)
          throw ParseError("expected parameter in " + t.text + "[...]", peek().pos);
        long long param = static_cast<long long>(next().value);
        expect_symbol(']', "']' closing atom parameter");
        return perm::atom(atoms_.get(t.text, param));
      }
      if (!atoms_.has(t.text)) throw ParseError("unknown atom '" + t.text + "'", t.pos);
      return perm::atom(atoms_.get(t.text));
    }
    if (is_symbol(t, '(')) {
      next();
      if (peek().kind == Token::Kind::Number) return parse_cycle_tail(t.pos);
      ExprPtr e = parse_expr();
      expect_symbol(')', "')' closing group");
      return e;
    }
    throw ParseError("expected atom, cycle or parenthesized expression", t.pos);
  }

  ExprPtr parse_cycle_tail(std::size_t open_pos) {
    std::vector<perm::Point> points;
    while (peek().kind == Token::Kind::Number) points.push_back(next().value);
    expect_symbol(')', "')' closing cycle");
    if (points.size() < 2)
      throw ParseError("cycle literal needs at least two points", open_pos);
    try {
      return perm::fin(perm::FinPerm::from_cycle(points));
    } catch (const std::invalid_argument& err) {
      throw ParseError(err.what(), open_pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const perm::AtomRegistry& atoms_;
};

// --------------------------------------------------------------------------
// Printing

enum class Slot { ExprSlot, TermSlot, FactorSlot };

void render(const Expr& e, const perm::AtomRegistry& atoms, Slot slot,
            std::string& out);

void check_registered(const perm::Atom& a, const perm::AtomRegistry& atoms) {
  bool ok = a.params.empty() ? atoms.has(a.name) : atoms.has_family(a.name);
  if (!ok)
    throw std::invalid_argument("print: expression uses unregistered atom '" +
                                a.display() + "'");
}

void render(const Expr& e, const perm::AtomRegistry& atoms, Slot slot,
            std::string& out) {
  const auto& n = e.node();
  if (auto* a = std::get_if<perm::AtomNode>(&n)) {
    check_registered(*a->atom, atoms);
    out += a->atom->display();
    return;
  }
  if (auto* f = std::get_if<perm::FinNode>(&n)) {
    auto cycles = f->perm.cycles();
    if (cycles.empty()) {
      if (!atoms.has("id"))
        throw std::invalid_argument("print: identity needs the 'id' atom registered");
      out += "id";
      return;
    }
    std::string body;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      if (i) body += '*';
      body += '(';
      for (std::size_t j = 0; j < cycles[i].size(); ++j) {
        if (j) body += ' ';
        body += std::to_string(cycles[i][j]);
      }
      body += ')';
    }
    // A single cycle is a factor; several form a product and need parens
    // anywhere below expression level.
    if (cycles.size() > 1 && slot != Slot::ExprSlot) {
      out += '(';
      out += body;
      out += ')';
    } else {
      out += body;
    }
    return;
  }
  if (auto* i = std::get_if<perm::InvNode>(&n)) {
    render(*i->inner, atoms, Slot::FactorSlot, out);
    out += '\'';
    return;
  }
  if (auto* p = std::get_if<perm::PowNode>(&n)) {
    std::string body;
    render(*p->base, atoms, Slot::FactorSlot, body);
    body += '^';
    body += std::to_string(p->exponent);
    if (slot == Slot::FactorSlot) {
      out += '(';
      out += body;
      out += ')';
    } else {
      out += body;
    }
    return;
  }
  if (auto* c = std::get_if<perm::ConjNode>(&n)) {
    std::string body;
    render(*c->target, atoms, Slot::FactorSlot, body);
    body += "^{";
    render(*c->by, atoms, Slot::ExprSlot, body);
    body += '}';
    if (slot == Slot::FactorSlot) {
      out += '(';
      out += body;
      out += ')';
    } else {
      out += body;
    }
    return;
  }
  if (auto* pr = std::get_if<perm::ProdNode>(&n)) {
    if (pr->factors.empty()) {
      if (!atoms.has("id"))
        throw std::invalid_argument("print: identity needs the 'id' atom registered");
      out += "id";
      return;
    }
    std::string body;
    for (std::size_t i = 0; i < pr->factors.size(); ++i) {
      if (i) body += '*';
      render(*pr->factors[i], atoms, Slot::TermSlot, body);
    }
    if (slot != Slot::ExprSlot) {
      out += '(';
      out += body;
      out += ')';
    } else {
      out += body;
    }
    return;
  }
  auto* cm = std::get_if<perm::CommNode>(&n);
  std::string body = "[";
  render(*cm->lhs, atoms, Slot::ExprSlot, body);
  body += ',';
  render(*cm->rhs, atoms, Slot::ExprSlot, body);
  body += ']';
  if (slot == Slot::FactorSlot) {
    out += '(';
    out += body;
    out += ')';
  } else {
    out += body;
  }
}

}  // namespace

ExprPtr parse(std::string_view text, const perm::AtomRegistry& atoms) {
  Parser p(lex(text), atoms);
  return p.run();
}

std::string print(const Expr& e, const perm::AtomRegistry& atoms) {
  std::string out;
  render(e, atoms, Slot::ExprSlot, out);
  return out;
}

}  // namespace symlift::permlang
