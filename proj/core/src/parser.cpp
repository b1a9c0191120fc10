// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flucid/parser.hpp"

#include <charconv>
#include <initializer_list>

namespace flucid {
namespace {

std::optional<BinaryOp> whenever_family(const Token& t) {
  if (t.kind != TokenKind::kKeyword) return std::nullopt;
  static constexpr std::pair<std::string_view, BinaryOp> kOps[] = {
      {"wvr", BinaryOp::kWvr},     {"rwvr", BinaryOp::kRwvr},
      {"nwvr", BinaryOp::kNwvr},   {"nrwvr", BinaryOp::kNrwvr},
      {"asa", BinaryOp::kAsa},     {"ala", BinaryOp::kAla},
      {"nasa", BinaryOp::kNasa},   {"nala", BinaryOp::kNala},
      {"upon", BinaryOp::kUpon},   {"rupon", BinaryOp::kRupon},
      {"nupon", BinaryOp::kNupon}, {"nrupon", BinaryOp::kNrupon},
  };
  for (const auto& [name, op] : kOps) {
    if (t.text == name) return op;
  }
  return std::nullopt;
}

std::optional<UnaryOp> prefix_stream_op(const Token& t) {
  if (t.kind != TokenKind::kKeyword) return std::nullopt;
  static constexpr std::pair<std::string_view, UnaryOp> kOps[] = {
      {"first", UnaryOp::kFirst}, {"last", UnaryOp::kLast},
      {"next", UnaryOp::kNext},   {"prev", UnaryOp::kPrev},
      {"second", UnaryOp::kSecond}, {"prelast", UnaryOp::kPrelast},
  };
  for (const auto& [name, op] : kOps) {
    if (t.text == name) return op;
  }
  return std::nullopt;
}

std::optional<BinaryOp> comparison(const Token& t) {
  if (t.kind != TokenKind::kSymbol) return std::nullopt;
  if (t.text == "==") return BinaryOp::kEq;
  if (t.text == "!=") return BinaryOp::kNe;
  if (t.text == "<") return BinaryOp::kLt;
  if (t.text == "<=") return BinaryOp::kLe;
  if (t.text == ">") return BinaryOp::kGt;
  if (t.text == ">=") return BinaryOp::kGe;
  return std::nullopt;
}

std::string describe(const Token& t) {
  if (t.kind == TokenKind::kEnd) return "end of input";
  return "'" + t.text + "'";
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

  ExprPtr program() {
    ExprPtr e = expr();
    expect_end();
    return e;
  }

  std::vector<QDefPtr> def_list_to_end() {
    std::vector<QDefPtr> defs;
    while (!peek().is(TokenKind::kEnd, "")) {
      if (accept_symbol(";")) continue;
      definition(defs);
    }
    return defs;
  }

  // A definition starts with `dimension`, `name =` or `name(...) =`.
  [[nodiscard]] bool at_definition() const {
    const Token& t = peek();
    if (t.is_keyword("dimension")) return true;
    if (t.kind != TokenKind::kIdent) return false;
    if (peek(1).is_symbol("=")) return true;
    if (!peek(1).is_symbol("(")) return false;
    std::size_t k = pos_ + 2;
    while (k < toks_.size() && !toks_[k].is_symbol(")")) {
      if (toks_[k].kind != TokenKind::kIdent && !toks_[k].is_symbol(",")) {
        return false;
      }
      ++k;
    }
    return k + 1 < toks_.size() && toks_[k + 1].is_symbol("=");
  }

  void expect_end() {
    if (peek().kind != TokenKind::kEnd) fail_one("end of input");
  }

 private:
  [[nodiscard]] const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& take() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool accept_symbol(std::string_view s) {
    if (!peek().is_symbol(s)) return false;
    take();
    return true;
  }
  bool accept_keyword(std::string_view s) {
    if (!peek().is_keyword(s)) return false;
    take();
    return true;
  }
  [[noreturn]] void fail(std::initializer_list<std::string_view> expected) const {
    std::string msg = "expected ";
    if (expected.size() > 1) msg += "one of ";
    bool first = true;
    for (auto e : expected) {
      msg += first ? "" : ", ";
      msg += e;
      first = false;
    }
    msg += ", found " + describe(peek());
    throw SyntaxError(peek().pos, msg);
  }
  const Token& expect_symbol(std::string_view s) {
    if (!peek().is_symbol(s)) fail_one("'" + std::string(s) + "'");
    return take();
  }
  const Token& expect_keyword(std::string_view s) {
    if (!peek().is_keyword(s)) fail_one("'" + std::string(s) + "'");
    return take();
  }
  const Token& expect_ident() {
    if (peek().kind != TokenKind::kIdent) fail_one("identifier");
    return take();
  }
  [[noreturn]] void fail_one(const std::string& expected) const {
    throw SyntaxError(peek().pos,
                      "expected " + expected + ", found " + describe(peek()));
  }

  // dim := ident { '.' ident }
  ExprPtr dimension() {
    if (peek().kind != TokenKind::kIdent) fail_one("dimension name");
    const Token& t = take();
    ExprPtr e = make_id(t.text, t.pos);
    while (peek().is_symbol(".") && peek(1).kind == TokenKind::kIdent) {
      const SourcePos pos = take().pos;
      e = make_expr(ast::Dot{e, take().text}, pos);
    }
    return e;
  }

  ExprPtr suffix() {
    if (!accept_symbol(".")) return nullptr;
    return dimension();
  }

  ExprPtr expr() {
    ExprPtr e = at_expr();
    while (peek().is_keyword("where")) {
      const SourcePos pos = take().pos;
      std::vector<QDefPtr> defs;
      while (!accept_keyword("end")) {
        if (accept_symbol(";")) continue;
        if (peek().kind == TokenKind::kEnd) fail_one("'end'");
        definition(defs);
      }
      e = make_expr(ast::Where{e, std::move(defs)}, pos);
    }
    return e;
  }

  void definition(std::vector<QDefPtr>& defs) {
    if (peek().is_keyword("dimension")) {
      take();
      do {
        const SourcePos pos = peek().pos;
        ExprPtr d = dimension();
        defs.push_back(make_def(ast::DimDecl{*dimension_path(*d)}, pos));
      } while (accept_symbol(","));
      return;
    }
    if (peek().kind != TokenKind::kIdent) {
      fail_one("a definition ('dimension', 'name = ...' or 'f(x) = ...') or 'end'");
    }
    const Token& name = take();
    if (accept_symbol("(")) {
      std::vector<std::string> formals;
      if (!peek().is_symbol(")")) {
        do {
          formals.push_back(expect_ident().text);
        } while (accept_symbol(","));
      }
      expect_symbol(")");
      expect_symbol("=");
      ExprPtr body = expr();
      defs.push_back(make_def(
          ast::FuncDef{name.text, std::move(formals), std::move(body)},
          name.pos));
      return;
    }
    expect_symbol("=");
    ExprPtr rhs = expr();
    defs.push_back(make_def(ast::VarDef{name.text, std::move(rhs)}, name.pos));
  }

  ExprPtr at_expr() {
    ExprPtr e = fby_expr();
    while (peek().is_symbol("@")) {
      const SourcePos pos = take().pos;
      if (accept_symbol(".")) {
        ExprPtr dim = dimension();
        ExprPtr tag = fby_expr();
        e = make_expr(ast::AtDim{e, std::move(dim), std::move(tag)}, pos);
      } else {
        ExprPtr ctx = fby_expr();
        e = make_expr(ast::AtCtx{e, std::move(ctx)}, pos);
      }
    }
    return e;
  }

  ExprPtr fby_expr() {
    ExprPtr lhs = wvr_expr();
    const Token& t = peek();
    if (t.is_keyword("fby") || t.is_keyword("pby")) {
      const BinaryOp op = t.text == "fby" ? BinaryOp::kFby : BinaryOp::kPby;
      const SourcePos pos = take().pos;
      ExprPtr dim = suffix();
      ExprPtr rhs = fby_expr();
      return make_expr(ast::BinOp{op, lhs, rhs, dim}, pos);
    }
    return lhs;
  }

  ExprPtr wvr_expr() {
    ExprPtr lhs = or_expr();
    while (auto op = whenever_family(peek())) {
      const SourcePos pos = take().pos;
      ExprPtr dim = suffix();
      ExprPtr rhs = or_expr();
      lhs = make_expr(ast::BinOp{*op, lhs, rhs, dim}, pos);
    }
    return lhs;
  }

  ExprPtr or_expr() {
    ExprPtr lhs = and_expr();
    while (peek().is_keyword("or") || peek().is_keyword("xor")) {
      const BinaryOp op = peek().text == "or" ? BinaryOp::kOr : BinaryOp::kXor;
      const SourcePos pos = take().pos;
      ExprPtr dim = suffix();
      ExprPtr rhs = and_expr();
      lhs = make_expr(ast::BinOp{op, lhs, rhs, dim}, pos);
    }
    return lhs;
  }

  ExprPtr and_expr() {
    ExprPtr lhs = not_expr();
    while (peek().is_keyword("and")) {
      const SourcePos pos = take().pos;
      ExprPtr dim = suffix();
      ExprPtr rhs = not_expr();
      lhs = make_expr(ast::BinOp{BinaryOp::kAnd, lhs, rhs, dim}, pos);
    }
    return lhs;
  }

  ExprPtr not_expr() {
    if (peek().is_keyword("not") || peek().is_keyword("neg")) {
      const UnaryOp op = peek().text == "not" ? UnaryOp::kNot : UnaryOp::kNeg;
      const SourcePos pos = take().pos;
      ExprPtr dim = suffix();
      ExprPtr operand = not_expr();
      return make_expr(ast::UnOp{op, operand, dim}, pos);
    }
    return cmp_expr();
  }

  ExprPtr cmp_expr() {
    ExprPtr lhs = add_expr();
    if (auto op = comparison(peek())) {
      const SourcePos pos = take().pos;
      ExprPtr rhs = add_expr();
      if (comparison(peek())) {
        throw SyntaxError(peek().pos,
                          "comparisons do not chain; add parentheses");
      }
      return make_expr(ast::BinOp{*op, lhs, rhs, nullptr}, pos);
    }
    return lhs;
  }

  ExprPtr add_expr() {
    ExprPtr lhs = mul_expr();
    while (peek().is_symbol("+") || peek().is_symbol("-")) {
      const BinaryOp op = peek().text == "+" ? BinaryOp::kAdd : BinaryOp::kSub;
      const SourcePos pos = take().pos;
      ExprPtr rhs = mul_expr();
      lhs = make_expr(ast::BinOp{op, lhs, rhs, nullptr}, pos);
    }
    return lhs;
  }

  ExprPtr mul_expr() {
    ExprPtr lhs = unary();
    while (peek().is_symbol("*") || peek().is_symbol("/") ||
           peek().is_symbol("%")) {
      const std::string& s = peek().text;
      const BinaryOp op = s == "*"   ? BinaryOp::kMul
                          : s == "/" ? BinaryOp::kDiv
                                     : BinaryOp::kMod;
      const SourcePos pos = take().pos;
      ExprPtr rhs = unary();
      lhs = make_expr(ast::BinOp{op, lhs, rhs, nullptr}, pos);
    }
    return lhs;
  }

  ExprPtr unary() {
    if (peek().is_symbol("-")) {
      const SourcePos pos = take().pos;
      ExprPtr operand = unary();
      if (const auto* lit = operand->as<ast::IntLit>()) {
        return make_int(-lit->value, pos);
      }
      return make_expr(ast::UnOp{UnaryOp::kNeg, operand, nullptr}, pos);
    }
    if (auto op = prefix_stream_op(peek())) {
      const SourcePos pos = take().pos;
      ExprPtr dim = suffix();
      ExprPtr operand = unary();
      return make_expr(ast::UnOp{*op, operand, dim}, pos);
    }
    if (peek().is_keyword("iseod") || peek().is_keyword("isbod")) {
      const UnaryOp op =
          peek().text == "iseod" ? UnaryOp::kIsEod : UnaryOp::kIsBod;
      const SourcePos pos = take().pos;
      ExprPtr operand = unary();
      return make_expr(ast::UnOp{op, operand, nullptr}, pos);
    }
    return primary();
  }

  std::vector<ExprPtr> arguments() {
    expect_symbol("(");
    std::vector<ExprPtr> args;
    if (!peek().is_symbol(")")) {
      do {
        args.push_back(expr());
      } while (accept_symbol(","));
    }
    expect_symbol(")");
    return args;
  }

  ExprPtr context_literal() {
    const SourcePos pos = expect_symbol("[").pos;
    ast::CtxLit lit;
    if (!peek().is_symbol("]")) {
      do {
        ExprPtr dim = dimension();
        expect_symbol(":");
        ExprPtr tag = expr();
        lit.bindings.emplace_back(std::move(dim), std::move(tag));
      } while (accept_symbol(","));
    }
    expect_symbol("]");
    return make_expr(std::move(lit), pos);
  }

  ExprPtr primary() {
    const Token& t = peek();
    const SourcePos pos = t.pos;
    switch (t.kind) {
      case TokenKind::kInt: {
        std::int64_t v = 0;
        std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        take();
        return make_int(v, pos);
      }
      case TokenKind::kIdent: {
        ExprPtr id = make_id(take().text, pos);
        if (peek().is_symbol("(")) {
          return make_expr(ast::Apply{id, arguments()}, pos);
        }
        return id;
      }
      case TokenKind::kKeyword:
        if (t.text == "true" || t.text == "false") {
          take();
          return make_bool(t.text == "true", pos);
        }
        if (t.text == "bod" || t.text == "eod") return make_id(take().text, pos);
        if (t.text == "combine" || t.text == "product") {
          ExprPtr callee = make_id(take().text, pos);
          return make_expr(ast::Apply{callee, arguments()}, pos);
        }
        if (t.text == "if") return if_expr();
        break;
      case TokenKind::kSymbol:
        if (t.text == "(") {
          take();
          ExprPtr e = expr();
          expect_symbol(")");
          return e;
        }
        if (t.text == "#") {
          take();
          ExprPtr dim = suffix();
          return make_expr(ast::HashQuery{dim}, pos);
        }
        if (t.text == "[") return context_literal();
        if (t.text == "{") {
          take();
          ast::CtxSetLit set;
          if (peek().is_symbol("}")) {
            throw SyntaxError(pos, "a context set needs at least one context");
          }
          do {
            set.items.push_back(context_literal());
          } while (accept_symbol(","));
          expect_symbol("}");
          return make_expr(std::move(set), pos);
        }
        break;
      case TokenKind::kEnd:
        break;
    }
    fail({"integer", "identifier", "'true'", "'false'", "'('", "'#'", "'['",
          "'{'", "'if'", "an operator"});
  }

  ExprPtr if_expr() {
    const SourcePos pos = expect_keyword("if").pos;
    ExprPtr cond = expr();
    expect_keyword("then");
    ExprPtr then_branch = expr();
    accept_symbol(";");
    expect_keyword("else");
    ExprPtr else_branch = expr();
    accept_keyword("fi");
    return make_expr(ast::If{cond, then_branch, else_branch}, pos);
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(const std::vector<Token>& tokens) {
  return Parser(tokens).program();
}

ExprPtr parse(std::string_view source) { return parse(tokenize(source)); }

ReplInput parse_repl_input(std::string_view source) {
  const std::vector<Token> tokens = tokenize(source);
  Parser p(tokens);
  ReplInput in;
  if (p.at_definition()) {
    in.defs = p.def_list_to_end();
  } else {
    in.expr = p.program();
  }
  return in;
}

}  // namespace flucid
