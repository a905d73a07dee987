#include "mutdiff/parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "mutdiff/errors.hpp"

namespace mutdiff {

namespace {

enum class Tok {
  Ident,
  IntLit,
  KwProgram,
  KwInput,
  KwOutput,
  KwInt,
  KwBool,
  KwIf,
  KwElse,
  KwWhile,
  KwTrue,
  KwFalse,
  KwAnd,
  KwOr,
  KwNot,
  LBrace,
  RBrace,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Semi,
  Assign,
  Plus,
  Minus,
  Star,
  Slash,
  Percent,
  Lt,
  Le,
  Gt,
  Ge,
  EqEq,
  Ne,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

const std::map<std::string, Tok, std::less<>> kKeywords = {
    {"program", Tok::KwProgram}, {"input", Tok::KwInput}, {"output", Tok::KwOutput},
    {"int", Tok::KwInt},         {"bool", Tok::KwBool},   {"if", Tok::KwIf},
    {"else", Tok::KwElse},       {"while", Tok::KwWhile}, {"true", Tok::KwTrue},
    {"false", Tok::KwFalse},     {"and", Tok::KwAnd},     {"or", Tok::KwOr},
    {"not", Tok::KwNot},
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_ws_and_comments();
      int line = line_, col = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", line, col});
        return out;
      }
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string word;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
          word.push_back(advance());
        auto it = kKeywords.find(word);
        out.push_back({it != kKeywords.end() ? it->second : Tok::Ident, word, line, col});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string digits;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
          digits.push_back(advance());
        out.push_back({Tok::IntLit, digits, line, col});
        continue;
      }
      switch (c) {
        case '{': advance(); out.push_back({Tok::LBrace, "{", line, col}); break;
        case '}': advance(); out.push_back({Tok::RBrace, "}", line, col}); break;
        case '(': advance(); out.push_back({Tok::LParen, "(", line, col}); break;
        case ')': advance(); out.push_back({Tok::RParen, ")", line, col}); break;
        case '[': advance(); out.push_back({Tok::LBracket, "[", line, col}); break;
        case ']': advance(); out.push_back({Tok::RBracket, "]", line, col}); break;
        case ';': advance(); out.push_back({Tok::Semi, ";", line, col}); break;
        case '+': advance(); out.push_back({Tok::Plus, "+", line, col}); break;
        case '-': advance(); out.push_back({Tok::Minus, "-", line, col}); break;
        case '*': advance(); out.push_back({Tok::Star, "*", line, col}); break;
        case '/': advance(); out.push_back({Tok::Slash, "/", line, col}); break;
        case '%': advance(); out.push_back({Tok::Percent, "%", line, col}); break;
        case '<':
          advance();
          if (peek() == '=') { advance(); out.push_back({Tok::Le, "<=", line, col}); }
          else out.push_back({Tok::Lt, "<", line, col});
          break;
        case '>':
          advance();
          if (peek() == '=') { advance(); out.push_back({Tok::Ge, ">=", line, col}); }
          else out.push_back({Tok::Gt, ">", line, col});
          break;
        case '=':
          advance();
          if (peek() == '=') { advance(); out.push_back({Tok::EqEq, "==", line, col}); }
          else out.push_back({Tok::Assign, "=", line, col});
          break;
        case '!':
          advance();
          if (peek() == '=') { advance(); out.push_back({Tok::Ne, "!=", line, col}); }
          else throw SyntaxError(line, col, "unexpected '!'");
          break;
        default:
          throw SyntaxError(line, col, std::string("unexpected character '") + c + "'");
      }
    }
  }

 private:
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws_and_comments() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// Identifiers of the form loop_<digits> are reserved for loop elimination
// flags; accepting them would let user code collide with generated names.
bool is_reserved_flag_name(const std::string& name) {
  if (name.rfind("loop_", 0) != 0 || name.size() <= 5) return false;
  for (std::size_t i = 5; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  return true;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Program run() {
    expect(Tok::KwProgram, "expected 'program'");
    Program p;
    p.name = expect_ident("program name");
    expect(Tok::LBrace, "expected '{' after program name");
    while (at(Tok::KwInput) || at(Tok::KwOutput)) {
      bool is_input = at(Tok::KwInput);
      next();
      Ty ty = parse_type();
      Token name_tok = cur();
      std::string name = expect_ident("variable name");
      check_fresh_name(name, name_tok);
      expect(Tok::Semi, "expected ';' after declaration");
      (is_input ? p.inputs : p.outputs).push_back({name, ty});
      declared_[name] = ty;
      (is_input ? input_names_ : output_names_).insert(name);
    }
    while (!at(Tok::RBrace)) p.body.push_back(parse_stmt());
    expect(Tok::RBrace, "expected '}'");
    expect(Tok::End, "trailing input after program");
    return p;
  }

 private:
  const Token& cur() const { return toks_[idx_]; }
  bool at(Tok k) const { return cur().kind == k; }
  const Token& next() { return toks_[idx_++]; }

  void expect(Tok k, const std::string& what) {
    if (!at(k)) throw SyntaxError(cur().line, cur().col, what + ", found '" + cur().text + "'");
    next();
  }

  std::string expect_ident(const std::string& what) {
    if (!at(Tok::Ident))
      throw SyntaxError(cur().line, cur().col, "expected " + what + ", found '" + cur().text + "'");
    return next().text;
  }

  void check_fresh_name(const std::string& name, const Token& tok) {
    if (is_reserved_flag_name(name))
      throw SyntaxError(tok.line, tok.col,
                        "identifier '" + name + "' is reserved for loop elimination flags");
    if (declared_.count(name))
      throw SyntaxError(tok.line, tok.col, "variable '" + name + "' already declared");
  }

  Ty parse_type() {
    if (at(Tok::KwInt)) { next(); return Ty::Int; }
    if (at(Tok::KwBool)) { next(); return Ty::Bool; }
    throw SyntaxError(cur().line, cur().col, "expected a type, found '" + cur().text + "'");
  }

  SourceLoc loc_of(const Token& t) const { return {t.line, t.col}; }

  StmtPtr parse_stmt() {
    if (at(Tok::KwIf)) return parse_if();
    if (at(Tok::KwWhile)) return parse_while();
    if (at(Tok::KwInt) || at(Tok::KwBool)) return parse_decl();
    if (at(Tok::Ident)) return parse_assign();
    throw SyntaxError(cur().line, cur().col, "expected a statement, found '" + cur().text + "'");
  }

  StmtPtr parse_decl() {
    Token head = cur();
    Ty ty = parse_type();
    Token name_tok = cur();
    std::string name = expect_ident("variable name");
    // An output may be (re)declared once in the body; that declaration is its
    // defining assignment. Everything else must be fresh.
    if (output_names_.count(name)) {
      if (declared_.at(name) != ty)
        throw TypeError(name_tok.line, name_tok.col,
                        "output '" + name + "' declared with a different type");
      if (!output_defined_by_decl_.insert(name).second)
        throw SyntaxError(name_tok.line, name_tok.col,
                          "output '" + name + "' declared twice in body");
    } else {
      check_fresh_name(name, name_tok);
      declared_[name] = ty;
    }
    expect(Tok::Assign, "expected '=' in declaration");
    ExprPtr init = parse_expr();
    expect(Tok::Semi, "expected ';' after declaration");
    return make_decl(name, ty, std::move(init), loc_of(head));
  }

  StmtPtr parse_assign() {
    Token name_tok = next();
    if (at(Tok::LParen))
      throw UnsupportedConstruct(name_tok.line, name_tok.col,
                                 "procedure call '" + name_tok.text + "(...)'");
    if (at(Tok::LBracket))
      throw UnsupportedConstruct(name_tok.line, name_tok.col, "array indexing");
    expect(Tok::Assign, "expected '=' in assignment");
    ExprPtr value = parse_expr();
    expect(Tok::Semi, "expected ';' after assignment");
    return make_assign(name_tok.text, std::move(value), loc_of(name_tok));
  }

  StmtPtr parse_if() {
    Token head = next();
    expect(Tok::LParen, "expected '(' after 'if'");
    ExprPtr cond = parse_expr();
    expect(Tok::RParen, "expected ')' after condition");
    std::vector<StmtPtr> then_body = parse_block();
    std::vector<StmtPtr> else_body;
    if (at(Tok::KwElse)) {
      next();
      else_body = parse_block();
    }
    return make_if(std::move(cond), std::move(then_body), std::move(else_body), loc_of(head));
  }

  StmtPtr parse_while() {
    Token head = next();
    expect(Tok::LParen, "expected '(' after 'while'");
    ExprPtr cond = parse_expr();
    expect(Tok::RParen, "expected ')' after condition");
    std::vector<StmtPtr> body = parse_block();
    return make_while(std::move(cond), std::move(body), loc_of(head));
  }

  std::vector<StmtPtr> parse_block() {
    expect(Tok::LBrace, "expected '{'");
    std::vector<StmtPtr> body;
    while (!at(Tok::RBrace)) body.push_back(parse_stmt());
    expect(Tok::RBrace, "expected '}'");
    return body;
  }

  // Precedence, loosest first: or, and, not, relational (non-associative),
  // additive, multiplicative, unary minus.
  ExprPtr parse_expr() { return parse_or(); }

  ExprPtr parse_or() {
    ExprPtr lhs = parse_and();
    while (at(Tok::KwOr)) {
      Token op = next();
      lhs = make_binary(BinOp::Or, std::move(lhs), parse_and(), loc_of(op));
    }
    return lhs;
  }

  ExprPtr parse_and() {
    ExprPtr lhs = parse_not();
    while (at(Tok::KwAnd)) {
      Token op = next();
      lhs = make_binary(BinOp::And, std::move(lhs), parse_not(), loc_of(op));
    }
    return lhs;
  }

  ExprPtr parse_not() {
    if (at(Tok::KwNot)) {
      Token op = next();
      return make_unary(UnOp::Not, parse_not(), loc_of(op));
    }
    return parse_rel();
  }

  ExprPtr parse_rel() {
    ExprPtr lhs = parse_add();
    BinOp op;
    switch (cur().kind) {
      case Tok::Lt: op = BinOp::Lt; break;
      case Tok::Le: op = BinOp::Le; break;
      case Tok::Gt: op = BinOp::Gt; break;
      case Tok::Ge: op = BinOp::Ge; break;
      case Tok::EqEq: op = BinOp::Eq; break;
      case Tok::Ne: op = BinOp::Ne; break;
      default: return lhs;
    }
    Token op_tok = next();
    return make_binary(op, std::move(lhs), parse_add(), loc_of(op_tok));
  }

  ExprPtr parse_add() {
    ExprPtr lhs = parse_mul();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      Token op = next();
      lhs = make_binary(op.kind == Tok::Plus ? BinOp::Add : BinOp::Sub, std::move(lhs),
                        parse_mul(), loc_of(op));
    }
    return lhs;
  }

  ExprPtr parse_mul() {
    ExprPtr lhs = parse_unary();
    while (at(Tok::Star) || at(Tok::Slash) || at(Tok::Percent)) {
      Token op = next();
      BinOp b = op.kind == Tok::Star ? BinOp::Mul
                : op.kind == Tok::Slash ? BinOp::Div
                                        : BinOp::Mod;
      lhs = make_binary(b, std::move(lhs), parse_unary(), loc_of(op));
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (at(Tok::Minus)) {
      Token op = next();
      ExprPtr operand = parse_unary();
      // Fold minus on a literal so pretty-printed negative constants
      // round-trip to the same node.
      if (const auto* ic = std::get_if<IntConst>(&operand->node))
        return make_int(-ic->value, loc_of(op));
      return make_unary(UnOp::Neg, std::move(operand), loc_of(op));
    }
    return parse_primary();
  }

  ExprPtr parse_primary() {
    Token t = cur();
    switch (t.kind) {
      case Tok::IntLit: {
        next();
        try {
          return make_int(std::stoll(t.text), loc_of(t));
        } catch (const std::out_of_range&) {
          throw SyntaxError(t.line, t.col, "integer literal out of range");
        }
      }
      case Tok::KwTrue: next(); return make_bool(true, loc_of(t));
      case Tok::KwFalse: next(); return make_bool(false, loc_of(t));
      case Tok::Ident: {
        next();
        if (at(Tok::LParen))
          throw UnsupportedConstruct(t.line, t.col, "procedure call '" + t.text + "(...)'");
        if (at(Tok::LBracket)) throw UnsupportedConstruct(t.line, t.col, "array indexing");
        return make_var(t.text, loc_of(t));
      }
      case Tok::LParen: {
        next();
        ExprPtr inner = parse_expr();
        expect(Tok::RParen, "expected ')'");
        return inner;
      }
      default:
        throw SyntaxError(t.line, t.col, "expected an expression, found '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t idx_ = 0;
  std::map<std::string, Ty> declared_;
  std::set<std::string> input_names_;
  std::set<std::string> output_names_;
  std::set<std::string> output_defined_by_decl_;
};

// --- static checks -----------------------------------------------------------

class Checker {
 public:
  explicit Checker(const Program& p) : p_(p) {}

  void run() {
    for (const auto& in : p_.inputs) register_param(in);
    for (const auto& out : p_.outputs) {
      register_param(out);
      output_names_.insert(out.name);
    }
    std::set<std::string> assigned;
    for (const auto& in : p_.inputs) assigned.insert(in.name);
    check_block(p_.body, assigned);
    for (const auto& out : p_.outputs)
      if (!assigned.count(out.name))
        throw UseBeforeDef(0, 0, out.name + " (output not assigned on every path)");
  }

 private:
  void register_param(const Param& param) {
    if (!types_.emplace(param.name, param.type).second)
      throw SyntaxError(0, 0, "variable '" + param.name + "' already declared");
  }

  Ty type_of(const std::string& name, SourceLoc loc) const {
    auto it = types_.find(name);
    if (it == types_.end()) throw UndeclaredVariable(loc.line, loc.col, name);
    return it->second;
  }

  Ty check_expr(const ExprPtr& e, const std::set<std::string>& assigned) {
    if (std::holds_alternative<IntConst>(e->node)) return Ty::Int;
    if (std::holds_alternative<BoolConst>(e->node)) return Ty::Bool;
    if (const auto* v = std::get_if<VarRef>(&e->node)) {
      Ty ty = type_of(v->name, e->loc);
      if (!assigned.count(v->name)) throw UseBeforeDef(e->loc.line, e->loc.col, v->name);
      return ty;
    }
    if (const auto* b = std::get_if<Binary>(&e->node)) {
      Ty lt = check_expr(b->lhs, assigned);
      Ty rt = check_expr(b->rhs, assigned);
      if (is_arith(b->op) || is_rel(b->op)) {
        if (lt != Ty::Int || rt != Ty::Int)
          throw TypeError(e->loc.line, e->loc.col,
                          "operator '" + to_string(b->op) + "' requires int operands");
        return is_arith(b->op) ? Ty::Int : Ty::Bool;
      }
      if (lt != Ty::Bool || rt != Ty::Bool)
        throw TypeError(e->loc.line, e->loc.col,
                        "operator '" + to_string(b->op) + "' requires bool operands");
      return Ty::Bool;
    }
    const auto& u = std::get<Unary>(e->node);
    Ty ot = check_expr(u.operand, assigned);
    if (u.op == UnOp::Neg) {
      if (ot != Ty::Int) throw TypeError(e->loc.line, e->loc.col, "'-' requires an int operand");
      return Ty::Int;
    }
    if (ot != Ty::Bool) throw TypeError(e->loc.line, e->loc.col, "'not' requires a bool operand");
    return Ty::Bool;
  }

  // Definite assignment: `assigned` is the set of variables guaranteed to
  // hold a value on every path reaching the current point. While bodies may
  // run zero times, so their assignments do not escape the loop.
  void check_block(const std::vector<StmtPtr>& stmts, std::set<std::string>& assigned) {
    for (const auto& s : stmts) check_stmt(s, assigned);
  }

  void check_stmt(const StmtPtr& s, std::set<std::string>& assigned) {
    if (const auto* a = std::get_if<Assign>(&s->node)) {
      Ty target_ty = type_of(a->target, s->loc);
      Ty value_ty = check_expr(a->value, assigned);
      if (target_ty != value_ty)
        throw TypeError(s->loc.line, s->loc.col,
                        "cannot assign " + to_string(value_ty) + " to " + to_string(target_ty) +
                            " variable '" + a->target + "'");
      assigned.insert(a->target);
    } else if (const auto* d = std::get_if<Decl>(&s->node)) {
      Ty value_ty = check_expr(d->init, assigned);
      if (value_ty != d->type)
        throw TypeError(s->loc.line, s->loc.col,
                        "cannot initialize " + to_string(d->type) + " variable '" + d->name +
                            "' with " + to_string(value_ty));
      auto origin = decl_origin_.find(d->name);
      if (origin != decl_origin_.end()) {
        // Loop elimination duplicates declarations when it unrolls a body;
        // re-encountering the same node is a re-initialization. A distinct
        // node is a genuine duplicate declaration.
        if (origin->second != static_cast<const void*>(s.get()))
          throw SyntaxError(s->loc.line, s->loc.col,
                            "variable '" + d->name + "' declared twice");
        assigned.insert(d->name);
        return;
      }
      bool is_output = output_names_.count(d->name) != 0;
      auto known = types_.find(d->name);
      if (known != types_.end()) {
        if (!is_output)
          throw SyntaxError(s->loc.line, s->loc.col,
                            "variable '" + d->name + "' already declared");
        if (known->second != d->type)
          throw TypeError(s->loc.line, s->loc.col,
                          "output '" + d->name + "' declared with a different type");
        if (assigned.count(d->name))
          throw SyntaxError(s->loc.line, s->loc.col,
                            "output '" + d->name + "' declared after being assigned");
      } else {
        types_[d->name] = d->type;
      }
      decl_origin_[d->name] = s.get();
      assigned.insert(d->name);
    } else if (const auto* f = std::get_if<If>(&s->node)) {
      if (check_expr(f->cond, assigned) != Ty::Bool)
        throw TypeError(s->loc.line, s->loc.col, "if condition must be bool");
      std::set<std::string> then_assigned = assigned;
      check_block(f->then_body, then_assigned);
      std::set<std::string> else_assigned = assigned;
      check_block(f->else_body, else_assigned);
      // Only variables assigned on both paths survive.
      for (const auto& name : then_assigned)
        if (else_assigned.count(name)) assigned.insert(name);
    } else {
      const auto& w = std::get<While>(s->node);
      if (check_expr(w.cond, assigned) != Ty::Bool)
        throw TypeError(s->loc.line, s->loc.col, "while condition must be bool");
      std::set<std::string> body_assigned = assigned;
      check_block(w.body, body_assigned);
      // Zero iterations possible: nothing new escapes.
    }
  }

  const Program& p_;
  std::map<std::string, Ty> types_;
  std::set<std::string> output_names_;
  std::map<std::string, const void*> decl_origin_;
};

}  // namespace

Program parse(std::string_view source_text) {
  Lexer lexer(source_text);
  Parser parser(lexer.run());
  Program p = parser.run();
  check_program(p);
  return p;
}

void check_program(const Program& p) { Checker(p).run(); }

}  // namespace mutdiff
