#include "c2ka/gcl.hpp"

#include <algorithm>
#include <cctype>

#include "c2ka/error.hpp"
#include "text_cursor.hpp"

namespace c2ka::gcl {

using EK = Expression::Kind;
using SK = Statement::Kind;

bool Branch::operator==(const Branch& other) const { return guard == other.guard && body == other.body; }

bool Statement::operator==(const Statement& other) const {
  return kind == other.kind && target == other.target && value == other.value && binder == other.binder &&
         branches == other.branches;
}

bool Program::operator==(const Program& other) const { return body == other.body; }

std::string to_string(const Variable& v) {
  if (!v.index) return v.base;
  return v.base + "[" + std::to_string(*v.index) + "]";
}

std::string to_string(const VarSet& vars) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : vars) {
    if (!first) out += ", ";
    first = false;
    out += to_string(v);
  }
  return out + "}";
}

bool is_constant_name(std::string_view name) {
  bool letter = false;
  for (char c : name) {
    if (std::isupper(static_cast<unsigned char>(c))) {
      letter = true;
    } else if (!std::isdigit(static_cast<unsigned char>(c)) && c != '_') {
      return false;
    }
  }
  return letter;
}

namespace {

const std::set<std::string> kUnsupported{"do", "od", "abort", "while", "for", "repeat", "until", "goto"};

class Parser {
 public:
  Parser(std::string_view text, const std::set<std::string>& stimuli) : in_(text), stimuli_(stimuli) {}

  Program parse() {
    Program p{statements()};
    space();
    if (!in_.eof()) in_.fail(std::string("unexpected '") + in_.peek() + "'");
    return p;
  }

  Variable variable() {
    Variable v{identifier("a variable"), std::nullopt};
    space();
    if (in_.accept("[")) v.index = integer_index();
    return v;
  }

  void expect_end() {
    space();
    if (!in_.eof()) in_.fail("trailing text after variable");
  }

 private:
  void space() { in_.skip_space(true); }

  bool at(std::string_view s) {
    space();
    return in_.starts_with(s);
  }

  bool at_keyword(std::string_view kw) {
    space();
    if (!in_.starts_with(kw)) return false;
    return !detail::is_ident_char(in_.peek(kw.size()));
  }

  void expect(std::string_view s) {
    space();
    if (!in_.accept(s)) in_.fail("expected '" + std::string(s) + "'");
  }

  std::string identifier(const char* what) {
    space();
    if (!detail::is_ident_start(in_.peek())) in_.fail(std::string("expected ") + what);
    return in_.read_identifier();
  }

  int integer_index() {
    space();
    if (!std::isdigit(static_cast<unsigned char>(in_.peek()))) in_.fail("expected an integer index");
    int n = 0;
    while (std::isdigit(static_cast<unsigned char>(in_.peek()))) n = n * 10 + (in_.get() - '0');
    expect("]");
    return n;
  }

  bool at_block_end() { return in_.eof() || at("[]") || at_keyword("fi") || at("}"); }

  std::vector<Statement> statements() {
    std::vector<Statement> out;
    space();
    if (at_block_end()) return out;
    out.push_back(statement());
    while (at(";")) {
      in_.accept(";");
      out.push_back(statement());
    }
    return out;
  }

  Statement statement() {
    space();
    std::size_t line = in_.line(), column = in_.column();
    Statement s;
    if (at_keyword("skip")) {
      in_.accept("skip");
      return s;
    }
    if (at_keyword("receive")) {
      in_.accept("receive");
      s.kind = SK::Receive;
      s.binder = identifier("a name after 'receive'");
      return s;
    }
    if (at_keyword("if")) {
      in_.accept("if");
      s.kind = SK::IfFi;
      do {
        Branch b;
        expect("(");
        b.guard = expression(true);
        expect(")");
        expect("->");
        b.body = statements();
        s.branches.push_back(std::move(b));
      } while (at("[]") && in_.accept("[]"));
      space();
      if (!(at_keyword("fi") && in_.accept("fi"))) in_.fail("expected 'fi' or '[]'");
      return s;
    }
    if (!detail::is_ident_start(in_.peek())) in_.fail("expected a statement");
    s.kind = SK::Assign;
    s.target = variable();
    if (!at(":=")) {
      if (!s.target.index && kUnsupported.contains(s.target.base)) {
        throw UnknownConstruct("unsupported statement '" + s.target.base + "'", line, column);
      }
      in_.fail("expected ':='");
    }
    in_.accept(":=");
    s.value = expression(false);
    return s;
  }

  static Expression binary(std::string op, Expression lhs, Expression rhs) {
    Expression e;
    e.kind = EK::Binary;
    e.text = std::move(op);
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
  }

  Expression expression(bool guard) {
    auto lhs = additive(guard);
    static const char* const ops[] = {">=", "<=", "!=", "=", "<", ">"};
    for (const char* op : ops) {
      if (at(op) && !in_.starts_with(":=")) {
        in_.accept(op);
        return binary(op, std::move(lhs), additive(guard));
      }
    }
    return lhs;
  }

  Expression additive(bool guard) {
    auto e = multiplicative(guard);
    for (;;) {
      // "->" closes a guard, so a '-' followed by '>' is not subtraction.
      if (at("+")) {
        in_.accept("+");
        e = binary("+", std::move(e), multiplicative(guard));
      } else if (at("-") && in_.peek(1) != '>') {
        in_.accept("-");
        e = binary("-", std::move(e), multiplicative(guard));
      } else {
        return e;
      }
    }
  }

  Expression multiplicative(bool guard) {
    auto e = primary(guard);
    for (;;) {
      if (at("*")) {
        in_.accept("*");
        e = binary("*", std::move(e), primary(guard));
      } else if (at("/")) {
        in_.accept("/");
        e = binary("/", std::move(e), primary(guard));
      } else {
        return e;
      }
    }
  }

  Expression primary(bool guard) {
    space();
    Expression e;
    if (in_.accept("(")) {
      e = expression(guard);
      expect(")");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(in_.peek()))) {
      e.kind = EK::Number;
      while (std::isdigit(static_cast<unsigned char>(in_.peek())) || in_.peek() == '.') e.text.push_back(in_.get());
      return e;
    }
    if (!detail::is_ident_start(in_.peek())) {
      in_.fail(in_.eof() ? std::string("unexpected end of expression")
                         : std::string("unexpected '") + in_.peek() + "' in expression");
    }
    std::string name = in_.read_identifier();
    if (name == "null") return e;
    if (name == "true" || name == "false") {
      e.kind = EK::Bool;
      e.text = name;
      return e;
    }
    e.text = name;
    if (at("(")) {
      in_.accept("(");
      e.kind = EK::Call;
      if (!at(")")) {
        e.args.push_back(expression(guard));
        while (at(",")) {
          in_.accept(",");
          e.args.push_back(expression(guard));
        }
      }
      expect(")");
      return e;
    }
    if (at("[") && !in_.starts_with("[]")) {
      in_.accept("[");
      e.kind = EK::Var;
      e.index = integer_index();
      return e;
    }
    if (is_constant_name(name)) {
      e.kind = EK::Const;
    } else if (guard && stimuli_.contains(name)) {
      e.kind = EK::Stimulus;
    } else {
      e.kind = EK::Var;
    }
    return e;
  }

  detail::TextCursor in_;
  const std::set<std::string>& stimuli_;
};

int precedence(const Expression& e) {
  if (e.kind != EK::Binary) return 4;
  if (e.text == "+" || e.text == "-") return 2;
  if (e.text == "*" || e.text == "/") return 3;
  return 1;
}

void render_expr(const Expression& e, std::string& out) {
  switch (e.kind) {
    case EK::Null: out += "null"; return;
    case EK::Var: out += to_string(Variable{e.text, e.index}); return;
    case EK::Call: {
      out += e.text + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ", ";
        render_expr(e.args[i], out);
      }
      out += ")";
      return;
    }
    case EK::Binary: {
      int p = precedence(e);
      auto side = [&](const Expression& c, bool wrap) {
        if (wrap) out += "(";
        render_expr(c, out);
        if (wrap) out += ")";
      };
      side(e.args[0], precedence(e.args[0]) < p || (p == 1 && precedence(e.args[0]) == 1));
      out += " " + e.text + " ";
      side(e.args[1], precedence(e.args[1]) <= p);
      return;
    }
    default: out += e.text; return;
  }
}

void render_body(const std::vector<Statement>& body, std::string& out);

void render_stmt(const Statement& s, std::string& out) {
  switch (s.kind) {
    case SK::Skip: out += "skip"; return;
    case SK::Receive: out += "receive " + s.binder; return;
    case SK::Assign:
      out += to_string(s.target) + " := ";
      render_expr(s.value, out);
      return;
    case SK::IfFi:
      out += "if ";
      for (std::size_t i = 0; i < s.branches.size(); ++i) {
        if (i) out += " [] ";
        out += "(";
        render_expr(s.branches[i].guard, out);
        out += ") -> ";
        render_body(s.branches[i].body, out);
      }
      out += " fi";
      return;
  }
}

void render_body(const std::vector<Statement>& body, std::string& out) {
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (i) out += "; ";
    render_stmt(body[i], out);
  }
}

struct Collector {
  std::set<std::string> bound;
  VarSet defs;
  VarSet refs;

  bool visible(const Variable& v) const { return v.index || !bound.contains(v.base); }

  void expr(const Expression& e) {
    if (e.kind == EK::Var) {
      Variable v{e.text, e.index};
      if (visible(v)) refs.insert(v);
    }
    for (const auto& a : e.args) expr(a);
  }

  void body(const std::vector<Statement>& stmts) {
    for (const auto& s : stmts) {
      switch (s.kind) {
        case SK::Skip: break;
        case SK::Receive: bound.insert(s.binder); break;
        case SK::Assign:
          expr(s.value);
          if (!is_constant_name(s.target.base) && visible(s.target)) defs.insert(s.target);
          break;
        case SK::IfFi:
          for (const auto& b : s.branches) {
            expr(b.guard);
            body(b.body);
          }
          break;
      }
    }
  }
};

}  // namespace

Variable parse_variable(std::string_view text) {
  static const std::set<std::string> none;
  Parser p(text, none);
  auto v = p.variable();
  p.expect_end();
  return v;
}

Program parse_program(std::string_view text, const std::set<std::string>& known_stimuli) {
  return Parser(text, known_stimuli).parse();
}

std::string render(const Program& p) {
  std::string out;
  render_body(p.body, out);
  return out;
}

std::string render(const Expression& e) {
  std::string out;
  render_expr(e, out);
  return out;
}

VarSet def_vars(const Program& p) {
  Collector c;
  c.body(p.body);
  return c.defs;
}

VarSet ref_vars(const Program& p) {
  Collector c;
  c.body(p.body);
  return c.refs;
}

}  // namespace c2ka::gcl
