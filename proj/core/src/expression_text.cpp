#include "semreg/expression_text.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <cmath>

#include "semreg/errors.hpp"

namespace semreg {

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

std::string variable_name(std::size_t index, const std::vector<std::string>& names) {
  if (index < names.size()) return names[index];
  return "x" + std::to_string(index + 1);
}

void format_node(const ExprTree& tree, NodeId id, const std::vector<std::string>& names,
                 std::string& out) {
  const Node& n = tree.node(id);
  switch (n.kind) {
    case Node::Kind::Constant:
      out += format_real(n.value);
      return;
    case Node::Kind::Variable:
      out += variable_name(n.variable, names);
      return;
    case Node::Kind::Operator:
      out += '(';
      format_node(tree, tree.left(id), names, out);
      out += ' ';
      out += op_symbol(n.op);
      out += ' ';
      format_node(tree, tree.right(id), names, out);
      out += ')';
      return;
  }
}

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& names)
      : text_(text), names_(names) {}

  ExprTree parse() {
    ExprTree tree = operand();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return tree;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  ExprTree operand() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprTree lhs = operand();
      skip_space();
      const Op op = parse_op();
      ExprTree rhs = operand();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return ExprTree::binary(op, lhs, rhs);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.') {
      return number();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Op parse_op() {
    if (pos_ >= text_.size()) throw ParseError("expected operator", pos_);
    switch (text_[pos_++]) {
      case '+': return Op::Add;
      case '-': return Op::Sub;
      case '*': return Op::Mul;
      case '/': return Op::Div;
      default: throw ParseError("expected operator", pos_ - 1);
    }
  }

  ExprTree number() {
    const std::size_t start = pos_;
    const char* first = text_.data() + pos_;
    if (*first == '+') ++first;  // from_chars rejects a leading '+'
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), value);
    if (ec != std::errc() || !std::isfinite(value)) throw ParseError("invalid number", start);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return ExprTree::constant(value);
  }

  ExprTree name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view ident = text_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == ident) return ExprTree::variable(i);
    }
    if (names_.empty() && ident.size() > 1 && ident[0] == 'x') {
      std::size_t index = 0;
      const auto [ptr, ec] = std::from_chars(ident.data() + 1, ident.data() + ident.size(), index);
      if (ec == std::errc() && ptr == ident.data() + ident.size() && index >= 1) {
        return ExprTree::variable(index - 1);
      }
    }
    throw ParseError("unknown variable '" + std::string(ident) + "'", start);
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_expression(const ExprTree& tree, const std::vector<std::string>& names) {
  std::string out;
  format_node(tree, 0, names, out);
  return out;
}

ExprTree parse_expression(std::string_view text, const std::vector<std::string>& names) {
  return Parser(text, names).parse();
}

}  // namespace semreg
