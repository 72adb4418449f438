#include "radial/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

namespace radial::expr {

namespace {

NodePtr make(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

NodePtr make_number(Real v) {
  auto n = std::make_shared<Node>();
  n->op = Op::number;
  n->value = v;
  return n;
}

struct FnName {
  const char* name;
  Fn fn;
};

constexpr FnName kFunctions[] = {
    {"exp", Fn::exp}, {"ln", Fn::ln},   {"sqrt", Fn::sqrt}, {"sgn", Fn::sgn},
    {"abs", Fn::abs}, {"sin", Fn::sin}, {"cos", Fn::cos},
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr run() {
    if (src_.empty()) throw parse_error("empty expression", 0);
    NodePtr e = parse_sum();
    skip_ws();
    if (pos_ != src_.size()) {
      throw parse_error("unexpected trailing input", pos_);
    }
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr parse_sum() {
    NodePtr lhs = parse_product();
    for (;;) {
      if (accept('+')) {
        lhs = make(Op::add, lhs, parse_product());
      } else if (accept('-')) {
        lhs = make(Op::subtract, lhs, parse_product());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_product() {
    NodePtr lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = make(Op::multiply, lhs, parse_unary());
      } else if (accept('/')) {
        lhs = make(Op::divide, lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_unary() {
    if (accept('-')) {
      return make(Op::negate, parse_unary());
    }
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_primary();
    if (accept('^')) {
      // right-associative; the exponent may carry a unary minus
      return make(Op::power, base, parse_unary());
    }
    return base;
  }

  NodePtr parse_primary() {
    const char c = peek();
    const std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_sum();
      if (!accept(')')) throw parse_error("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return parse_number();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string ident;
      while (pos_ < src_.size() &&
             std::isalnum(static_cast<unsigned char>(src_[pos_]))) {
        ident += src_[pos_++];
      }
      if (peek() == '(') {
        ++pos_;
        std::vector<NodePtr> args;
        args.push_back(parse_sum());
        while (accept(',')) args.push_back(parse_sum());
        if (!accept(')')) throw parse_error("expected ')'", pos_);
        for (const FnName& f : kFunctions) {
          if (ident == f.name) {
            if (args.size() != 1) {
              throw parse_error("function '" + ident + "' takes one argument",
                                start);
            }
            auto node = std::make_shared<Node>();
            node->op = Op::call;
            node->fn = f.fn;
            node->lhs = args[0];
            return node;
          }
        }
        throw parse_error("unknown function '" + ident + "'", start);
      }
      if (ident == "r") return make(Op::variable);
      throw parse_error("unknown identifier '" + ident + "'", start);
    }
    throw parse_error("expected a number, 'r', '(', or a function", pos_);
  }

  NodePtr parse_number() {
    const std::size_t start = pos_;
    bool digits = false;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
      digits = true;
    }
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        digits = true;
      }
    }
    if (!digits) throw parse_error("malformed number", start);
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t mark = pos_++;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      } else {
        pos_ = mark;  // 'e' belongs to something else; not ours
      }
    }
    const std::string text(src_.substr(start, pos_ - start));
    return make_number(std::strtold(text.c_str(), nullptr));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

NodePtr parse(std::string_view source) { return Parser(source).run(); }

Real eval(const Node& node, Real r) {
  switch (node.op) {
    case Op::number:
      return node.value;
    case Op::variable:
      return r;
    case Op::negate:
      return -eval(*node.lhs, r);
    case Op::add:
      return eval(*node.lhs, r) + eval(*node.rhs, r);
    case Op::subtract:
      return eval(*node.lhs, r) - eval(*node.rhs, r);
    case Op::multiply:
      return eval(*node.lhs, r) * eval(*node.rhs, r);
    case Op::divide:
      return eval(*node.lhs, r) / eval(*node.rhs, r);
    case Op::power:
      return std::pow(eval(*node.lhs, r), eval(*node.rhs, r));
    case Op::call: {
      const Real a = eval(*node.lhs, r);
      switch (node.fn) {
        case Fn::exp:
          return std::exp(a);
        case Fn::ln:
          return std::log(a);
        case Fn::sqrt:
          return std::sqrt(a);
        case Fn::sgn:
          return a > 0 ? 1.0L : (a < 0 ? -1.0L : 0.0L);
        case Fn::abs:
          return std::fabs(a);
        case Fn::sin:
          return std::sin(a);
        case Fn::cos:
          return std::cos(a);
      }
      break;
    }
  }
  throw numerical_error("expression: corrupt node");
}

std::string to_string(const Node& node) {
  switch (node.op) {
    case Op::number: {
      char buf[48];
      std::snprintf(buf, sizeof(buf), "%.21Lg", node.value);
      return buf;
    }
    case Op::variable:
      return "r";
    case Op::negate:
      return "(-" + to_string(*node.lhs) + ")";
    case Op::add:
      return "(" + to_string(*node.lhs) + "+" + to_string(*node.rhs) + ")";
    case Op::subtract:
      return "(" + to_string(*node.lhs) + "-" + to_string(*node.rhs) + ")";
    case Op::multiply:
      return "(" + to_string(*node.lhs) + "*" + to_string(*node.rhs) + ")";
    case Op::divide:
      return "(" + to_string(*node.lhs) + "/" + to_string(*node.rhs) + ")";
    case Op::power:
      return "(" + to_string(*node.lhs) + "^" + to_string(*node.rhs) + ")";
    case Op::call: {
      const char* name = nullptr;
      for (const FnName& f : kFunctions) {
        if (f.fn == node.fn) name = f.name;
      }
      return std::string(name) + "(" + to_string(*node.lhs) + ")";
    }
  }
  throw numerical_error("expression: corrupt node");
}

}  // namespace radial::expr
