#include "daugavet/expression.hpp"

#include <cctype>

namespace dgv {
namespace {

using Node = Expression::Node;
using Op = Expression::Op;
using NodePtr = std::shared_ptr<const Node>;

NodePtr leaf(Op op) { return std::make_shared<Node>(Node{op, {}, {}, nullptr, nullptr}); }

NodePtr number(std::string lexeme) {
    Rational v = Rational::parse(lexeme);
    return std::make_shared<Node>(Node{Op::num, std::move(lexeme), v, nullptr, nullptr});
}

NodePtr unary(Op op, NodePtr a) {
    return std::make_shared<Node>(Node{op, {}, {}, std::move(a), nullptr});
}

NodePtr binary(Op op, NodePtr a, NodePtr b) {
    return std::make_shared<Node>(Node{op, {}, {}, std::move(a), std::move(b)});
}

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("syntax error at position " + std::to_string(pos) + ": " + what);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[nodiscard]] char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    // sum := term (('+'|'-') term)*
    NodePtr sum() {
        NodePtr lhs = term();
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-') return lhs;
            ++pos;
            lhs = binary(c == '+' ? Op::add : Op::sub, std::move(lhs), term());
        }
    }

    // term := factor ('*' factor)*
    NodePtr term() {
        NodePtr lhs = factor();
        while (peek() == '*') {
            ++pos;
            lhs = binary(Op::mul, std::move(lhs), factor());
        }
        return lhs;
    }

    // factor := '-' factor | primary
    NodePtr factor() {
        if (peek() == '-') {
            ++pos;
            return unary(Op::neg, factor());
        }
        return primary();
    }

    NodePtr primary() {
        char c = peek();
        if (c == '(') {
            ++pos;
            NodePtr inner = sum();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos;
            bool dot = false;
            while (pos < text.size()) {
                char d = text[pos];
                if (d == '.') {
                    if (dot) fail("second decimal point in number");
                    dot = true;
                } else if (!std::isdigit(static_cast<unsigned char>(d))) {
                    break;
                }
                ++pos;
            }
            return number(std::string(text.substr(start, pos - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < text.size() &&
                   std::isalpha(static_cast<unsigned char>(text[pos])))
                ++pos;
            std::string_view ident = text.substr(start, pos - start);
            if (ident == "s") return leaf(Op::var_s);
            if (ident == "t") return leaf(Op::var_t);
            if (ident == "pi") return leaf(Op::pi);
            if (ident == "sin" || ident == "cos") {
                expect('(');
                NodePtr inner = sum();
                expect(')');
                return unary(ident == "sin" ? Op::sin : Op::cos, std::move(inner));
            }
            pos = start;
            fail("unknown identifier '" + std::string(ident) + "'");
        }
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
    }
};

int precedence(Op op) {
    switch (op) {
        case Op::add:
        case Op::sub: return 1;
        case Op::mul: return 2;
        case Op::neg: return 3;
        default: return 4;
    }
}

// min_prec: parenthesize when this node binds looser than the context needs.
void print_node(const Node& n, int min_prec, std::string& out) {
    int prec = precedence(n.op);
    bool paren = prec < min_prec;
    if (paren) out += '(';
    switch (n.op) {
        case Op::num: out += n.lexeme; break;
        case Op::var_s: out += 's'; break;
        case Op::var_t: out += 't'; break;
        case Op::pi: out += "pi"; break;
        case Op::add:
        case Op::sub:
            print_node(*n.a, 1, out);
            out += n.op == Op::add ? '+' : '-';
            print_node(*n.b, 2, out);
            break;
        case Op::mul:
            print_node(*n.a, 2, out);
            out += '*';
            print_node(*n.b, 3, out);
            break;
        case Op::neg:
            out += '-';
            print_node(*n.a, 3, out);
            break;
        case Op::sin:
        case Op::cos:
            out += n.op == Op::sin ? "sin(" : "cos(";
            print_node(*n.a, 0, out);
            out += ')';
            break;
    }
    if (paren) out += ')';
}

}  // namespace

Expression Expression::parse(std::string_view text) {
    Parser p{text};
    NodePtr root = p.sum();
    if (p.peek() != '\0') p.fail("trailing input");
    return Expression(std::move(root));
}

std::string Expression::print() const {
    std::string out;
    print_node(*root_, 0, out);
    return out;
}

bool Expression::node_eq(const Node* x, const Node* y) {
    if (x == y) return true;
    if (!x || !y) return false;
    if (x->op != y->op) return false;
    if (x->op == Op::num && x->lexeme != y->lexeme) return false;
    return node_eq(x->a.get(), y->a.get()) && node_eq(x->b.get(), y->b.get());
}

}  // namespace dgv
