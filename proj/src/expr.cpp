#include "diagforge/expr.hpp"

#include <cctype>
#include <vector>

namespace diagforge {

namespace {

struct Parser {
    std::vector<std::string> toks;
    size_t pos = 0;
    FieldPtr field;

    explicit Parser(const std::string& src, FieldPtr f) : field(std::move(f)) {
        size_t i = 0;
        while (i < src.size()) {
            char c = src[i];
            if (std::isspace((unsigned char)c)) {
                ++i;
            } else if (c == '#') {
                while (i < src.size() && src[i] != '\n') ++i;
            } else if (c == '(' || c == ')') {
                toks.emplace_back(1, c);
                ++i;
            } else {
                size_t j = i;
                while (j < src.size() && !std::isspace((unsigned char)src[j]) &&
                       src[j] != '(' && src[j] != ')' && src[j] != '#')
                    ++j;
                toks.push_back(src.substr(i, j - i));
                i = j;
            }
        }
    }

    const std::string& peek() {
        if (pos >= toks.size()) throw ExprError("unexpected end of expression");
        return toks[pos];
    }
    std::string next() {
        if (pos >= toks.size()) throw ExprError("unexpected end of expression");
        return toks[pos++];
    }

    static bool is_number(const std::string& t) {
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit((unsigned char)t[i]) && t[i] != '/') return false;
        return true;
    }

    RatFunc atom(const std::string& t) {
        if (is_number(t)) return RatFunc(MPoly::constant(FieldElem(parse_rat(t))));
        if (field && t == field->gen) return RatFunc(FieldElem::generator(field));
        for (char c : t)
            if (!std::isalnum((unsigned char)c) && c != '_')
                throw ExprError("bad symbol: " + t);
        return RatFunc(MPoly::variable(t));
    }

    RatFunc parse() {
        std::string t = next();
        if (t == ")") throw ExprError("unexpected ')'");
        if (t != "(") return atom(t);
        std::string op = next();
        std::vector<RatFunc> args;
        while (peek() != ")") args.push_back(parse());
        next();  // ')'
        if (args.empty()) throw ExprError("operator '" + op + "' with no arguments");
        if (op == "+") {
            RatFunc s = args[0];
            for (size_t i = 1; i < args.size(); ++i) s = s + args[i];
            return s;
        }
        if (op == "*") {
            RatFunc s = args[0];
            for (size_t i = 1; i < args.size(); ++i) s = s * args[i];
            return s;
        }
        if (op == "-" || op == "neg") {
            if (args.size() == 1) return -args[0];
            if (op == "-" && args.size() == 2) return args[0] - args[1];
            throw ExprError("'-' takes one or two arguments");
        }
        if (op == "/") {
            if (args.size() != 2) throw ExprError("'/' takes two arguments");
            return args[0] / args[1];
        }
        if (op == "^") {
            if (args.size() != 2) throw ExprError("'^' takes two arguments");
            const RatFunc& e = args[1];
            if (!e.is_constant() || !e.constant_value().is_rational())
                throw ExprError("'^' needs a constant integer exponent");
            Rat r = e.constant_value().rat();
            if (r.get_den() != 1) throw ExprError("'^' needs an integer exponent");
            return args[0].pow((long)r.get_num().get_si());
        }
        throw ExprError("unknown operator: " + op);
    }
};

}  // namespace

RatFunc parse_expr(const std::string& src, const FieldPtr& field) {
    Parser p(src, field);
    RatFunc r = p.parse();
    if (p.pos != p.toks.size()) throw ExprError("trailing tokens after expression");
    return r;
}

}  // namespace diagforge
