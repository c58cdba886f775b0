#include "surfsym/parse.hpp"

#include "surfsym/errors.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace surfsym {

namespace {

struct Lexer {
    const std::string& text;
    int line;
    size_t pos = 0;
    int col = 1;

    Lexer(const std::string& t, int line) : text(t), line(line) {}

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) advance();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    void advance() {
        ++pos;
        ++col;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }
};

class ExprParser {
public:
    ExprParser(const std::string& text, int line) : lex_(text, line) {}

    MPoly parse() {
        MPoly e = expr();
        if (lex_.peek() != '\0')
            lex_.fail(std::string("unexpected character '") + lex_.peek() + "'");
        return e;
    }

private:
    Lexer lex_;

    MPoly expr() {
        MPoly acc = term();
        while (true) {
            char c = lex_.peek();
            if (c == '+') {
                lex_.advance();
                acc += term();
            } else if (c == '-') {
                lex_.advance();
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    MPoly term() {
        MPoly acc = factor();
        while (lex_.peek() == '*') {
            lex_.advance();
            acc = acc * factor();
        }
        return acc;
    }

    MPoly factor() {
        char c = lex_.peek();
        if (c == '-') {
            lex_.advance();
            return -factor();
        }
        if (c == '+') {
            lex_.advance();
            return factor();
        }
        return power();
    }

    MPoly power() {
        MPoly base = atom();
        if (lex_.peek() == '^') {
            lex_.advance();
            unsigned long e = uint_literal();
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    MPoly atom() {
        char c = lex_.peek();
        if (c == '(') {
            lex_.advance();
            MPoly e = expr();
            if (lex_.peek() != ')') lex_.fail("expected ')'");
            lex_.advance();
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            int at = lex_.col;
            std::string name;
            while (lex_.pos < lex_.text.size() &&
                   std::isalnum(static_cast<unsigned char>(lex_.text[lex_.pos]))) {
                name.push_back(lex_.text[lex_.pos]);
                lex_.advance();
            }
            if (name == "t" || name == "s") return MPoly::variable(name);
            throw ParseError("unknown variable '" + name + "' (only t and s are "
                             "surface parameters)", lex_.line, at);
        }
        if (c == '\0') lex_.fail("unexpected end of expression");
        lex_.fail(std::string("unexpected character '") + c + "'");
    }

    unsigned long uint_literal() {
        lex_.skip_ws();
        if (lex_.pos >= lex_.text.size() ||
            !std::isdigit(static_cast<unsigned char>(lex_.text[lex_.pos])))
            lex_.fail("expected a nonnegative integer exponent");
        unsigned long v = 0;
        while (lex_.pos < lex_.text.size() &&
               std::isdigit(static_cast<unsigned char>(lex_.text[lex_.pos]))) {
            v = v * 10 + static_cast<unsigned long>(lex_.text[lex_.pos] - '0');
            if (v > 1000000) lex_.fail("exponent too large");
            lex_.advance();
        }
        return v;
    }

    MPoly rational_literal() {
        std::string digits;
        while (lex_.pos < lex_.text.size() &&
               std::isdigit(static_cast<unsigned char>(lex_.text[lex_.pos]))) {
            digits.push_back(lex_.text[lex_.pos]);
            lex_.advance();
        }
        mpz_class num(digits);
        if (lex_.peek() == '/') {
            size_t save_pos = lex_.pos;
            int save_col = lex_.col;
            lex_.advance();
            if (lex_.pos < lex_.text.size() &&
                std::isdigit(static_cast<unsigned char>(lex_.peek()))) {
                std::string den;
                while (lex_.pos < lex_.text.size() &&
                       std::isdigit(static_cast<unsigned char>(lex_.text[lex_.pos]))) {
                    den.push_back(lex_.text[lex_.pos]);
                    lex_.advance();
                }
                mpz_class d(den);
                if (d == 0) throw ParseError("zero denominator", lex_.line, save_col);
                return MPoly(Rat(num, d));
            }
            // not a rational literal; '/' is not an operator in this grammar
            lex_.pos = save_pos;
            lex_.col = save_col;
            lex_.fail("'/' is only allowed inside a rational literal p/q");
        }
        return MPoly(Rat(num));
    }
};

} // namespace

MPoly parse_expression(const std::string& text, int line) {
    return ExprParser(text, line).parse();
}

InputSpec parse_input(const std::string& text) {
    std::optional<MPoly> comp[3];
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected '<component> = <expression>'", lineno,
                             static_cast<int>(first) + 1);
        std::string head;
        for (size_t i = first; i < eq; ++i)
            if (!std::isspace(static_cast<unsigned char>(line[i]))) head.push_back(line[i]);
        int idx = head == "x" ? 0 : head == "y" ? 1 : head == "z" ? 2 : -1;
        if (idx < 0)
            throw ParseError("unknown component '" + head + "' (expected x, y or z)",
                             lineno, static_cast<int>(first) + 1);
        if (comp[idx])
            throw ParseError("duplicate definition of component " + head, lineno,
                             static_cast<int>(first) + 1);
        comp[idx] = parse_expression(line.substr(eq + 1), lineno);
    }
    const char* names[3] = {"x", "y", "z"};
    for (int i = 0; i < 3; ++i)
        if (!comp[i])
            throw ParseError(std::string("missing component ") + names[i], lineno, 1);
    return InputSpec{*comp[0], *comp[1], *comp[2]};
}

} // namespace surfsym
