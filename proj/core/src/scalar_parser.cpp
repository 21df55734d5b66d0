#include "spinorss/scalar_parser.hpp"

#include <cctype>

#include "spinorss/errors.hpp"

namespace spinorss {

namespace {

class Parser {
  public:
    Parser(const std::string& text, const Polynomial::Table& table)
        : text_(text), table_(table) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("trailing input at offset " + std::to_string(pos_) + " in '" + text_ + "'");
        return p;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        for (;;) {
            if (eat('*')) {
                acc *= unary();
            } else if (eat('/')) {
                const Polynomial d = unary();
                if (!d.is_constant())
                    throw ParseError("division by a non-constant in '" + text_ + "'");
                const GaussianRational c = d.constant_value();
                if (c.is_zero()) throw ParseError("division by zero in '" + text_ + "'");
                acc = acc.scaled(GaussianRational(1) / c);
            } else {
                return acc;
            }
        }
    }

    Polynomial unary() {
        if (eat('-')) return -unary();
        return factor();
    }

    Polynomial factor() {
        Polynomial base = primary();
        if (eat('^')) {
            const unsigned long e = integer();
            if (e > 64) throw ParseError("exponent too large in '" + text_ + "'");
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    unsigned long integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected an integer at offset " +
                                            std::to_string(pos_) + " in '" + text_ + "'");
        return std::stoul(text_.substr(start, pos_ - start));
    }

    Polynomial primary() {
        const char c = peek();
        if (c == '(') {
            eat('(');
            Polynomial p = expr();
            if (!eat(')')) throw ParseError("missing ')' in '" + text_ + "'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Polynomial(GaussianRational(BigRational::from_string(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            skip_ws();
            std::size_t start = pos_;
            ++pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string name = text_.substr(start, pos_ - start);
            if (name == "i") return Polynomial(GaussianRational::i());
            if (!table_) throw ParseError("symbol '" + name + "' used without a symbol table");
            auto id = table_->find(name);
            if (!id) throw ParseError("undeclared symbol '" + name + "'");
            return Polynomial::symbol(table_, *id);
        }
        throw ParseError("unexpected character at offset " + std::to_string(pos_) +
                         " in '" + text_ + "'");
    }

    const std::string& text_;
    const Polynomial::Table& table_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_scalar(const std::string& text, const Polynomial::Table& table) {
    return Parser(text, table).run();
}

} // namespace spinorss
