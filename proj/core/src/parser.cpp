#include <cctype>

#include "hs/polynomial.hpp"

namespace hs {

namespace {

// Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := base ('^' INT)?
//   base   := INT ('/' INT)? | VAR | '(' expr ')'
// '*' is optional between factors; variable names come from the ring.
class Parser {
  public:
    Parser(const RingPtr& ring, const std::string& text, MonomialOrder order)
        : ring_(ring), text_(text), order_(order) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw input_error("unexpected character '" + std::string(1, text_[pos_]) +
                              "' at position " + std::to_string(pos_));
        return p;
    }

  private:
    const RingPtr& ring_;
    const std::string& text_;
    MonomialOrder order_;
    std::size_t pos_ = 0;

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
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Polynomial acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            if (eat('*')) {
                acc = acc * factor();
                continue;
            }
            char c = peek();
            if (std::isalpha(static_cast<unsigned char>(c)) ||
                std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == '_') {
                acc = acc * factor();
                continue;
            }
            break;
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (eat('^')) {
            mpz_class e = integer();
            if (e < 0 || e > 100000) throw input_error("exponent out of range");
            b = b.pow(static_cast<std::uint32_t>(e.get_ui()));
        }
        return b;
    }

    Polynomial base() {
        char c = peek();
        if (c == '(') {
            eat('(');
            Polynomial p = expr();
            if (!eat(')')) throw input_error("missing ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = integer();
            if (peek() == '/') {
                eat('/');
                mpz_class den = integer();
                if (den == 0) throw input_error("zero denominator");
                return Polynomial::constant(
                    ring_, ring_->field().from_mpq(mpq_class(num, den)), order_);
            }
            return Polynomial::constant(ring_, ring_->field().from_mpz(num), order_);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = identifier();
            auto idx = ring_->variable_index(name);
            if (!idx) throw input_error("unknown variable: " + name);
            return Polynomial::variable(ring_, *idx, order_);
        }
        throw input_error("expected coefficient, variable or '(' at position " +
                          std::to_string(pos_));
    }

    mpz_class integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw input_error("expected integer at position " + std::to_string(pos_));
        return mpz_class(text_.substr(start, pos_ - start));
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text, MonomialOrder order) {
    return Parser(ring, text, order).run();
}

}  // namespace hs
