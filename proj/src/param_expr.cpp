#include "qcuml/param_expr.hpp"

#include <cctype>
#include <stdexcept>

namespace qcuml {

ParamExpr ParamExpr::number(std::string_view literal) {
    ParamExpr e;
    e.kind_ = Kind::Number;
    e.literal_ = normalize_literal(literal);
    return e;
}

ParamExpr ParamExpr::pi() {
    ParamExpr e;
    e.kind_ = Kind::Pi;
    return e;
}

ParamExpr ParamExpr::negate(ParamExpr operand) {
    ParamExpr e;
    e.kind_ = Kind::Negate;
    e.operands_.push_back(std::move(operand));
    return e;
}

ParamExpr ParamExpr::binary(Kind op, ParamExpr lhs, ParamExpr rhs) {
    ParamExpr e;
    e.kind_ = op;
    e.operands_.push_back(std::move(lhs));
    e.operands_.push_back(std::move(rhs));
    return e;
}

std::string ParamExpr::normalize_literal(std::string_view text) {
    std::string mantissa;
    std::string exponent;
    std::size_t epos = text.find_first_of("eE");
    if (epos != std::string_view::npos) {
        mantissa = std::string(text.substr(0, epos));
        exponent = std::string(text.substr(epos + 1));
    } else {
        mantissa = std::string(text);
    }

    std::string intpart = mantissa;
    std::string fracpart;
    std::size_t dot = mantissa.find('.');
    if (dot != std::string::npos) {
        intpart = mantissa.substr(0, dot);
        fracpart = mantissa.substr(dot + 1);
    }
    while (intpart.size() > 1 && intpart.front() == '0') intpart.erase(intpart.begin());
    if (intpart.empty()) intpart = "0";
    while (!fracpart.empty() && fracpart.back() == '0') fracpart.pop_back();

    std::string out = intpart;
    if (!fracpart.empty()) {
        out += '.';
        out += fracpart;
    }

    if (!exponent.empty()) {
        bool neg = false;
        std::size_t i = 0;
        if (exponent[0] == '+' || exponent[0] == '-') {
            neg = exponent[0] == '-';
            i = 1;
        }
        std::string digits = exponent.substr(i);
        while (digits.size() > 1 && digits.front() == '0') digits.erase(digits.begin());
        if (digits != "0" && !digits.empty()) {
            out += 'e';
            if (neg) out += '-';
            out += digits;
        }
    }
    return out;
}

namespace {

// expr   := term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*
// factor := '-' factor | power
// power  := atom ('^' factor)?
// atom   := number | 'pi' | '(' expr ')'
class ExprParser {
  public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    Result<ParamExpr> run() {
        skip_space();
        if (at_end()) return fail("empty expression");
        auto expr = parse_expr();
        if (!expr.ok()) return expr;
        skip_space();
        if (!at_end()) return fail("unexpected trailing input in expression");
        return expr;
    }

  private:
    Result<ParamExpr> parse_expr() {
        auto lhs = parse_term();
        if (!lhs.ok()) return lhs;
        ParamExpr node = lhs.take();
        while (true) {
            skip_space();
            if (consume('+')) {
                auto rhs = parse_term();
                if (!rhs.ok()) return rhs;
                node = ParamExpr::binary(ParamExpr::Kind::Add, std::move(node), rhs.take());
            } else if (consume('-')) {
                auto rhs = parse_term();
                if (!rhs.ok()) return rhs;
                node = ParamExpr::binary(ParamExpr::Kind::Subtract, std::move(node), rhs.take());
            } else {
                return node;
            }
        }
    }

    Result<ParamExpr> parse_term() {
        auto lhs = parse_factor();
        if (!lhs.ok()) return lhs;
        ParamExpr node = lhs.take();
        while (true) {
            skip_space();
            if (consume('*')) {
                auto rhs = parse_factor();
                if (!rhs.ok()) return rhs;
                node = ParamExpr::binary(ParamExpr::Kind::Multiply, std::move(node), rhs.take());
            } else if (consume('/')) {
                auto rhs = parse_factor();
                if (!rhs.ok()) return rhs;
                node = ParamExpr::binary(ParamExpr::Kind::Divide, std::move(node), rhs.take());
            } else {
                return node;
            }
        }
    }

    Result<ParamExpr> parse_factor() {
        skip_space();
        if (consume('-')) {
            auto operand = parse_factor();
            if (!operand.ok()) return operand;
            return ParamExpr::negate(operand.take());
        }
        return parse_power();
    }

    Result<ParamExpr> parse_power() {
        auto base = parse_atom();
        if (!base.ok()) return base;
        skip_space();
        if (consume('^')) {
            auto exp = parse_factor();
            if (!exp.ok()) return exp;
            return ParamExpr::binary(ParamExpr::Kind::Power, base.take(), exp.take());
        }
        return base;
    }

    Result<ParamExpr> parse_atom() {
        skip_space();
        if (at_end()) return fail("expected expression");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return parse_number();
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            std::string_view word = text_.substr(start, pos_ - start);
            if (word == "pi") return ParamExpr::pi();
            return fail("unknown identifier '" + std::string(word) + "' in expression");
        }
        if (consume('(')) {
            auto inner = parse_expr();
            if (!inner.ok()) return inner;
            skip_space();
            if (!consume(')')) return fail("expected ')'");
            return inner;
        }
        return fail(std::string("unexpected character '") + c + "' in expression");
    }

    Result<ParamExpr> parse_number() {
        std::size_t start = pos_;
        bool seen_digit = false;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
            seen_digit = true;
        }
        if (!at_end() && text_[pos_] == '.') {
            ++pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
                seen_digit = true;
            }
        }
        if (!seen_digit) return fail("malformed numeric literal");
        if (!at_end() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (!at_end() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                pos_ = mark;
            } else {
                while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            }
        }
        return ParamExpr::number(text_.substr(start, pos_ - start));
    }

    Result<ParamExpr> fail(std::string message) {
        return Diagnostic{error_at(codes::kSyntax, 0, static_cast<int>(pos_) + 1, std::move(message))};
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool at_end() const { return pos_ >= text_.size(); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

int precedence(ParamExpr::Kind kind) {
    switch (kind) {
        case ParamExpr::Kind::Add:
        case ParamExpr::Kind::Subtract:
            return 1;
        case ParamExpr::Kind::Multiply:
        case ParamExpr::Kind::Divide:
            return 2;
        case ParamExpr::Kind::Negate:
            return 3;
        case ParamExpr::Kind::Power:
            return 4;
        case ParamExpr::Kind::Number:
        case ParamExpr::Kind::Pi:
            return 5;
    }
    return 5;
}

char op_char(ParamExpr::Kind kind) {
    switch (kind) {
        case ParamExpr::Kind::Add: return '+';
        case ParamExpr::Kind::Subtract: return '-';
        case ParamExpr::Kind::Multiply: return '*';
        case ParamExpr::Kind::Divide: return '/';
        case ParamExpr::Kind::Power: return '^';
        default: throw std::logic_error("not a binary operator");
    }
}

void render(const ParamExpr& e, int min_prec, std::string& out) {
    int prec = precedence(e.kind());
    bool parens = prec < min_prec;
    if (parens) out += '(';
    switch (e.kind()) {
        case ParamExpr::Kind::Number:
            out += e.literal();
            break;
        case ParamExpr::Kind::Pi:
            out += "pi";
            break;
        case ParamExpr::Kind::Negate:
            out += '-';
            render(e.operand(0), prec, out);
            break;
        case ParamExpr::Kind::Power:
            render(e.operand(0), prec + 1, out);
            out += '^';
            render(e.operand(1), prec, out);
            break;
        default:
            render(e.operand(0), prec, out);
            out += op_char(e.kind());
            render(e.operand(1), prec + 1, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace

Result<ParamExpr> ParamExpr::parse(std::string_view text) {
    return ExprParser(text).run();
}

std::string ParamExpr::to_string() const {
    std::string out;
    render(*this, 0, out);
    return out;
}

std::string to_string(const std::vector<ParamExpr>& params) {
    std::string out;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i > 0) out += ", ";
        out += params[i].to_string();
    }
    return out;
}

}  // namespace qcuml
