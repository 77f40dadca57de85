#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qcuml/diagnostics.hpp"

namespace qcuml {

// Gate-parameter expression tree: real literals, the constant pi, unary
// minus and binary + - * / ^. Comparison is structural; numeric literals are
// normalized at construction ("2.50" and "2.5" compare equal, "pi/2" and a
// float approximation do not).
class ParamExpr {
  public:
    enum class Kind { Number, Pi, Negate, Add, Subtract, Multiply, Divide, Power };

    static ParamExpr number(std::string_view literal);
    static ParamExpr pi();
    static ParamExpr negate(ParamExpr operand);
    static ParamExpr binary(Kind op, ParamExpr lhs, ParamExpr rhs);

    static Result<ParamExpr> parse(std::string_view text);
    static std::string normalize_literal(std::string_view text);

    Kind kind() const { return kind_; }
    const std::string& literal() const { return literal_; }
    std::size_t operand_count() const { return operands_.size(); }
    const ParamExpr& operand(std::size_t i) const { return operands_[i]; }

    // Minimal-parenthesis rendering; parse(to_string(e)) rebuilds an equal tree.
    std::string to_string() const;

    bool operator==(const ParamExpr&) const = default;

  private:
    ParamExpr() = default;

    Kind kind_ = Kind::Pi;
    std::string literal_;
    std::vector<ParamExpr> operands_;
};

std::string to_string(const std::vector<ParamExpr>& params);

}  // namespace qcuml
