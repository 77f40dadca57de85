#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qcuml {

enum class Severity { Error, Warning };

// One parse/lowering/validation finding. `line`/`column` are 1-based source
// coordinates (0 when there is no source location); `elements` holds model
// element ids for validator rules.
struct Diagnostic {
    std::string rule;
    Severity severity = Severity::Error;
    std::vector<std::string> elements;
    int line = 0;
    int column = 0;
    std::string message;

    bool operator==(const Diagnostic&) const = default;
};

Diagnostic error_at(std::string rule, int line, int column, std::string message);
Diagnostic error_for(std::string rule, std::vector<std::string> elements, std::string message);
Diagnostic warning_for(std::string rule, std::vector<std::string> elements, std::string message);

std::string to_string(const Diagnostic& diag);

bool has_errors(const std::vector<Diagnostic>& diags);

// Orders by rule id (natural order, so R2 < R10), then by element ids, then
// by source location.
void sort_diagnostics(std::vector<Diagnostic>& diags);

// A value or a list of diagnostics. A present value may still carry
// warning-severity diagnostics (e.g. tolerant readers).
template <typename T>
class [[nodiscard]] Result {
  public:
    Result(T value) : value_(std::move(value)) {}
    Result(Diagnostic diag) { diagnostics_.push_back(std::move(diag)); }
    Result(std::vector<Diagnostic> diags) : diagnostics_(std::move(diags)) {}
    Result(T value, std::vector<Diagnostic> warnings)
        : value_(std::move(value)), diagnostics_(std::move(warnings)) {}

    bool ok() const { return value_.has_value(); }
    explicit operator bool() const { return ok(); }

    const T& value() const& { return value_.value(); }
    T& value() & { return value_.value(); }
    T&& take() { return std::move(value_.value()); }

    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

  private:
    std::optional<T> value_;
    std::vector<Diagnostic> diagnostics_;
};

namespace codes {
inline constexpr const char* kUnknownRegister = "E-UNKNOWN-REGISTER";
inline constexpr const char* kIndexRange = "E-INDEX-RANGE";
inline constexpr const char* kDuplicateOperand = "E-DUPLICATE-OPERAND";
inline constexpr const char* kUnsupportedGate = "E-UNSUPPORTED-GATE";
inline constexpr const char* kParamArity = "E-PARAM-ARITY";
inline constexpr const char* kOperandCount = "E-OPERAND-COUNT";
inline constexpr const char* kDuplicateRegister = "E-DUPLICATE-REGISTER";
inline constexpr const char* kRegisterSize = "E-REGISTER-SIZE";
inline constexpr const char* kRegisterName = "E-REGISTER-NAME";
inline constexpr const char* kSyntax = "E-SYNTAX";
inline constexpr const char* kVersion = "E-VERSION";
inline constexpr const char* kClassicalIf = "E-CLASSICAL-IF";
inline constexpr const char* kBroadcastMismatch = "E-BROADCAST-MISMATCH";
inline constexpr const char* kDupId = "E-DUP-ID";
inline constexpr const char* kDanglingRef = "E-DANGLING-REF";
inline constexpr const char* kPartitionRequired = "E-PARTITION-REQUIRED";
inline constexpr const char* kPartitionForbidden = "E-PARTITION-FORBIDDEN";
inline constexpr const char* kDupStereotype = "E-DUP-STEREOTYPE";
inline constexpr const char* kAmbiguousRegister = "E-AMBIGUOUS-REGISTER";
inline constexpr const char* kBitUnlabeled = "E-BIT-UNLABELED";
inline constexpr const char* kLaneUnlabeled = "E-LANE-UNLABELED";
inline constexpr const char* kXml = "E-XML";
inline constexpr const char* kXmiSchema = "E-XMI-SCHEMA";
inline constexpr const char* kInvalidModel = "E-INVALID-MODEL";
inline constexpr const char* kUnknownElement = "W-UNKNOWN-ELEMENT";
inline constexpr const char* kUnknownAttribute = "W-UNKNOWN-ATTRIBUTE";
}  // namespace codes

}  // namespace qcuml
