#include "qcuml/diagnostics.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <tuple>

namespace qcuml {

Diagnostic error_at(std::string rule, int line, int column, std::string message) {
    Diagnostic d;
    d.rule = std::move(rule);
    d.severity = Severity::Error;
    d.line = line;
    d.column = column;
    d.message = std::move(message);
    return d;
}

Diagnostic error_for(std::string rule, std::vector<std::string> elements, std::string message) {
    Diagnostic d;
    d.rule = std::move(rule);
    d.severity = Severity::Error;
    d.elements = std::move(elements);
    d.message = std::move(message);
    return d;
}

Diagnostic warning_for(std::string rule, std::vector<std::string> elements, std::string message) {
    Diagnostic d = error_for(std::move(rule), std::move(elements), std::move(message));
    d.severity = Severity::Warning;
    return d;
}

std::string to_string(const Diagnostic& diag) {
    std::ostringstream out;
    if (diag.line > 0) {
        out << diag.line << ":" << diag.column << ": ";
    }
    out << diag.rule << " " << (diag.severity == Severity::Error ? "error" : "warning");
    if (!diag.elements.empty()) {
        out << " [";
        for (std::size_t i = 0; i < diag.elements.size(); ++i) {
            if (i > 0) out << ", ";
            out << diag.elements[i];
        }
        out << "]";
    }
    out << ": " << diag.message;
    return out.str();
}

bool has_errors(const std::vector<Diagnostic>& diags) {
    return std::any_of(diags.begin(), diags.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

namespace {

// "R2" < "R10"; non-numeric suffixes compare as plain strings.
std::pair<std::string, long> rule_key(const std::string& rule) {
    std::size_t i = rule.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(rule[i - 1]))) --i;
    if (i == rule.size()) return {rule, -1};
    return {rule.substr(0, i), std::stol(rule.substr(i))};
}

}  // namespace

void sort_diagnostics(std::vector<Diagnostic>& diags) {
    std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
        return std::make_tuple(rule_key(a.rule), a.elements, a.line, a.column, a.message) <
               std::make_tuple(rule_key(b.rule), b.elements, b.line, b.column, b.message);
    });
}

}  // namespace qcuml
