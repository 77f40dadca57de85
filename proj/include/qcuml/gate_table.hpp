#pragma once

#include <optional>
#include <string_view>

namespace qcuml {

// The supported qelib1 subset. Plain gates take exactly one target qubit;
// controlled mnemonics split into (base gate, control count) and re-join on
// emission.
struct PlainGateSpec {
    std::string_view mnemonic;
    int param_count;
};

struct ControlledGateSpec {
    std::string_view mnemonic;
    std::string_view base;
    int param_count;
    int control_count;
};

const PlainGateSpec* find_plain_gate(std::string_view mnemonic);
const ControlledGateSpec* find_controlled_gate(std::string_view mnemonic);

// Inverse lookup: (base mnemonic, control count) -> controlled mnemonic.
std::optional<std::string_view> controlled_mnemonic_for(std::string_view base, int control_count);

}  // namespace qcuml
