#pragma once

#include "swarmcheck/alpha.hpp"
#include "swarmcheck/checker.hpp"
#include "swarmcheck/model.hpp"

#include <stdexcept>
#include <string>

namespace swarmcheck {

struct SmvUnsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SmvParseError : std::runtime_error {
    SmvParseError(int line, const std::string &what) : std::runtime_error(what), line_number(line) {}

    int line_number;
};

// Emits a complete model-checker source file (NuSMV input dialect) for the
// configuration: one robot module with the decision predicates, a main
// module declaring exactly the variables of signature(params) with their
// transition relation, and the property as an LTL specification. Output is
// byte-stable for identical inputs.
std::string emit_smv(const ModelParams &params, const Property &prop);
std::string emit_smv(const ModelParams &params); // property: F all_connected

// Recovers every state variable's domain size from emitted text.
// Input-variable sections and module instances carry no state and are
// skipped. Throws SmvParseError on malformed input.
std::vector<DomainVar> parse_domains(const std::string &text);

std::uint64_t domain_product(const std::vector<DomainVar> &vars);

} // namespace swarmcheck
