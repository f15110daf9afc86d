#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "kstar/consequence.hpp"
#include "kstar/postulates.hpp"
#include "kstar/signature.hpp"

namespace kstar {

/// Exit status for CI: 0 all pass, 1 some violation.
inline int exit_code(const SuiteReport& r) { return r.all_pass() ? 0 : 1; }

/// One line per postulate; failures are followed by their witness.
std::string format_text(const SuiteReport& report, const Signature& sig);

/// Witness theories and formulas are rendered as canonical DNF.
nlohmann::json witness_json(const Violation& v, const Signature& sig);

/// {atoms, domain_size, mode, seed?, samples?, all_pass, results: [{postulate,
/// verdict, witness?, mode, seed?}]}
nlohmann::json to_json(const SuiteReport& report, const Signature& sig);

std::string format_text(const Violation& v, const Signature& sig);

std::string format_text(const RationalityReport& report, const Signature& sig);

} // namespace kstar
