#pragma once

#include <string>

#include "arcomp/model.hpp"

namespace arcomp {

// Model file format, one JSON document per model:
//
//   { "format_version": 1,
//     "kind": "rule" | "tabular",
//     "vocab": ["A", "B", ...],
//     // rule payload:
//     "substitutions": [["A", "K"], ...],
//     "epsilon": 0.0,
//     // tabular payload:
//     "context_order": 1,
//     "default": [0.5, 0.5],                       // optional
//     "rows": [{"prompt": "AB", "context": ["A"], "probs": [0.25, 0.75]}, ...] }
//
// Probabilities round-trip exactly (doubles are emitted with enough digits to
// reparse bit-identically). Structural problems raise ParseError; numeric
// invariant problems (row sums, epsilon range) raise InvariantViolation.

ConditionalModel load_model(const std::string& document);
ConditionalModel load_model_file(const std::string& path);

std::string save_model(const ConditionalModel& model);
void save_model_file(const ConditionalModel& model, const std::string& path);

}  // namespace arcomp
