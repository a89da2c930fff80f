#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arcomp/composition.hpp"

namespace arcomp {

enum class ExperimentId {
    letter_sub,
    length_gen,
    thm_correctness,
    thm_joint,
    thm_feature,
    task_arith,
};

struct ExperimentConfig {
    ExperimentId id = ExperimentId::letter_sub;
    std::uint64_t seed = 0;
    int trial_count = 1000;
    std::vector<int> lengths = {16};      // length_gen; letter_sub uses front()
    std::vector<std::string> model_paths; // optional override: experts..., background last
    std::string output_path;              // empty = no result file
    bool allow_spaces = false;            // letter prompts may include the space token
    CompositionOptions composition;       // letter experiments default to restricted
    double tol = 1e-10;                   // theorem suites
};

struct TrialRecord {
    std::string input;
    std::string output;
    std::string reference;
    bool match = false;
};

struct ExperimentResult {
    std::string name;
    std::uint64_t seed = 0;
    std::vector<TrialRecord> trials;
    double success_rate = 0.0;  // matches / trials, exact
    double max_violation = 0.0; // theorem/merge suites
    double elapsed_ms = 0.0;

    // Deterministic byte-identical result document: one tab-separated record
    // per trial (trial_id, input, output, reference, match) followed by a
    // summary footer. Timing is intentionally excluded.
    std::string to_records() const;
};

ExperimentResult run_letter_substitution(const ExperimentConfig& cfg);
ExperimentResult run_length_generalization(const ExperimentConfig& cfg);
ExperimentResult run_theorem_suite(const ExperimentConfig& cfg);
ExperimentResult run_task_arith_demo(const ExperimentConfig& cfg);

// Applies every substitution to the prompt: the reference transform letter
// experiments are scored against.
std::vector<TokenId> reference_substitution(const std::vector<TokenId>& prompt,
                                            const std::vector<std::pair<TokenId, TokenId>>& substitutions);

}  // namespace arcomp
