#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "arcomp/factorization.hpp"
#include "arcomp/joint_table.hpp"
#include "arcomp/model.hpp"

namespace arcomp {

// Seeded constructive instance generators for the verification suites. All
// tabular rows are strictly positive, and wherever two models must agree the
// rows are copied bit for bit so ratio cancellation is exact.

struct FactorizedInstance {
    ModelFamily family;
    MaskPartition masks;
    Prompt prompt;
    int length = 0;
};

// Builds the background as a product of independent per-block factors and
// each expert by replacing only its own block's factor. Every expert mask is
// nonempty. Requires 2 <= length <= kMaxContextOrder + 1.
FactorizedInstance make_factorized_instance(std::uint64_t seed, int vocab_size, int length,
                                            int num_experts);

struct JointFactorizableInstance {
    ModelFamily family;
    Prompt prompt;
    int length = 0;
    // The fixed disjoint active interval of each expert, inclusive 0-based.
    std::vector<std::pair<int, int>> intervals;
};

// Background rows are random positive distributions over every prefix; each
// expert copies them bitwise outside its interval and deviates inside it.
JointFactorizableInstance make_jointly_factorizable_instance(std::uint64_t seed, int vocab_size,
                                                             int length, int num_experts);

struct FeatureSpaceInstance {
    ModelFamily family;
    Prompt prompt;
    int length = 0;
    SequenceBijection bijection;
};

// Unconstrained full-support random models plus a random per-position token
// permutation (commutation holds for any common-support family).
FeatureSpaceInstance make_feature_space_instance(std::uint64_t seed, int vocab_size, int length,
                                                 int num_experts);

// A single random full-support tabular model over every prefix shorter than
// `length`, keyed to `prompt`.
ConditionalModel make_random_tabular_model(std::uint64_t seed, const Vocab& vocab,
                                           const Prompt& prompt, int length);

}  // namespace arcomp
