#pragma once

#include <optional>
#include <string>

#include "arcomp/check_report.hpp"
#include "arcomp/factorization.hpp"
#include "arcomp/joint_table.hpp"

namespace arcomp {

// Machine verification of the composition guarantees on one enumerable
// instance. Each verifier runs its own factorization precondition first and,
// if that fails, returns the failing precondition report.

// Composed joint equals the factorized product p_b(y_Mb) * prod_i p_i(y_Mi)
// within tol (total variation), and the composed marginal on each expert mask
// equals that expert's marginal entrywise within tol.
CheckReport verify_correctness(const ModelFamily& family, const Prompt& prompt,
                               const MaskPartition& masks, int length, double tol,
                               const CompositionOptions& options = {});

// At every enumerated prefix the composed conditional equals the active
// expert's on its interval and the background's elsewhere (entrywise within
// tol), and Z_t stays within tol_z of 1.
CheckReport verify_joint_factorizability(const ModelFamily& family, const Prompt& prompt,
                                         int length, double tol, double tol_z = 1e-12,
                                         const CompositionOptions& options = {});

// Discrete pushforward commutation: composing the pushforward tables equals
// pushing forward the composed table, within tol in total variation.
CheckReport verify_feature_space(const ModelFamily& family, const Prompt& prompt,
                                 const SequenceBijection& map, int length, double tol);

enum class TheoremKind { correctness, joint_factorizability, feature_space };

struct TheoremInstance {
    ModelFamily family;
    Prompt prompt;
    int length = 0;
    std::optional<MaskPartition> masks;           // correctness
    std::optional<SequenceBijection> bijection;   // feature_space
    CompositionOptions options;
};

CheckReport verify_theorem(const TheoremInstance& instance, TheoremKind which, double tol);

}  // namespace arcomp
