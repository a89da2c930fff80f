#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "arcomp/check_report.hpp"
#include "arcomp/model.hpp"

namespace arcomp {

// A partition of the 0-based positions {0..length-1} into one index set per
// expert plus the background complement.
struct MaskPartition {
    int length = 0;
    std::vector<std::vector<int>> expert_masks;
    std::vector<int> background_mask;

    // Throws InvariantViolation unless the sets are disjoint, sorted, in
    // range, and cover {0..length-1}.
    void validate() const;

    static MaskPartition from_expert_masks(int length, std::vector<std::vector<int>> masks);
};

// Per-path active intervals of one expert: for each full sequence y in X^l
// (indexed lexicographically by token ids), the inclusive 0-based position
// interval on which the expert's conditionals deviate from the background
// along that path; nullopt when the expert never deviates on the path.
struct ActiveIntervals {
    int length = 0;
    std::vector<std::optional<std::pair<int, int>>> per_path;

    bool ever_active() const;
};

// The family under test, background last in spirit but passed explicitly.
struct ModelFamily {
    ConditionalModel background;
    std::vector<ConditionalModel> experts;
};

// Exhaustively verifies the factorized-conditionals property of the family
// for the given masks at length l, using explicit joint tables:
//   1. under each expert, y_{M_i} is independent of its complement;
//   2. under the background, all blocks are mutually independent;
//   3. each expert matches the background marginally off its own mask.
// All comparisons entrywise within tol. Requires |vocab|^l within the
// enumeration cap.
CheckReport check_factorized_conditionals(const ModelFamily& family, const Prompt& prompt,
                                          const MaskPartition& masks, int length, double tol);

// Assigns position t to expert i iff p_i's conditional at t differs from the
// background's (entrywise > tol) on some prefix in X^t. Throws
// NoValidPartition when two experts both deviate at one position.
MaskPartition detect_masks(const ModelFamily& family, const Prompt& prompt, int length,
                           double tol);

// Verifies that along every path the positions where `model` deviates from
// the background form one contiguous block (possibly empty), and returns the
// per-path blocks. A non-contiguous deviation pattern fails with
// failure_kind = "NotFactorizable" and gap witnesses.
std::pair<CheckReport, ActiveIntervals> check_skill_factorizable(const ConditionalModel& model,
                                                                 const ConditionalModel& background,
                                                                 const Prompt& prompt, int length,
                                                                 double tol);

// Runs the skill check for every expert and additionally requires the active
// intervals to be pairwise disjoint along every path (failure_kind =
// "OverlappingIntervals" otherwise).
std::pair<CheckReport, std::vector<ActiveIntervals>> check_joint_factorizability(
    const ModelFamily& family, const Prompt& prompt, int length, double tol);

}  // namespace arcomp
