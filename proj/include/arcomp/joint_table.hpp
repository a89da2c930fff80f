#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "arcomp/composition.hpp"
#include "arcomp/model.hpp"

namespace arcomp {

inline constexpr std::size_t kEnumerationCap = 10'000'000;

// An explicit probability table over X^length, stored flat in lexicographic
// token-id order (index = y_0*V^(l-1) + y_1*V^(l-2) + ...). The ground truth
// the brute-force verifications run on.
class JointTable {
public:
    JointTable(Vocab vocab, int length, std::size_t cap = kEnumerationCap);

    int length() const { return length_; }
    const Vocab& vocab() const { return vocab_; }
    std::size_t size() const { return probs_.size(); }

    double& operator[](std::size_t idx) { return probs_[idx]; }
    double operator[](std::size_t idx) const { return probs_[idx]; }

    double at(const std::vector<TokenId>& sequence) const;
    double& at(const std::vector<TokenId>& sequence);

    std::size_t index_of(const std::vector<TokenId>& sequence) const;
    std::vector<TokenId> sequence_at(std::size_t idx) const;

    double total_mass() const;

    // Throws InvariantViolation unless entries are nonnegative and the table
    // sums to 1 within 1e-9.
    void validate(const char* context = "joint table") const;

    // Line-delimited export: sequence<TAB>probability with 17-significant-digit
    // decimals, in lexicographic sequence order.
    std::string export_records() const;

private:
    Vocab vocab_;
    int length_;
    std::vector<double> probs_;
};

// Full chain-rule enumeration of a single model or a composition.
// Throws EnumerationTooLarge when |vocab|^length exceeds the cap.
JointTable joint_of_model(const ConditionalModel& model, const Prompt& prompt, int length,
                          std::size_t cap = kEnumerationCap);
JointTable joint_of_model(const Composition& comp, const Prompt& prompt, int length,
                          std::size_t cap = kEnumerationCap);

// Marginal over the given 0-based positions (sorted ascending); the output
// table's positions are renumbered 0..|index_set|-1 in that order.
JointTable marginal(const JointTable& table, const std::vector<int>& index_set);

// A bijection on X^length: either independent per-position token
// permutations, or an explicit pairing of all |X|^length sequences.
class SequenceBijection {
public:
    // perms[t][token] = image token at position t; each row must be a
    // permutation of 0..V-1. Throws NotBijective otherwise.
    static SequenceBijection per_position(const Vocab& vocab, std::vector<std::vector<TokenId>> perms);

    // Explicit pairs (source, image); must be total and injective on
    // X^length. Throws NotBijective otherwise.
    static SequenceBijection from_pairs(const Vocab& vocab, int length,
                                        const std::vector<std::pair<std::vector<TokenId>, std::vector<TokenId>>>& pairs);

    static SequenceBijection identity(const Vocab& vocab, int length);

    int length() const { return length_; }
    std::vector<TokenId> apply(const std::vector<TokenId>& sequence) const;
    std::vector<TokenId> apply_inverse(const std::vector<TokenId>& sequence) const;

private:
    SequenceBijection(Vocab vocab, int length);

    Vocab vocab_;
    int length_;
    // Per-position form when non-empty, explicit form otherwise.
    std::vector<std::vector<TokenId>> perms_;
    std::vector<std::size_t> forward_;  // explicit: forward_[src_idx] = dst_idx
    std::vector<std::size_t> inverse_;
};

// Pushforward: out[f(y)] = in[y]. Mass is moved, never recomputed.
JointTable pushforward(const JointTable& table, const SequenceBijection& map);

struct ComposedTable {
    JointTable table;
    double normalizer = 0.0;  // mass before renormalization
};

// The distribution-level composition operator: entrywise
// p_b * prod_i (p_i / p_b), renormalized. Entries where the background has
// zero mass are dropped (with or without expert mass there). Throws
// EmptySupport when nothing survives, ShapeMismatch on incompatible tables.
ComposedTable compose_distribution_level(const JointTable& background,
                                         const std::vector<JointTable>& experts);

// Total variation distance: half the L1 distance. Throws ShapeMismatch.
double tv_distance(const JointTable& a, const JointTable& b);

}  // namespace arcomp
