#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arcomp/distribution.hpp"
#include "arcomp/vocab.hpp"

namespace arcomp {

enum class ModelKind { tabular, rule };

inline constexpr int kMaxContextOrder = 4;

// A substitution model: at step t it emits subst(prompt[t]) (or prompt[t]
// itself when unmapped) with probability 1 - eps*(V-1)/V and every other
// token with probability eps/V. eps = 0 is an exact point mass.
struct RulePayload {
    std::unordered_map<TokenId, TokenId> substitutions;
    double epsilon = 0.0;
};

// An explicit conditional table keyed by (full prompt string, trailing
// context of up to context_order prefix tokens). `fallback` covers unmapped
// contexts; without it an unmapped context is an evaluation error.
struct TabularPayload {
    int context_order = 0;
    // Key: prompt rendered as a string, then the trailing context token ids.
    std::map<std::pair<std::string, std::vector<TokenId>>, Distribution> rows;
    std::optional<Distribution> fallback;
};

// An autoregressive model: (prompt, prefix) -> next-token distribution.
// Immutable after construction; evaluation is pure and deterministic.
class ConditionalModel {
public:
    static ConditionalModel rule(Vocab vocab, RulePayload payload);
    static ConditionalModel tabular(Vocab vocab, TabularPayload payload);

    ModelKind kind() const { return kind_; }
    const Vocab& vocab() const { return vocab_; }

    const RulePayload& rule_payload() const;
    const TabularPayload& tabular_payload() const;

    // eval_conditional: the uniform evaluation interface.
    // Throws VocabMismatch on out-of-range ids, UnknownContext when a tabular
    // model has no row and no default (or a rule model runs past its prompt).
    Distribution eval(const Prompt& prompt, const std::vector<TokenId>& prefix) const;

private:
    ConditionalModel(ModelKind kind, Vocab vocab);

    ModelKind kind_;
    Vocab vocab_;
    std::shared_ptr<const RulePayload> rule_;
    std::shared_ptr<const TabularPayload> tabular_;
};

inline Distribution eval_conditional(const ConditionalModel& model, const Prompt& prompt,
                                     const std::vector<TokenId>& prefix) {
    return model.eval(prompt, prefix);
}

// Convenience builders used throughout the experiments and tests.
ConditionalModel make_identity_model(const Vocab& vocab, double epsilon = 0.0);
ConditionalModel make_substitution_model(const Vocab& vocab, const std::string& src,
                                         const std::string& dst, double epsilon = 0.0);

}  // namespace arcomp
