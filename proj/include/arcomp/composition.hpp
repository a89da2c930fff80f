#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arcomp/model.hpp"

namespace arcomp {

// How zero-probability tokens enter a composed step.
//  - smoothed:   every token participates; zero probabilities are clamped at
//                the log floor before the ratio sum.
//  - restricted: only tokens supported by at least one component participate;
//                the clamped ratio sum on that set realizes the exact
//                cancellation algebra for deterministic models (matching
//                zeros cancel, net-uncancelled zeros vanish after softmax).
enum class SupportMode { smoothed, restricted };

// Which component log-probabilities get clamped at the floor. `all` clamps
// background and experts symmetrically; `base` clamps only the background.
enum class ClampTarget { all, base };

struct CompositionOptions {
    double clamp_floor = -1e4;  // must be < 0
    SupportMode support_mode = SupportMode::smoothed;
    ClampTarget clamp_target = ClampTarget::all;
};

// An ordered bundle: one background model plus k >= 1 experts, all over the
// same vocabulary. Immutable; all engine entry points are pure.
class Composition {
public:
    Composition(ConditionalModel background, std::vector<ConditionalModel> experts,
                CompositionOptions options = {});

    const ConditionalModel& background() const { return background_; }
    const std::vector<ConditionalModel>& experts() const { return experts_; }
    int num_experts() const { return static_cast<int>(experts_.size()); }
    const CompositionOptions& options() const { return options_; }
    const Vocab& vocab() const { return background_.vocab(); }

private:
    ConditionalModel background_;
    std::vector<ConditionalModel> experts_;
    CompositionOptions options_;
};

// One composed decoding step.
//   log_unnormalized[y] = clamp(log pb(y)) + sum_i (clamp(log pi(y)) - clamp(log pb(y)))
// with clamp(v) = max(v, clamp_floor) (experts unclamped under ClampTarget::base),
// -infinity for tokens excluded in restricted mode. `composed` is the
// softmax over the participating tokens; log_normalizer = log Z_t.
struct StepScore {
    std::vector<double> log_unnormalized;
    double log_normalizer = 0.0;
    Distribution composed;

    double normalizer() const;  // Z_t = exp(log_normalizer)
};

enum class StopReason { max_len, eos, all_mass_clamped };

struct DecodeResult {
    std::vector<TokenId> tokens;
    std::vector<StepScore> per_step;
    StopReason stop_reason = StopReason::max_len;
};

// Per-component view of the end-of-sequence token at one step.
struct EosReport {
    double background_eos_prob = 0.0;
    std::vector<double> expert_eos_probs;
    double composed_eos_prob = 0.0;
    // Clamped unnormalized composed log score of eos (before softmax).
    double composed_eos_log_unnormalized = 0.0;
    // max_i |clamp(log pi(eos)) - clamp(log pb(eos))|
    double disagreement = 0.0;
};

// Throws DegenerateStep when no token has normalizable mass, VocabMismatch on
// invalid ids.
StepScore compose_step(const Composition& comp, const Prompt& prompt,
                       const std::vector<TokenId>& prefix);

// Chain-rule log-likelihood of y under the composed model. -infinity for
// sequences off the composed support. DegenerateStep carries the position.
double sequence_likelihood(const Composition& comp, const Prompt& prompt,
                           const std::vector<TokenId>& y);

// Greedy decoding; ties broken toward the lowest token id. A degenerate step
// ends decoding with StopReason::all_mass_clamped instead of throwing.
DecodeResult decode_greedy(const Composition& comp, const Prompt& prompt, int max_len,
                           std::optional<TokenId> eos = std::nullopt);

// Ancestral sampling with a fixed 64-bit seed; identical seed and inputs give
// identical output, bit for bit.
DecodeResult decode_sample(const Composition& comp, const Prompt& prompt, int max_len,
                           std::uint64_t seed, std::optional<TokenId> eos = std::nullopt);

EosReport eos_agreement_report(const Composition& comp, const Prompt& prompt,
                               const std::vector<TokenId>& prefix, TokenId eos);

// Line-delimited per-step trace: step, token, composed_logprob, Z_t,
// active_component_guess (expert index of the largest clamped log deviation
// from the background at that step, or "background").
std::string format_step_trace(const Composition& comp, const Prompt& prompt,
                              const DecodeResult& result);

}  // namespace arcomp
