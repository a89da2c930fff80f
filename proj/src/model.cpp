#include "arcomp/model.hpp"

#include <algorithm>
#include <string>

#include "arcomp/errors.hpp"

namespace arcomp {

namespace {

void check_ids(const Vocab& vocab, const std::vector<TokenId>& ids, const char* what) {
    for (TokenId id : ids) {
        if (id < 0 || id >= vocab.size()) {
            throw VocabMismatch(std::string(what) + " id " + std::to_string(id) +
                                " out of range for vocab of size " + std::to_string(vocab.size()));
        }
    }
}

std::string context_string(const std::vector<TokenId>& ctx) {
    std::string s = "[";
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(ctx[i]);
    }
    return s + "]";
}

}  // namespace

ConditionalModel::ConditionalModel(ModelKind kind, Vocab vocab)
    : kind_(kind), vocab_(std::move(vocab)) {}

ConditionalModel ConditionalModel::rule(Vocab vocab, RulePayload payload) {
    if (!(payload.epsilon >= 0.0) || payload.epsilon >= 0.5) {
        throw InvariantViolation("rule epsilon must lie in [0, 0.5), got " +
                                 std::to_string(payload.epsilon));
    }
    for (const auto& [src, dst] : payload.substitutions) {
        if (src < 0 || src >= vocab.size() || dst < 0 || dst >= vocab.size()) {
            throw VocabMismatch("substitution pair (" + std::to_string(src) + ", " +
                                std::to_string(dst) + ") out of range");
        }
    }
    ConditionalModel m(ModelKind::rule, std::move(vocab));
    m.rule_ = std::make_shared<const RulePayload>(std::move(payload));
    return m;
}

ConditionalModel ConditionalModel::tabular(Vocab vocab, TabularPayload payload) {
    if (payload.context_order < 0 || payload.context_order > kMaxContextOrder) {
        throw InvariantViolation("context_order must lie in [0, " +
                                 std::to_string(kMaxContextOrder) + "], got " +
                                 std::to_string(payload.context_order));
    }
    const int v = vocab.size();
    for (const auto& [key, dist] : payload.rows) {
        if (dist.size() != v) {
            throw InvariantViolation("tabular row for prompt '" + key.first +
                                     "' has wrong width " + std::to_string(dist.size()));
        }
        if (static_cast<int>(key.second.size()) > payload.context_order) {
            throw InvariantViolation("tabular row context longer than context_order");
        }
        dist.validate("tabular row");
        for (TokenId id : key.second) {
            if (id < 0 || id >= v) {
                throw VocabMismatch("tabular row context id " + std::to_string(id) +
                                    " out of range");
            }
        }
    }
    if (payload.fallback) {
        if (payload.fallback->size() != v) {
            throw InvariantViolation("default row has wrong width");
        }
        payload.fallback->validate("default row");
    }
    ConditionalModel m(ModelKind::tabular, std::move(vocab));
    m.tabular_ = std::make_shared<const TabularPayload>(std::move(payload));
    return m;
}

const RulePayload& ConditionalModel::rule_payload() const {
    if (kind_ != ModelKind::rule) throw InvariantViolation("model is not a rule model");
    return *rule_;
}

const TabularPayload& ConditionalModel::tabular_payload() const {
    if (kind_ != ModelKind::tabular) throw InvariantViolation("model is not a tabular model");
    return *tabular_;
}

Distribution ConditionalModel::eval(const Prompt& prompt, const std::vector<TokenId>& prefix) const {
    check_ids(vocab_, prompt.ids, "prompt");
    check_ids(vocab_, prefix, "prefix");

    const int v = vocab_.size();
    if (kind_ == ModelKind::rule) {
        const std::size_t position = prefix.size();
        if (position >= prompt.ids.size()) {
            throw UnknownContext("rule model evaluated at position " + std::to_string(position) +
                                 " beyond prompt of length " + std::to_string(prompt.ids.size()));
        }
        const TokenId source = prompt.ids[position];
        auto it = rule_->substitutions.find(source);
        const TokenId target = it == rule_->substitutions.end() ? source : it->second;
        const double eps = rule_->epsilon;
        std::vector<double> probs(static_cast<std::size_t>(v), eps / v);
        probs[static_cast<std::size_t>(target)] = 1.0 - eps * (v - 1) / v;
        return Distribution(std::move(probs));
    }

    const TabularPayload& tab = *tabular_;
    const std::size_t ctx_len = std::min<std::size_t>(prefix.size(),
                                                      static_cast<std::size_t>(tab.context_order));
    std::vector<TokenId> context(prefix.end() - static_cast<std::ptrdiff_t>(ctx_len), prefix.end());
    auto it = tab.rows.find({vocab_.render(prompt.ids), context});
    if (it != tab.rows.end()) return it->second;
    if (tab.fallback) return *tab.fallback;
    throw UnknownContext("no tabular row for prompt '" + vocab_.render(prompt.ids) +
                         "', context " + context_string(context) + ", and no default row");
}

ConditionalModel make_identity_model(const Vocab& vocab, double epsilon) {
    RulePayload payload;
    payload.epsilon = epsilon;
    return ConditionalModel::rule(vocab, std::move(payload));
}

ConditionalModel make_substitution_model(const Vocab& vocab, const std::string& src,
                                         const std::string& dst, double epsilon) {
    const TokenId s = vocab.id_of(src);
    const TokenId d = vocab.id_of(dst);
    if (s < 0 || d < 0) {
        throw VocabMismatch("substitution tokens '" + src + "' -> '" + dst +
                            "' not in the vocabulary");
    }
    RulePayload payload;
    payload.substitutions.emplace(s, d);
    payload.epsilon = epsilon;
    return ConditionalModel::rule(vocab, std::move(payload));
}

}  // namespace arcomp
