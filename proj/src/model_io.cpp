#include "arcomp/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "arcomp/errors.hpp"

namespace arcomp {

using nlohmann::json;

namespace {

constexpr int kFormatVersion = 1;

const json& require_field(const json& doc, const char* name) {
    auto it = doc.find(name);
    if (it == doc.end()) {
        throw ParseError(std::string("missing field '") + name + "'");
    }
    return *it;
}

Distribution parse_probs(const json& arr, const char* where) {
    if (!arr.is_array()) throw ParseError(std::string(where) + ": probs must be an array");
    std::vector<double> p;
    p.reserve(arr.size());
    for (const auto& x : arr) {
        if (!x.is_number()) throw ParseError(std::string(where) + ": probs must be numeric");
        p.push_back(x.get<double>());
    }
    return Distribution(std::move(p));
}

Vocab parse_vocab(const json& doc) {
    const json& arr = require_field(doc, "vocab");
    if (!arr.is_array()) throw ParseError("vocab must be an array of tokens");
    std::vector<std::string> tokens;
    tokens.reserve(arr.size());
    for (const auto& t : arr) {
        if (!t.is_string()) throw ParseError("vocab tokens must be strings");
        tokens.push_back(t.get<std::string>());
    }
    try {
        return Vocab(std::move(tokens));
    } catch (const InvariantViolation& e) {
        // Bad vocabularies are a malformed document, not a runtime state.
        throw ParseError(std::string("vocab: ") + e.what());
    }
}

ConditionalModel parse_rule(const json& doc, Vocab vocab) {
    RulePayload payload;
    payload.epsilon = require_field(doc, "epsilon").get<double>();
    const json& subs = require_field(doc, "substitutions");
    if (!subs.is_array()) throw ParseError("substitutions must be an array of [src, dst] pairs");
    for (const auto& pair : subs) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
            throw ParseError("substitutions entries must be [src, dst] token pairs");
        }
        const TokenId src = vocab.id_of(pair[0].get<std::string>());
        const TokenId dst = vocab.id_of(pair[1].get<std::string>());
        if (src < 0 || dst < 0) {
            throw ParseError("substitution pair [" + pair[0].get<std::string>() + ", " +
                             pair[1].get<std::string>() + "] uses tokens outside the vocab");
        }
        if (!payload.substitutions.emplace(src, dst).second) {
            throw ParseError("duplicate substitution source '" + pair[0].get<std::string>() + "'");
        }
    }
    return ConditionalModel::rule(std::move(vocab), std::move(payload));
}

ConditionalModel parse_tabular(const json& doc, Vocab vocab) {
    TabularPayload payload;
    payload.context_order = require_field(doc, "context_order").get<int>();
    if (auto it = doc.find("default"); it != doc.end()) {
        payload.fallback = parse_probs(*it, "default");
    }
    if (auto it = doc.find("rows"); it != doc.end()) {
        if (!it->is_array()) throw ParseError("rows must be an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const json& row = (*it)[i];
            const std::string where = "rows[" + std::to_string(i) + "]";
            if (!row.is_object()) throw ParseError(where + " must be an object");
            const json& prompt = require_field(row, "prompt");
            if (!prompt.is_string()) throw ParseError(where + ".prompt must be a string");
            const json& ctx = require_field(row, "context");
            if (!ctx.is_array()) throw ParseError(where + ".context must be an array of tokens");
            std::vector<TokenId> context;
            context.reserve(ctx.size());
            for (const auto& t : ctx) {
                if (!t.is_string()) throw ParseError(where + ".context tokens must be strings");
                TokenId id = vocab.id_of(t.get<std::string>());
                if (id < 0) {
                    throw ParseError(where + ".context token '" + t.get<std::string>() +
                                     "' not in vocab");
                }
                context.push_back(id);
            }
            Distribution probs = parse_probs(require_field(row, "probs"), where.c_str());
            auto key = std::make_pair(prompt.get<std::string>(), std::move(context));
            if (!payload.rows.emplace(std::move(key), std::move(probs)).second) {
                throw ParseError(where + " duplicates an earlier (prompt, context) key");
            }
        }
    }
    return ConditionalModel::tabular(std::move(vocab), std::move(payload));
}

}  // namespace

ConditionalModel load_model(const std::string& document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("model document must be a JSON object");

    const json& version = require_field(doc, "format_version");
    if (!version.is_number_integer() || version.get<int>() != kFormatVersion) {
        throw ParseError("unsupported format_version (expected " +
                         std::to_string(kFormatVersion) + ")");
    }
    const std::string kind = require_field(doc, "kind").get<std::string>();
    Vocab vocab = parse_vocab(doc);
    if (kind == "rule") return parse_rule(doc, std::move(vocab));
    if (kind == "tabular") return parse_tabular(doc, std::move(vocab));
    throw ParseError("unknown kind '" + kind + "' (expected 'rule' or 'tabular')");
}

ConditionalModel load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open model file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return load_model(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string save_model(const ConditionalModel& model) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["vocab"] = model.vocab().tokens();
    if (model.kind() == ModelKind::rule) {
        doc["kind"] = "rule";
        const RulePayload& payload = model.rule_payload();
        doc["epsilon"] = payload.epsilon;
        // Emit in ascending source order so the output is deterministic.
        std::vector<std::pair<TokenId, TokenId>> pairs(payload.substitutions.begin(),
                                                       payload.substitutions.end());
        std::sort(pairs.begin(), pairs.end());
        json subs = json::array();
        for (const auto& [src, dst] : pairs) {
            subs.push_back({model.vocab().token(src), model.vocab().token(dst)});
        }
        doc["substitutions"] = std::move(subs);
    } else {
        doc["kind"] = "tabular";
        const TabularPayload& payload = model.tabular_payload();
        doc["context_order"] = payload.context_order;
        if (payload.fallback) doc["default"] = payload.fallback->probs;
        json rows = json::array();
        // std::map iteration order = ascending (prompt, context).
        for (const auto& [key, dist] : payload.rows) {
            json row;
            row["prompt"] = key.first;
            json ctx = json::array();
            for (TokenId id : key.second) ctx.push_back(model.vocab().token(id));
            row["context"] = std::move(ctx);
            row["probs"] = dist.probs;
            rows.push_back(std::move(row));
        }
        doc["rows"] = std::move(rows);
    }
    return doc.dump(2) + "\n";
}

void save_model_file(const ConditionalModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write model file '" + path + "'");
    out << save_model(model);
}

}  // namespace arcomp
