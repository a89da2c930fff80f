#include "arcomp/vocab.hpp"

#include <algorithm>

#include "arcomp/errors.hpp"

namespace arcomp {

Vocab::Vocab(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.size() < 2) {
        throw InvariantViolation("vocab must contain at least 2 tokens, got " +
                                 std::to_string(tokens_.size()));
    }
    index_.reserve(tokens_.size());
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        if (tokens_[i].empty()) {
            throw InvariantViolation("vocab token " + std::to_string(i) + " is empty");
        }
        auto [_, inserted] = index_.emplace(tokens_[i], static_cast<TokenId>(i));
        if (!inserted) {
            throw InvariantViolation("duplicate vocab token '" + tokens_[i] + "'");
        }
    }
    single_char_ = std::all_of(tokens_.begin(), tokens_.end(),
                               [](const std::string& t) { return t.size() == 1; });
}

const std::string& Vocab::token(TokenId id) const {
    if (id < 0 || id >= size()) {
        throw VocabMismatch("token id " + std::to_string(id) + " out of range for vocab of size " +
                            std::to_string(size()));
    }
    return tokens_[static_cast<std::size_t>(id)];
}

TokenId Vocab::id_of(const std::string& token) const {
    auto it = index_.find(token);
    return it == index_.end() ? TokenId{-1} : it->second;
}

std::vector<TokenId> Vocab::tokenize(const std::string& text) const {
    if (!single_char_) {
        throw InvariantViolation("string tokenization requires single-character tokens");
    }
    if (text.size() > kMaxPromptLength) {
        throw InvariantViolation("prompt longer than " + std::to_string(kMaxPromptLength) +
                                 " tokens");
    }
    std::vector<TokenId> ids;
    ids.reserve(text.size());
    for (char c : text) {
        TokenId id = id_of(std::string(1, c));
        if (id < 0) {
            throw VocabMismatch(std::string("character '") + c + "' is not in the vocabulary");
        }
        ids.push_back(id);
    }
    return ids;
}

std::string Vocab::render(const std::vector<TokenId>& ids) const {
    std::string out;
    for (TokenId id : ids) out += token(id);
    return out;
}

Vocab Vocab::letters_and_space() {
    std::vector<std::string> tokens;
    tokens.reserve(27);
    for (char c = 'A'; c <= 'Z'; ++c) tokens.emplace_back(1, c);
    tokens.emplace_back(" ");
    return Vocab(std::move(tokens));
}

}  // namespace arcomp
