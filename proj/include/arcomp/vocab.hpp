#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace arcomp {

using TokenId = std::int32_t;

inline constexpr std::size_t kMaxPromptLength = 4096;

// A finite token alphabet with stable integer ids. Tokens are distinct
// non-empty strings; ids run 0..size()-1 in list order. Immutable once built.
class Vocab {
public:
    // Throws InvariantViolation on duplicates, empty tokens, or size < 2.
    explicit Vocab(std::vector<std::string> tokens);

    int size() const { return static_cast<int>(tokens_.size()); }
    const std::string& token(TokenId id) const;
    const std::vector<std::string>& tokens() const { return tokens_; }

    // -1 if the token is not in the vocabulary.
    TokenId id_of(const std::string& token) const;

    bool operator==(const Vocab& other) const { return tokens_ == other.tokens_; }
    bool operator!=(const Vocab& other) const { return !(*this == other); }

    // True when every token is a single character, which is what the
    // string-based front ends (CLI prompts, tabular prompt keys) require.
    bool single_char_tokens() const { return single_char_; }

    // Splits a string into token ids, one character per token. Requires
    // single_char_tokens(); throws VocabMismatch on characters outside the
    // alphabet, InvariantViolation past kMaxPromptLength.
    std::vector<TokenId> tokenize(const std::string& text) const;

    // Concatenates the token strings for a sequence of ids.
    std::string render(const std::vector<TokenId>& ids) const;

    // The 26 uppercase letters A..Z (ids 0..25) plus a space token (id 26).
    static Vocab letters_and_space();

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, TokenId> index_;
    bool single_char_ = false;
};

// A conditioning input: a sequence of token ids over some vocabulary.
struct Prompt {
    std::vector<TokenId> ids;

    Prompt() = default;
    explicit Prompt(std::vector<TokenId> ids) : ids(std::move(ids)) {}
    static Prompt from_string(const Vocab& vocab, const std::string& text) {
        return Prompt(vocab.tokenize(text));
    }

    std::size_t size() const { return ids.size(); }
    bool operator==(const Prompt& other) const { return ids == other.ids; }
};

}  // namespace arcomp
