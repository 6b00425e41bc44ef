#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace regft {

// Fixed word-level vocabulary for the synthetic environment. Multi-digit
// numbers are digit sequences; words outside the closed set encode to
// <unk>. Questions, reference solutions, and the standard prompt are
// covered exactly and round-trip through encode/decode.
class Vocab {
public:
    static const Vocab& instance();

    int size() const { return static_cast<int>(tokens_.size()); }
    int pad() const { return 0; }
    int eos() const { return 1; }
    int unk() const { return 2; }
    int newline() const { return 3; }

    bool is_digit(int id) const { return id >= first_digit_ && id < first_digit_ + 10; }
    int digit(int d) const { return first_digit_ + d; }
    int boxed_open() const { return boxed_open_; }
    int boxed_close() const { return boxed_close_; }

    const std::string& token_text(int id) const { return tokens_[static_cast<std::size_t>(id)]; }
    int lookup(std::string_view word) const;  // -1 when unknown

    std::vector<int> encode(std::string_view text) const;
    std::string decode(std::span<const int> tokens) const;

    // True when decode(encode(text)) == text.
    bool encodes_losslessly(std::string_view text) const;

private:
    Vocab();
    std::vector<std::string> tokens_;
    int first_digit_ = 0;
    int boxed_open_ = 0;
    int boxed_close_ = 0;
};

}  // namespace regft
