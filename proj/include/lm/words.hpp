#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lm {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Finite binary sequence. Text form is the bit string, or "e" when empty.
class BinaryWord {
public:
    BinaryWord() = default;
    explicit BinaryWord(std::string bits);

    static BinaryWord parse(std::string_view text);
    static BinaryWord repeat(char bit, std::size_t n);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    char operator[](std::size_t i) const { return bits_[i]; }
    char back() const { return bits_.back(); }
    const std::string& bits() const { return bits_; }
    std::string str() const { return bits_.empty() ? "e" : bits_; }

    BinaryWord prefix(std::size_t n) const { return BinaryWord(bits_.substr(0, n), Trusted{}); }
    BinaryWord suffix_from(std::size_t n) const { return BinaryWord(bits_.substr(n), Trusted{}); }
    BinaryWord child(char bit) const { return BinaryWord(bits_ + bit, Trusted{}); }

    // Constant word c^n with n >= 0 (the empty word counts).
    bool is_constant(char bit) const;

    BinaryWord& operator+=(const BinaryWord& o) {
        bits_ += o.bits_;
        return *this;
    }
    friend BinaryWord operator+(BinaryWord a, const BinaryWord& b) { return a += b; }

    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
    friend std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) {
        return a.bits_ <=> b.bits_;
    }

private:
    struct Trusted {};
    BinaryWord(std::string bits, Trusted) : bits_(std::move(bits)) {}
    std::string bits_;
};

bool is_prefix(const BinaryWord& s, const BinaryWord& t);
bool independent(const BinaryWord& s, const BinaryWord& t);

struct ConsecutiveWitness {
    BinaryWord u;
    std::size_t m = 0;
    std::size_t n = 0;
    friend bool operator==(const ConsecutiveWitness&, const ConsecutiveWitness&) = default;
};

std::optional<ConsecutiveWitness> consecutive(const BinaryWord& s, const BinaryWord& t);

// s extends t properly, or s branches left of t.
bool tree_order_less(const BinaryWord& s, const BinaryWord& t);

enum class GenKind { X, Y, P };

struct Generator {
    GenKind kind = GenKind::X;
    BinaryWord sub;      // X, Y
    unsigned index = 0;  // P

    static Generator x(BinaryWord s) { return {GenKind::X, std::move(s), 0}; }
    static Generator y(BinaryWord s) { return {GenKind::Y, std::move(s), 0}; }
    static Generator p(unsigned n) { return {GenKind::P, {}, n}; }

    std::string str() const;
    friend bool operator==(const Generator&, const Generator&) = default;
};

// Prefix-replacement table: domain words form a complete prefix code.
using Rows = std::vector<std::pair<BinaryWord, BinaryWord>>;

// Rows of an x- or p-generator, inverted when inverse is set.
Rows generator_rows(const Generator& g, bool inverse);

// Image of s under one matching row, or absent when s is a proper prefix of a domain word.
std::optional<BinaryWord> apply_rows(const Rows& rows, const BinaryWord& s);

std::optional<BinaryWord> partial_action(const BinaryWord& s, const Generator& g, int exponent = 1);

}  // namespace lm

template <>
struct std::hash<lm::BinaryWord> {
    std::size_t operator()(const lm::BinaryWord& w) const noexcept {
        return std::hash<std::string>{}(w.bits()) ^ (w.size() * 0x9e3779b97f4a7c15ULL);
    }
};
