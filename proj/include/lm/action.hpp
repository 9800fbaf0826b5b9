#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lm/group_word.hpp"

namespace lm {

inline constexpr std::size_t kDefaultDepth = 16;

struct PrefixResult {
    BinaryWord forced;
    bool exhausted = true;
};

// Streaming evaluator for a word: each unit letter is a small transducer whose output
// on an input prefix is the longest prefix common to the images of all extensions.
class Chain {
public:
    explicit Chain(const GroupWord& w);

    // Feeds one input bit through every letter; returns the bits emitted at the end.
    std::string feed(char bit);
    std::string feed(const std::string& bits);

    bool idle() const;  // no letter holds buffered input
    std::string state_key() const;
    std::size_t letters() const { return programs_.size(); }

    struct Program;
    struct State {
        std::uint8_t phase = 0;
        std::uint8_t mode = 0;
        std::uint32_t progress = 0;
        std::string buf;
    };

private:
    std::vector<const Program*> programs_;
    std::vector<State> states_;
};

PrefixResult act_prefix(const GroupWord& w, const BinaryWord& input);

struct EqualSoFar {};
struct Differ {
    BinaryWord witness;
};
using DepthVerdict = std::variant<EqualSoFar, Differ>;

DepthVerdict equal_at_depth(const GroupWord& w1, const GroupWord& w2, std::size_t d = kDefaultDepth);
inline bool agrees(const DepthVerdict& v) { return std::holds_alternative<EqualSoFar>(v); }

bool fixes_endpoints(const GroupWord& w, std::size_t d = kDefaultDepth);

// A reachable cycle of evaluator states along which output length grows at a rate
// other than one bit per input bit. Elements of T never admit such a cycle.
struct RateCertificate {
    BinaryWord prefix;
    BinaryWord loop;
    long excess = 0;  // output bits minus input bits per traversal of loop
    std::string str() const;
};

std::optional<RateCertificate> find_rate_cycle(const GroupWord& w, std::size_t max_states = 200000);

}  // namespace lm
