#include "lm/words.hpp"

#include <algorithm>
#include <cstdlib>

namespace lm {

BinaryWord::BinaryWord(std::string bits) : bits_(std::move(bits)) {
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] != '0' && bits_[i] != '1') throw ParseError("invalid bit '" + std::string(1, bits_[i]) + "'", i);
}

BinaryWord BinaryWord::parse(std::string_view text) {
    if (text == "e" || text == "ε") return {};
    return BinaryWord(std::string(text));
}

BinaryWord BinaryWord::repeat(char bit, std::size_t n) { return BinaryWord(std::string(n, bit), Trusted{}); }

bool BinaryWord::is_constant(char bit) const {
    return std::all_of(bits_.begin(), bits_.end(), [bit](char c) { return c == bit; });
}

bool is_prefix(const BinaryWord& s, const BinaryWord& t) {
    return s.size() <= t.size() && t.bits().compare(0, s.size(), s.bits()) == 0;
}

bool independent(const BinaryWord& s, const BinaryWord& t) { return !is_prefix(s, t) && !is_prefix(t, s); }

std::optional<ConsecutiveWitness> consecutive(const BinaryWord& s, const BinaryWord& t) {
    // The branch point is the first position where s and t differ; s must turn left there.
    std::size_t k = 0;
    while (k < s.size() && k < t.size() && s[k] == t[k]) ++k;
    if (k == s.size() || k == t.size() || s[k] != '0') return std::nullopt;
    auto rest_s = s.suffix_from(k + 1);
    auto rest_t = t.suffix_from(k + 1);
    if (!rest_s.is_constant('1') || !rest_t.is_constant('0')) return std::nullopt;
    return ConsecutiveWitness{s.prefix(k), rest_s.size(), rest_t.size()};
}

bool tree_order_less(const BinaryWord& s, const BinaryWord& t) {
    if (s.size() > t.size() && is_prefix(t, s)) return true;
    std::size_t k = 0;
    while (k < s.size() && k < t.size() && s[k] == t[k]) ++k;
    return k < s.size() && k < t.size() && s[k] == '0';
}

std::string Generator::str() const {
    switch (kind) {
        case GenKind::X: return "x[" + sub.str() + "]";
        case GenKind::Y: return "y[" + sub.str() + "]";
        case GenKind::P: return "p" + std::to_string(index);
    }
    return {};
}

Rows generator_rows(const Generator& g, bool inverse) {
    Rows rows;
    auto W = [](const char* b) { return BinaryWord(b); };
    if (g.kind == GenKind::X) {
        const auto& s = g.sub;
        rows.emplace_back(s + W("00"), s + W("0"));
        rows.emplace_back(s + W("01"), s + W("10"));
        rows.emplace_back(s + W("1"), s + W("11"));
        for (std::size_t i = 0; i < s.size(); ++i) {
            auto off = s.prefix(i).child(s[i] == '0' ? '1' : '0');
            rows.emplace_back(off, off);
        }
    } else if (g.kind == GenKind::P) {
        const auto n = g.index;
        for (unsigned k = 0; k < n; ++k)
            rows.emplace_back(BinaryWord::repeat('1', k).child('0'), BinaryWord::repeat('1', k + 1).child('0'));
        rows.emplace_back(BinaryWord::repeat('1', n).child('0'), BinaryWord::repeat('1', n + 1));
        rows.emplace_back(BinaryWord::repeat('1', n + 1), W("0"));
    } else {
        throw Error("y-generators have no prefix-substitution table");
    }
    if (inverse)
        for (auto& [d, r] : rows) std::swap(d, r);
    return rows;
}

std::optional<BinaryWord> apply_rows(const Rows& rows, const BinaryWord& s) {
    for (const auto& [d, r] : rows)
        if (is_prefix(d, s)) return r + s.suffix_from(d.size());
    return std::nullopt;
}

std::optional<BinaryWord> partial_action(const BinaryWord& s, const Generator& g, int exponent) {
    if (exponent == 0) return s;
    auto rows = generator_rows(g, exponent < 0);
    std::optional<BinaryWord> cur = s;
    for (int i = 0; i < std::abs(exponent) && cur; ++i) cur = apply_rows(rows, *cur);
    return cur;
}

}  // namespace lm
