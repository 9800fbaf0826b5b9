#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "lm/group.hpp"
#include "lm/xcomplex.hpp"

namespace lm::testing {

inline BinaryWord random_word(std::mt19937& rng, std::size_t min_len, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::bernoulli_distribution bit;
    std::string s;
    for (std::size_t n = len(rng); s.size() < n;) s += bit(rng) ? '1' : '0';
    return BinaryWord(s);
}

inline bool in_L(const BinaryWord& s) { return !s.is_constant('0') && !s.is_constant('1'); }

// All words of length <= n, shortest first.
inline std::vector<BinaryWord> all_words(std::size_t n) {
    std::vector<BinaryWord> out{BinaryWord()};
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i].size() < n) {
            out.push_back(out[i].child('0'));
            out.push_back(out[i].child('1'));
        }
    return out;
}

// Random word of S-hat (or of a smaller tag) with letters x, y, p.
inline GroupWord random_group_word(std::mt19937& rng, std::size_t max_letters, std::size_t max_sub, Tag tag = Tag::Shat) {
    std::uniform_int_distribution<std::size_t> count(0, max_letters);
    std::uniform_int_distribution<int> kind(0, 2), pidx(0, 3);
    std::bernoulli_distribution sign;
    std::vector<Letter> ls;
    const std::size_t n = count(rng);
    while (ls.size() < n) {
        const int k = kind(rng);
        const int e = sign(rng) ? 1 : -1;
        if (k == 0) {
            ls.push_back({Generator::x(random_word(rng, 0, max_sub)), e});
        } else if (k == 1) {
            const BinaryWord s = random_word(rng, 0, max_sub);
            if (!tag_allows(tag, Generator::y(s))) continue;
            ls.push_back({Generator::y(s), e});
        } else {
            if (!tag_allows(tag, Generator::p(0))) continue;
            ls.push_back({Generator::p(static_cast<unsigned>(pidx(rng))), e});
        }
    }
    return GroupWord(tag, ls);
}

// A random special form: a chain of consecutive subscripts with alternating signs.
inline std::vector<YTerm> random_chain(std::mt19937& rng, std::size_t max_sub) {
    std::uniform_int_distribution<int> extra(0, 2), stop(0, 2);
    std::bernoulli_distribution sign;
    std::vector<YTerm> out{{random_word(rng, 2, max_sub), sign(rng) ? 1 : -1}};
    while (stop(rng) != 0) {
        const std::string& b = out.back().sub.bits();
        const auto zero = b.find_last_of('0');
        if (zero == std::string::npos) break;
        std::string next = b.substr(0, zero) + "1" + std::string(static_cast<std::size_t>(extra(rng)), '0');
        if (next.size() > max_sub) break;
        out.push_back({BinaryWord(next), -out.back().exp});
    }
    return out;
}

// Candidate cluster parameters; not necessarily valid.
inline std::vector<std::vector<YTerm>> random_params(std::mt19937& rng, std::size_t max_forms, std::size_t max_sub) {
    std::uniform_int_distribution<std::size_t> count(1, max_forms);
    std::vector<std::vector<YTerm>> out(count(rng));
    for (auto& f : out) f = random_chain(rng, max_sub);
    return out;
}

// One chain cut into consecutive forms, so neighbouring parameters meet at a junction.
inline std::vector<std::vector<YTerm>> split_chain(std::mt19937& rng, std::size_t max_sub) {
    std::vector<YTerm> chain;
    for (int tries = 0; chain.size() < 2 && tries < 20; ++tries) chain = random_chain(rng, max_sub);
    std::bernoulli_distribution cut;
    std::vector<std::vector<YTerm>> out{{chain.front()}};
    for (std::size_t i = 1; i < chain.size(); ++i) {
        if (cut(rng)) out.emplace_back();
        out.back().push_back(chain[i]);
    }
    return out;
}

inline GroupWord terms_word(const std::vector<YTerm>& ts, Tag tag = Tag::G) {
    std::vector<Letter> ls;
    for (const auto& t : ts) ls.push_back({Generator::y(t.sub), t.exp});
    return GroupWord(tag, ls);
}

}  // namespace lm::testing
