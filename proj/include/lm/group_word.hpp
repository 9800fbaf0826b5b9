#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lm/words.hpp"

namespace lm {

enum class Tag { F, T, G, yG, Gy, yGy, Shat };

std::string tag_name(Tag t);
Tag parse_tag(std::string_view s);

// Smallest tag containing both.
Tag join(Tag a, Tag b);
bool tag_contains(Tag big, Tag small);

class TagViolation : public Error {
public:
    using Error::Error;
};

bool tag_allows(Tag t, const Generator& g);

struct Letter {
    Generator gen;
    int exp = 1;
    std::string str() const;
    friend bool operator==(const Letter&, const Letter&) = default;
};

class GroupWord {
public:
    explicit GroupWord(Tag tag = Tag::Shat) : tag_(tag) {}
    GroupWord(Tag tag, std::vector<Letter> letters);

    // Words in the textual grammar; the tag is inferred when not given.
    static GroupWord parse(std::string_view text);
    static GroupWord parse(std::string_view text, Tag tag);
    static Tag infer_tag(const std::vector<Letter>& letters);

    Tag tag() const { return tag_; }
    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    std::string str() const;

    GroupWord inverse() const;
    GroupWord with_tag(Tag t) const { return GroupWord(t, letters_); }
    // Adjacent equal generators merged, zero exponents dropped.
    GroupWord reduced() const;
    // Every letter with exponent +1 or -1.
    GroupWord units() const;

    GroupWord& operator*=(const GroupWord& o);
    friend GroupWord operator*(GroupWord a, const GroupWord& b) { return a *= b; }
    friend bool operator==(const GroupWord&, const GroupWord&) = default;

private:
    Tag tag_;
    std::vector<Letter> letters_;
};

GroupWord x_word(const BinaryWord& s, int e = 1, Tag tag = Tag::F);
GroupWord y_word(const BinaryWord& s, int e = 1, Tag tag = Tag::Shat);
GroupWord p_word(unsigned n, int e = 1, Tag tag = Tag::T);

}  // namespace lm
