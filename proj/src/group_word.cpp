#include "lm/group_word.hpp"

#include <cctype>
#include <cstdlib>

namespace lm {

std::string tag_name(Tag t) {
    switch (t) {
        case Tag::F: return "F";
        case Tag::T: return "T";
        case Tag::G: return "G";
        case Tag::yG: return "yG";
        case Tag::Gy: return "Gy";
        case Tag::yGy: return "yGy";
        case Tag::Shat: return "Shat";
    }
    return "?";
}

Tag parse_tag(std::string_view s) {
    for (Tag t : {Tag::F, Tag::T, Tag::G, Tag::yG, Tag::Gy, Tag::yGy, Tag::Shat})
        if (s == tag_name(t)) return t;
    throw Error("unknown group tag '" + std::string(s) + "'");
}

bool tag_contains(Tag big, Tag small) {
    if (big == small || small == Tag::F || big == Tag::Shat) return true;
    switch (big) {
        case Tag::yG:
        case Tag::Gy: return small == Tag::G;
        case Tag::yGy: return small == Tag::G || small == Tag::yG || small == Tag::Gy;
        default: return false;
    }
}

Tag join(Tag a, Tag b) {
    for (Tag t : {Tag::F, Tag::T, Tag::G, Tag::yG, Tag::Gy, Tag::yGy, Tag::Shat})
        if (tag_contains(t, a) && tag_contains(t, b)) return t;
    return Tag::Shat;
}

bool tag_allows(Tag t, const Generator& g) {
    switch (g.kind) {
        case GenKind::X: return true;
        case GenKind::P: return t == Tag::T || t == Tag::Shat;
        case GenKind::Y: break;
    }
    const bool zeros = g.sub.is_constant('0');
    const bool ones = g.sub.is_constant('1');
    switch (t) {
        case Tag::F:
        case Tag::T: return false;
        case Tag::G: return !zeros && !ones;
        case Tag::Gy: return !zeros;
        case Tag::yG: return !ones;
        case Tag::yGy:
        case Tag::Shat: return true;
    }
    return false;
}

std::string Letter::str() const { return exp == 1 ? gen.str() : gen.str() + "^" + std::to_string(exp); }

GroupWord::GroupWord(Tag tag, std::vector<Letter> letters) : tag_(tag), letters_(std::move(letters)) {
    for (const auto& l : letters_) {
        if (l.exp == 0) throw Error("zero exponent in " + l.gen.str());
        if (!tag_allows(tag_, l.gen)) throw TagViolation(l.gen.str() + " is not allowed in tag " + tag_name(tag_));
    }
}

Tag GroupWord::infer_tag(const std::vector<Letter>& letters) {
    bool p = false, y = false, zeros = false, ones = false;
    for (const auto& l : letters) {
        if (l.gen.kind == GenKind::P) p = true;
        if (l.gen.kind != GenKind::Y) continue;
        y = true;
        zeros |= l.gen.sub.is_constant('0');
        ones |= l.gen.sub.is_constant('1');
    }
    if (p) return y ? Tag::Shat : Tag::T;
    if (!y) return Tag::F;
    if (zeros && ones) return Tag::yGy;
    if (zeros) return Tag::yG;
    if (ones) return Tag::Gy;
    return Tag::G;
}

namespace {

std::vector<Letter> parse_letters(std::string_view text) {
    std::vector<Letter> out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto integer = [&](bool allow_sign) {
        std::size_t start = i;
        if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        std::size_t digits = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == digits) throw ParseError("expected integer", start);
        return std::stol(std::string(text.substr(start, i - start)));
    };
    skip();
    while (i < text.size()) {
        const std::size_t start = i;
        Letter l;
        char c = text[i++];
        if (c == 'x' || c == 'y') {
            if (i >= text.size() || text[i] != '[') throw ParseError("expected '['", i);
            std::size_t close = text.find(']', ++i);
            if (close == std::string_view::npos) throw ParseError("unterminated subscript", start);
            auto sub = text.substr(i, close - i);
            try {
                l.gen = c == 'x' ? Generator::x(BinaryWord::parse(sub)) : Generator::y(BinaryWord::parse(sub));
            } catch (const ParseError& e) {
                throw ParseError("invalid subscript '" + std::string(sub) + "'", i + e.position());
            }
            i = close + 1;
        } else if (c == 'p') {
            long n = integer(false);
            l.gen = Generator::p(static_cast<unsigned>(n));
        } else {
            throw ParseError("unexpected character '" + std::string(1, c) + "'", start);
        }
        if (i < text.size() && text[i] == '^') {
            ++i;
            long e = integer(true);
            if (e == 0) throw ParseError("zero exponent", start);
            l.exp = static_cast<int>(e);
        }
        if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
            throw ParseError("expected whitespace between letters", i);
        out.push_back(l);
        skip();
    }
    return out;
}

}  // namespace

GroupWord GroupWord::parse(std::string_view text) {
    auto letters = parse_letters(text);
    Tag t = infer_tag(letters);
    return GroupWord(t, std::move(letters));
}

GroupWord GroupWord::parse(std::string_view text, Tag tag) { return GroupWord(tag, parse_letters(text)); }

std::string GroupWord::str() const {
    std::string s;
    for (const auto& l : letters_) {
        if (!s.empty()) s += ' ';
        s += l.str();
    }
    return s;
}

GroupWord GroupWord::inverse() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (auto& l : out) l.exp = -l.exp;
    GroupWord w(tag_);
    w.letters_ = std::move(out);
    return w;
}

GroupWord GroupWord::reduced() const {
    std::vector<Letter> out;
    for (const auto& l : letters_) {
        if (!out.empty() && out.back().gen == l.gen) {
            out.back().exp += l.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    GroupWord w(tag_);
    w.letters_ = std::move(out);
    return w;
}

GroupWord GroupWord::units() const {
    std::vector<Letter> out;
    for (const auto& l : letters_)
        for (int k = 0; k < std::abs(l.exp); ++k) out.push_back({l.gen, l.exp > 0 ? 1 : -1});
    GroupWord w(tag_);
    w.letters_ = std::move(out);
    return w;
}

GroupWord& GroupWord::operator*=(const GroupWord& o) {
    tag_ = join(tag_, o.tag_);
    letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
    return *this;
}

GroupWord x_word(const BinaryWord& s, int e, Tag tag) { return GroupWord(tag, {{Generator::x(s), e}}); }
GroupWord y_word(const BinaryWord& s, int e, Tag tag) { return GroupWord(tag, {{Generator::y(s), e}}); }
GroupWord p_word(unsigned n, int e, Tag tag) { return GroupWord(tag, {{Generator::p(n), e}}); }

}  // namespace lm
