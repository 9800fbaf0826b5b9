#include <algorithm>
#include <initializer_list>

#include "lm/group.hpp"

namespace lm {

std::string character_name(Character c) {
    switch (c) {
        case Character::Chi0: return "chi0";
        case Character::Chi1: return "chi1";
        case Character::Psi0: return "psi0";
        case Character::Psi1: return "psi1";
        case Character::Psi: return "psi";
        case Character::PsiHat: return "psihat";
    }
    return "?";
}

Character parse_character(std::string_view s) {
    for (auto c : {Character::Chi0, Character::Chi1, Character::Psi0, Character::Psi1, Character::Psi,
                   Character::PsiHat})
        if (s == character_name(c)) return c;
    throw Error("unknown character '" + std::string(s) + "'");
}

bool character_defined(Character c, Tag t) {
    auto in = [t](std::initializer_list<Tag> ts) { return std::find(ts.begin(), ts.end(), t) != ts.end(); };
    switch (c) {
        case Character::Chi0: return in({Tag::F, Tag::G, Tag::Gy});
        case Character::Chi1: return in({Tag::F, Tag::G, Tag::yG});
        case Character::Psi0: return in({Tag::yG, Tag::yGy});
        case Character::Psi1: return in({Tag::Gy, Tag::yGy});
        case Character::Psi: return t != Tag::T && t != Tag::Shat;
        case Character::PsiHat: return true;
    }
    return false;
}

long letter_value(Character c, const Generator& g) {
    const bool zeros = g.sub.is_constant('0');
    const bool ones = g.sub.is_constant('1');
    if (g.kind == GenKind::P) return 0;
    if (g.kind == GenKind::X) {
        if (c == Character::Chi0) return zeros ? -1 : 0;
        if (c == Character::Chi1) return ones ? 1 : 0;
        return 0;
    }
    switch (c) {
        case Character::Chi0:
        case Character::Chi1: return 0;
        case Character::Psi0: return zeros ? 1 : 0;
        case Character::Psi1: return ones ? 1 : 0;
        case Character::Psi:
            // On y_e, y_0^n, y_1^n the values are forced by y_s = x_s y_s0 y_s10^-1 y_s11.
            if (g.sub.empty()) return -1;
            return zeros || ones ? 0 : 1;
        case Character::PsiHat: return 1;
    }
    return 0;
}

long char_value(Character c, const GroupWord& w) {
    if (!character_defined(c, w.tag()))
        throw CharacterUndefined(character_name(c) + " is not defined on tag " + tag_name(w.tag()));
    long v = 0;
    for (const auto& l : w.letters()) v += l.exp * letter_value(c, l.gen);
    return v;
}

Character height_character(Tag t) { return t == Tag::T || t == Tag::Shat ? Character::PsiHat : Character::Psi; }

}  // namespace lm
