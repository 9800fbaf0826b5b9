#include "lm/group.hpp"

namespace lm {

namespace {

bool valid_entries(const std::vector<YTerm>& e) {
    if (e.empty()) return false;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i].exp != 1 && e[i].exp != -1) return false;
        if (i + 1 < e.size()) {
            if (!consecutive(e[i].sub, e[i + 1].sub)) return false;
            if (e[i].exp == e[i + 1].exp) return false;
        }
    }
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (!independent(e[i].sub, e[j].sub)) throw Error("consecutive chain with dependent subscripts");
    return true;
}

}  // namespace

std::optional<SpecialForm> SpecialForm::from_word(const GroupWord& w) {
    std::vector<YTerm> e;
    const GroupWord u = w.units();
    for (const auto& l : u.letters()) {
        if (l.gen.kind != GenKind::Y) return std::nullopt;
        e.push_back({l.gen.sub, l.exp});
    }
    if (!valid_entries(e)) return std::nullopt;
    SpecialForm f;
    f.entries_ = std::move(e);
    return f;
}

SpecialForm SpecialForm::from_entries(std::vector<YTerm> entries) {
    if (!valid_entries(entries)) throw Error("not a special form");
    SpecialForm f;
    f.entries_ = std::move(entries);
    return f;
}

GroupWord SpecialForm::word(Tag tag) const {
    std::vector<Letter> l;
    for (const auto& [s, e] : entries_) l.push_back({Generator::y(s), e});
    return GroupWord(tag, std::move(l));
}

SpecialForm SpecialForm::inverse() const {
    SpecialForm f = *this;
    for (auto& t : f.entries_) t.exp = -t.exp;
    return f;
}

long SpecialForm::psi_hat() const {
    long v = 0;
    for (const auto& t : entries_) v += t.exp;
    return v;
}

std::optional<SpecialForm> is_special_form(const GroupWord& w) { return SpecialForm::from_word(w); }

bool independent_forms(const std::vector<SpecialForm>& forms) {
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = i + 1; j < forms.size(); ++j)
            for (const auto& a : forms[i].entries())
                for (const auto& b : forms[j].entries())
                    if (!independent(a.sub, b.sub)) return false;
    return true;
}

}  // namespace lm
