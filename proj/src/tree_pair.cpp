#include "lm/tree_pair.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace lm {

TElement::TElement() { rows_.emplace_back(BinaryWord{}, BinaryWord{}); }

TElement::TElement(Rows rows) : rows_(std::move(rows)) {
    std::vector<BinaryWord> d, r;
    for (const auto& [a, b] : rows_) d.push_back(a), r.push_back(b);
    if (!is_complete_prefix_code(d) || !is_complete_prefix_code(r))
        throw Error("tree pair rows must be complete prefix codes");
    normalize();
}

void TElement::normalize() {
    std::map<BinaryWord, BinaryWord> m(rows_.begin(), rows_.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = m.begin(); it != m.end(); ++it) {
            const auto& [d, r] = *it;
            if (d.empty() || d.back() != '0' || r.empty() || r.back() != '0') continue;
            auto parent = d.prefix(d.size() - 1);
            auto sib = m.find(parent.child('1'));
            if (sib == m.end()) continue;
            auto rparent = r.prefix(r.size() - 1);
            if (sib->second != rparent.child('1')) continue;
            m.erase(sib);
            m.erase(it);
            m.emplace(parent, rparent);
            changed = true;
            break;
        }
    }
    rows_.assign(m.begin(), m.end());
}

TElement TElement::from_word(const GroupWord& w) {
    TElement t;
    for (const auto& l : w.letters()) {
        if (l.gen.kind == GenKind::Y) throw Error("tree pairs represent only x- and p-letters");
        TElement g;
        g.rows_ = generator_rows(l.gen, l.exp < 0);
        g.normalize();
        for (int k = 0; k < std::abs(l.exp); ++k) t = t.then(g);
    }
    return t;
}

TElement TElement::then(const TElement& o) const {
    Rows out;
    for (const auto& [d, r] : rows_) {
        if (auto img = o.apply(r)) {
            out.emplace_back(d, *img);
            continue;
        }
        for (const auto& [d2, r2] : o.rows_)
            if (is_prefix(r, d2)) out.emplace_back(d + d2.suffix_from(r.size()), r2);
    }
    TElement t;
    t.rows_ = std::move(out);
    t.normalize();
    return t;
}

TElement TElement::inverse() const {
    TElement t;
    t.rows_.clear();
    for (const auto& [d, r] : rows_) t.rows_.emplace_back(r, d);
    t.normalize();
    return t;
}

bool TElement::in_F() const {
    for (std::size_t i = 1; i < rows_.size(); ++i)
        if (!(rows_[i - 1].second < rows_[i].second)) return false;
    return true;
}

std::string TElement::str() const {
    std::string s;
    for (const auto& [d, r] : rows_) s += (s.empty() ? "" : " ") + d.str() + "->" + r.str();
    return s;
}

bool is_complete_prefix_code(const std::vector<BinaryWord>& code) {
    std::set<BinaryWord> s(code.begin(), code.end());
    if (s.size() != code.size() || s.empty()) return false;
    while (true) {
        if (s.size() == 1) return s.begin()->empty();
        // Merge the deepest leaf with its sibling; a complete code always has one.
        auto deepest = std::max_element(s.begin(), s.end(),
                                        [](const BinaryWord& a, const BinaryWord& b) { return a.size() < b.size(); });
        if (deepest->empty()) return false;
        auto parent = deepest->prefix(deepest->size() - 1);
        auto sib = parent.child(deepest->back() == '0' ? '1' : '0');
        if (!s.count(sib) || s.count(parent)) return false;
        s.erase(*deepest);
        s.erase(sib);
        s.insert(parent);
    }
}

GroupWord vine_word(std::vector<BinaryWord> code) {
    std::vector<Letter> letters;
    std::size_t j = 0;
    while (true) {
        auto spine = BinaryWord::repeat('1', j);
        if (std::find(code.begin(), code.end(), spine) != code.end()) break;
        auto left = spine.child('0');
        if (std::find(code.begin(), code.end(), left) != code.end()) {
            ++j;
            continue;
        }
        auto g = Generator::x(spine);
        for (auto& leaf : code) {
            auto img = partial_action(leaf, g);
            if (!img) throw Error("vine rotation undefined on " + leaf.str());
            leaf = *img;
        }
        letters.push_back({g, 1});
    }
    return GroupWord(Tag::F, std::move(letters)).reduced();
}

GroupWord TElement::to_word() const {
    const std::size_t N = rows_.size();
    if (N == 1) return GroupWord(Tag::F);
    std::vector<BinaryWord> dom, ran;
    for (const auto& [d, r] : rows_) dom.push_back(d), ran.push_back(r);
    std::vector<BinaryWord> sorted = ran;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t k = std::find(sorted.begin(), sorted.end(), ran[0]) - sorted.begin();
    for (std::size_t i = 0; i < N; ++i)
        if (ran[i] != sorted[(i + k) % N]) throw Error("tree pair does not preserve cyclic order");
    GroupWord w = vine_word(dom);
    if (k != 0) w *= p_word(static_cast<unsigned>(N - 2), static_cast<int>(k));
    w *= vine_word(sorted).inverse();
    return w.reduced();
}

}  // namespace lm
