#include <algorithm>
#include <cstdlib>

#include "lm/group.hpp"

namespace lm {

namespace {

using YList = std::vector<YTerm>;

long units(const YList& y) {
    long n = 0;
    for (const auto& t : y) n += std::abs(t.exp);
    return n;
}

GroupWord assemble(const std::vector<Letter>& head, const YList& tail) {
    std::vector<Letter> l = head;
    for (const auto& t : tail) l.push_back({Generator::y(t.sub), t.exp});
    return GroupWord(Tag::Shat, std::move(l));
}

BinaryWord W(const BinaryWord& s, const char* bits) { return s + BinaryWord(bits); }

struct Rewriter {
    const RewriteOptions& opts;
    std::size_t steps = 0;
    std::vector<Letter> head;
    YList tail;

    void tick() {
        if (++steps > opts.max_steps)
            throw RewriteBudgetExceeded("rewriting step budget exceeded", assemble(head, tail));
    }

    void check_depth(const BinaryWord& s) {
        if (s.size() + 2 > opts.max_subscript)
            throw RewriteBudgetExceeded("subscript depth budget exceeded at y[" + s.str() + "]", assemble(head, tail));
    }

    // Rewrites Y g as W Y' using y_s g = g y_{s.g} and, where s.g is undefined, one
    // unit of y_s expanded as x_s y_s0 y_s10^-1 y_s11.
    void push(YList& y, const Letter& g, std::vector<Letter>& w) {
        tick();
        if (y.empty()) {
            w.push_back(g);
            return;
        }
        YTerm t = y.back();
        y.pop_back();
        if (auto img = partial_action(t.sub, g.gen, g.exp)) {
            push(y, g, w);
            y.push_back({*img, t.exp});
            return;
        }
        check_depth(t.sub);
        const auto& s = t.sub;
        const int sg = t.exp > 0 ? 1 : -1;
        if (t.exp != sg) y.push_back({s, t.exp - sg});
        const Letter xs{Generator::x(s), sg};
        if (sg > 0) {
            YList z{{W(s, "0"), 1}, {W(s, "10"), -1}, {W(s, "11"), 1}};
            std::vector<Letter> moved{xs};
            push(z, g, moved);
            for (const auto& m : moved) push(y, m, w);
            y.insert(y.end(), z.begin(), z.end());
        } else {
            y.push_back({W(s, "11"), -1});
            y.push_back({W(s, "10"), 1});
            y.push_back({W(s, "0"), -1});
            push(y, xs, w);
            push(y, g, w);
        }
    }

    void feed(const Letter& l) {
        if (l.gen.kind == GenKind::Y) {
            tail.push_back({l.gen.sub, l.exp});
            return;
        }
        push(tail, l, head);
    }

    bool commute_merge() {
        for (std::size_t i = 0; i < tail.size(); ++i) {
            for (std::size_t j = i + 1; j < tail.size(); ++j) {
                if (tail[j].sub == tail[i].sub) {
                    tail[i].exp += tail[j].exp;
                    tail.erase(tail.begin() + static_cast<long>(j));
                    if (tail[i].exp == 0) tail.erase(tail.begin() + static_cast<long>(i));
                    return true;
                }
                if (!independent(tail[j].sub, tail[i].sub)) break;
            }
        }
        return false;
    }

    void expand_at(std::size_t i) {
        const YTerm a = tail[i];
        check_depth(a.sub);
        const int sg = a.exp > 0 ? 1 : -1;
        YList p(tail.begin(), tail.begin() + static_cast<long>(i));
        YList b(tail.begin() + static_cast<long>(i) + 1, tail.end());
        if (a.exp != sg) p.push_back({a.sub, a.exp - sg});
        std::vector<Letter> w;
        if (sg > 0) {
            push(p, {Generator::x(a.sub), 1}, w);
            p.push_back({W(a.sub, "0"), 1});
            p.push_back({W(a.sub, "10"), -1});
            p.push_back({W(a.sub, "11"), 1});
        } else {
            p.push_back({W(a.sub, "11"), -1});
            p.push_back({W(a.sub, "10"), 1});
            p.push_back({W(a.sub, "0"), -1});
            push(p, {Generator::x(a.sub), -1}, w);
        }
        head.insert(head.end(), w.begin(), w.end());
        p.insert(p.end(), b.begin(), b.end());
        tail = std::move(p);
    }

    // Sorts the tail into tree order.
    void normalize() {
        while (true) {
            tick();
            if (commute_merge()) continue;
            bool swapped = false;
            for (std::size_t i = 0; i + 1 < tail.size(); ++i) {
                if (tree_order_less(tail[i + 1].sub, tail[i].sub) && independent(tail[i].sub, tail[i + 1].sub)) {
                    std::swap(tail[i], tail[i + 1]);
                    swapped = true;
                }
            }
            if (swapped) continue;
            bool expanded = false;
            for (std::size_t i = 0; i + 1 < tail.size(); ++i) {
                if (tree_order_less(tail[i + 1].sub, tail[i].sub)) {
                    expand_at(i);
                    expanded = true;
                    break;
                }
            }
            if (!expanded) return;
        }
    }

    // y_s0 y_s10^-1 y_s11 = x_s^-1 y_s, applied when it shortens the tail.
    bool contract_once() {
        const long before = units(tail);
        for (std::size_t j = 0; j < tail.size(); ++j) {
            const auto& c = tail[j];
            if (c.exp <= 0 || c.sub.size() < 2 || c.sub[c.sub.size() - 1] != '1' || c.sub[c.sub.size() - 2] != '1')
                continue;
            const auto s = c.sub.prefix(c.sub.size() - 2);
            auto find = [&](const BinaryWord& sub, int sign) -> long {
                for (std::size_t i = 0; i < j; ++i)
                    if (tail[i].sub == sub && tail[i].exp * sign > 0) return static_cast<long>(i);
                return -1;
            };
            long i0 = find(W(s, "0"), 1), i1 = find(W(s, "10"), -1);
            if (i0 < 0 || i1 < 0) continue;
            Rewriter trial = *this;
            YList a(tail.begin(), tail.begin() + static_cast<long>(j));
            a[i0].exp -= 1;
            a[i1].exp += 1;
            a.erase(std::remove_if(a.begin(), a.end(), [](const YTerm& t) { return t.exp == 0; }), a.end());
            std::vector<Letter> w;
            try {
                trial.push(a, {Generator::x(s), -1}, w);
                trial.head.insert(trial.head.end(), w.begin(), w.end());
                a.push_back({s, 1});
                if (c.exp > 1) a.push_back({c.sub, c.exp - 1});
                a.insert(a.end(), tail.begin() + static_cast<long>(j) + 1, tail.end());
                trial.tail = std::move(a);
                trial.normalize();
            } catch (const RewriteBudgetExceeded&) {
                steps = trial.steps;
                continue;
            }
            steps = trial.steps;
            if (units(trial.tail) < before) {
                head = std::move(trial.head);
                tail = std::move(trial.tail);
                return true;
            }
        }
        return false;
    }

    // x_s^-1 y_s = y_s0 y_s10^-1 y_s11 when y_s can be brought to the front of the tail.
    bool absorb_once() {
        if (head.empty()) return false;
        const Letter last = head.back();
        if (last.gen.kind != GenKind::X || last.exp >= 0) return false;
        const auto& s = last.gen.sub;
        for (std::size_t j = 0; j < tail.size(); ++j) {
            if (tail[j].sub == s && tail[j].exp > 0) {
                if (++head.back().exp == 0) head.pop_back();
                if (--tail[j].exp == 0) tail.erase(tail.begin() + static_cast<long>(j));
                tail.insert(tail.begin(), {{W(s, "0"), 1}, {W(s, "10"), -1}, {W(s, "11"), 1}});
                normalize();
                return true;
            }
            if (!independent(tail[j].sub, s)) return false;
        }
        return false;
    }
};

}  // namespace

GroupWord StandardForm::word() const {
    GroupWord w = head;
    std::vector<Letter> l;
    for (const auto& t : tail) l.push_back({Generator::y(t.sub), t.exp});
    w *= GroupWord(GroupWord::infer_tag(l), l);
    return w;
}

std::string StandardForm::str() const { return word().str(); }

StandardForm rewrite_standard_form(const GroupWord& w, const RewriteOptions& opts) {
    Rewriter r{opts, 0, {}, {}};
    for (const auto& l : w.letters()) {
        const int sg = l.exp > 0 ? 1 : -1;
        if (l.gen.kind == GenKind::Y) {
            r.feed(l);
        } else {
            for (int k = 0; k < std::abs(l.exp); ++k) r.feed({l.gen, sg});
        }
    }
    r.normalize();
    while (r.contract_once()) {
    }
    for (int k = 0; opts.absorb && k < 64 && r.absorb_once(); ++k) {
    }

    StandardForm sf;
    GroupWord head(Tag::Shat, r.head);
    head = GroupWord(GroupWord::infer_tag(head.letters()), head.letters());
    sf.head = TElement::from_word(head).to_word();
    sf.head = sf.head.with_tag(GroupWord::infer_tag(sf.head.letters()));
    sf.tail = std::move(r.tail);

    if (!agrees(equal_at_depth(w, sf.word(), opts.validate_depth)))
        throw Error("internal: standard form of '" + w.str() + "' disagrees with the action: " + sf.str());
    return sf;
}

bool decide_T_identity(const GroupWord& w) { return TElement::from_word(w).is_identity(); }

}  // namespace lm
