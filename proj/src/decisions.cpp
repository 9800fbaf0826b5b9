#include <functional>
#include <unordered_set>

#include "lm/group.hpp"

namespace lm {

namespace {

bool has_y(const GroupWord& w) {
    for (const auto& l : w.letters())
        if (l.gen.kind == GenKind::Y) return true;
    return false;
}

std::string lcp(const std::string& a, const std::string& b) {
    std::size_t n = 0;
    while (n < a.size() && n < b.size() && a[n] == b[n]) ++n;
    return a.substr(0, n);
}

// Decides exactly whether, from state q with `emitted` already output, every continuation
// eta yields r eta. Fails (returns false) when the lag grows past the cap.
bool acts_as_replacement(const Chain& q, const std::string& emitted, const std::string& r) {
    if (r.compare(0, emitted.size(), emitted) != 0 || emitted.size() > r.size()) return false;
    constexpr std::size_t kMaxLag = 64, kMaxStates = 20000;
    std::unordered_set<std::string> seen;
    std::vector<std::pair<Chain, std::string>> stack{{q, r.substr(emitted.size())}};
    seen.insert(q.state_key() + '|' + stack.back().second);
    while (!stack.empty()) {
        auto [c, lag] = std::move(stack.back());
        stack.pop_back();
        for (char b : {'0', '1'}) {
            Chain n = c;
            std::string z = n.feed(b);
            std::string expect = lag + b;
            if (z.size() > expect.size() || expect.compare(0, z.size(), z) != 0) return false;
            expect.erase(0, z.size());
            if (expect.size() > kMaxLag) return false;
            if (seen.insert(n.state_key() + '|' + expect).second) {
                if (seen.size() > kMaxStates) return false;
                stack.emplace_back(std::move(n), std::move(expect));
            }
        }
    }
    return true;
}

std::optional<BinaryWord> search_witness(const GroupWord& w) {
    for (std::size_t d : {std::size_t{16}, std::size_t{24}, std::size_t{32}}) {
        auto v = equal_at_depth(w, GroupWord(w.tag()), d);
        if (auto* diff = std::get_if<Differ>(&v)) return diff->witness;
    }
    return std::nullopt;
}

}  // namespace

std::optional<TElement> certify_T(const GroupWord& w, std::size_t max_nodes) {
    constexpr std::size_t kMaxDepth = 24;
    Rows rows;
    std::size_t nodes = 0;
    std::function<bool(const std::string&)> visit = [&](const std::string& u) -> bool {
        if (++nodes > max_nodes) return false;
        Chain q(w);
        std::string emitted = q.feed(u);
        for (std::size_t k : {8, 16, 32}) {
            Chain a = q, b = q;
            std::string o0 = emitted + a.feed(std::string(k, '0'));
            std::string o1 = emitted + b.feed(std::string(k, '1'));
            std::string r = lcp(o0, o1);
            if (r.size() == o0.size() || r.size() == o1.size()) continue;
            if (acts_as_replacement(q, emitted, r)) {
                rows.emplace_back(BinaryWord(u), BinaryWord(r));
                return true;
            }
            break;
        }
        if (u.size() >= kMaxDepth) return false;
        return visit(u + '0') && visit(u + '1');
    };
    if (!visit("")) return std::nullopt;
    try {
        return TElement(rows);
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "Yes";
        case Verdict::No: return "No";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

std::string word_problem_name(WordProblem v) {
    switch (v) {
        case WordProblem::Identity: return "Identity";
        case WordProblem::NotIdentity: return "NotIdentity";
        case WordProblem::Unknown: return "Unknown";
    }
    return "?";
}

WordProblemResult word_problem(const GroupWord& w, const RewriteOptions& opts) {
    auto not_identity = [&](std::string why) {
        return WordProblemResult{WordProblem::NotIdentity, search_witness(w), std::move(why)};
    };
    if (!has_y(w)) {
        if (decide_T_identity(w)) return {WordProblem::Identity, std::nullopt, "tree pair is trivial"};
        return not_identity("tree pair is nontrivial");
    }
    auto v = equal_at_depth(w, GroupWord(w.tag()), opts.validate_depth);
    if (auto* d = std::get_if<Differ>(&v)) return {WordProblem::NotIdentity, d->witness, "action differs"};
    try {
        auto sf = rewrite_standard_form(w, opts);
        if (sf.tail.empty()) {
            if (decide_T_identity(sf.head)) return {WordProblem::Identity, std::nullopt, "standard form is trivial"};
            return not_identity("standard form has a nontrivial T-part");
        }
    } catch (const RewriteBudgetExceeded&) {
    }
    if (char_value(Character::PsiHat, w) != 0) return not_identity("psihat is nonzero");
    if (auto rc = find_rate_cycle(w)) return not_identity("rate cycle " + rc->str());
    if (auto t = certify_T(w)) {
        if (t->is_identity()) return {WordProblem::Identity, std::nullopt, "acts trivially on every cone"};
        return not_identity("acts as the tree pair " + t->str());
    }
    return {WordProblem::Unknown, std::nullopt, "budget exhausted"};
}

Decision in_F(const GroupWord& w, const RewriteOptions& opts) {
    if (w.tag() == Tag::F) return {Verdict::Yes, "F-word", std::nullopt};
    if (!has_y(w)) {
        auto t = TElement::from_word(w);
        if (t.in_F()) return {Verdict::Yes, "tree pair preserves order", std::nullopt};
        return {Verdict::No, "tree pair rotates", search_witness(w)};
    }
    if (long v = char_value(Character::PsiHat, w); v != 0)
        return {Verdict::No, "psihat = " + std::to_string(v), std::nullopt};
    if (!fixes_endpoints(w, opts.validate_depth)) return {Verdict::No, "moves an endpoint", std::nullopt};
    try {
        auto sf = rewrite_standard_form(w, opts);
        if (sf.tail.empty()) {
            if (TElement::from_word(sf.head).in_F()) return {Verdict::Yes, "standard form " + sf.str(), std::nullopt};
            return {Verdict::No, "standard form has a rotation", std::nullopt};
        }
    } catch (const RewriteBudgetExceeded&) {
    }
    if (auto rc = find_rate_cycle(w)) return {Verdict::No, "rate cycle " + rc->str(), rc->prefix + rc->loop};
    if (auto t = certify_T(w)) {
        if (t->in_F()) return {Verdict::Yes, "acts as the tree pair " + t->str(), std::nullopt};
        return {Verdict::No, "acts as the rotation " + t->str(), std::nullopt};
    }
    return {Verdict::Unknown, "budget exhausted", std::nullopt};
}

Decision same_coset(const GroupWord& g, const GroupWord& h, const RewriteOptions& opts) {
    return in_F(g * h.inverse(), opts);
}

std::string coset_key(const GroupWord& g, const RewriteOptions& opts) {
    RewriteOptions o = opts;
    o.absorb = false;
    auto sf = rewrite_standard_form(g, o);
    const auto& hl = sf.head.letters();
    std::size_t k = 0;
    while (k < hl.size() && hl[k].gen.kind == GenKind::X) ++k;
    StandardForm key;
    key.head = GroupWord(Tag::Shat, std::vector<Letter>(hl.begin() + static_cast<long>(k), hl.end()));
    key.tail = sf.tail;
    return key.str();
}

}  // namespace lm
