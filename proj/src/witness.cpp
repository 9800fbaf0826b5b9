#include <algorithm>
#include <cstdlib>
#include <functional>

#include "lm/circle.hpp"

namespace lm {

namespace {

std::vector<BinaryWord> words_up_to(std::size_t maxlen) {
    std::vector<BinaryWord> out{BinaryWord()};
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i].size() < maxlen) {
            out.push_back(out[i].child('0'));
            out.push_back(out[i].child('1'));
        }
    return out;
}

GroupWord word(std::vector<Letter> l) { return GroupWord(Tag::Shat, std::move(l)); }
Letter X(const BinaryWord& s, int e = 1) { return {Generator::x(s), e}; }
Letter Y(const BinaryWord& s, int e = 1) { return {Generator::y(s), e}; }
Letter P(unsigned n, int e = 1) { return {Generator::p(n), e}; }
BinaryWord ones(std::size_t n) { return BinaryWord::repeat('1', n); }

}  // namespace

std::vector<Relator> relator_schemas(std::size_t maxlen, unsigned maxp) {
    std::vector<Relator> out;
    auto add = [&](int family, const GroupWord& lhs, const GroupWord& rhs) {
        out.push_back({family, lhs * rhs.inverse()});
    };
    const auto subs = words_up_to(maxlen);
    for (const auto& s : subs) {
        add(1, word({X(s, 2)}), word({X(s.child('0')), X(s), X(s.child('1'))}));
        add(4, word({Y(s)}), word({X(s), Y(s + BinaryWord("0")), Y(s + BinaryWord("10"), -1), Y(s + BinaryWord("11"))}));
        for (const auto& t : subs) {
            if (auto st = partial_action(s, Generator::x(t))) {
                add(2, word({X(s), X(t)}), word({X(t), X(*st)}));
                add(5, word({Y(s), X(t)}), word({X(t), Y(*st)}));
            }
            if (s != t && independent(s, t)) add(7, word({Y(s), Y(t)}), word({Y(t), Y(s)}));
        }
        for (unsigned n = 0; n <= maxp; ++n)
            if (auto sp = partial_action(s, Generator::p(n))) add(6, word({Y(s), P(n)}), word({P(n), Y(*sp)}));
    }
    for (unsigned n = 0; n <= maxp; ++n) {
        if (n + 1 <= maxp) {
            for (std::size_t m = 0; m < n && m + 1 <= maxlen; ++m)
                add(3, word({X(ones(m), -1), P(n), X(ones(m + 1))}), word({P(n + 1)}));
            add(3, word({P(n), X(BinaryWord())}), word({P(n + 1, 2)}));
            add(3, word({P(n)}), word({X(ones(n)), P(n + 1)}));
        }
        add(3, word({P(n, static_cast<int>(n) + 2)}), word({}));
    }
    return out;
}

bool in_S(const GroupWord& w) { return char_value(Character::PsiHat, w) == 0; }

PairClass pair_class(const BinaryWord& s, const BinaryWord& t) {
    if (!independent(s, t)) throw Error("subscripts " + s.str() + " and " + t.str() + " are not independent");
    using boost::multiprecision::cpp_int;
    const std::size_t L = std::max(s.size(), t.size());
    const cpp_int full = cpp_int(1) << L;
    auto lo = [&](const BinaryWord& w) {
        cpp_int v = 0;
        for (std::size_t i = 0; i < w.size(); ++i) v = 2 * v + (w[i] == '1');
        return v << (L - w.size());
    };
    auto hi = [&](const BinaryWord& w) { return lo(w) + (cpp_int(1) << (L - w.size())); };
    auto gap = [&](const BinaryWord& a, const BinaryWord& b) {
        cpp_int g = lo(b) - hi(a);
        if (g < 0) g += full;
        return g > 0;
    };
    return {gap(s, t), gap(t, s)};
}

namespace {

// Leaves of the smallest complete prefix code containing the given independent words.
std::vector<BinaryWord> minimal_code(const std::vector<BinaryWord>& ws) {
    std::vector<BinaryWord> out;
    std::function<void(const BinaryWord&)> rec = [&](const BinaryWord& node) {
        bool below = false;
        for (const auto& w : ws) {
            if (w == node) {
                out.push_back(node);
                return;
            }
            if (is_prefix(node, w)) below = true;
        }
        if (!below) {
            out.push_back(node);
            return;
        }
        rec(node.child('0'));
        rec(node.child('1'));
    };
    rec(BinaryWord());
    return out;
}

// The code read cyclically from s: s, leaves between s and t, t, leaves between t and s.
struct CyclicCode {
    std::vector<BinaryWord> a, b;
};

CyclicCode cyclic_code(const BinaryWord& s, const BinaryWord& t) {
    auto code = minimal_code({s, t});
    const auto is = static_cast<std::size_t>(std::find(code.begin(), code.end(), s) - code.begin());
    const auto it = static_cast<std::size_t>(std::find(code.begin(), code.end(), t) - code.begin());
    const std::size_t n = code.size();
    CyclicCode c;
    for (std::size_t k = (is + 1) % n; k != it; k = (k + 1) % n) c.a.push_back(code[k]);
    for (std::size_t k = (it + 1) % n; k != is; k = (k + 1) % n) c.b.push_back(code[k]);
    return c;
}

void grow(std::vector<BinaryWord>& arc, std::size_t size) {
    while (arc.size() < size) {
        const BinaryWord w = arc.back();
        arc.back() = w.child('0');
        arc.push_back(w.child('1'));
    }
}

}  // namespace

GroupWord t_transporter(const std::pair<BinaryWord, BinaryWord>& from, const std::pair<BinaryWord, BinaryWord>& to) {
    const auto& [s, t] = from;
    const auto& [u, v] = to;
    if (s.empty() || t.empty() || u.empty() || v.empty()) throw Error("transporter pairs need nonempty subscripts");
    if (pair_class(s, t) != pair_class(u, v))
        throw Error("no element of T carries (" + s.str() + "," + t.str() + ") to (" + u.str() + "," + v.str() +
                    "): the gaps between the cones differ");
    auto d = cyclic_code(s, t), r = cyclic_code(u, v);
    grow(d.a, r.a.size());
    grow(r.a, d.a.size());
    grow(d.b, r.b.size());
    grow(r.b, d.b.size());
    Rows rows{{s, u}, {t, v}};
    for (std::size_t k = 0; k < d.a.size(); ++k) rows.emplace_back(d.a[k], r.a[k]);
    for (std::size_t k = 0; k < d.b.size(); ++k) rows.emplace_back(d.b[k], r.b[k]);
    const TElement f(rows);
    const GroupWord w = f.to_word().with_tag(Tag::T);
    const TElement check = TElement::from_word(w);
    if (check.apply(s) != std::optional(u) || check.apply(t) != std::optional(v))
        throw Error("internal: transporter word does not carry the pair");
    return w;
}

std::string witness_family_name(WitnessFamily f) {
    switch (f) {
        case WitnessFamily::PairConsecutive: return "PairConsecutive";
        case WitnessFamily::PairNonConsecutive: return "PairNonConsecutive";
        case WitnessFamily::Balanced0: return "Balanced0";
        case WitnessFamily::Balanced1: return "Balanced1";
    }
    return "?";
}

WitnessFamily parse_witness_family(std::string_view s) {
    for (auto f : {WitnessFamily::PairConsecutive, WitnessFamily::PairNonConsecutive, WitnessFamily::Balanced0,
                   WitnessFamily::Balanced1})
        if (s == witness_family_name(f)) return f;
    throw Error("unknown witness family '" + std::string(s) + "'");
}

GroupWord SFactor::word() const {
    const GroupWord f = conjugator.with_tag(Tag::Shat);
    if (power == 0) return f;
    GroupWord g = y_word(BinaryWord("10")) * y_word(BinaryWord("110"), -1);
    if (power < 0) g = g.inverse();
    return f.inverse() * g * f;
}

std::string SFactor::str() const {
    if (power == 0) return conjugator.empty() ? "1" : conjugator.str();
    std::string g = std::string("(y[10] y[110]^-1)") + (power < 0 ? "^-1" : "");
    if (conjugator.empty()) return g;
    return "(" + conjugator.str() + ")^-1 " + g + " (" + conjugator.str() + ")";
}

namespace {

std::vector<SFactor> invert(std::vector<SFactor> fs) {
    std::reverse(fs.begin(), fs.end());
    for (auto& f : fs) {
        if (f.power == 0) f.conjugator = f.conjugator.inverse();
        else f.power = -f.power;
    }
    return fs;
}

void append(std::vector<SFactor>& a, const std::vector<SFactor>& b) { a.insert(a.end(), b.begin(), b.end()); }

// Factors of y_s y_t^-1 for independent s, t.
std::vector<SFactor> pair_factors(const BinaryWord& s, const BinaryWord& t) {
    const PairClass c = pair_class(s, t);
    const BinaryWord b10("10"), b110("110"), b1110("1110");
    if (!c.gap_after_s && !c.gap_after_t) {
        // {s, t} = {0, 1}; y_1 = x_1 y_10 y_110^-1 y_111 gives
        // y_0 y_1^-1 = (y_0 y_111^-1)(y_110 y_10^-1) x_1^-1.
        std::vector<SFactor> out = pair_factors(BinaryWord("0"), BinaryWord("111"));
        append(out, pair_factors(b110, b10));
        out.push_back({GroupWord(Tag::T, {{Generator::x(BinaryWord("1")), -1}}), 0});
        return s == BinaryWord("0") ? out : invert(out);
    }
    if (!c.gap_after_s) return {{t_transporter({b10, b110}, {s, t}), 1}};
    if (!c.gap_after_t) return {{t_transporter({b10, b110}, {t, s}), -1}};
    // y_10 y_1110^-1 = (y_10 y_110^-1) x_e^-1 (y_10 y_110^-1) x_e.
    const GroupWord f = t_transporter({b10, b1110}, {s, t});
    return {{f, 1}, {GroupWord(Tag::T, {{Generator::x(BinaryWord()), 1}}) * f, 1}};
}

struct Unit {
    BinaryWord sub;
    int exp;
};

std::vector<Unit> y_units(const GroupWord& w, WitnessFamily family) {
    std::vector<Unit> out;
    const GroupWord u = w.units();
    for (const auto& l : u.letters()) {
        if (l.gen.kind != GenKind::Y)
            throw Error(witness_family_name(family) + " expects a y-word, found " + l.gen.str());
        out.push_back({l.gen.sub, l.exp});
    }
    long sum = 0;
    for (const auto& x : out) sum += x.exp;
    if (sum != 0) throw Error(witness_family_name(family) + " expects exponent sum 0, found " + std::to_string(sum));
    return out;
}

// Product of commuting y-units with exponent sum 0, paired off.
std::vector<SFactor> balanced_pairs(const std::vector<Unit>& units) {
    std::vector<BinaryWord> pos, neg;
    for (const auto& x : units) (x.exp > 0 ? pos : neg).push_back(x.sub);
    std::sort(pos.begin(), pos.end());
    std::sort(neg.begin(), neg.end());
    std::vector<BinaryWord> p, n;
    std::set_difference(pos.begin(), pos.end(), neg.begin(), neg.end(), std::back_inserter(p));
    std::set_difference(neg.begin(), neg.end(), pos.begin(), pos.end(), std::back_inserter(n));
    std::vector<SFactor> out;
    for (std::size_t i = 0; i < p.size(); ++i) append(out, pair_factors(p[i], n[i]));
    return out;
}

}  // namespace

std::vector<SFactor> s_witness(const GroupWord& w, WitnessFamily family) {
    const std::string fam = witness_family_name(family);
    auto units = y_units(w, family);
    std::vector<SFactor> out;
    switch (family) {
        case WitnessFamily::PairConsecutive:
        case WitnessFamily::PairNonConsecutive: {
            if (units.size() != 2 || units[0].exp != 1 || units[1].exp != -1)
                throw Error(fam + " expects y_s y_t^-1");
            const auto& s = units[0].sub;
            const auto& t = units[1].sub;
            if (!independent(s, t)) throw Error(fam + " expects independent subscripts");
            const bool cons = consecutive(s, t) || consecutive(t, s);
            if (cons != (family == WitnessFamily::PairConsecutive))
                throw Error(s.str() + " and " + t.str() + (cons ? " are" : " are not") + " consecutive");
            out = pair_factors(s, t);
            break;
        }
        case WitnessFamily::Balanced0: {
            for (const auto& x : units) {
                const auto& b = x.sub.bits();
                if (b.size() < 2 || b.back() != '0' || b.find('0') != b.size() - 1)
                    throw Error(fam + " expects subscripts 1^k 0 with k >= 1, found " + x.sub.str());
            }
            out = balanced_pairs(units);
            break;
        }
        case WitnessFamily::Balanced1: {
            std::size_t lead = 0;
            for (const auto& x : units) {
                if (x.sub.is_constant('1')) throw Error(fam + " excludes subscripts 1^m, found " + x.sub.str());
                lead = std::max(lead, x.sub.bits().find('0'));
            }
            // Trade each unit for y_c with c = 1^{m+i} 0 outside every subscript.
            const std::size_t m = lead + 1;
            std::vector<Unit> moved;
            for (std::size_t i = 0; i < units.size(); ++i) {
                const BinaryWord c = ones(m + i + 1) + BinaryWord("0");
                append(out, units[i].exp > 0 ? pair_factors(units[i].sub, c) : pair_factors(c, units[i].sub));
                moved.push_back({c, units[i].exp});
            }
            append(out, balanced_pairs(moved));
            break;
        }
    }
    GroupWord product(Tag::Shat);
    for (const auto& f : out) {
        if (!in_S(f.word())) throw Error("internal: witness factor " + f.str() + " is not in S");
        product *= f.word();
    }
    if (!agrees(equal_at_depth(product, w.with_tag(Tag::Shat), kDefaultDepth)))
        throw Error("internal: witness for " + w.str() + " does not multiply back");
    return out;
}

}  // namespace lm
