#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lm/words.hpp"
#include "support.hpp"

using namespace lm;
using lm::testing::all_words;

namespace {

BinaryWord W(const char* s) { return BinaryWord::parse(s); }

// s < t: s extends t properly, or s = t1 0 t2 and t = t1 1 t3.
bool tree_less_oracle(const std::string& s, const std::string& t) {
    if (s.size() > t.size() && s.compare(0, t.size(), t) == 0) return true;
    for (std::size_t k = 0; k < s.size() && k < t.size(); ++k) {
        if (s.compare(0, k, t, 0, k) != 0) break;
        if (s[k] == '0' && t[k] == '1') return true;
    }
    return false;
}

// Rows of x_t and p_n written out directly.
std::vector<std::pair<std::string, std::string>> rows_of(const Generator& g) {
    if (g.kind == GenKind::X) {
        const std::string& t = g.sub.bits();
        return {{t + "00", t + "0"}, {t + "01", t + "10"}, {t + "1", t + "11"}};
    }
    std::vector<std::pair<std::string, std::string>> rows;
    for (unsigned k = 0; k < g.index; ++k) rows.push_back({std::string(k, '1') + "0", std::string(k + 1, '1') + "0"});
    rows.push_back({std::string(g.index, '1') + "0", std::string(g.index + 1, '1')});
    rows.push_back({std::string(g.index + 1, '1'), "0"});
    return rows;
}

std::optional<std::string> action_oracle(const std::string& s, const Generator& g) {
    const auto rows = rows_of(g);
    for (const auto& [from, to] : rows)
        if (s.compare(0, from.size(), from) == 0 && s.size() >= from.size()) return to + s.substr(from.size());
    // Outside the support of x_t the word is fixed.
    if (g.kind == GenKind::X && !is_prefix(BinaryWord(s), g.sub) && !is_prefix(g.sub, BinaryWord(s))) return s;
    return std::nullopt;
}

}  // namespace

TEST_CASE("binary word text form") {
    CHECK(W("e").empty());
    CHECK(W("e").str() == "e");
    CHECK(W("0110").str() == "0110");
    CHECK_THROWS_AS(W("012"), ParseError);
}

TEST_CASE("is_prefix examples") {
    CHECK(is_prefix(W("e"), W("01")));
    CHECK(is_prefix(W("0"), W("01")));
    CHECK_FALSE(is_prefix(W("10"), W("0100")));
    CHECK(is_prefix(W("01"), W("01")));
}

TEST_CASE("independent examples") {
    CHECK(independent(W("01"), W("110")));
    CHECK_FALSE(independent(W("0"), W("01")));
    CHECK_FALSE(independent(W("10"), W("10")));
}

TEST_CASE("consecutive examples") {
    CHECK(consecutive(W("01"), W("10")) == ConsecutiveWitness{W("e"), 1, 1});
    CHECK(consecutive(W("10"), W("110")) == ConsecutiveWitness{W("1"), 0, 1});
    CHECK_FALSE(consecutive(W("01"), W("110")));
    CHECK_FALSE(consecutive(W("10"), W("01")));
}

TEST_CASE("consecutive implies independent, witnesses unique") {
    const auto ws = all_words(8);
    for (const auto& s : ws)
        for (const auto& t : ws) {
            // Count every split s = u 0 1^m, t = u 1 0^n.
            int splits = 0;
            const std::string& a = s.bits();
            const std::string& b = t.bits();
            for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) {
                if (a.compare(0, k, b, 0, k) != 0) break;
                const bool left = a[k] == '0' && a.find('0', k + 1) == std::string::npos;
                const bool right = b[k] == '1' && b.find('1', k + 1) == std::string::npos;
                if (left && right) ++splits;
            }
            REQUIRE(splits <= 1);
            const auto c = consecutive(s, t);
            REQUIRE(c.has_value() == (splits == 1));
            if (!c) continue;
            REQUIRE(independent(s, t));
            REQUIRE(c->u + BinaryWord("0") + BinaryWord::repeat('1', c->m) == s);
            REQUIRE(c->u + BinaryWord("1") + BinaryWord::repeat('0', c->n) == t);
        }
}

TEST_CASE("tree order against pattern matching") {
    CHECK(tree_order_less(W("010"), W("01")));
    CHECK(tree_order_less(W("0"), W("10")));
    CHECK(tree_order_less(W("10"), W("11")));
    CHECK_FALSE(tree_order_less(W("11"), W("10")));
    const auto ws = all_words(6);
    for (const auto& s : ws) {
        REQUIRE_FALSE(tree_order_less(s, s));
        for (const auto& t : ws) REQUIRE(tree_order_less(s, t) == tree_less_oracle(s.bits(), t.bits()));
    }
}

TEST_CASE("tree order is transitive") {
    const auto ws = all_words(4);
    for (const auto& a : ws)
        for (const auto& b : ws) {
            if (!tree_order_less(a, b)) continue;
            for (const auto& c : ws)
                if (tree_order_less(b, c)) REQUIRE(tree_order_less(a, c));
        }
}

TEST_CASE("partial action examples") {
    CHECK(partial_action(W("00"), Generator::x(W("e"))) == W("0"));
    CHECK(partial_action(W("10"), Generator::p(1)) == W("11"));
    CHECK_FALSE(partial_action(W("0"), Generator::x(W("e"))));
    CHECK(partial_action(W("0"), Generator::x(W("1"))) == W("0"));
}

TEST_CASE("partial action matches the tables") {
    std::vector<Generator> gens;
    for (const auto& t : all_words(3)) gens.push_back(Generator::x(t));
    for (unsigned n = 0; n < 4; ++n) gens.push_back(Generator::p(n));
    for (const auto& g : gens)
        for (const auto& s : all_words(7)) {
            const auto got = partial_action(s, g);
            const auto want = action_oracle(s.bits(), g);
            REQUIRE(got.has_value() == want.has_value());
            if (got) REQUIRE(got->bits() == *want);
        }
}

TEST_CASE("partial action is prefix monotone and inverts") {
    std::vector<Generator> gens;
    for (const auto& t : all_words(3)) gens.push_back(Generator::x(t));
    for (unsigned n = 0; n < 4; ++n) gens.push_back(Generator::p(n));
    for (const auto& g : gens)
        for (const auto& s : all_words(7)) {
            const auto img = partial_action(s, g);
            if (!img) continue;
            for (char b : {'0', '1'})
                if (auto longer = partial_action(s.child(b), g)) REQUIRE(is_prefix(*img, *longer));
            if (auto back = partial_action(*img, g, -1)) CHECK(*back == s);
        }
}
