#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "lm/circle.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace lm;
using namespace lm::testing;
using lm::testing::all_words;
using lm::testing::random_group_word;
using lm::testing::random_word;

namespace {

GroupWord P(const char* text) { return GroupWord::parse(text, Tag::Shat); }
ProjectivePoint Q(const char* text) { return ProjectivePoint::parse(text); }
TailPoint TP(const char* text) { return TailPoint::parse(text); }



// Cones as half-open arcs of the circle R/Z.
Rational cone_start(const BinaryWord& s) {
    Rational a = 0, step = 1;
    for (char c : s.bits()) {
        step /= 2;
        if (c == '1') a += step;
    }
    return a;
}
Rational cone_end(const BinaryWord& s) {
    Rational e = cone_start(s) + Rational(1, boost::multiprecision::cpp_int(1) << s.size());
    return e == 1 ? Rational(0) : e;
}

bool carries(const GroupWord& f, const BinaryWord& from, const BinaryWord& to) {
    for (const char* x : {"", "0", "1", "0110", "1001"}) {
        const BinaryWord suffix(x);
        if (act_prefix(f, from + suffix).forced != to + suffix) return false;
    }
    return true;
}

GroupWord product(const std::vector<SFactor>& fs) {
    GroupWord out(Tag::Shat);
    for (const auto& f : fs) out *= f.word();
    return out;
}

void check_witness(const GroupWord& w, WitnessFamily family) {
    INFO(witness_family_name(family), ": ", w.str());
    const auto fs = s_witness(w, family);
    for (const auto& f : fs) {
        REQUIRE(psi_hat_oracle(f.word()) == 0);
        for (const auto& l : f.conjugator.letters()) REQUIRE(l.gen.kind != GenKind::Y);
    }
    REQUIRE(agrees(equal_at_depth(product(fs), w, 16)));
}

GroupWord pair_word(const BinaryWord& s, const BinaryWord& t) {
    return GroupWord(Tag::Shat, {{Generator::y(s), 1}, {Generator::y(t), -1}});
}

}  // namespace

TEST_CASE("phi examples") {
    CHECK(phi(TP("e(0)")).infinite());
    CHECK(phi(TP("e(1)")).infinite());
    CHECK(phi(TP("11(0)")) == Q("1"));
    CHECK(phi(TP("0(1)")) == Q("0"));
    CHECK(phi(TP("1(0)")) == Q("0"));
    CHECK(phi(TP("101100(1)")) == Q("5/7"));
    CHECK(TP("0111(1)") == TP("0(1)"));
}

TEST_CASE("phi_inverse examples") {
    CHECK(phi_inverse(Q("0")) == std::pair(TP("0(1)"), TP("1(0)")));
    CHECK(phi_inverse(Q("inf")) == std::pair(TP("e(0)"), TP("e(1)")));
    const auto one = phi_inverse(Q("1"));
    CHECK((one == std::pair(TP("10(1)"), TP("11(0)")) || one == std::pair(TP("11(0)"), TP("10(1)"))));
}

TEST_CASE("phi matches the convergent oracle") {
    for (const auto& s : all_words(8))
        for (char tail : {'0', '1'}) {
            if (!s.empty() && s.bits().back() == tail) continue;
            INFO(s.str(), "(", std::string(1, tail), ")");
            REQUIRE(phi(TailPoint(s, tail)) == phi_oracle(s.bits(), tail));
        }
}

TEST_CASE("phi pairs s01 and s10") {
    int cases = 0;
    for (const auto& s : all_words(8)) {
        ++cases;
        REQUIRE(phi(TailPoint(s.child('0'), '1')) == phi(TailPoint(s.child('1'), '0')));
    }
    CHECK(cases == 511);
}

TEST_CASE("phi is injective away from the pairs") {
    std::map<std::string, std::vector<TailPoint>> fibres;
    for (const auto& s : all_words(8))
        for (char tail : {'0', '1'})
            if (s.empty() || s.bits().back() != tail) fibres[phi(TailPoint(s, tail)).str()].push_back(TailPoint(s, tail));
    for (const auto& [q, ps] : fibres) {
        INFO(q);
        REQUIRE(ps.size() <= 2);
        if (ps.size() < 2) continue;
        const auto& a = ps[0].prefix().bits();
        const auto& b = ps[1].prefix().bits();
        REQUIRE(a.size() == b.size());
        REQUIRE(ps[0].tail() != ps[1].tail());
        if (a.empty()) continue;  // 0^inf and 1^inf
        REQUIRE(a.substr(0, a.size() - 1) == b.substr(0, b.size() - 1));
        REQUIRE(a.back() != ps[0].tail());
    }
}

TEST_CASE("phi_inverse round trip") {
    for (int p = -50; p <= 50; ++p)
        for (int q = 1; q <= 50; ++q) {
            const Rational r(p, q);
            if (numerator(r) != p) continue;
            const auto [a, b] = phi_inverse(ProjectivePoint(r));
            INFO(p, "/", q);
            REQUIRE(phi(a) == ProjectivePoint(r));
            REQUIRE(phi(b) == ProjectivePoint(r));
            REQUIRE(a != b);
        }
}

TEST_CASE("circular order") {
    CHECK(circularly_ordered({Q("0"), Q("1"), Q("inf")}));
    CHECK_FALSE(circularly_ordered({Q("1"), Q("0"), Q("inf")}));
    CHECK(circularly_ordered({Q("inf"), Q("-1"), Q("3")}));
    CHECK_THROWS(circularly_ordered({Q("1"), Q("1")}));
    std::vector<ProjectivePoint> pts{Q("inf"), Q("-7/2"), Q("-1"), Q("0"), Q("1/3"), Q("5")};
    for (std::size_t r = 0; r < pts.size(); ++r) {
        std::vector<ProjectivePoint> rot(pts.begin() + static_cast<long>(r), pts.end());
        rot.insert(rot.end(), pts.begin(), pts.begin() + static_cast<long>(r));
        CHECK(circularly_ordered(rot));
        std::swap(rot[1], rot[2]);
        CHECK_FALSE(circularly_ordered(rot));
    }
}

TEST_CASE("relator schemas") {
    const auto rs = relator_schemas(4, 3);
    std::map<int, int> per;
    for (const auto& r : rs) ++per[r.family];
    for (int f = 1; f <= 7; ++f) CHECK(per[f] > 0);
    auto has = [&](const GroupWord& w) {
        return std::any_of(rs.begin(), rs.end(), [&](const Relator& r) { return r.word.letters() == w.letters(); });
    };
    CHECK(has(P("p0^2")));
    CHECK(has(P("y[01] y[110] y[01]^-1 y[110]^-1")));
    CHECK(has(P("y[e]") * P("x[e] y[0] y[10]^-1 y[11]").inverse()));
    for (const auto& r : relator_schemas(3, 2)) {
        INFO(r.word.str());
        REQUIRE(psi_hat_oracle(r.word) == 0);
        REQUIRE(agrees(equal_at_depth(r.word, GroupWord(Tag::Shat), 16)));
    }
}

TEST_CASE("in_S") {
    CHECK(in_S(P("y[10] y[110]^-1")));
    CHECK_FALSE(in_S(P("y[10]")));
    CHECK(in_S(P("x[e]")));
    CHECK(in_S(P("p0")));
    std::mt19937 rng(53);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto w = random_group_word(rng, 8, 4);
        REQUIRE(in_S(w) == (psi_hat_oracle(w) == 0));
    }
}

TEST_CASE("pair classes match the arcs") {
    for (const auto& s : all_words(5))
        for (const auto& t : all_words(5)) {
            if (s.empty() || t.empty() || !independent(s, t)) continue;
            const auto c = pair_class(s, t);
            INFO(s.str(), " ", t.str());
            REQUIRE(c.gap_after_s == (cone_end(s) != cone_start(t)));
            REQUIRE(c.gap_after_t == (cone_end(t) != cone_start(s)));
        }
}

TEST_CASE("transporters") {
    const BinaryWord a("10"), b("110");
    CHECK(t_transporter({a, b}, {a, b}).empty());
    const auto f = t_transporter({a, b}, {BinaryWord("010"), BinaryWord("0110")});
    CHECK(carries(f, a, BinaryWord("010")));
    CHECK(carries(f, b, BinaryWord("0110")));
    const auto g = t_transporter({a, BinaryWord("1110")}, {BinaryWord("01"), b});
    CHECK(carries(g, a, BinaryWord("01")));
    CHECK(carries(g, BinaryWord("1110"), b));
    CHECK_THROWS_AS(t_transporter({a, b}, {BinaryWord("01"), b}), Error);
}

TEST_CASE("transporters carry random pairs of the same class") {
    std::mt19937 rng(59);
    int tried = 0;
    while (tried < 60) {
        const auto s = random_word(rng, 1, 4), t = random_word(rng, 1, 4);
        const auto u = random_word(rng, 1, 4), v = random_word(rng, 1, 4);
        if (!independent(s, t) || !independent(u, v) || pair_class(s, t) != pair_class(u, v)) continue;
        ++tried;
        INFO("(", s.str(), ",", t.str(), ") -> (", u.str(), ",", v.str(), ")");
        const auto f = t_transporter({s, t}, {u, v});
        for (const auto& l : f.letters()) REQUIRE(l.gen.kind != GenKind::Y);
        REQUIRE(carries(f, s, u));
        REQUIRE(carries(f, t, v));
    }
}

TEST_CASE("witness examples") {
    const auto two = s_witness(P("y[10] y[1110]^-1"), WitnessFamily::PairNonConsecutive);
    CHECK(two.size() == 2);
    CHECK(agrees(equal_at_depth(product(two), P("y[10] y[110]^-1 x[e]^-1 y[10] y[110]^-1 x[e]"), 16)));
    CHECK(s_witness(P("y[01] y[10]^-1"), WitnessFamily::PairConsecutive).size() == 1);
    check_witness(P("y[0] y[1]^-1"), WitnessFamily::PairConsecutive);
    check_witness(P("y[1] y[0]^-1"), WitnessFamily::PairConsecutive);
    check_witness(P("y[10] y[110] y[1110]^-1 y[10]^-1"), WitnessFamily::Balanced0);
    check_witness(P("y[01] y[0]^-1 y[001] y[0010]^-1"), WitnessFamily::Balanced1);
    CHECK_THROWS_AS(s_witness(P("y[01] y[10]^-1"), WitnessFamily::PairNonConsecutive), Error);
    CHECK_THROWS_AS(s_witness(P("y[10]"), WitnessFamily::Balanced0), Error);
    CHECK_THROWS_AS(s_witness(P("y[11] y[10]^-1"), WitnessFamily::Balanced1), Error);
    CHECK(parse_witness_family("Balanced1") == WitnessFamily::Balanced1);
    CHECK_THROWS_AS(parse_witness_family("nope"), Error);
}

TEST_CASE("random witnesses multiply back inside S") {
    std::mt19937 rng(61);
    std::bernoulli_distribution coin;
    int pairs = 0;
    while (pairs < 20) {
        const auto s = random_word(rng, 1, 4), t = random_word(rng, 1, 4);
        if (!independent(s, t)) continue;
        ++pairs;
        const bool cons = consecutive(s, t) || consecutive(t, s);
        check_witness(pair_word(s, t), cons ? WitnessFamily::PairConsecutive : WitnessFamily::PairNonConsecutive);
    }
    std::uniform_int_distribution<int> len(2, 5), ones(1, 3);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = len(rng);
        std::vector<Letter> b0, b1;
        int sum = 0;
        for (int i = 0; i < n; ++i) {
            const int e = i == n - 1 ? -sum : (coin(rng) ? 1 : -1);
            if (std::abs(e) > 1) break;
            sum += e;
            if (e == 0) continue;
            b0.push_back({Generator::y(BinaryWord::repeat('1', static_cast<unsigned>(ones(rng))) + BinaryWord("0")), e});
            BinaryWord sub;
            do sub = random_word(rng, 1, 4);
            while (sub.is_constant('1'));
            b1.push_back({Generator::y(sub), e});
        }
        if (sum != 0) continue;
        check_witness(GroupWord(Tag::Shat, b0), WitnessFamily::Balanced0);
        check_witness(GroupWord(Tag::Shat, b1), WitnessFamily::Balanced1);
    }
}
