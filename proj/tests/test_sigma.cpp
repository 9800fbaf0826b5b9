#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lm/sigma.hpp"
#include "oracles.hpp"

using namespace lm;
using namespace lm::testing;

namespace {

const Tag kGroups[] = {Tag::G, Tag::Gy, Tag::yG, Tag::yGy};

CharacterVector C(const char* text) { return CharacterVector::parse(text); }

CharacterVector scaled(const CharacterVector& chi, const Rational& q) {
    CharacterVector out = chi;
    for (auto& c : out.coords) c *= q;
    return out;
}






}  // namespace

TEST_CASE("sigma examples") {
    CHECK_FALSE(sigma_membership(Tag::G, C("1,0,0"), 1));
    CHECK_FALSE(sigma_membership(Tag::G, C("7,0,0"), 1));
    CHECK(sigma_membership(Tag::G, C("1,1,0"), 1));
    CHECK_FALSE(sigma_membership(Tag::G, C("1,1,0"), 2));
    CHECK(sigma_membership(Tag::G, C("0,0,1"), kSigmaInfinity));
    CHECK(sigma_membership(Tag::G, C("0,0,-1"), kSigmaInfinity));
    CHECK(sigma_membership(Tag::G, C("-1,0,0"), 2));
    CHECK_FALSE(sigma_membership(Tag::Gy, C("0,-1,0"), 1));
    CHECK(sigma_membership(Tag::Gy, C("0,1,0"), 5));
    CHECK_FALSE(sigma_membership(Tag::yG, C("0,1,0"), 1));
    CHECK_FALSE(sigma_membership(Tag::yGy, C("1,-1,0"), 2));
    CHECK(sigma_membership(Tag::yGy, C("1,-1,0"), 1));
    CHECK_THROWS_AS(sigma_membership(Tag::G, C("0,0,0"), 1), Error);
    CHECK_THROWS_AS(sigma_membership(Tag::G, C("1,0,0"), 0), Error);
    CHECK_THROWS_AS(sigma_membership(Tag::Shat, C("1,0,0"), 1), Error);
}

TEST_CASE("bases and excluded pairs") {
    CHECK(character_basis(Tag::G) == std::array<std::string, 3>{"chi0", "chi1", "psi"});
    CHECK(character_basis(Tag::yGy) == std::array<std::string, 3>{"psi0", "psi1", "psi"});
    CHECK(excluded_pair(Tag::G) == std::array<std::array<long, 3>, 2>{{{1, 0, 0}, {0, 1, 0}}});
    CHECK(excluded_pair(Tag::Gy) == std::array<std::array<long, 3>, 2>{{{1, 0, 0}, {0, -1, 0}}});
    CHECK(excluded_pair(Tag::yG) == std::array<std::array<long, 3>, 2>{{{1, 0, 0}, {0, 1, 0}}});
    CHECK(excluded_pair(Tag::yGy) == std::array<std::array<long, 3>, 2>{{{1, 0, 0}, {0, -1, 0}}});
    CHECK(C("1/2,-3,0").str() == "1/2,-3,0");
    CHECK_THROWS_AS(C("1,2"), ParseError);
}

TEST_CASE("sigma grid: oracle, scale invariance, stabilization") {
    const Rational scales[] = {Rational(1, 3), 2, 7};
    for (Tag tag : kGroups)
        for (const auto& chi : character_grid()) {
            if (chi.zero()) continue;
            INFO(tag_name(tag), " ", chi.str());
            const bool s1 = sigma_membership(tag, chi, 1), s2 = sigma_membership(tag, chi, 2);
            REQUIRE(s1 == sigma_oracle(tag, chi, 1));
            REQUIRE(s2 == sigma_oracle(tag, chi, 2));
            REQUIRE((!s2 || s1));
            for (unsigned n : {3u, 5u, kSigmaInfinity}) REQUIRE(sigma_membership(tag, chi, n) == s2);
            for (const auto& q : scales) {
                REQUIRE(sigma_membership(tag, scaled(chi, q), 1) == s1);
                REQUIRE(sigma_membership(tag, scaled(chi, q), 2) == s2);
            }
        }
}

TEST_CASE("lattice subgroups") {
    CHECK(LatticeSubgroup::parse("2,4,6;3,6,9").generators() == std::vector<LatticeVector>{{1, 2, 3}});
    CHECK(LatticeSubgroup::parse("").rank() == 0);
    CHECK(LatticeSubgroup::parse("1,0,0;0,1,0;0,0,1") == LatticeSubgroup::full());
    CHECK(LatticeSubgroup::parse("1,1,0;0,2,0").rank() == 2);
    CHECK_FALSE(LatticeSubgroup::parse("2,0,0") == LatticeSubgroup::parse("1,0,0"));
    CHECK_THROWS_AS(LatticeSubgroup::parse("1,0"), ParseError);
}

TEST_CASE("classifier examples") {
    const auto e1 = LatticeSubgroup::parse("1,0,0");
    const auto diff = LatticeSubgroup::parse("1,-1,0");
    const auto sum = LatticeSubgroup::parse("1,1,0");
    CHECK(classify_normal_subgroup(e1) == FinitenessClass::NotFinitelyGenerated);
    CHECK(classify_normal_subgroup(diff) == FinitenessClass::FinitelyGeneratedNotFinitelyPresented);
    CHECK(classify_normal_subgroup(sum) == FinitenessClass::TypeFInfinity);
    CHECK_FALSE(type_Fn(e1, 1));
    CHECK(type_Fn(diff, 1));
    CHECK_FALSE(type_Fn(diff, 2));
    for (unsigned n : {1u, 2u, 7u, kSigmaInfinity}) CHECK(type_Fn(LatticeSubgroup::full(), n));
    CHECK(classify_normal_subgroup(LatticeSubgroup()) == FinitenessClass::NotFinitelyGenerated);
    CHECK(finiteness_class_name(FinitenessClass::TypeFInfinity) == "TypeFInfinity");
}

TEST_CASE("classifier agrees with the brute-force oracle and with type_Fn") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 300; ++trial) {
        const LatticeSubgroup a(random_gens(rng));
        INFO(a.str());
        const auto c = classify_normal_subgroup(a);
        REQUIRE(c == classify_oracle(a));
        const bool f1 = type_Fn(a, 1), f2 = type_Fn(a, 2), f5 = type_Fn(a, 5);
        REQUIRE((c == FinitenessClass::NotFinitelyGenerated) == !f1);
        REQUIRE((c == FinitenessClass::FinitelyGeneratedNotFinitelyPresented) == (f1 && !f2));
        REQUIRE((c == FinitenessClass::TypeFInfinity) == f5);
        REQUIRE(f2 == f5);
    }
}

TEST_CASE("classification ignores the choice of generators") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        const auto gens = random_gens(rng);
        const LatticeSubgroup a(gens), b(shuffle_gens(rng, gens));
        INFO(a.str(), " vs ", b.str());
        REQUIRE(a == b);
        REQUIRE(classify_normal_subgroup(a) == classify_normal_subgroup(b));
    }
}

TEST_CASE("other groups: only subgroups above the commutator") {
    const auto a = LatticeSubgroup::parse("1,0,0");
    for (Tag tag : {Tag::Gy, Tag::yG, Tag::yGy}) {
        CHECK_THROWS_AS(classify_normal_subgroup(a, tag, false), Error);
        CHECK_NOTHROW(classify_normal_subgroup(a, tag, true));
    }
    CHECK_NOTHROW(classify_normal_subgroup(a, Tag::G, false));
    // Gy excludes chi0 and -psi1, which swaps the roles of e1 - e2 and e1 + e2.
    CHECK(classify_normal_subgroup(LatticeSubgroup::parse("1,-1,0"), Tag::Gy) == FinitenessClass::TypeFInfinity);
    CHECK(classify_normal_subgroup(LatticeSubgroup::parse("1,1,0"), Tag::Gy) ==
          FinitenessClass::FinitelyGeneratedNotFinitelyPresented);
}
