#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lm/group.hpp"

namespace lm {

using Rational = boost::multiprecision::cpp_rational;

// The eventually constant sequence prefix . tail^inf, with the prefix not ending in the tail bit.
class TailPoint {
public:
    TailPoint(BinaryWord prefix, char tail);
    static TailPoint parse(std::string_view text);  // "<prefix>(0)" / "<prefix>(1)", prefix may be "e"

    const BinaryWord& prefix() const { return prefix_; }
    char tail() const { return tail_; }
    std::string str() const;
    friend bool operator==(const TailPoint&, const TailPoint&) = default;
    friend auto operator<=>(const TailPoint& a, const TailPoint& b) {
        return std::pair(a.prefix_.bits(), a.tail_) <=> std::pair(b.prefix_.bits(), b.tail_);
    }

private:
    BinaryWord prefix_;
    char tail_;
};

// A point of Q u {inf}.
class ProjectivePoint {
public:
    ProjectivePoint() : infinite_(true) {}
    explicit ProjectivePoint(Rational q) : infinite_(false), value_(std::move(q)) {}
    static ProjectivePoint infinity() { return {}; }
    static ProjectivePoint parse(std::string_view text);  // "p/q", "p" or "inf"

    bool infinite() const { return infinite_; }
    const Rational& value() const { return value_; }
    std::string str() const;
    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }

private:
    bool infinite_;
    Rational value_;
};

ProjectivePoint phi(const TailPoint& p);
std::pair<TailPoint, TailPoint> phi_inverse(const ProjectivePoint& q);

bool circularly_ordered(const std::vector<ProjectivePoint>& ts);

// ---- the presentation of S-hat ----

struct Relator {
    int family = 0;  // 1..7
    GroupWord word{Tag::Shat};
};

// Left side times inverted right side, over subscripts of length <= maxlen and p-indices <= maxp.
std::vector<Relator> relator_schemas(std::size_t maxlen, unsigned maxp);

bool in_S(const GroupWord& w);

// Where two disjoint cones sit on the circle: whether the arc running from s to t,
// and the arc running from t back to s, contain anything.
struct PairClass {
    bool gap_after_s = false;
    bool gap_after_t = false;
    friend bool operator==(const PairClass&, const PairClass&) = default;
};
PairClass pair_class(const BinaryWord& s, const BinaryWord& t);

// f in T with from.first . f = to.first and from.second . f = to.second.
GroupWord t_transporter(const std::pair<BinaryWord, BinaryWord>& from, const std::pair<BinaryWord, BinaryWord>& to);

enum class WitnessFamily { PairConsecutive, PairNonConsecutive, Balanced0, Balanced1 };
std::string witness_family_name(WitnessFamily f);
WitnessFamily parse_witness_family(std::string_view s);

// Either a T-word (power 0) or f^-1 (y_10 y_110^-1)^power f with f = conjugator.
struct SFactor {
    GroupWord conjugator{Tag::T};
    int power = 0;
    GroupWord word() const;
    std::string str() const;
};

std::vector<SFactor> s_witness(const GroupWord& w, WitnessFamily family);

}  // namespace lm
