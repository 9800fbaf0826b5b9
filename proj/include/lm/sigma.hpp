#pragma once

#include <array>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lm/group_word.hpp"

namespace lm {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr unsigned kSigmaInfinity = std::numeric_limits<unsigned>::max();

// Coordinates in the tag's character basis:
//   G: (chi0, chi1, psi)   Gy: (chi0, psi1, psi)   yG: (psi0, chi1, psi)   yGy: (psi0, psi1, psi)
struct CharacterVector {
    std::array<Rational, 3> coords{};

    bool zero() const { return coords[0] == 0 && coords[1] == 0 && coords[2] == 0; }
    static CharacterVector parse(std::string_view text);  // "a,b,c" with integers or p/q
    std::string str() const;
};

std::array<std::string, 3> character_basis(Tag tag);

// The two classes missing from Sigma^1, as integer vectors in the tag's basis.
std::array<std::array<long, 3>, 2> excluded_pair(Tag tag);

bool sigma_membership(Tag tag, const CharacterVector& chi, unsigned n);

using LatticeVector = std::array<long, 3>;

// A subgroup of Z^3, kept as its row Hermite normal form.
class LatticeSubgroup {
public:
    LatticeSubgroup() = default;
    explicit LatticeSubgroup(std::vector<LatticeVector> generators);
    static LatticeSubgroup parse(std::string_view text);  // "1,0,0;0,1,1"; empty text is {0}
    static LatticeSubgroup full() { return LatticeSubgroup({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }

    const std::vector<LatticeVector>& generators() const { return gens_; }
    std::size_t rank() const { return gens_.size(); }
    std::string str() const;
    friend bool operator==(const LatticeSubgroup&, const LatticeSubgroup&) = default;

private:
    std::vector<LatticeVector> gens_;
};

enum class FinitenessClass { NotFinitelyGenerated, FinitelyGeneratedNotFinitelyPresented, TypeFInfinity };

std::string finiteness_class_name(FinitenessClass c);

// For tags other than G only subgroups containing the commutator subgroup are covered;
// contains_commutator = false is refused there.
bool type_Fn(const LatticeSubgroup& a, unsigned n, Tag tag = Tag::G, bool contains_commutator = true);
FinitenessClass classify_normal_subgroup(const LatticeSubgroup& a, Tag tag = Tag::G, bool contains_commutator = true);

}  // namespace lm
