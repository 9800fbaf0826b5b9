#include "lm/sigma.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>

namespace lm {

namespace {

void require_lodha_moore(Tag tag) {
    if (tag != Tag::G && tag != Tag::Gy && tag != Tag::yG && tag != Tag::yGy)
        throw Error("Sigma invariants are tabulated for G, Gy, yG and yGy, not " + tag_name(tag));
}

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i)
        if (i == text.size() || text[i] == sep) {
            out.emplace_back(text.substr(start, i - start));
            start = i + 1;
        }
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

bool integer_text(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::vector<std::string> triple(std::string_view text) {
    auto parts = split(text, ',');
    if (parts.size() != 3) throw ParseError("expected three comma-separated coordinates in '" + std::string(text) + "'", 0);
    for (auto& p : parts) p = trim(p);
    return parts;
}

}  // namespace

CharacterVector CharacterVector::parse(std::string_view text) {
    CharacterVector v;
    const auto parts = triple(text);
    for (std::size_t i = 0; i < 3; ++i) {
        std::string p = parts[i];
        std::string den = "1";
        if (auto slash = p.find('/'); slash != std::string::npos) {
            den = p.substr(slash + 1);
            p = p.substr(0, slash);
        }
        if (!p.empty() && p[0] == '+') p.erase(0, 1);
        if (!integer_text(p) || !integer_text(den) || den[0] == '-' || den[0] == '+')
            throw ParseError("bad coordinate '" + parts[i] + "'", i);
        boost::multiprecision::cpp_int d(den);
        if (d == 0) throw ParseError("zero denominator in '" + parts[i] + "'", i);
        v.coords[i] = Rational(boost::multiprecision::cpp_int(p), d);
    }
    return v;
}

std::string CharacterVector::str() const {
    return coords[0].str() + "," + coords[1].str() + "," + coords[2].str();
}

std::array<std::string, 3> character_basis(Tag tag) {
    require_lodha_moore(tag);
    const bool left = tag == Tag::yG || tag == Tag::yGy;
    const bool right = tag == Tag::Gy || tag == Tag::yGy;
    return {left ? "psi0" : "chi0", right ? "psi1" : "chi1", "psi"};
}

std::array<std::array<long, 3>, 2> excluded_pair(Tag tag) {
    require_lodha_moore(tag);
    const bool right = tag == Tag::Gy || tag == Tag::yGy;
    return {{{1, 0, 0}, {0, right ? -1 : 1, 0}}};
}

bool sigma_membership(Tag tag, const CharacterVector& chi, unsigned n) {
    if (n == 0) throw Error("Sigma^n needs n >= 1");
    if (chi.zero()) throw Error("the zero character has no class");
    const auto ex = excluded_pair(tag);
    const auto& c = chi.coords;
    if (c[2] != 0) return true;
    // chi = alpha u + beta v with u, v the excluded pair.
    const Rational alpha = c[0] * ex[0][0];
    const Rational beta = c[1] * ex[1][1];
    if (n == 1) return !((alpha > 0 && beta == 0) || (alpha == 0 && beta > 0));
    return !(alpha >= 0 && beta >= 0);
}

LatticeSubgroup::LatticeSubgroup(std::vector<LatticeVector> rows) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < 3 && r < rows.size(); ++col) {
        // Euclid on the column until one row below r carries it.
        for (;;) {
            std::size_t piv = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i)
                if (rows[i][col] != 0 && (piv == rows.size() || std::labs(rows[i][col]) < std::labs(rows[piv][col])))
                    piv = i;
            if (piv == rows.size()) break;
            std::swap(rows[r], rows[piv]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                const long q = rows[i][col] / rows[r][col];
                for (std::size_t j = 0; j < 3; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][col] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[r][col] == 0) continue;
        if (rows[r][col] < 0)
            for (auto& x : rows[r]) x = -x;
        for (std::size_t i = 0; i < r; ++i) {
            long q = rows[i][col] / rows[r][col];
            if (rows[i][col] - q * rows[r][col] < 0) --q;
            for (std::size_t j = 0; j < 3; ++j) rows[i][j] -= q * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    gens_ = std::move(rows);
}

LatticeSubgroup LatticeSubgroup::parse(std::string_view text) {
    std::vector<LatticeVector> rows;
    if (trim(std::string(text)).empty()) return LatticeSubgroup(rows);
    for (const auto& row : split(text, ';')) {
        const auto parts = triple(row);
        LatticeVector v{};
        for (std::size_t i = 0; i < 3; ++i) {
            if (!integer_text(parts[i])) throw ParseError("bad lattice coordinate '" + parts[i] + "'", i);
            v[i] = std::stol(parts[i]);
        }
        rows.push_back(v);
    }
    return LatticeSubgroup(rows);
}

std::string LatticeSubgroup::str() const {
    std::string s;
    for (const auto& g : gens_) {
        if (!s.empty()) s += ";";
        s += std::to_string(g[0]) + "," + std::to_string(g[1]) + "," + std::to_string(g[2]);
    }
    return s;
}

std::string finiteness_class_name(FinitenessClass c) {
    switch (c) {
        case FinitenessClass::NotFinitelyGenerated: return "NotFinitelyGenerated";
        case FinitenessClass::FinitelyGeneratedNotFinitelyPresented: return "FinitelyGeneratedNotFinitelyPresented";
        case FinitenessClass::TypeFInfinity: return "TypeFInfinity";
    }
    return "?";
}

bool type_Fn(const LatticeSubgroup& a, unsigned n, Tag tag, bool contains_commutator) {
    if (n == 0) throw Error("type F_n needs n >= 1");
    if (tag != Tag::G && !contains_commutator)
        throw Error("for " + tag_name(tag) + " only normal subgroups containing the commutator subgroup are classified");
    const auto ex = excluded_pair(tag);
    auto dot = [](const std::array<long, 3>& u, const LatticeVector& g) {
        return u[0] * g[0] + u[1] * g[1] + u[2] * g[2];
    };
    // Characters alpha u + beta v vanishing on a: kernel of the rows (u.g, v.g).
    std::vector<std::pair<long, long>> rows;
    for (const auto& g : a.generators()) rows.emplace_back(dot(ex[0], g), dot(ex[1], g));
    auto kills = [&](long alpha, long beta) {
        return std::all_of(rows.begin(), rows.end(), [&](auto r) { return alpha * r.first + beta * r.second == 0; });
    };
    if (n == 1) return !kills(1, 0) && !kills(0, 1);
    auto nonzero = std::find_if(rows.begin(), rows.end(), [](auto r) { return r.first != 0 || r.second != 0; });
    if (nonzero == rows.end()) return false;  // the whole cone annihilates a
    const long alpha = nonzero->second, beta = -nonzero->first;
    if (!kills(alpha, beta)) return true;  // rank 2: only the zero character
    return !((alpha >= 0 && beta >= 0) || (alpha <= 0 && beta <= 0));
}

FinitenessClass classify_normal_subgroup(const LatticeSubgroup& a, Tag tag, bool contains_commutator) {
    if (!type_Fn(a, 1, tag, contains_commutator)) return FinitenessClass::NotFinitelyGenerated;
    if (!type_Fn(a, 2, tag, contains_commutator)) return FinitenessClass::FinitelyGeneratedNotFinitelyPresented;
    return FinitenessClass::TypeFInfinity;
}

}  // namespace lm
