// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "lm/arrangements.hpp"
#include "lm/circle.hpp"
#include "lm/sigma.hpp"
#include "lm/xcomplex.hpp"
#include "oracles.hpp"

using namespace lm;
using namespace lm::testing;

namespace {

// Pinned limits.
constexpr double kRelatorSeconds = 60;
constexpr double kCubeSeconds = 5;
constexpr double kEulerSeconds = 30;
constexpr unsigned kDepth = 16;
constexpr int kRandomClusters = 200;
constexpr int kMorseInstances = 60;
constexpr int kMorseMinimum = 50;
constexpr int kRandomSWords = 1000;
constexpr int kUnimodularTrials = 100;

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit > 0 && secs > limit) out.pass = false;
    if (!out.pass) ++failures;
    std::printf("%s %2d %s: %s (%.2f s", out.pass ? "PASS" : "FAIL", id, name, out.detail.c_str(), secs);
    if (limit > 0) std::printf(", limit %.0f s", limit);
    std::printf(")\n");
    std::fflush(stdout);
}

GroupWord P(const char* text, Tag tag = Tag::G) { return GroupWord::parse(text, tag); }
SpecialForm S(const char* text) { return *is_special_form(P(text)); }
XPiece at_F(std::vector<SpecialForm> params) { return {GroupWord(Tag::G), std::move(params)}; }

bool has_edge(const CellComplex& cx, int a, int b) {
    for (const auto& c : cx.cells())
        if (c.dim == 1 && c.vertices == std::vector<int>{std::min(a, b), std::max(a, b)}) return true;
    return false;
}

std::string num(long n) { return std::to_string(n); }

Outcome relators() {
    const auto rs = relator_schemas(4, 3);
    long bad = 0;
    for (const auto& r : rs)
        if (!agrees(equal_at_depth(r.word, GroupWord(Tag::Shat), kDepth)) || psi_hat_oracle(r.word) != 0 ||
            char_value(Character::PsiHat, r.word) != 0)
            ++bad;
    return {bad == 0 && rs.size() >= 1000, num(static_cast<long>(rs.size())) + " relators, " + num(bad) + " failing"};
}

Outcome two_cluster() {
    const auto c = enumerate_cells(Arrangement(2, {1})).complex.counts();
    return {c == std::vector<std::size_t>{4, 5, 2}, "counts " + num(c[0]) + " " + num(c[1]) + " " + num(c[2])};
}

Outcome three_cubes() {
    const std::vector<std::vector<SpecialForm>> params = {
        {S("y[010]"), S("y[0110]^-1"), S("y[0111]")},
        {S("y[010]"), S("y[0110]^-1"), S("y[01111]")},
        {S("y[0100]"), S("y[0110]^-1"), S("y[01111]")}};
    const std::vector<std::vector<int>> want = {{1, 2}, {1}, {}};
    const bool want_long[] = {true, false, false};
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto xc = build_x_cluster(GroupWord(Tag::G), params[i]);
        int f = -1, far = -1;
        for (std::size_t v = 0; v < xc.labels.size(); ++v) {
            const auto p = xc.cluster.point(static_cast<int>(v));
            if (p == std::vector<int>{0, 0, 0}) f = static_cast<int>(v);
            if (p == std::vector<int>{1, 1, 1}) far = static_cast<int>(v);
        }
        const bool long_diag = has_edge(xc.cluster.complex, f, far);
        ok = ok && xc.cluster.arrangement.diagonals() == want[i] && long_diag == want_long[i];
        detail += "cluster " + num(static_cast<long>(i + 1)) + " diagonals {";
        for (std::size_t j = 0; j < xc.cluster.arrangement.diagonals().size(); ++j)
            detail += (j ? "," : "") + num(xc.cluster.arrangement.diagonals()[j]);
        detail += std::string("}") + (long_diag ? " with long diagonal" : "") + "; ";
    }
    const bool coset = same_coset(P("y[010] y[0110]^-1 y[0111]"), P("y[01]")).verdict == Verdict::Yes;
    detail += std::string("same coset ") + (coset ? "Yes" : "not Yes");
    return {ok && coset, detail};
}

Outcome euler() {
    long checked = 0, bad = 0;
    for (int n = 1; n <= 5; ++n)
        for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
            std::vector<int> diagonals;
            for (int i = 1; i < n; ++i)
                if (mask & (1u << (i - 1))) diagonals.push_back(i);
            ++checked;
            if (enumerate_cells(Arrangement(n, diagonals)).complex.euler() != 1) ++bad;
        }
    return {bad == 0 && checked == 31, num(checked) + " arrangements (n = 1..5, every diagonal subset), " + num(bad) +
                                           " with Euler characteristic other than 1"};
}

Outcome cross_check() {
    std::mt19937 rng(1001);
    int built = 0, attempts = 0;
    long mismatches = 0, pairs = 0;
    while (built < kRandomClusters && ++attempts < 100000) {
        const auto params = valid_params(attempts % 2 ? random_params(rng, 3, 5) : split_chain(rng, 5));
        if (!params) continue;
        const auto xc = build_x_cluster(GroupWord(Tag::G), *params);
        ++built;
        const auto n = static_cast<int>(xc.labels.size());
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                ++pairs;
                const auto nu = commuted_form(xc.labels[static_cast<std::size_t>(b)] *
                                              xc.labels[static_cast<std::size_t>(a)].inverse());
                if (nu.has_value() != has_edge(xc.cluster.complex, a, b)) ++mismatches;
            }
    }
    return {built == kRandomClusters && mismatches == 0,
            num(built) + " clusters, " + num(pairs) + " vertex pairs, " + num(mismatches) + " mismatches"};
}

Outcome morse() {
    std::mt19937 rng(2002);
    std::uniform_int_distribution<int> pieces(1, 3);
    int done = 0, attempts = 0, rejected = 0, bad_morse = 0, bad_link = 0, unverified = 0;
    while (done < kMorseInstances && ++attempts < 100000) {
        std::vector<XPiece> ps;
        const int k = pieces(rng);
        while (static_cast<int>(ps.size()) < k) {
            const auto params = valid_params(ps.size() % 2 ? random_params(rng, 2, 4) : split_chain(rng, 4));
            if (params) ps.push_back(at_F(*params));
        }
        XComplex cx;
        try {
            cx = assemble(ps);
        } catch (const Error&) {
            ++rejected;  // pieces meeting outside a common subcluster
            continue;
        }
        ++done;
        if (!verify_morse(cx)) ++bad_morse;
        const auto cone = find_cone_vertex(ps);
        if (!cone.verified) ++unverified;
        auto all = ps;
        all.insert(all.end(), cone.enlarged.begin(), cone.enlarged.end());
        const auto big = assemble(all);
        if (!verify_morse(big)) ++bad_morse;
        if (!homology_trivial(ascending_link(big, *big.vertex("")))) ++bad_link;
    }
    return {done >= kMorseMinimum && bad_morse == 0 && bad_link == 0 && unverified == 0,
            num(done) + " complexes (" + num(rejected) + " piece sets rejected by assembly), " + num(bad_morse) + " Morse failures, " + num(bad_link) +
                " cone links with homology, " + num(unverified) + " unverified cones"};
}

Outcome phi_suite() {
    long pairing = 0, bad = 0, trips = 0, fibres_bad = 0;
    for (const auto& s : all_words(8)) {
        ++pairing;
        if (!(phi(TailPoint(s.child('0'), '1')) == phi(TailPoint(s.child('1'), '0')))) ++bad;
    }
    for (int p = -50; p <= 50; ++p)
        for (int q = 1; q <= 50; ++q) {
            const Rational r(p, q);
            if (numerator(r) != p) continue;
            ++trips;
            const auto [a, b] = phi_inverse(ProjectivePoint(r));
            if (!(phi(a) == ProjectivePoint(r)) || !(phi(b) == ProjectivePoint(r)) || a == b) ++bad;
        }
    std::map<std::string, std::vector<TailPoint>> fibres;
    for (const auto& s : all_words(8))
        for (char tail : {'0', '1'})
            if (s.empty() || s.bits().back() != tail) {
                const TailPoint t(s, tail);
                const auto v = phi(t);
                if (!(v == phi_oracle(s.bits(), tail))) ++bad;
                fibres[v.str()].push_back(t);
            }
    for (const auto& [q, ps] : fibres) {
        if (ps.size() > 2) ++fibres_bad;
        if (ps.size() != 2) continue;
        const auto& a = ps[0].prefix().bits();
        const auto& b = ps[1].prefix().bits();
        const bool paired = a.size() == b.size() && ps[0].tail() != ps[1].tail() &&
                            (a.empty() || (a.substr(0, a.size() - 1) == b.substr(0, b.size() - 1) && a.back() != ps[0].tail()));
        if (!paired) ++fibres_bad;
    }
    return {bad == 0 && fibres_bad == 0, num(pairing) + " pairings (|s| <= 8, including s empty), " + num(trips) +
                                             " round trips, " + num(static_cast<long>(fibres.size())) + " fibres, " +
                                             num(bad + fibres_bad) + " failures"};
}

Outcome s_membership() {
    std::mt19937 rng(3003);
    long disagree = 0;
    for (int i = 0; i < kRandomSWords; ++i) {
        const auto w = random_group_word(rng, 8, 4);
        if (in_S(w) != (psi_hat_oracle(w) == 0)) ++disagree;
    }
    auto pair = [](const BinaryWord& s, const BinaryWord& t) {
        return GroupWord(Tag::Shat, {{Generator::y(s), 1}, {Generator::y(t), -1}});
    };
    std::vector<std::pair<GroupWord, WitnessFamily>> cases = {
        {P("y[10] y[1110]^-1", Tag::Shat), WitnessFamily::PairNonConsecutive},
        {P("y[01] y[10]^-1", Tag::Shat), WitnessFamily::PairConsecutive},
        {P("y[0] y[1]^-1", Tag::Shat), WitnessFamily::PairConsecutive},
        {P("y[10] y[110] y[1110]^-1 y[10]^-1", Tag::Shat), WitnessFamily::Balanced0},
        {P("y[110] y[10]^-1 y[11110] y[1110]^-1", Tag::Shat), WitnessFamily::Balanced0},
        {P("y[01] y[0]^-1 y[001] y[0010]^-1", Tag::Shat), WitnessFamily::Balanced1},
        {P("y[0]^2 y[01]^-1 y[001]^-1", Tag::Shat), WitnessFamily::Balanced1},
        {P("y[10]^-1 y[0110] y[00]^-1 y[010]", Tag::Shat), WitnessFamily::Balanced1}};
    while (cases.size() < 27) {
        const auto s = random_word(rng, 1, 4), t = random_word(rng, 1, 4);
        if (!independent(s, t)) continue;
        const bool cons = consecutive(s, t) || consecutive(t, s);
        cases.push_back({pair(s, t), cons ? WitnessFamily::PairConsecutive : WitnessFamily::PairNonConsecutive});
    }
    long factors = 0, bad = 0;
    std::set<WitnessFamily> families;
    for (const auto& [w, fam] : cases) {
        const auto fs = s_witness(w, fam);
        families.insert(fam);
        GroupWord prod(Tag::Shat);
        for (const auto& f : fs) {
            ++factors;
            if (psi_hat_oracle(f.word()) != 0) ++bad;
            prod *= f.word();
        }
        if (!agrees(equal_at_depth(prod, w, kDepth))) ++bad;
    }
    return {disagree == 0 && bad == 0 && families.size() == 4,
            num(kRandomSWords) + " words, " + num(disagree) + " disagreements; " + num(static_cast<long>(cases.size())) +
                " witnesses, " + num(factors) + " factors, " + num(bad) + " failures"};
}

Outcome classifier() {
    const bool examples =
        classify_normal_subgroup(LatticeSubgroup::parse("1,0,0")) == FinitenessClass::NotFinitelyGenerated &&
        classify_normal_subgroup(LatticeSubgroup::parse("1,-1,0")) ==
            FinitenessClass::FinitelyGeneratedNotFinitelyPresented &&
        classify_normal_subgroup(LatticeSubgroup::parse("1,1,0")) == FinitenessClass::TypeFInfinity;
    std::mt19937 rng(4004);
    long variant = 0, inconsistent = 0;
    for (int i = 0; i < kUnimodularTrials; ++i) {
        const auto gens = random_gens(rng);
        const LatticeSubgroup a(gens), b(shuffle_gens(rng, gens));
        const auto c = classify_normal_subgroup(a);
        if (c != classify_normal_subgroup(b) || c != classify_oracle(a)) ++variant;
        const bool f1 = type_Fn(a, 1), f2 = type_Fn(a, 2), f5 = type_Fn(a, 5);
        if ((c == FinitenessClass::NotFinitelyGenerated) != !f1 ||
            (c == FinitenessClass::FinitelyGeneratedNotFinitelyPresented) != (f1 && !f2) ||
            (c == FinitenessClass::TypeFInfinity) != f5)
            ++inconsistent;
    }
    return {examples && variant == 0 && inconsistent == 0,
            std::string("examples ") + (examples ? "exact" : "wrong") + ", " + num(kUnimodularTrials) +
                " generator changes, " + num(variant) + " variant, " + num(inconsistent) + " inconsistent with type_Fn"};
}

Outcome sigma_table() {
    const Tag groups[] = {Tag::G, Tag::Gy, Tag::yG, Tag::yGy};
    const Rational scales[] = {Rational(1, 3), 2, 7};
    long checked = 0, bad = 0;
    for (Tag tag : groups) {
        const auto [u, v] = excluded_pair(tag);
        CharacterVector cu, cv, mid;
        for (std::size_t i = 0; i < 3; ++i) cu.coords[i] = u[i], cv.coords[i] = v[i], mid.coords[i] = u[i] + v[i];
        if (sigma_membership(tag, cu, 1) || sigma_membership(tag, cv, 1) || !sigma_membership(tag, mid, 1) ||
            sigma_membership(tag, mid, 2))
            ++bad;
        for (const auto& chi : character_grid()) {
            if (chi.zero()) continue;
            ++checked;
            const bool s1 = sigma_membership(tag, chi, 1), s2 = sigma_membership(tag, chi, 2);
            bool ok = s1 == sigma_oracle(tag, chi, 1) && s2 == sigma_oracle(tag, chi, 2) && (!s2 || s1);
            for (unsigned n : {3u, 5u, kSigmaInfinity}) ok = ok && sigma_membership(tag, chi, n) == s2;
            for (const auto& q : scales) {
                CharacterVector c = chi;
                for (auto& x : c.coords) x *= q;
                ok = ok && sigma_membership(tag, c, 1) == s1 && sigma_membership(tag, c, 2) == s2;
            }
            if (!ok) ++bad;
        }
    }
    return {bad == 0, num(checked) + " nonzero grid characters over 4 groups, " + num(bad) + " failures"};
}

}  // namespace

int main() {
    criterion(1, "relator suite", kRelatorSeconds, relators);
    criterion(2, "2-cluster counts", 0, two_cluster);
    criterion(3, "3-cluster diagonals", kCubeSeconds, three_cubes);
    criterion(4, "Euler characteristic", kEulerSeconds, euler);
    criterion(5, "edge cross-check", 0, cross_check);
    criterion(6, "Morse suite", 0, morse);
    criterion(7, "phi suite", 0, phi_suite);
    criterion(8, "S-membership and witnesses", 0, s_membership);
    criterion(9, "classifier", 0, classifier);
    criterion(10, "sigma table", 0, sigma_table);
    return failures == 0 ? 0 : 1;
}
