#include "lm/circle.hpp"

#include <algorithm>
#include <cctype>

namespace lm {

TailPoint::TailPoint(BinaryWord prefix, char tail) : tail_(tail) {
    if (tail != '0' && tail != '1') throw Error("tail bit must be 0 or 1");
    std::string b = prefix.bits();
    while (!b.empty() && b.back() == tail) b.pop_back();
    prefix_ = BinaryWord(std::move(b));
}

TailPoint TailPoint::parse(std::string_view text) {
    const auto open = text.find('(');
    if (open == std::string_view::npos || text.size() != open + 3 || text.back() != ')')
        throw ParseError("expected <prefix>(0) or <prefix>(1)", 0);
    return TailPoint(BinaryWord::parse(open == 0 ? "e" : text.substr(0, open)), text[open + 1]);
}

std::string TailPoint::str() const { return prefix_.bits() + "(" + tail_ + ")"; }

ProjectivePoint ProjectivePoint::parse(std::string_view text) {
    if (text == "inf") return infinity();
    std::size_t i = 0;
    auto digits = [&](bool sign) {
        const std::size_t start = i;
        if (sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        const std::size_t d = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == d) throw ParseError("expected digits in rational '" + std::string(text) + "'", i);
        return std::string(text.substr(start, i - start));
    };
    std::string num = digits(true);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    std::string den = "1";
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = digits(false);
    }
    if (i != text.size()) throw ParseError("trailing characters in rational '" + std::string(text) + "'", i);
    boost::multiprecision::cpp_int q(den);
    if (q == 0) return infinity();
    return ProjectivePoint(Rational(boost::multiprecision::cpp_int(num), q));
}

std::string ProjectivePoint::str() const { return infinite_ ? "inf" : value_.str(); }

ProjectivePoint phi(const TailPoint& p) {
    const std::string& s = p.prefix().bits();
    if (s.empty()) return ProjectivePoint::infinity();
    const char b = s[0];
    // Finite runs after the first bit, starting with a run of b that may be empty; the
    // infinite tail run follows and contributes 1/inf = 0.
    std::vector<long> runs{0};
    char cur = b;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] != cur) {
            runs.push_back(0);
            cur = s[i];
        }
        ++runs.back();
    }
    Rational v = runs.back();
    for (std::size_t i = runs.size() - 1; i-- > 0;) v = Rational(runs[i]) + 1 / v;
    return ProjectivePoint(b == '1' ? v : Rational(-v));
}

namespace {

// Continued fraction of a nonnegative rational: a0 >= 0, later terms >= 1, last >= 2 when k > 0.
std::vector<long> continued_fraction(Rational q) {
    using boost::multiprecision::cpp_int;
    std::vector<long> a;
    cpp_int n = numerator(q), d = denominator(q);
    while (d != 0) {
        cpp_int t = n / d;
        a.push_back(static_cast<long>(t));
        n -= t * d;
        std::swap(n, d);
    }
    return a;
}

TailPoint from_runs(char b, const std::vector<long>& runs) {
    std::string s(1, b);
    char cur = b;
    for (long r : runs) {
        s += std::string(static_cast<std::size_t>(r), cur);
        cur = cur == '0' ? '1' : '0';
    }
    return TailPoint(BinaryWord(s), cur);
}

}  // namespace

std::pair<TailPoint, TailPoint> phi_inverse(const ProjectivePoint& q) {
    if (q.infinite()) return {TailPoint(BinaryWord(), '0'), TailPoint(BinaryWord(), '1')};
    if (q.value() == 0) return {TailPoint(BinaryWord("0"), '1'), TailPoint(BinaryWord("1"), '0')};
    const char b = q.value() > 0 ? '1' : '0';
    const auto a = continued_fraction(abs(q.value()));
    auto other = a;
    --other.back();
    other.push_back(1);
    TailPoint p = from_runs(b, a), r = from_runs(b, other);
    // Order as s01^inf, s10^inf.
    if (p.tail() == '0') std::swap(p, r);
    return {p, r};
}

bool circularly_ordered(const std::vector<ProjectivePoint>& ts) {
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j)
            if (ts[i] == ts[j]) throw Error("circularly_ordered needs distinct points; " + ts[i].str() + " repeats");
    std::vector<Rational> seq;
    auto inf = std::find_if(ts.begin(), ts.end(), [](const ProjectivePoint& p) { return p.infinite(); });
    if (inf == ts.end()) {
        for (const auto& p : ts) seq.push_back(p.value());
    } else {
        for (auto it = inf + 1; it != ts.end(); ++it) seq.push_back(it->value());
        for (auto it = ts.begin(); it != inf; ++it) seq.push_back(it->value());
    }
    return std::is_sorted(seq.begin(), seq.end()) &&
           std::adjacent_find(seq.begin(), seq.end()) == seq.end();
}

}  // namespace lm
