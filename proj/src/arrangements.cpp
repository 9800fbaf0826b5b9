#include "lm/arrangements.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include <boost/rational.hpp>

#include "lm/words.hpp"

namespace lm {

namespace {

int value(Pos p) { return p == Pos::One ? 1 : 0; }

Rel compare(int a, int b) { return a < b ? Rel::Less : a == b ? Rel::Equal : Rel::Greater; }

// Whether x_i rel x_{i+1} can hold with the given positions.
bool allowed(Pos p, Pos q, Rel r) {
    if (p != Pos::Interior && q != Pos::Interior) return r == compare(value(p), value(q));
    if (p == Pos::Interior && q == Pos::Interior) return true;
    if (p != Pos::Interior) return r == (p == Pos::Zero ? Rel::Less : Rel::Greater);
    return r == (q == Pos::Zero ? Rel::Greater : Rel::Less);
}

// The relation forced between a constant and anything, or nothing when both are interior.
std::optional<Rel> forced(Pos p, Pos q) {
    for (Rel r : {Rel::Less, Rel::Equal, Rel::Greater})
        if (!(p == Pos::Interior && q == Pos::Interior) && allowed(p, q, r)) return r;
    return std::nullopt;
}

char pos_char(Pos p) { return p == Pos::Zero ? '0' : p == Pos::One ? '1' : 'i'; }
char rel_char(Rel r) { return r == Rel::Less ? '<' : r == Rel::Equal ? '=' : '>'; }

// Interior class id per coordinate (-1 for constants), classes numbered left to right.
std::vector<int> classes(const SignCell& c, const Arrangement& a) {
    const auto n = c.pos.size();
    std::vector<int> id(n, -1);
    int next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (c.pos[i] != Pos::Interior) continue;
        id[i] = next++;
        if (i == 0) continue;
        const auto& d = a.diagonals();
        auto it = std::find(d.begin(), d.end(), static_cast<int>(i));
        if (it != d.end() && c.rel[static_cast<std::size_t>(it - d.begin())] == Rel::Equal && id[i - 1] >= 0) {
            id[i] = id[i - 1];
            --next;
        }
    }
    return id;
}

}  // namespace

Arrangement::Arrangement(int n, std::vector<int> diagonals) : n_(n), diagonals_(std::move(diagonals)) {
    if (n < 0 || n > kMaxDimension) throw Error("arrangement dimension " + std::to_string(n) + " out of range");
    std::sort(diagonals_.begin(), diagonals_.end());
    diagonals_.erase(std::unique(diagonals_.begin(), diagonals_.end()), diagonals_.end());
    for (int i : diagonals_)
        if (i < 1 || i >= n) throw Error("diagonal index " + std::to_string(i) + " out of range");
}

bool Arrangement::marked(int i) const { return std::binary_search(diagonals_.begin(), diagonals_.end(), i); }

std::string Arrangement::str() const {
    std::string s = "n=" + std::to_string(n_) + " diagonals={";
    for (std::size_t k = 0; k < diagonals_.size(); ++k) s += (k ? "," : "") + std::to_string(diagonals_[k]);
    return s + "}";
}

int SignCell::dim(const Arrangement& a) const {
    const auto id = classes(*this, a);
    return id.empty() ? 0 : 1 + *std::max_element(id.begin(), id.end());
}

std::string SignCell::key() const {
    if (pos.empty()) return "()";
    std::string s;
    for (Pos p : pos) s += pos_char(p);
    if (!rel.empty()) {
        s += ':';
        for (Rel r : rel) s += rel_char(r);
    }
    return s;
}

SignCell SignCell::parse(const std::string& key, const Arrangement& a) {
    SignCell c;
    if (key == "()" && a.n() == 0) return c;
    const auto colon = key.find(':');
    const std::string p = key.substr(0, colon), r = colon == std::string::npos ? "" : key.substr(colon + 1);
    if (p.size() != static_cast<std::size_t>(a.n()) || r.size() != a.diagonals().size())
        throw Error("cell key '" + key + "' does not fit " + a.str());
    for (char ch : p) {
        if (ch == '0') c.pos.push_back(Pos::Zero);
        else if (ch == '1') c.pos.push_back(Pos::One);
        else if (ch == 'i') c.pos.push_back(Pos::Interior);
        else throw Error("bad position '" + std::string(1, ch) + "' in cell key");
    }
    for (char ch : r) {
        if (ch == '<') c.rel.push_back(Rel::Less);
        else if (ch == '=') c.rel.push_back(Rel::Equal);
        else if (ch == '>') c.rel.push_back(Rel::Greater);
        else throw Error("bad relation '" + std::string(1, ch) + "' in cell key");
    }
    if (!satisfiable(c, a)) throw Error("cell key '" + key + "' is unsatisfiable");
    return c;
}

bool satisfiable(const SignCell& c, const Arrangement& a) {
    if (c.pos.size() != static_cast<std::size_t>(a.n()) || c.rel.size() != a.diagonals().size()) return false;
    for (std::size_t k = 0; k < c.rel.size(); ++k) {
        const auto i = static_cast<std::size_t>(a.diagonals()[k]);
        if (!allowed(c.pos[i - 1], c.pos[i], c.rel[k])) return false;
    }
    return true;
}

bool face_of(const SignCell& c, const SignCell& d, const Arrangement& a) {
    if (!satisfiable(c, a) || !satisfiable(d, a)) throw Error("cell does not belong to " + a.str());
    for (std::size_t i = 0; i < c.pos.size(); ++i)
        if (d.pos[i] != Pos::Interior && c.pos[i] != d.pos[i]) return false;
    for (std::size_t k = 0; k < c.rel.size(); ++k)
        if (c.rel[k] != d.rel[k] && c.rel[k] != Rel::Equal) return false;
    return true;
}

std::vector<int> Cluster::point(int vertex) const {
    std::vector<int> p;
    for (Pos q : signs.at(static_cast<std::size_t>(vertex)).pos) p.push_back(value(q));
    return p;
}

namespace {

// Codimension-one faces: pin one interior class to a wall, or merge two adjacent classes.
std::vector<SignCell> facet_signs(const SignCell& d, const Arrangement& a) {
    const auto id = classes(d, a);
    const auto& diag = a.diagonals();
    std::vector<SignCell> out;
    const int k = d.dim(a);
    for (int cl = 0; cl < k; ++cl) {
        for (Pos wall : {Pos::Zero, Pos::One}) {
            SignCell c = d;
            for (std::size_t i = 0; i < id.size(); ++i)
                if (id[i] == cl) c.pos[i] = wall;
            bool ok = true;
            for (std::size_t j = 0; j < diag.size() && ok; ++j) {
                const auto i = static_cast<std::size_t>(diag[j]);
                if (id[i - 1] != cl && id[i] != cl) continue;
                if (auto f = forced(c.pos[i - 1], c.pos[i])) {
                    if (*f != d.rel[j] && *f != Rel::Equal) ok = false;
                    c.rel[j] = *f;
                }
            }
            if (ok && satisfiable(c, a)) out.push_back(std::move(c));
        }
    }
    for (std::size_t j = 0; j < diag.size(); ++j) {
        const auto i = static_cast<std::size_t>(diag[j]);
        if (id[i - 1] < 0 || id[i] < 0 || d.rel[j] == Rel::Equal) continue;
        SignCell c = d;
        c.rel[j] = Rel::Equal;
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

Cluster enumerate_cells(const Arrangement& a) {
    const auto n = static_cast<std::size_t>(a.n());
    std::vector<SignCell> all;
    SignCell cur;
    cur.rel.assign(a.diagonals().size(), Rel::Equal);
    std::vector<int> diag_at(n + 1, -1);
    for (std::size_t k = 0; k < a.diagonals().size(); ++k) diag_at[static_cast<std::size_t>(a.diagonals()[k])] = static_cast<int>(k);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            all.push_back(cur);
            return;
        }
        for (Pos p : {Pos::Zero, Pos::One, Pos::Interior}) {
            cur.pos.push_back(p);
            if (i > 0 && diag_at[i] >= 0) {
                for (Rel r : {Rel::Less, Rel::Equal, Rel::Greater}) {
                    if (!allowed(cur.pos[i - 1], p, r)) continue;
                    cur.rel[static_cast<std::size_t>(diag_at[i])] = r;
                    rec(i + 1);
                }
            } else {
                rec(i + 1);
            }
            cur.pos.pop_back();
        }
    };
    rec(0);

    std::vector<std::pair<int, std::string>> order;
    for (std::size_t i = 0; i < all.size(); ++i) order.emplace_back(all[i].dim(a), all[i].key());
    std::vector<std::size_t> idx(all.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return order[x] < order[y]; });

    Cluster out;
    out.arrangement = a;
    for (std::size_t i : idx) {
        std::vector<int> facets;
        for (const auto& f : facet_signs(all[i], a)) {
            auto id = out.complex.find(f.key());
            if (!id) throw Error("internal: facet " + f.key() + " of " + all[i].key() + " missing");
            facets.push_back(*id);
        }
        out.complex.add(order[i].first, order[i].second, std::move(facets));
        out.signs.push_back(all[i]);
    }
    return out;
}

std::string Wall::str() const {
    const std::string x = "x" + std::to_string(i);
    switch (kind) {
        case Kind::Zero: return x + "=0";
        case Kind::One: return x + "=1";
        case Kind::Diagonal: return x + "=x" + std::to_string(i + 1);
    }
    return "?";
}

std::string subcluster_kind_name(SubclusterKind k) { return k == SubclusterKind::Facial ? "Facial" : "Diagonal"; }

Subcluster subcluster(const Arrangement& a, const std::vector<Wall>& flat) {
    const auto n = static_cast<std::size_t>(a.n());
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = root(parent[x]);
    };
    for (const auto& w : flat) {
        if (w.i < 1 || static_cast<std::size_t>(w.i) > n) throw Error("wall " + w.str() + " is not in " + a.str());
        if (w.kind == Wall::Kind::Diagonal) {
            if (!a.marked(w.i)) throw Error("wall " + w.str() + " is not in " + a.str());
            parent[root(static_cast<std::size_t>(w.i - 1))] = root(static_cast<std::size_t>(w.i));
        }
    }
    std::map<std::size_t, int> pin;
    for (const auto& w : flat) {
        if (w.kind == Wall::Kind::Diagonal) continue;
        const int v = w.kind == Wall::Kind::One ? 1 : 0;
        auto [it, fresh] = pin.emplace(root(static_cast<std::size_t>(w.i - 1)), v);
        if (!fresh && it->second != v) throw Error("the walls have empty intersection");
    }
    std::map<std::size_t, int> free_index;
    std::map<std::size_t, std::size_t> class_size;
    for (std::size_t i = 0; i < n; ++i) ++class_size[root(i)];
    SubclusterKind kind = SubclusterKind::Facial;
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = root(i);
        if (pin.count(r)) continue;
        if (class_size[r] > 1) kind = SubclusterKind::Diagonal;
        if (!free_index.count(r)) free_index.emplace(r, static_cast<int>(free_index.size()));
    }
    // Free classes are intervals, so numbering by first coordinate keeps them in order.
    std::vector<int> coord(n, -1);
    for (std::size_t i = 0; i < n; ++i)
        if (auto it = free_index.find(root(i)); it != free_index.end()) coord[i] = it->second;
    std::vector<int> sub_diag;
    for (int i : a.diagonals()) {
        const int l = coord[static_cast<std::size_t>(i - 1)], r = coord[static_cast<std::size_t>(i)];
        if (l >= 0 && r == l + 1) sub_diag.push_back(l + 1);
    }
    Arrangement sub(static_cast<int>(free_index.size()), sub_diag);
    Subcluster out{enumerate_cells(sub), kind, {}};
    const Cluster parent_cluster = enumerate_cells(a);
    for (const auto& s : out.cluster.signs) {
        SignCell c;
        for (std::size_t i = 0; i < n; ++i) {
            if (coord[i] >= 0) c.pos.push_back(s.pos[static_cast<std::size_t>(coord[i])]);
            else c.pos.push_back(pin.at(root(i)) ? Pos::One : Pos::Zero);
        }
        for (int i : a.diagonals()) {
            const int l = coord[static_cast<std::size_t>(i - 1)], r = coord[static_cast<std::size_t>(i)];
            if (root(static_cast<std::size_t>(i - 1)) == root(static_cast<std::size_t>(i))) {
                c.rel.push_back(Rel::Equal);
            } else if (auto f = forced(c.pos[static_cast<std::size_t>(i - 1)], c.pos[static_cast<std::size_t>(i)])) {
                c.rel.push_back(*f);
            } else {
                auto it = std::find(sub_diag.begin(), sub_diag.end(), l + 1);
                if (r != l + 1 || it == sub_diag.end()) throw Error("internal: unmatched diagonal in subcluster");
                c.rel.push_back(s.rel[static_cast<std::size_t>(it - sub_diag.begin())]);
            }
        }
        auto id = parent_cluster.complex.find(c.key());
        if (!id) throw Error("internal: subcluster cell " + c.key() + " missing from parent");
        out.embedding.push_back(*id);
    }
    return out;
}

namespace {

using Q = boost::rational<long>;

// Unique solution of the square system, if any.
std::optional<std::vector<Q>> solve(std::vector<std::vector<Q>> m, std::vector<Q> b) {
    const std::size_t k = b.size();
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        while (p < k && m[p][c] == Q(0)) ++p;
        if (p == k) return std::nullopt;
        std::swap(m[p], m[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < k; ++r) {
            if (r == c || m[r][c] == Q(0)) continue;
            const Q f = m[r][c] / m[c][c];
            for (std::size_t j = c; j < k; ++j) m[r][j] -= f * m[c][j];
            b[r] -= f * b[c];
        }
    }
    for (std::size_t r = 0; r < k; ++r) b[r] /= m[r][r];
    return b;
}

}  // namespace

bool verify_convex_cells(const Cluster& cl) {
    const auto& a = cl.arrangement;
    if (a.n() > 6) throw Error("verify_convex_cells supports n <= 6");
    const auto n = static_cast<std::size_t>(a.n());
    for (std::size_t ci = 0; ci < cl.signs.size(); ++ci) {
        const auto& d = cl.signs[ci];
        const auto id = classes(d, a);
        const std::size_t k = static_cast<std::size_t>(cl.complex[ci].dim);
        // Closure as {y : A y <= b} in one variable per interior class.
        std::vector<std::vector<Q>> A;
        std::vector<Q> b;
        auto row = [&](std::vector<std::pair<int, long>> coef, long rhs) {
            std::vector<Q> r(k, Q(0));
            for (auto [v, c] : coef) r[static_cast<std::size_t>(v)] += c;
            A.push_back(std::move(r));
            b.push_back(Q(rhs));
        };
        for (std::size_t v = 0; v < k; ++v) {
            row({{static_cast<int>(v), -1}}, 0);
            row({{static_cast<int>(v), 1}}, 1);
        }
        for (std::size_t j = 0; j < a.diagonals().size(); ++j) {
            const auto i = static_cast<std::size_t>(a.diagonals()[j]);
            if (d.rel[j] == Rel::Equal) continue;
            // Less: x_{i} - x_{i+1} <= 0, Greater: x_{i+1} - x_{i} <= 0.
            const long s = d.rel[j] == Rel::Less ? 1 : -1;
            std::vector<std::pair<int, long>> coef;
            long rhs = 0;
            if (id[i - 1] >= 0) coef.emplace_back(id[i - 1], s);
            else rhs -= s * value(d.pos[i - 1]);
            if (id[i] >= 0) coef.emplace_back(id[i], -s);
            else rhs += s * value(d.pos[i]);
            row(coef, rhs);
        }
        auto lift = [&](const std::vector<Q>& y) {
            std::vector<Q> x(n);
            for (std::size_t i = 0; i < n; ++i) x[i] = id[i] >= 0 ? y[static_cast<std::size_t>(id[i])] : Q(value(d.pos[i]));
            return x;
        };
        std::set<std::vector<Q>> extreme;
        const std::size_t m = A.size();
        std::vector<char> pick(m, 0);
        std::fill(pick.begin(), pick.begin() + static_cast<long>(std::min(k, m)), 1);
        do {
            std::vector<std::vector<Q>> M;
            std::vector<Q> rhs;
            for (std::size_t r = 0; r < m; ++r)
                if (pick[r]) M.push_back(A[r]), rhs.push_back(b[r]);
            auto y = solve(M, rhs);
            if (!y) continue;
            bool feasible = true;
            for (std::size_t r = 0; r < m && feasible; ++r) {
                Q s(0);
                for (std::size_t v = 0; v < k; ++v) s += A[r][v] * (*y)[v];
                feasible = s <= b[r];
            }
            if (feasible) extreme.insert(lift(*y));
        } while (std::prev_permutation(pick.begin(), pick.end()));
        std::set<std::vector<Q>> faces;
        for (int v : cl.complex[ci].vertices) {
            std::vector<Q> p;
            for (int x : cl.point(v)) p.emplace_back(x);
            faces.insert(std::move(p));
        }
        if (extreme != faces) return false;
    }
    return true;
}

}  // namespace lm
