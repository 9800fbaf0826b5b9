#include "lm/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <tuple>

#include "lm/words.hpp"

namespace lm {

int CellComplex::add(int dim, std::string key, std::vector<int> facets) {
    if (index_.count(key)) throw Error("duplicate cell key " + key);
    if (!cells_.empty() && cells_.back().dim > dim) throw Error("cells must be added by dimension");
    Cell c;
    c.dim = dim;
    c.key = std::move(key);
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (int f : facets) {
        if (f < 0 || f >= static_cast<int>(cells_.size()) || cells_[f].dim != dim - 1)
            throw Error("bad facet for cell " + c.key);
        c.vertices.insert(c.vertices.end(), cells_[f].vertices.begin(), cells_[f].vertices.end());
    }
    if (dim == 0) {
        if (!facets.empty()) throw Error("vertex with facets: " + c.key);
        c.vertices = {static_cast<int>(cells_.size())};
    } else if (facets.empty()) {
        throw Error("cell without facets: " + c.key);
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    c.vertices.erase(std::unique(c.vertices.begin(), c.vertices.end()), c.vertices.end());
    c.facets = std::move(facets);
    const int id = static_cast<int>(cells_.size());
    index_.emplace(c.key, id);
    cells_.push_back(std::move(c));
    return id;
}

std::optional<int> CellComplex::find(const std::string& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int CellComplex::dimension() const { return cells_.empty() ? -1 : cells_.back().dim; }

std::vector<std::size_t> CellComplex::counts() const {
    std::vector<std::size_t> n(static_cast<std::size_t>(dimension() + 1), 0);
    for (const auto& c : cells_) ++n[static_cast<std::size_t>(c.dim)];
    return n;
}

long CellComplex::euler() const {
    long e = 0;
    for (const auto& c : cells_) e += c.dim % 2 == 0 ? 1 : -1;
    return e;
}

std::vector<std::vector<int>> CellComplex::cofacets() const {
    std::vector<std::vector<int>> co(cells_.size());
    for (std::size_t i = 0; i < cells_.size(); ++i)
        for (int f : cells_[i].facets) co[static_cast<std::size_t>(f)].push_back(static_cast<int>(i));
    return co;
}

CellComplex CellComplex::closure(const std::vector<int>& cells) const {
    std::vector<char> keep(cells_.size(), 0);
    std::vector<int> stack(cells.begin(), cells.end());
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        if (keep[static_cast<std::size_t>(c)]) continue;
        keep[static_cast<std::size_t>(c)] = 1;
        for (int f : cells_[static_cast<std::size_t>(c)].facets) stack.push_back(f);
    }
    std::vector<int> order;
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (keep[i]) order.push_back(static_cast<int>(i));
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return cells_[a].dim < cells_[b].dim; });
    CellComplex out;
    std::vector<int> remap(cells_.size(), -1);
    for (int i : order) {
        std::vector<int> f;
        for (int g : cells_[static_cast<std::size_t>(i)].facets) f.push_back(remap[static_cast<std::size_t>(g)]);
        remap[static_cast<std::size_t>(i)] = out.add(cells_[i].dim, cells_[i].key, std::move(f));
    }
    return out;
}

std::string HomologyGroup::str() const {
    std::string s;
    if (rank > 0) s = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
    for (long t : torsion) s += (s.empty() ? "" : " + ") + ("Z/" + std::to_string(t));
    return s.empty() ? "0" : s;
}

std::vector<std::vector<int>> incidence_signs(const CellComplex& cx) {
    std::vector<std::vector<int>> sign(cx.size());
    for (std::size_t i = 0; i < cx.size(); ++i) {
        const auto& c = cx[i];
        if (c.dim == 0) continue;
        if (c.dim == 1) {
            if (c.facets.size() != 2) throw Error("1-cell " + c.key + " is not regular");
            sign[i] = {-1, 1};
            continue;
        }
        // Facets sharing a ridge must induce opposite orientations on it.
        std::map<int, std::vector<std::pair<std::size_t, int>>> ridges;
        for (std::size_t j = 0; j < c.facets.size(); ++j) {
            const auto f = static_cast<std::size_t>(c.facets[j]);
            for (std::size_t k = 0; k < cx[f].facets.size(); ++k)
                ridges[cx[f].facets[k]].emplace_back(j, sign[f][k]);
        }
        std::vector<std::vector<std::tuple<std::size_t, int>>> adj(c.facets.size());
        for (const auto& [r, users] : ridges) {
            if (users.size() != 2) throw Error("cell " + c.key + " is not regular");
            const int rel = -users[0].second * users[1].second;
            adj[users[0].first].emplace_back(users[1].first, rel);
            adj[users[1].first].emplace_back(users[0].first, rel);
        }
        std::vector<int> eps(c.facets.size(), 0);
        eps[0] = 1;
        std::vector<std::size_t> stack{0};
        while (!stack.empty()) {
            auto j = stack.back();
            stack.pop_back();
            for (auto [k, rel] : adj[j]) {
                const int want = eps[j] * rel;
                if (eps[k] == 0) {
                    eps[k] = want;
                    stack.push_back(k);
                } else if (eps[k] != want) {
                    throw Error("cell " + c.key + " is not orientable");
                }
            }
        }
        if (std::find(eps.begin(), eps.end(), 0) != eps.end()) throw Error("cell " + c.key + " has disconnected boundary");
        sign[i] = std::move(eps);
    }
    return sign;
}

namespace {

using Matrix = std::vector<std::vector<long>>;

// Nonzero invariant factors of m.
std::vector<long> smith_diagonal(Matrix m) {
    std::vector<long> d;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Pivot on the smallest nonzero entry of the remaining block.
        std::size_t pr = rows, pc = cols;
        long best = 0;
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c)
                if (m[r][c] != 0 && (best == 0 || std::labs(m[r][c]) < best)) {
                    best = std::labs(m[r][c]);
                    pr = r;
                    pc = c;
                }
        if (best == 0) break;
        std::swap(m[t], m[pr]);
        for (auto& row : m) std::swap(row[t], row[pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            const long p = m[t][t];
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (m[r][t] == 0) continue;
                const long q = m[r][t] / p;
                for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
                if (m[r][t] != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (m[t][c] == 0) continue;
                const long q = m[t][c] / p;
                for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
                if (m[t][c] != 0) clean = false;
            }
            if (!clean) {
                // Bring a smaller remainder into the pivot position.
                std::size_t br = t, bc = t;
                long b = std::labs(m[t][t]);
                for (std::size_t r = t + 1; r < rows; ++r)
                    if (m[r][t] != 0 && std::labs(m[r][t]) < b) b = std::labs(m[r][t]), br = r, bc = t;
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (m[t][c] != 0 && std::labs(m[t][c]) < b) b = std::labs(m[t][c]), br = t, bc = c;
                std::swap(m[t], m[br]);
                for (auto& row : m) std::swap(row[t], row[bc]);
                continue;
            }
            // Divisibility: fold in any block entry not divisible by the pivot.
            for (std::size_t r = t + 1; r < rows && clean; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (m[r][c] % p != 0) {
                        for (std::size_t k = t; k < cols; ++k) m[t][k] += m[r][k];
                        clean = false;
                        break;
                    }
        }
        d.push_back(std::labs(m[t][t]));
        ++t;
    }
    return d;
}

}  // namespace

std::vector<HomologyGroup> reduced_homology(const CellComplex& cx) {
    const int top = cx.dimension();
    const auto signs = incidence_signs(cx);
    std::vector<std::vector<int>> by_dim(static_cast<std::size_t>(top + 2));
    std::vector<int> pos(cx.size());
    for (std::size_t i = 0; i < cx.size(); ++i) {
        auto& v = by_dim[static_cast<std::size_t>(cx[i].dim + 1)];
        pos[i] = static_cast<int>(v.size());
        v.push_back(static_cast<int>(i));
    }
    // Chain groups in degrees -1..top; degree -1 is Z (augmentation).
    auto n = [&](int k) -> std::size_t { return k == -1 ? 1 : by_dim[static_cast<std::size_t>(k + 1)].size(); };
    // Invariant factors of the boundary d_k : C_k -> C_{k-1}, for k = 0..top.
    std::vector<std::vector<long>> inv(static_cast<std::size_t>(top + 2));
    for (int k = 0; k <= top; ++k) {
        Matrix m(n(k - 1), std::vector<long>(n(k), 0));
        for (std::size_t j = 0; j < n(k); ++j) {
            const auto c = static_cast<std::size_t>(by_dim[static_cast<std::size_t>(k + 1)][j]);
            if (k == 0) {
                m[0][j] = 1;
                continue;
            }
            for (std::size_t f = 0; f < cx[c].facets.size(); ++f)
                m[static_cast<std::size_t>(pos[static_cast<std::size_t>(cx[c].facets[f])])][j] = signs[c][f];
        }
        inv[static_cast<std::size_t>(k)] = smith_diagonal(std::move(m));
    }
    std::vector<HomologyGroup> out;
    for (int k = -1; k <= top; ++k) {
        HomologyGroup h;
        h.degree = k;
        const long rk_out = k >= 0 ? static_cast<long>(inv[static_cast<std::size_t>(k)].size()) : 0;
        const long rk_in = k + 1 <= top ? static_cast<long>(inv[static_cast<std::size_t>(k + 1)].size()) : 0;
        h.rank = static_cast<long>(n(k)) - rk_out - rk_in;
        if (k + 1 <= top)
            for (long t : inv[static_cast<std::size_t>(k + 1)])
                if (t > 1) h.torsion.push_back(t);
        out.push_back(std::move(h));
    }
    if (cx.size() == 0) out = {HomologyGroup{-1, 1, {}}};
    return out;
}

bool homology_trivial(const CellComplex& cx) {
    for (const auto& h : reduced_homology(cx))
        if (!h.trivial()) return false;
    return true;
}

bool is_collapsible(const CellComplex& cx) {
    if (cx.size() == 0) return false;
    const auto co = cx.cofacets();
    std::vector<char> alive(cx.size(), 1);
    std::vector<int> live_co(cx.size());
    for (std::size_t i = 0; i < cx.size(); ++i) live_co[i] = static_cast<int>(co[i].size());
    using Entry = std::tuple<int, std::string, int>;
    std::set<Entry> free;
    auto partner = [&](int i) {
        for (int c : co[static_cast<std::size_t>(i)])
            if (alive[static_cast<std::size_t>(c)]) return c;
        return -1;
    };
    // A face is free when it lies in exactly one live cell and that cell is maximal.
    auto consider = [&](int i) {
        if (!alive[static_cast<std::size_t>(i)] || live_co[static_cast<std::size_t>(i)] != 1) return;
        if (live_co[static_cast<std::size_t>(partner(i))] == 0) free.emplace(cx[i].dim, cx[i].key, i);
    };
    auto drop = [&](int g) {
        if (--live_co[static_cast<std::size_t>(g)] == 0)
            for (int h : cx[g].facets) consider(h);
        consider(g);
    };
    for (std::size_t i = 0; i < cx.size(); ++i) consider(static_cast<int>(i));
    std::size_t remaining = cx.size();
    while (!free.empty()) {
        const int f = std::get<2>(*free.begin());
        free.erase(free.begin());
        if (!alive[static_cast<std::size_t>(f)] || live_co[static_cast<std::size_t>(f)] != 1) continue;
        const int top = partner(f);
        if (live_co[static_cast<std::size_t>(top)] != 0) continue;
        alive[static_cast<std::size_t>(f)] = alive[static_cast<std::size_t>(top)] = 0;
        remaining -= 2;
        for (int g : cx[top].facets)
            if (g != f) drop(g);
        for (int g : cx[f].facets) drop(g);
    }
    return remaining == 1;
}

}  // namespace lm
