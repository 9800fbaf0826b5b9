#include "lm/xcomplex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace lm {

namespace {

Tag piece_tag(const GroupWord& base, const std::vector<SpecialForm>& params) {
    Tag t = join(base.tag(), Tag::G);
    for (const auto& p : params) {
        const GroupWord w = p.word();
        t = join(t, GroupWord::infer_tag(w.letters()));
    }
    return t;
}

GroupWord vertex_word(const XPiece& piece, Tag tag, const std::vector<int>& point) {
    GroupWord w(tag);
    for (std::size_t i = 0; i < point.size(); ++i)
        if (point[i]) w *= piece.params[i].word(tag);
    return w * piece.base.with_tag(tag);
}

std::string names(const std::vector<SpecialForm>& params) {
    std::string s;
    for (const auto& p : params) s += (s.empty() ? "" : ", ") + p.str();
    return "[" + s + "]";
}

}  // namespace

std::optional<SpecialForm> connecting_form(const std::vector<SpecialForm>& params, const std::vector<int>& from,
                                           const std::vector<int>& to) {
    std::vector<YTerm> e;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (from[i] == to[i]) continue;
        const int sg = to[i] ? 1 : -1;
        for (const auto& t : params[i].entries()) e.push_back({t.sub, sg * t.exp});
    }
    if (e.empty()) return std::nullopt;
    std::vector<Letter> l;
    for (const auto& t : e) l.push_back({Generator::y(t.sub), t.exp});
    return SpecialForm::from_word(GroupWord(Tag::Shat, std::move(l)));
}

XCluster build_x_cluster(const GroupWord& base, std::vector<SpecialForm> params) {
    if (!independent_forms(params)) throw Error("dependent parameters " + names(params));
    std::sort(params.begin(), params.end(),
              [](const SpecialForm& a, const SpecialForm& b) { return tree_order_less(a.first(), b.first()); });
    const auto k = params.size();
    XCluster out;
    out.piece = {base, params};
    out.tag = piece_tag(base, params);

    std::vector<int> diagonals;
    auto pair_point = [k](std::size_t i, std::size_t j) {
        std::vector<int> p(k, 0);
        p[i] = p[j] = 1;
        return p;
    };
    const std::vector<int> zero(k, 0);
    for (std::size_t i = 0; i + 1 < k; ++i)
        if (connecting_form(params, zero, pair_point(i, i + 1))) diagonals.push_back(static_cast<int>(i + 1));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 2; j < k; ++j)
            if (connecting_form(params, zero, pair_point(i, j)))
                throw Error("non-adjacent parameters " + params[i].str() + " and " + params[j].str() +
                            " multiply to a special form");

    out.cluster = enumerate_cells(Arrangement(static_cast<int>(k), diagonals));
    const auto& cx = out.cluster.complex;
    std::vector<int> verts;
    for (std::size_t c = 0; c < cx.size() && cx[c].dim == 0; ++c) verts.push_back(static_cast<int>(c));
    for (int v : verts) out.labels.push_back(vertex_word(out.piece, out.tag, out.cluster.point(v)));

    std::set<std::pair<int, int>> edges;
    for (const auto& c : cx.cells())
        if (c.dim == 1) edges.emplace(c.vertices[0], c.vertices[1]);
    for (std::size_t a = 0; a < verts.size(); ++a) {
        for (std::size_t b = a + 1; b < verts.size(); ++b) {
            const bool special = connecting_form(params, out.cluster.point(verts[a]), out.cluster.point(verts[b])).has_value();
            if (special != edges.count({verts[a], verts[b]}))
                throw Error("edge criterion disagrees with the arrangement between F " + out.labels[a].str() + " and F " +
                            out.labels[b].str() + " for parameters " + names(params));
        }
    }
    return out;
}

std::string vertex_name(const std::string& coset_key) { return coset_key.empty() ? "F" : "F " + coset_key; }

std::optional<int> XComplex::vertex(const std::string& key) const {
    auto it = std::lower_bound(keys.begin(), keys.end(), key);
    if (it == keys.end() || *it != key) return std::nullopt;
    return static_cast<int>(it - keys.begin());
}

std::vector<int> XComplex::neighbors(int v) const {
    std::vector<int> out;
    for (const auto& c : complex.cells()) {
        if (c.dim != 1) continue;
        if (c.vertices[0] == v) out.push_back(c.vertices[1]);
        if (c.vertices[1] == v) out.push_back(c.vertices[0]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

XComplex assemble(const std::vector<XPiece>& pieces, const RewriteOptions& opts) {
    std::vector<XCluster> clusters;
    for (const auto& p : pieces) clusters.push_back(build_x_cluster(p.base, p.params));
    XComplex out;
    for (const auto& c : clusters) out.tag = join(out.tag, c.tag);

    // Coset classes: equal keys first, then same_coset between distinct keys.
    std::map<std::string, GroupWord> rep;
    std::vector<std::vector<std::string>> vkey(clusters.size());
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        for (const auto& l : clusters[i].labels) {
            const GroupWord w = l.with_tag(out.tag);
            std::string key = coset_key(w, opts);
            rep.emplace(key, w);
            vkey[i].push_back(std::move(key));
        }
    }
    std::vector<std::string> distinct;
    for (const auto& [k, w] : rep) distinct.push_back(k);
    std::vector<std::size_t> root(distinct.size());
    std::iota(root.begin(), root.end(), 0);
    const Character hc = height_character(out.tag);
    std::vector<long> height;
    for (const auto& k : distinct) height.push_back(char_value(hc, rep.at(k)));
    for (std::size_t a = 0; a < distinct.size(); ++a) {
        for (std::size_t b = a + 1; b < distinct.size(); ++b) {
            if (root[b] != b || height[a] != height[b]) continue;
            auto d = same_coset(rep.at(distinct[a]), rep.at(distinct[b]), opts);
            if (d.verdict == Verdict::Unknown)
                throw Error("budget exhausted deciding whether F " + distinct[a] + " = F " + distinct[b]);
            if (d.verdict == Verdict::Yes) root[b] = root[a];
        }
    }
    std::map<std::string, int> id;
    for (std::size_t a = 0; a < distinct.size(); ++a) {
        if (root[a] != a) continue;
        id.emplace(distinct[a], static_cast<int>(out.keys.size()));
        out.keys.push_back(distinct[a]);
        out.labels.push_back(rep.at(distinct[a]));
    }
    for (std::size_t a = 0; a < distinct.size(); ++a)
        if (root[a] != a) id.emplace(distinct[a], id.at(distinct[root[a]]));

    // Cells keyed by identified vertex sets.
    using VSet = std::vector<int>;
    struct Entry {
        int dim;
        std::set<VSet> facets;
    };
    std::map<VSet, Entry> cells;
    std::vector<std::map<int, int>> local(clusters.size());  // global vertex -> cluster vertex
    std::vector<std::set<VSet>> own(clusters.size());
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        const auto& cx = clusters[i].cluster.complex;
        auto vset = [&](std::size_t c) {
            VSet s;
            for (int v : cx[c].vertices) s.push_back(id.at(vkey[i][static_cast<std::size_t>(v)]));
            std::sort(s.begin(), s.end());
            return s;
        };
        for (std::size_t v = 0; v < vkey[i].size(); ++v)
            if (!local[i].emplace(id.at(vkey[i][v]), static_cast<int>(v)).second)
                throw Error("two vertices of the cluster " + names(clusters[i].piece.params) + " are the same coset");
        for (std::size_t c = 0; c < cx.size(); ++c) {
            const VSet s = vset(c);
            own[i].insert(s);
            auto [it, fresh] = cells.emplace(s, Entry{cx[c].dim, {}});
            if (it->second.dim != cx[c].dim) throw Error("cells of different dimension share a vertex set");
            for (int f : cx[c].facets) it->second.facets.insert(vset(static_cast<std::size_t>(f)));
        }
    }

    // The common part of two clusters must be the same subcluster of each.
    auto flat_part = [&](std::size_t i, const VSet& common) {
        const auto& cl = clusters[i].cluster;
        const auto k = static_cast<std::size_t>(cl.arrangement.n());
        std::vector<std::vector<int>> pts;
        for (int g : common) pts.push_back(cl.point(local[i].at(g)));
        std::set<VSet> in;
        std::size_t count = 0;
        for (std::size_t v = 0; v < vkey[i].size(); ++v) {
            const auto p = cl.point(static_cast<int>(v));
            bool ok = true;
            for (std::size_t c = 0; c < k && ok; ++c) {
                bool pinned = std::all_of(pts.begin(), pts.end(), [&](const auto& q) { return q[c] == pts[0][c]; });
                if (pinned && p[c] != pts[0][c]) ok = false;
            }
            for (int d : cl.arrangement.diagonals()) {
                const auto c = static_cast<std::size_t>(d);
                bool tied = std::all_of(pts.begin(), pts.end(), [&](const auto& q) { return q[c - 1] == q[c]; });
                if (tied && p[c - 1] != p[c]) ok = false;
            }
            if (ok) ++count;
        }
        for (const auto& s : own[i])
            if (std::includes(common.begin(), common.end(), s.begin(), s.end())) in.insert(s);
        return std::make_pair(count, in);
    };
    for (std::size_t a = 0; a < clusters.size(); ++a) {
        for (std::size_t b = a + 1; b < clusters.size(); ++b) {
            VSet common;
            for (const auto& [g, v] : local[a])
                if (local[b].count(g)) common.push_back(g);
            if (common.empty()) continue;
            auto [na, sa] = flat_part(a, common);
            auto [nb, sb] = flat_part(b, common);
            if (na != common.size() || nb != common.size() || sa != sb)
                throw Error("clusters " + names(clusters[a].piece.params) + " and " + names(clusters[b].piece.params) +
                            " meet outside a common subcluster");
        }
    }

    auto cell_key = [&](const VSet& s, int dim) {
        if (dim == 0) return vertex_name(out.keys[static_cast<std::size_t>(s[0])]);
        std::string k = "c" + std::to_string(dim) + "{";
        for (std::size_t j = 0; j < s.size(); ++j) k += (j ? "," : "") + std::to_string(s[j]);
        return k + "}";
    };
    std::vector<std::pair<std::pair<int, VSet>, const Entry*>> order;
    for (const auto& [s, e] : cells) order.push_back({{e.dim, s}, &e});
    std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::map<VSet, int> index;
    for (const auto& [ds, e] : order) {
        std::vector<int> f;
        for (const auto& s : e->facets) f.push_back(index.at(s));
        index[ds.second] = out.complex.add(ds.first, cell_key(ds.second, ds.first), std::move(f));
    }
    return out;
}

MorseValue morse_value(const XComplex& cx, int v) {
    const auto& w = cx.labels.at(static_cast<std::size_t>(v));
    return {char_value(height_character(cx.tag), w.with_tag(cx.tag)), -(static_cast<long>(v) + 1)};
}

std::vector<MorseValue> morse_values(const XComplex& cx) {
    std::vector<MorseValue> out;
    for (std::size_t v = 0; v < cx.vertex_count(); ++v) out.push_back(morse_value(cx, static_cast<int>(v)));
    return out;
}

int minimal_vertex(const XComplex& cx, const std::vector<MorseValue>& values, int cell) {
    const auto& vs = cx.complex[static_cast<std::size_t>(cell)].vertices;
    return *std::min_element(vs.begin(), vs.end(), [&](int a, int b) {
        return values[static_cast<std::size_t>(a)] < values[static_cast<std::size_t>(b)];
    });
}

bool verify_morse(const XComplex& cx) { return verify_morse(cx, morse_values(cx)); }

bool verify_morse(const XComplex& cx, const std::vector<MorseValue>& values) {
    if (values.size() != cx.vertex_count()) return false;
    std::set<long> fs;
    for (const auto& m : values)
        if (!fs.insert(m.f).second) return false;
    for (const auto& c : cx.complex.cells()) {
        if (c.dim == 1) {
            const auto& a = values[static_cast<std::size_t>(c.vertices[0])];
            const auto& b = values[static_cast<std::size_t>(c.vertices[1])];
            if (a.h != b.h && std::labs(a.h - b.h) < 1) return false;
        }
        std::size_t lowest = 0;
        MorseValue best = values[static_cast<std::size_t>(c.vertices[0])];
        for (int v : c.vertices) {
            const auto& m = values[static_cast<std::size_t>(v)];
            if (m < best) best = m, lowest = 0;
            if (m == best) ++lowest;
        }
        if (lowest != 1) return false;
    }
    return true;
}

CellComplex ascending_link(const XComplex& cx, int v) { return ascending_link(cx, v, morse_values(cx)); }

CellComplex ascending_link(const XComplex& cx, int v, const std::vector<MorseValue>& values) {
    const auto& k = cx.complex;
    std::vector<int> remap(k.size(), -1);
    CellComplex link;
    for (std::size_t c = 0; c < k.size(); ++c) {
        const auto& cell = k[c];
        if (cell.dim == 0 || !std::binary_search(cell.vertices.begin(), cell.vertices.end(), v)) continue;
        if (minimal_vertex(cx, values, static_cast<int>(c)) != v) continue;
        std::vector<int> facets;
        for (int f : cell.facets)
            if (remap[static_cast<std::size_t>(f)] >= 0) facets.push_back(remap[static_cast<std::size_t>(f)]);
        remap[c] = link.add(cell.dim - 1, cell.key, std::move(facets));
    }
    return link;
}

ConeVertex find_cone_vertex(const std::vector<XPiece>& pieces, const RewriteOptions& opts) {
    std::vector<BinaryWord> subs;
    for (const auto& p : pieces) {
        if (!p.base.empty() && in_F(p.base, opts).verdict != Verdict::Yes)
            throw Error("piece base " + p.base.str() + " is not the vertex F");
        for (const auto& f : p.params)
            for (const auto& t : f.entries()) subs.push_back(t.sub);
    }
    ConeVertex out;
    for (unsigned m = 1;; ++m) {
        const BinaryWord w = BinaryWord::repeat('0', m) + BinaryWord("1");
        const bool ok = std::all_of(subs.begin(), subs.end(), [&](const BinaryWord& s) {
            return independent(w, s) && !consecutive(w, s) && !consecutive(s, w);
        });
        if (ok) {
            out.m = m;
            break;
        }
    }
    const SpecialForm cone = SpecialForm::from_entries({{BinaryWord::repeat('0', out.m) + BinaryWord("1"), 1}});
    for (const auto& p : pieces) {
        XPiece e = p;
        e.params.push_back(cone);
        out.enlarged.push_back(std::move(e));
    }
    if (pieces.empty()) out.enlarged.push_back({GroupWord(Tag::G), {cone}});
    try {
        std::vector<XPiece> all = pieces;
        all.insert(all.end(), out.enlarged.begin(), out.enlarged.end());
        const XComplex big = assemble(all, opts);
        const auto f = big.vertex("");
        const auto c = big.vertex(coset_key(cone.word(big.tag), opts));
        if (!f || !c) return out;
        const auto original = pieces.empty() ? XComplex{} : assemble(pieces, opts);
        std::vector<int> link;
        if (auto f0 = original.vertex(""))
            for (int w : original.neighbors(*f0)) link.push_back(*big.vertex(original.keys[static_cast<std::size_t>(w)]));
        for (int w : link) {
            bool found = false;
            for (const auto& cell : big.complex.cells()) {
                if (cell.dim != 2) continue;
                auto has = [&](int x) { return std::binary_search(cell.vertices.begin(), cell.vertices.end(), x); };
                if (has(*f) && has(*c) && has(w)) found = true;
            }
            if (!found) return out;
        }
        out.verified = true;
    } catch (const Error&) {
        out.verified = false;
    }
    return out;
}

}  // namespace lm
