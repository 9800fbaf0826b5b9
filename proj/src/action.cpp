#include "lm/action.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace lm {

struct Chain::Program {
    enum Kind { Table, SubX, SubY } kind;
    BinaryWord sub;
    bool inverse = false;
    // Table data for p-letters (whole table) and for the x-core below the subscript.
    std::map<std::string, std::string> lcp;     // proper prefixes of domain words
    std::map<std::string, std::string> match;   // domain -> range

    void build_table(const Rows& rows) {
        for (const auto& [d, r] : rows) {
            match[d.bits()] = r.bits();
            for (std::size_t k = 0; k < d.size(); ++k) {
                auto q = d.bits().substr(0, k);
                auto it = lcp.find(q);
                if (it == lcp.end()) {
                    lcp[q] = r.bits();
                } else {
                    std::size_t n = 0;
                    while (n < it->second.size() && n < r.size() && it->second[n] == r[n]) ++n;
                    it->second.resize(n);
                }
            }
        }
    }
};

namespace {

enum Phase : std::uint8_t { Matching = 0, Pass = 1, Core = 2 };

std::shared_ptr<const Chain::Program> make_program(const Letter& l) {
    auto p = std::make_shared<Chain::Program>();
    p->inverse = l.exp < 0;
    switch (l.gen.kind) {
        case GenKind::P:
            p->kind = Chain::Program::Table;
            p->build_table(generator_rows(l.gen, p->inverse));
            break;
        case GenKind::X:
            p->kind = Chain::Program::SubX;
            p->sub = l.gen.sub;
            p->build_table(generator_rows(Generator::x({}), p->inverse));
            break;
        case GenKind::Y:
            p->kind = Chain::Program::SubY;
            p->sub = l.gen.sub;
            break;
    }
    return p;
}

const Chain::Program* program_for(const Letter& l) {
    // Programs are immutable once built and shared by every chain.
    static std::mutex mu;
    static std::map<std::pair<std::string, bool>, std::shared_ptr<const Chain::Program>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(l.gen.str(), l.exp < 0);
    auto& slot = cache[key];
    if (!slot) slot = make_program(l);
    return slot.get();
}

Chain::State initial_state(const Chain::Program& p) {
    Chain::State s;
    if (p.kind == Chain::Program::Table) return s;
    if (p.sub.empty()) s.phase = Core;
    s.mode = p.inverse ? 1 : 0;
    return s;
}

void table_step(const Chain::Program& p, Chain::State& s, char bit, std::string& out) {
    const std::size_t before = p.lcp.at(s.buf).size();
    s.buf.push_back(bit);
    if (auto m = p.match.find(s.buf); m != p.match.end()) {
        out.append(m->second, before, std::string::npos);
        s.phase = Pass;
        s.buf.clear();
        return;
    }
    const auto& now = p.lcp.at(s.buf);
    out.append(now, before, std::string::npos);
}

void y_step(Chain::State& s, char bit, std::string& out) {
    if (s.mode == 0) {
        if (s.buf.empty()) {
            if (bit == '0') s.buf = "0";
            else out += "11";
        } else {
            s.buf.clear();
            if (bit == '0') out += "0";
            else out += "10", s.mode = 1;
        }
    } else {
        if (s.buf.empty()) {
            if (bit == '0') out += "00";
            else s.buf = "1";
        } else {
            s.buf.clear();
            if (bit == '0') out += "01", s.mode = 0;
            else out += "1";
        }
    }
}

void step(const Chain::Program& p, Chain::State& s, char bit, std::string& out) {
    if (s.phase == Pass) {
        out.push_back(bit);
        return;
    }
    if (p.kind == Chain::Program::Table) {
        table_step(p, s, bit, out);
        return;
    }
    if (s.phase == Matching) {
        out.push_back(bit);
        if (bit != p.sub[s.progress]) {
            s.phase = Pass;
        } else if (++s.progress == p.sub.size()) {
            s.phase = Core;
        }
        return;
    }
    if (p.kind == Chain::Program::SubX) {
        table_step(p, s, bit, out);
    } else {
        y_step(s, bit, out);
    }
}

}  // namespace

Chain::Chain(const GroupWord& w) {
    const GroupWord u = w.units();
    for (const auto& l : u.letters()) {
        programs_.push_back(program_for(l));
        states_.push_back(initial_state(*programs_.back()));
    }
}

std::string Chain::feed(char bit) {
    std::string cur(1, bit), next;
    for (std::size_t i = 0; i < programs_.size() && !cur.empty(); ++i) {
        next.clear();
        for (char b : cur) step(*programs_[i], states_[i], b, next);
        std::swap(cur, next);
    }
    return cur;
}

std::string Chain::feed(const std::string& bits) {
    std::string out;
    for (char b : bits) out += feed(b);
    return out;
}

bool Chain::idle() const {
    return std::all_of(states_.begin(), states_.end(), [](const State& s) { return s.buf.empty(); });
}

std::string Chain::state_key() const {
    std::string k;
    k.reserve(states_.size() * 6);
    for (const auto& s : states_) {
        k.push_back(static_cast<char>('a' + s.phase * 2 + s.mode));
        k += std::to_string(s.progress);
        k += s.buf;
        k.push_back(',');
    }
    return k;
}

PrefixResult act_prefix(const GroupWord& w, const BinaryWord& input) {
    Chain c(w);
    auto out = c.feed(input.bits());
    return {BinaryWord(out), c.idle()};
}

namespace {

struct DepthSearch {
    std::unordered_set<std::string> equal_memo;
    std::string path;

    // pending holds output bits one side has produced beyond the other; ahead says which.
    bool dfs(const Chain& a, const Chain& b, int ahead, const std::string& pending, std::size_t left) {
        if (left == 0) return true;
        std::string key = a.state_key() + '#' + b.state_key() + '#' + char('0' + ahead) + pending + '#' +
                          std::to_string(left);
        if (equal_memo.count(key)) return true;
        for (char bit : {'0', '1'}) {
            Chain na = a, nb = b;
            std::string oa = na.feed(bit), ob = nb.feed(bit);
            if (ahead == 1) oa = pending + oa;
            else if (ahead == 2) ob = pending + ob;
            const std::size_t n = std::min(oa.size(), ob.size());
            path.push_back(bit);
            if (oa.compare(0, n, ob, 0, n) != 0) return false;
            int nahead = oa.size() > n ? 1 : ob.size() > n ? 2 : 0;
            std::string npend = nahead == 1 ? oa.substr(n) : nahead == 2 ? ob.substr(n) : std::string();
            if (!dfs(na, nb, nahead, npend, left - 1)) return false;
            path.pop_back();
        }
        equal_memo.insert(std::move(key));
        return true;
    }
};

}  // namespace

DepthVerdict equal_at_depth(const GroupWord& w1, const GroupWord& w2, std::size_t d) {
    DepthSearch s;
    if (s.dfs(Chain(w1), Chain(w2), 0, {}, d)) return EqualSoFar{};
    return Differ{BinaryWord(s.path)};
}

bool fixes_endpoints(const GroupWord& w, std::size_t d) {
    auto zeros = act_prefix(w, BinaryWord::repeat('0', d)).forced;
    auto ones = act_prefix(w, BinaryWord::repeat('1', d)).forced;
    return zeros.is_constant('0') && ones.is_constant('1');
}

std::string RateCertificate::str() const {
    return prefix.str() + "(" + loop.str() + ")^inf excess " + std::to_string(excess);
}

std::optional<RateCertificate> find_rate_cycle(const GroupWord& w, std::size_t max_states) {
    std::vector<Chain> nodes;
    std::unordered_map<std::string, int> ids;
    std::vector<std::array<int, 2>> to;
    std::vector<std::array<long, 2>> wt;
    std::vector<std::pair<int, char>> parent;

    nodes.emplace_back(w);
    ids[nodes[0].state_key()] = 0;
    parent.emplace_back(-1, 0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        to.push_back({-1, -1});
        wt.push_back({0, 0});
        for (int b = 0; b < 2; ++b) {
            Chain c = nodes[i];
            long out = static_cast<long>(c.feed(static_cast<char>('0' + b)).size());
            auto key = c.state_key();
            auto [it, fresh] = ids.emplace(key, static_cast<int>(nodes.size()));
            if (fresh) {
                if (nodes.size() >= max_states) return std::nullopt;
                nodes.push_back(std::move(c));
                parent.emplace_back(static_cast<int>(i), static_cast<char>('0' + b));
            }
            to[i][b] = it->second;
            wt[i][b] = out - 1;
        }
    }
    const int N = static_cast<int>(nodes.size());

    // Tarjan, iterative.
    std::vector<int> index(N, -1), low(N, 0), comp(N, -1), stack;
    std::vector<char> on(N, 0);
    int counter = 0, ncomp = 0;
    for (int root = 0; root < N; ++root) {
        if (index[root] != -1) continue;
        std::vector<std::pair<int, int>> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on[root] = 1;
        while (!call.empty()) {
            auto& [v, e] = call.back();
            if (e < 2) {
                int u = to[v][e++];
                if (index[u] == -1) {
                    index[u] = low[u] = counter++;
                    stack.push_back(u);
                    on[u] = 1;
                    call.emplace_back(u, 0);
                } else if (on[u]) {
                    low[v] = std::min(low[v], index[u]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                int u;
                do {
                    u = stack.back();
                    stack.pop_back();
                    on[u] = 0;
                    comp[u] = ncomp;
                } while (u != v);
                ++ncomp;
            }
            int done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
        }
    }

    auto input_path = [&](int v) {
        std::string s;
        for (; parent[v].first != -1; v = parent[v].first) s.push_back(parent[v].second);
        std::reverse(s.begin(), s.end());
        return s;
    };

    std::vector<long> pot(N, 0);
    std::vector<char> seen(N, 0);
    std::vector<std::pair<int, char>> tree(N, {-1, 0});
    for (int r = 0; r < N; ++r) {
        if (seen[r]) continue;
        std::deque<int> q{r};
        std::vector<int> members;
        seen[r] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            members.push_back(v);
            for (int b = 0; b < 2; ++b) {
                int u = to[v][b];
                if (comp[u] != comp[r] || seen[u]) continue;
                seen[u] = 1;
                pot[u] = pot[v] + wt[v][b];
                tree[u] = {v, static_cast<char>('0' + b)};
                q.push_back(u);
            }
        }
        for (int v : members) {
            for (int b = 0; b < 2; ++b) {
                int u = to[v][b];
                if (comp[u] != comp[r] || pot[u] == pot[v] + wt[v][b]) continue;
                // Closed walks r->v->u->r and r->u->r differ in weight, so one is nonzero.
                auto tree_path = [&](int x) {
                    std::string s;
                    for (; x != r; x = tree[x].first) s.push_back(tree[x].second);
                    std::reverse(s.begin(), s.end());
                    return s;
                };
                std::unordered_map<int, std::pair<int, char>> back;
                std::deque<int> bq{u};
                back[u] = {-1, 0};
                while (!bq.empty() && !back.count(r)) {
                    int x = bq.front();
                    bq.pop_front();
                    for (int c = 0; c < 2; ++c) {
                        int y = to[x][c];
                        if (comp[y] != comp[r] || back.count(y)) continue;
                        back[y] = {x, static_cast<char>('0' + c)};
                        bq.push_back(y);
                    }
                }
                std::string home;
                for (int x = r; x != u; x = back[x].first) home.push_back(back[x].second);
                std::reverse(home.begin(), home.end());
                auto weigh = [&](const std::string& bits) {
                    long total = 0;
                    int x = r;
                    for (char c : bits) {
                        total += wt[x][c - '0'];
                        x = to[x][c - '0'];
                    }
                    return total;
                };
                std::string c1 = tree_path(v) + static_cast<char>('0' + b) + home;
                std::string c2 = tree_path(u) + home;
                long w1 = weigh(c1), w2 = weigh(c2);
                const std::string& loop = w1 != 0 ? c1 : c2;
                return RateCertificate{BinaryWord(input_path(r)), BinaryWord(loop), w1 != 0 ? w1 : w2};
            }
        }
    }
    return std::nullopt;
}

}  // namespace lm
