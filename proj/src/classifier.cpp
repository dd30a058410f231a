#include "hamlab/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>

#include "json.hpp"

#include "hamlab/errors.hpp"

namespace hamlab {

const char* phase_name(Phase p) {
    switch (p) {
        case Phase::QMA_COMPLETE: return "QMA_COMPLETE";
        case Phase::NP_COMPLETE: return "NP_COMPLETE";
        case Phase::STOQMA_COMPLETE: return "STOQMA_COMPLETE";
        case Phase::EPRSTAR_REDUCIBLE: return "EPRSTAR_REDUCIBLE";
        case Phase::P_TRIVIAL: return "P_TRIVIAL";
    }
    return "?";
}

PhaseLabel classify(const BellTerm& t) {
    if (!t.canonical())
        throw DomainError("classify: term must be canonical (alpha >= beta >= gamma); apply canonical_bell or normal_form first");
    const double al = t.alpha, be = t.beta, ga = t.gamma;
    if (ga > 0) return {Phase::QMA_COMPLETE, "all triplets above the singlet"};
    if (al == be && be > 0 && ga == 0) return {Phase::NP_COMPLETE, "MaxCut point: alpha = beta > 0 = gamma"};
    if ((al > be && be > 0 && ga == 0) || (be > 0 && ga < 0))
        return {Phase::STOQMA_COMPLETE, "alpha >= beta > 0 >= gamma"};
    PhaseLabel out{Phase::EPRSTAR_REDUCIBLE,
                   "0 >= beta >= gamma: reducible to EPR*; in BPP only conditionally on the EPR* conjecture"};
    if (be == ga) {
        out.p_trivial = true;
        out.note += "; two lowest triplets degenerate, ground space contains two triplets (product state): in P";
    }
    return out;
}

PhaseLabel classify_toy(double s) {
    if (s <= 0) return {Phase::EPRSTAR_REDUCIBLE, "s <= 0: reducible to Toy(0) = EPR"};
    if (s < 1) return {Phase::STOQMA_COMPLETE, "0 < s < 1"};
    if (s == 1) return {Phase::NP_COMPLETE, "s = 1: MaxCut"};
    return {Phase::QMA_COMPLETE, "s > 1"};
}

PauliTerm EprStarDecomposition::reconstruct() const {
    const double fb = f(b);
    return {p1 + p2 - p3, p1 * b - (p2 + p3) * fb, -(p1 + p2 + p3)};
}

EprStarDecomposition epr_star_decompose(double ap, double bp) {
    if (!(bp >= -1 && bp <= ap && ap <= 1)) throw DomainError("epr_star_decompose: requires -1 <= b' <= a' <= 1");
    EprStarDecomposition d{ap, bp, 0, 0, 0, 0};
    if (bp == 1) {
        d.b = 1;
        d.p1 = 1;
    } else if (bp > 0) {
        const double s = std::sqrt(bp);
        d.b = s;
        d.p3 = (1 - ap) / 2;
        d.p1 = (3 * s - bp) / (2 + s - bp);
        d.p2 = (1 + ap) / 2 - d.p1;
    } else {
        // -f is increasing on [-1, 0] from -1 to 0
        double lo = -1, hi = 0;
        while (hi - lo > 1e-13) {
            const double mid = 0.5 * (lo + hi);
            (-EprStarDecomposition::f(mid) < bp ? lo : hi) = mid;
        }
        d.b = 0.5 * (lo + hi);
        if (bp == -1) d.b = -1;
        if (bp == 0) d.b = 0;
        d.p2 = (1 + ap) / 2;
        d.p3 = (1 - ap) / 2;
    }
    return d;
}

std::string Arrangement::encode() const {
    std::string s;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (i) s += '<';
        s += groups[i];
    }
    return s;
}

Arrangement Arrangement::decode(const std::string& s) {
    Arrangement a;
    std::string cur;
    int ns = 0, nt = 0;
    for (char ch : s + "<") {
        if (ch == '<') {
            if (cur.empty()) throw DomainError("Arrangement: empty level group in '" + s + "'");
            std::sort(cur.begin(), cur.end());  // 'S' < 'T'
            a.groups.push_back(cur);
            cur.clear();
        } else if (ch == 'S' || ch == 'T') {
            cur += ch;
            (ch == 'S' ? ns : nt)++;
        } else {
            throw DomainError("Arrangement: unexpected character in '" + s + "'");
        }
    }
    if (ns != 1 || nt != 3) throw DomainError("Arrangement: need exactly one S and three T");
    return a;
}

int Arrangement::triplets_off_singlet() const {
    for (const auto& g : groups)
        if (g.find('S') != std::string::npos) return 3 - static_cast<int>(std::count(g.begin(), g.end(), 'T'));
    return -1;
}

BellTerm Arrangement::representative() const {
    int sl = 0;
    for (std::size_t i = 0; i < groups.size(); ++i)
        if (groups[i].find('S') != std::string::npos) sl = static_cast<int>(i);
    std::vector<double> e;
    for (std::size_t i = 0; i < groups.size(); ++i)
        for (char ch : groups[i])
            if (ch == 'T') e.push_back(static_cast<double>(static_cast<int>(i) - sl));
    return canonical_bell({e[0], e[1], e[2]});
}

namespace {

// ordered compositions of n into positive parts
void compositions(int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = 1; k <= n; ++k) {
        cur.push_back(k);
        compositions(n - k, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> compositions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    compositions(n, cur, out);
    return out;
}

// Arrangement from per-element levels (index 0 = S, 1..3 = T)
Arrangement from_levels(const std::array<double, 4>& lv) {
    std::vector<double> vals(lv.begin(), lv.end());
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    Arrangement a;
    for (double v : vals) {
        std::string g;
        for (int i = 0; i < 4; ++i)
            if (lv[i] == v) g += i == 0 ? 'S' : 'T';
        a.groups.push_back(g);
    }
    return a;
}

std::array<double, 4> levels_of(const Arrangement& a) {
    std::array<double, 4> lv{};
    int t = 1;
    for (std::size_t i = 0; i < a.groups.size(); ++i)
        for (char ch : a.groups[i]) lv[ch == 'S' ? 0 : t++] = static_cast<double>(i);
    return lv;
}

}  // namespace

std::vector<Arrangement> enumerate_arrangements() {
    std::vector<Arrangement> out;
    std::set<std::string> seen;
    for (int t = 3; t >= 0; --t) {
        const int s = 3 - t;
        for (int below = 0; below <= s; ++below) {
            const int above = s - below;
            for (const auto& cb : compositions(below))
                for (const auto& ca : compositions(above)) {
                    Arrangement a;
                    for (int k : cb) a.groups.push_back(std::string(k, 'T'));
                    a.groups.push_back("S" + std::string(t, 'T'));
                    for (int k : ca) a.groups.push_back(std::string(k, 'T'));
                    if (seen.insert(a.encode()).second) out.push_back(a);
                }
        }
    }
    return out;
}

int arrangement_count_formula(int s) {
    if (s == 0) return 1;
    int f = 2 * (1 << (s - 1));
    if (s > 1) f += (s - 1) * (1 << (s - 2));
    return f;
}

int FlowDag::index_of(const std::string& code) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].encode() == code) return static_cast<int>(i);
    return -1;
}

bool FlowDag::has_edge(int from, int to) const {
    return std::find(edges.begin(), edges.end(), std::pair<int, int>{from, to}) != edges.end();
}

namespace {

std::vector<int> bfs(const FlowDag& g, const std::vector<int>& sources, int target) {
    std::vector<int> prev(g.nodes.size(), -2);
    std::deque<int> q;
    for (int s : sources) {
        prev[s] = -1;
        q.push_back(s);
    }
    while (!q.empty()) {
        const int u = q.front();
        q.pop_front();
        if (u == target) {
            std::vector<int> path;
            for (int v = u; v != -1; v = prev[v]) path.push_back(v);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (auto [a, b] : g.edges)
            if (a == u && prev[b] == -2) {
                prev[b] = u;
                q.push_back(b);
            }
    }
    return {};
}

}  // namespace

bool FlowDag::has_path(int from, int to) const { return !bfs(*this, {from}, to).empty(); }

std::vector<int> FlowDag::path_from_phase(Phase from, int to) const {
    std::vector<int> src;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (labels[i].figure_phase() == from) src.push_back(static_cast<int>(i));
    return bfs(*this, src, to);
}

std::string FlowDag::to_json() const {
    nlohmann::json j;
    j["nodes"] = nlohmann::json::array();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const BellTerm r = nodes[i].representative();
        j["nodes"].push_back({{"id", i},
                              {"arrangement", nodes[i].encode()},
                              {"label", phase_name(labels[i].figure_phase())},
                              {"representative", {r.alpha, r.beta, r.gamma}},
                              {"note", labels[i].note}});
    }
    j["edges"] = nlohmann::json::array();
    for (auto [a, b] : edges) j["edges"].push_back({{"from", a}, {"to", b}});
    return j.dump(2);
}

std::string FlowDag::to_dot() const {
    std::ostringstream os;
    os << "digraph singlet_flow {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << nodes[i].encode() << "\\n" << phase_name(labels[i].figure_phase())
           << "\"];\n";
    for (auto [a, b] : edges) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

FlowDag singlet_flow_dag() {
    FlowDag g;
    g.nodes = enumerate_arrangements();
    for (const auto& a : g.nodes) g.labels.push_back(classify(a.representative()));
    for (std::size_t u = 0; u < g.nodes.size(); ++u) {
        const auto lv = levels_of(g.nodes[u]);
        std::vector<double> vals(lv.begin(), lv.end());
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        // every possible target position: on an existing level, between two, or below all
        std::vector<double> cand = vals;
        cand.push_back(vals.front() - 1);
        for (std::size_t i = 0; i + 1 < vals.size(); ++i) cand.push_back(0.5 * (vals[i] + vals[i + 1]));
        std::set<int> targets;
        for (int t = 1; t <= 3; ++t)
            for (double c : cand) {
                if (!(c < lv[t])) continue;
                auto nl = lv;
                nl[t] = c;
                const int v = g.index_of(from_levels(nl).encode());
                if (v >= 0 && v != static_cast<int>(u)) targets.insert(v);
            }
        for (int v : targets) g.edges.emplace_back(static_cast<int>(u), v);
    }
    return g;
}

}  // namespace hamlab
