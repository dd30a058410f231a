#include "hamlab/token_gadget.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

#include "hamlab/errors.hpp"
#include "hamlab/parallel.hpp"
#include "hamlab/vertex_gadget.hpp"

namespace hamlab {

Eigen::MatrixXd TokenGraph::adjacency() const {
    const auto n = static_cast<Eigen::Index>(vertices.size());
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : edges) A(u, v) = A(v, u) = 1;
    return A;
}

TokenGraph token_graph(const WeightedGraph& G, int k) {
    const int n = G.n();
    if (k < 0 || k > n) throw DomainError("token_graph: need 0 <= k <= n");
    if (n > 30) throw DomainError("token_graph: base graph too large");
    for (const auto& e : G.edges())
        if (e.w != 1) throw DomainError("token_graph: token graphs are defined for unweighted graphs");
    TokenGraph T;
    T.base_n = n;
    T.k = k;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
        if (std::popcount(s) == k) T.vertices.push_back(s);
    std::unordered_map<std::uint64_t, int> index;
    for (std::size_t i = 0; i < T.vertices.size(); ++i) index[T.vertices[i]] = static_cast<int>(i);
    T.degree.assign(T.vertices.size(), 0);
    for (std::size_t i = 0; i < T.vertices.size(); ++i) {
        const std::uint64_t s = T.vertices[i];
        for (const auto& e : G.edges()) {
            const bool bi = (s >> e.i) & 1, bj = (s >> e.j) & 1;
            if (bi == bj) continue;
            ++T.degree[i];
            const int j = index.at(s ^ (std::uint64_t{1} << e.i) ^ (std::uint64_t{1} << e.j));
            if (static_cast<int>(i) < j) T.edges.emplace_back(static_cast<int>(i), j);
        }
    }
    return T;
}

CheckReport token_spectrum_check(int L, double a) {
    if (L < 2 || L > 4) throw DomainError("token_spectrum_check: need 2 <= L <= 4");
    if (!(a > 0)) throw DomainError("token_spectrum_check: a must be positive");
    const WeightedGraph G = WeightedGraph::complete_bipartite(L, L - 1);
    std::vector<double> tok;
    CheckReport rep;
    rep.title = "token spectrum L=" + std::to_string(L) + " a=" + fmt(a);
    std::vector<Eigen::VectorXd> block_spec;
    for (int k = 0; k <= G.n(); ++k) {
        const TokenGraph T = token_graph(G, k);
        Eigen::MatrixXd M = T.adjacency();
        for (std::size_t i = 0; i < T.degree.size(); ++i) M(i, i) = a * T.degree[i];
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M, Eigen::EigenvaluesOnly);
        block_spec.push_back(es.eigenvalues());
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) tok.push_back(es.eigenvalues()(i));
    }
    std::sort(tok.begin(), tok.end());

    const double ne = static_cast<double>(G.edges().size());
    Eigen::MatrixXd H = build_hamiltonian({0.5, 0.5, -a / 2}, G, kHardQubitCap).matrix.to_dense();
    H.diagonal().array() += a / 2 * ne;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H, Eigen::EigenvaluesOnly);
    double err = tok.size() == static_cast<std::size_t>(es.eigenvalues().size()) ? 0 : INFINITY;
    for (std::size_t i = 0; std::isfinite(err) && i < tok.size(); ++i)
        err = std::max(err, std::abs(tok[i] - es.eigenvalues()(static_cast<Eigen::Index>(i))));
    rep.add("spectrum of aD+A over all T_k equals qubit spectrum", err <= 1e-9, "max diff " + fmt(err, 3));

    double iso = 0;
    const int n = G.n();
    for (int k = 0; k <= n; ++k)
        iso = std::max(iso, (block_spec[k] - block_spec[n - k]).cwiseAbs().maxCoeff());
    rep.add("T_k and T_{n-k} isospectral", iso <= 1e-10, "max diff " + fmt(iso, 3));
    return rep;
}

Tridiagonal symmetrized_matrix(int L, int k, double a) {
    if (L < 1 || k < 0 || k > L - 1) throw DomainError("symmetrized_matrix: need 0 <= k <= L-1");
    if (!(a > 0)) throw DomainError("symmetrized_matrix: a must be positive");
    Tridiagonal T{Eigen::VectorXd(k + 1), Eigen::VectorXd(k)};
    for (int j = 0; j <= k; ++j) T.d(j) = a * ((k - j) * double(L - j) + j * double(L - 1 - (k - j)));
    for (int j = 0; j < k; ++j) T.e(j) = std::sqrt(double(j + 1) * (j - k + L) * (k - j) * (L - j));
    if (k == 0) T.d(0) = 0;
    return T;
}

namespace {

void check_gadget_args(int L, double a) {
    if (L < 3 || L % 2 == 0) throw DomainError("bipartite gadget: L must be odd and >= 3");
    if (!(a >= 4) || !std::isfinite(a)) throw DomainError("bipartite gadget: a must be >= 4");
}

double top_eigenvalue(const Tridiagonal& T) { return tridiagonal_eigenvalue(T, T.size() - 1); }

struct BlockTops {
    std::vector<double> lambda1;  // per block k = 0..L-1
    double second;                // bound on the second-largest eigenvalue of the union
};

BlockTops block_tops(int L, double a) {
    BlockTops out;
    out.lambda1.assign(L, 0.0);
    parallel_for(L, [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t k = lo; k < hi; ++k) out.lambda1[k] = top_eigenvalue(symmetrized_matrix(L, int(k), a));
    }, 1);
    const Tridiagonal N = symmetrized_matrix(L, L - 1, a);
    Tridiagonal Np{N.d.tail(N.size() - 1), N.e.tail(N.e.size() - 1)};
    out.second = top_eigenvalue(Np);
    for (int k = 0; k <= L - 2; ++k) out.second = std::max(out.second, out.lambda1[k]);
    return out;
}

}  // namespace

BipartiteGadgetResult bipartite_gadget_coeffs(int L, double a, Picture picture) {
    check_gadget_args(L, a);
    const Tridiagonal N = symmetrized_matrix(L, L - 1, a);
    const double l1 = top_eigenvalue(N);
    Eigen::VectorXd al = tridiagonal_eigenvector(N, l1);
    if (al.sum() < 0) al = -al;
    for (Eigen::Index j = 0; j < al.size(); ++j)
        if (al(j) < -1e-12) throw InvariantViolation("bipartite_gadget_coeffs: Perron vector has a negative entry");
    al = al.cwiseMax(0.0);
    al.normalize();

    double tz = 0, tx = 0;
    for (int j = 0; j < L; ++j) tz += al(j) * al(j) * (2.0 * j / (L - 1) - 1);
    for (int j = 1; j < L; ++j) tx += al(j) * al(L - j) * std::sqrt(double(j) * (L - j)) / (L - 1);

    const BlockTops bt = block_tops(L, a);
    BipartiteGadgetResult r{};
    r.L = L;
    r.a = a;
    r.tZ = tz;
    r.tX = r.tY = tx;
    r.gL = a * tz * tz / (tx * tx);
    r.alpha = al;
    r.picture = picture;
    if (picture == Picture::Maximization) {
        r.lambda1 = l1;
        r.lambda2 = bt.second;
        r.gap = l1 - bt.second;
    } else {
        const double ne = double(L) * (L - 1);
        r.lambda1 = a * ne - 2 * l1;
        r.lambda2 = a * ne - 2 * bt.second;
        r.gap = 2 * (l1 - bt.second);
    }
    return r;
}

CheckReport spectral_bounds_check(int L, double a) {
    check_gadget_args(L, a);
    CheckReport rep;
    rep.title = "spectral bounds L=" + std::to_string(L) + " a=" + fmt(a);
    const BlockTops bt = block_tops(L, a);
    const auto it = std::max_element(bt.lambda1.begin(), bt.lambda1.end());
    const double l1 = *it;
    const int kmax = int(it - bt.lambda1.begin());
    const double lo = a * L * (L - 1), hi = lo + L - 0.5;
    rep.add("lambda1 >= aL(L-1)", l1 >= lo - 1e-9 * lo, fmt(l1) + " >= " + fmt(lo) + " (block k=" + std::to_string(kmax) + ")");
    rep.add("lambda1 <= aL(L-1) + L - 1/2", l1 <= hi + 1e-9 * hi, fmt(l1) + " <= " + fmt(hi));
    const double gap = l1 - bt.second, gap_lo = (a - 2) * L - a + 1.5;
    std::string worst;
    for (int k = 0; k <= L - 2; ++k)
        if (l1 - bt.lambda1[k] < gap_lo) worst += " k=" + std::to_string(k);
    rep.add("gap >= (a-2)L - a + 3/2", gap >= gap_lo,
            "gap " + fmt(gap) + " >= " + fmt(gap_lo) + (worst.empty() ? "" : ", offending blocks:" + worst));
    return rep;
}

CheckReport alpha0_bound_check(int L, double a) {
    const BipartiteGadgetResult r = bipartite_gadget_coeffs(L, a);
    CheckReport rep;
    rep.title = "alpha0 bound L=" + std::to_string(L) + " a=" + fmt(a);
    const double bound = std::sqrt((a - 2 - 1.0 / L) / (a - 1));
    rep.add("alpha_0 > sqrt((a-2-1/L)/(a-1))", r.alpha(0) > bound, fmt(r.alpha(0)) + " > " + fmt(bound));
    return rep;
}

CheckReport coefficient_bounds_check(int L, double a) {
    const BipartiteGadgetResult r = bipartite_gadget_coeffs(L, a);
    CheckReport rep;
    rep.title = "gadget coefficient bounds L=" + std::to_string(L) + " a=" + fmt(a);
    rep.add("tZ <= -1/9", r.tZ <= -1.0 / 9, "tZ = " + fmt(r.tZ));
    const double txlo = std::pow(1 / (3 * a), L), txhi = std::pow(2 / a, L);
    rep.add("(1/(3a))^L <= tX", txlo <= r.tX, fmt(txlo) + " <= " + fmt(r.tX));
    rep.add("tX <= (2/a)^L", r.tX <= txhi, fmt(r.tX) + " <= " + fmt(txhi));
    const double glo = a / 81 * std::pow(a / 2, L), ghi = a * std::pow(3 * a, L);
    rep.add("a/81 (a/2)^L <= g(L)", glo <= r.gL, fmt(glo) + " <= " + fmt(r.gL));
    rep.add("g(L) <= a (3a)^L", r.gL <= ghi,
            fmt(r.gL) + " <= " + fmt(ghi) + "; squared-exponent bound a (3a)^(2L) = " + fmt(a * std::pow(3 * a, 2 * L)) +
                (r.gL <= a * std::pow(3 * a, 2 * L) ? " holds" : " fails"));
    double rmin = INFINITY, rmax = 0;
    for (int j = 1; j < L; ++j) {
        rmin = std::min(rmin, r.alpha(j) / r.alpha(j - 1));
        rmax = std::max(rmax, r.alpha(j) / r.alpha(j - 1));
    }
    rep.add("1/(2a+2) <= alpha_j/alpha_{j-1} <= sqrt2/a", rmin >= 1 / (2 * a + 2) && rmax <= std::sqrt(2.0) / a,
            "range [" + fmt(rmin) + ", " + fmt(rmax) + "]");
    const double cap = a * L * (L - 1) - std::min((a - 2) * L + 0.5, (2 * a - 3) * L + (2.5 - 2 * a));
    double worst = -INFINITY;
    for (int k = 1; k <= L - 2; ++k) worst = std::max(worst, top_eigenvalue(symmetrized_matrix(L, k, a)));
    rep.add("Gershgorin: lambda1(N_k) bound for 1 <= k <= L-2", L < 3 || worst <= cap, fmt(worst) + " <= " + fmt(cap));
    return rep;
}

CheckReport token_vertex_crosscheck(double a) {
    const int L = 3;
    const BipartiteGadgetResult r = bipartite_gadget_coeffs(L, a);
    const LogicalCoefficients lc = logical_coeffs({-1, -1, a}, WeightedGraph::complete_bipartite(L, L - 1));
    const auto& t = lc.sites[L];
    CheckReport rep;
    rep.title = "token/vertex cross-check L=3 a=" + fmt(a);
    // (a D + A) = (a|E| - H_{(-1,-1,a)})/2, so the top eigenvector of the former is the ground state of the latter
    rep.add("tX", std::abs(t.tX - r.tX) <= 1e-8, fmt(t.tX) + " vs " + fmt(r.tX));
    rep.add("tY", std::abs(t.tY - r.tY) <= 1e-8, fmt(t.tY) + " vs " + fmt(r.tY));
    rep.add("tZ", std::abs(t.tZ - r.tZ) <= 1e-8, fmt(t.tZ) + " vs " + fmt(r.tZ));
    const double e = a * L * (L - 1) - 2 * r.lambda1;
    rep.add("ground energy = a|E| - 2 lambda1", std::abs(lc.energy - e) <= 1e-8, fmt(lc.energy) + " vs " + fmt(e));
    return rep;
}

}  // namespace hamlab
