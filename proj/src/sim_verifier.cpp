#include "hamlab/sim_verifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

#include "hamlab/edge_gadget.hpp"
#include "hamlab/errors.hpp"

namespace hamlab {

Eigen::MatrixXd GadgetSpec::simulator() const {
    if (second_order) return Delta * H0 + std::sqrt(Delta) * V_main + V_extra;
    return Delta * H0 + V;
}

std::pair<double, double> norm_modulo_identity(const Eigen::MatrixXd& D) {
    Eigen::MatrixXd S = 0.5 * (D + D.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S, Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues()(0), hi = es.eigenvalues()(S.rows() - 1);
    return {(hi - lo) / 2, (hi + lo) / 2};
}

namespace {

double spectral_norm(const Eigen::MatrixXd& M) {
    if (M.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    return svd.singularValues()(0);
}

}  // namespace

SimulationReport measure_simulation(const GadgetSpec& spec) {
    const Eigen::Index dim = spec.H0.rows(), N = spec.encoding.cols();
    if (N < 1 || N > dim) throw DomainError("measure_simulation: logical dimension must be in [1, simulator dim]");
    Eigen::MatrixXd H = spec.simulator();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
    const Eigen::VectorXd& ev = es.eigenvalues();
    const double scale = std::max(1.0, H.cwiseAbs().rowwise().sum().maxCoeff());
    double gap = INFINITY;
    if (N < dim) {
        gap = ev(N) - ev(N - 1);
        if (gap <= 1e-9 * scale) {
            std::ostringstream os;
            os << "measure_simulation: eigenvalues " << N << " and " << N + 1
               << " are degenerate; low-energy subspace is ill-defined";
            throw DomainError(os.str());
        }
    }
    Eigen::MatrixXd U = es.eigenvectors().leftCols(N);
    // orthogonal Procrustes: E~ = U W, W the polar factor of U^T E
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(U.transpose() * spec.encoding, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::MatrixXd Et = U * (svd.matrixU() * svd.matrixV().transpose());
    Eigen::MatrixXd D = spec.target - Et.transpose() * H * Et;
    auto [eps, shift] = norm_modulo_identity(D);
    return {eps, spectral_norm(spec.encoding - Et), gap, spec.Delta, shift};
}

AnalyticCheck analytic_effective(const GadgetSpec& spec) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(spec.H0);
    const Eigen::VectorXd& w = es.eigenvalues();
    const Eigen::MatrixXd& Q = es.eigenvectors();
    const Eigen::Index dim = w.size();
    Eigen::Index n0 = 0;
    while (n0 < dim && std::abs(w(n0)) <= 1e-9) ++n0;
    AnalyticCheck out{};
    out.h0_ground = w(0);
    out.h0_first_excited = n0 < dim ? w(n0) : INFINITY;
    Eigen::MatrixXd Qm = Q.leftCols(n0), Qp = Q.rightCols(dim - n0);
    Eigen::MatrixXd Pm = Qm * Qm.transpose();
    Eigen::MatrixXd Pp = Qp * Qp.transpose();
    Eigen::MatrixXd H0inv = Qp * w.tail(dim - n0).cwiseInverse().asDiagonal() * Qp.transpose();

    Eigen::MatrixXd eff;
    if (spec.second_order) {
        out.main_diag_block = spectral_norm(Pm * spec.V_main * Pm);
        out.extra_offdiag = spectral_norm(Pm * spec.V_extra * Pp);
        eff = Pm * spec.V_extra * Pm - Pm * spec.V_main * H0inv * spec.V_main * Pm;
    } else {
        eff = Pm * spec.V * Pm;
    }
    out.encoding_leak = spectral_norm(Pp * spec.encoding);
    out.effective = spec.encoding.transpose() * eff * spec.encoding;
    out.mismatch = norm_modulo_identity(out.effective - spec.target).first;
    return out;
}

Eigen::MatrixXd two_local(int n, int i, int j, const PauliTerm& K, double w) {
    if (i == j) throw DomainError("two_local: sites must differ");
    if (i > j) std::swap(i, j);
    return build_hamiltonian(K, WeightedGraph(n, {{i, j, w}}), kHardQubitCap).matrix.to_dense();
}

Eigen::MatrixXd single_z(int n, int i) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index s = 0; s < dim; ++s) m(s, s) = ((s >> i) & 1) ? -1.0 : 1.0;
    return m;
}

namespace {

// Amplitude of a Bell state on a qubit pair (first, second) for the given bits.
double bell_amp(Bell s, int first_bit, int second_bit) { return bell_vector(s)(2 * first_bit + second_bit); }

}  // namespace

GadgetSpec build_edge_gadget(double a, double b, double mu1, double mu2, double mu3, double Delta,
                             EdgeGadgetScaling scaling) {
    if (!(a > b)) throw DomainError("build_edge_gadget: requires a > b");
    if (!(b >= -1)) throw DomainError("build_edge_gadget: requires b >= -1");
    if (!(b < 1)) throw DomainError("build_edge_gadget: requires b < 1");
    if (mu1 < 0 || mu2 < 0 || mu3 < 0 || mu1 + mu2 + mu3 <= 0)
        throw DomainError("build_edge_gadget: weights must be non-negative and not all zero");
    if (!(Delta > 0)) throw DomainError("build_edge_gadget: Delta must be positive");

    const int n = 4, qi = 0, qj = 1, qy = 2, qz = 3;
    const PauliTerm K{a, b, -1};
    const double m = std::min({a + 1, a - b, 1 - b});
    const Eigen::Index dim = 16;

    GadgetSpec s;
    s.name = "edge";
    s.n_qubits = n;
    s.second_order = true;
    s.Delta = Delta;
    // Bell form of K with phi- at 0: (K + (a-b+1) I)/2, then unit gap
    s.H0 = (two_local(n, qy, qz, K) + (a - b + 1) * Eigen::MatrixXd::Identity(dim, dim)) / (2 * m);

    const double sum23 = mu2 + mu3;
    Eigen::MatrixXd Vm = Eigen::MatrixXd::Zero(dim, dim);
    if (sum23 > 0) {
        const double r = std::sqrt(sum23);
        Vm = r * two_local(n, qi, qy, K) + (mu2 / r) * two_local(n, qj, qz, K) + (mu3 / r) * two_local(n, qj, qy, K);
    }
    if (scaling == EdgeGadgetScaling::Corrected) {
        s.V_main = std::sqrt((a - b) / (2 * m)) * Vm;
        s.V_extra = mu1 * two_local(n, qi, qj, K);
    } else {
        s.V_main = Vm;
        s.V_extra = 2 * mu1 * (a - b) * two_local(n, qi, qj, K);
    }

    s.encoding = Eigen::MatrixXd::Zero(dim, 4);
    for (Eigen::Index x = 0; x < 4; ++x)
        for (int by = 0; by < 2; ++by)
            for (int bz = 0; bz < 2; ++bz)
                s.encoding(x | (by << qy) | (bz << qz), x) = bell_amp(Bell::PhiMinus, by, bz);

    EdgeMapResult em = edge_map(a, b);
    s.target = mu1 * two_local(2, 0, 1, em.K1) + mu2 * two_local(2, 0, 1, em.K2) + mu3 * two_local(2, 0, 1, em.K3);
    return s;
}

GadgetSpec build_tim_gadget(const WeightedGraph& G, const std::vector<double>& alphas,
                            const std::vector<double>& betas, double Delta) {
    const int nl = G.n();
    if (nl < 2) throw DomainError("build_tim_gadget: need at least 2 logical qubits (f(j) = j-1 mod n)");
    if (alphas.size() != G.edges().size()) throw DomainError("build_tim_gadget: one alpha per edge");
    if (static_cast<int>(betas.size()) != nl) throw DomainError("build_tim_gadget: one beta per vertex");
    for (double x : alphas)
        if (!(x >= 0)) throw DomainError("build_tim_gadget: alphas must be non-negative");
    for (double x : betas)
        if (!(x >= 0)) throw DomainError("build_tim_gadget: betas must be non-negative");
    if (!(Delta > 0)) throw DomainError("build_tim_gadget: Delta must be positive");

    const int n = 2 * nl;
    const Eigen::Index dim = Eigen::Index{1} << n;
    auto p1 = [](int i) { return 2 * i; };
    auto p2 = [](int i) { return 2 * i + 1; };
    const PauliTerm XX{1, 0, 0}, YYZZ{0, 1, 1};

    GadgetSpec s;
    s.name = "tim";
    s.n_qubits = n;
    s.second_order = true;
    s.Delta = Delta;
    s.H0 = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < nl; ++i)
        s.H0 += 0.5 * (two_local(n, p1(i), p2(i), XX) + Eigen::MatrixXd::Identity(dim, dim));

    s.V_extra = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t e = 0; e < alphas.size(); ++e) {
        const auto& ed = G.edges()[e];
        if (alphas[e] > 0) s.V_extra += alphas[e] * two_local(n, p1(ed.i), p1(ed.j), XX);
    }
    s.V_main = Eigen::MatrixXd::Zero(dim, dim);
    for (int j = 0; j < nl; ++j) {
        if (betas[j] == 0) continue;
        const int f = (j - 1 + nl) % nl;
        s.V_main -= std::sqrt(betas[j] / 2) * (two_local(n, p1(f), p1(j), YYZZ) + two_local(n, p1(f), p2(j), YYZZ));
    }

    const Eigen::Index ldim = Eigen::Index{1} << nl;
    s.encoding = Eigen::MatrixXd::Zero(dim, ldim);
    for (Eigen::Index x = 0; x < ldim; ++x) {
        for (Eigen::Index phys = 0; phys < dim; ++phys) {
            double amp = 1;
            for (int i = 0; i < nl && amp != 0; ++i) {
                const Bell st = ((x >> i) & 1) ? Bell::PhiMinus : Bell::PsiMinus;
                amp *= bell_amp(st, (phys >> p1(i)) & 1, (phys >> p2(i)) & 1);
            }
            s.encoding(phys, x) = amp;
        }
    }

    double beta_sum = 0;
    s.target = Eigen::MatrixXd::Zero(ldim, ldim);
    for (std::size_t e = 0; e < alphas.size(); ++e) {
        const auto& ed = G.edges()[e];
        if (alphas[e] > 0) s.target += alphas[e] * two_local(nl, ed.i, ed.j, XX);
    }
    for (int j = 0; j < nl; ++j) {
        s.target += betas[j] * single_z(nl, j);
        beta_sum += betas[j];
    }
    s.target -= beta_sum * Eigen::MatrixXd::Identity(ldim, ldim);
    return s;
}

GadgetSpec build_vertex_gadget_pair(const PauliTerm& K, const WeightedGraph& G, int u, int v, double Delta) {
    const int ng = G.n();
    if (u < 0 || u >= ng || v < 0 || v >= ng) throw DomainError("build_vertex_gadget_pair: site out of range");
    if (2 * ng > 12) throw DomainError("build_vertex_gadget_pair: at most 6 gadget vertices (dense simulator)");
    if (!(Delta > 0)) throw DomainError("build_vertex_gadget_pair: Delta must be positive");
    const LogicalCoefficients lc = logical_coeffs(K, G);
    const int n = 2 * ng;
    const Eigen::Index dg = Eigen::Index{1} << ng, dim = Eigen::Index{1} << n;

    const Eigen::MatrixXd Hg = build_hamiltonian(K, G, kHardQubitCap).matrix.to_dense();
    const Eigen::MatrixXd Ig = Eigen::MatrixXd::Identity(dg, dg);
    GadgetSpec s;
    s.name = "vertex-pair";
    s.n_qubits = n;
    s.second_order = false;
    s.Delta = Delta;
    // qubit q of copy 2 is qubit ng + q overall: copy 2 is the more significant Kronecker factor
    s.H0 = (Eigen::kroneckerProduct(Ig, Hg).eval() + Eigen::kroneckerProduct(Hg, Ig).eval() -
            2 * lc.energy * Eigen::MatrixXd::Identity(dim, dim)) / lc.gap;
    s.V = two_local(n, u, ng + v, K);

    Eigen::VectorXd chi0 = Eigen::VectorXd::Zero(dg), chi1 = Eigen::VectorXd::Zero(dg);
    const std::uint64_t full = (std::uint64_t{1} << ng) - 1;
    for (std::size_t k = 0; k < lc.even_states.size(); ++k) {
        chi0(static_cast<Eigen::Index>(lc.even_states[k])) = lc.ground_vector(static_cast<Eigen::Index>(k));
        chi1(static_cast<Eigen::Index>(lc.even_states[k] ^ full)) = lc.ground_vector(static_cast<Eigen::Index>(k));
    }
    const Eigen::VectorXd* basis[2] = {&chi0, &chi1};
    s.encoding = Eigen::MatrixXd::Zero(dim, 4);
    for (int x = 0; x < 4; ++x) s.encoding.col(x) = Eigen::kroneckerProduct(*basis[x >> 1], *basis[x & 1]);

    const EffectiveTerm eff = effective_term(K, lc, u, v);
    s.target = two_local(2, 0, 1, eff.term);
    return s;
}

ComposedError compose_errors(double eta1, double eps1, double eta2, double eps2, double delta, double normH) {
    if (!(delta > 2 * eps2)) throw DomainError("compose_errors: chaining requires delta > 2*eps2");
    if (!(eps1 <= normH && eps2 <= normH)) throw DomainError("compose_errors: chaining requires eps1, eps2 <= ||H||");
    if (eta1 < 0 || eps1 < 0 || eta2 < 0 || eps2 < 0) throw DomainError("compose_errors: errors must be non-negative");
    return {eta1 + eta2 + eps2 / delta, eps1 + eps2 + eps2 * normH / delta};
}

}  // namespace hamlab
