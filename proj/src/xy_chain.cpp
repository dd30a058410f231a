#include "hamlab/xy_chain.hpp"

#include <cmath>

#include "hamlab/eigensolver.hpp"
#include "hamlab/errors.hpp"
#include "hamlab/hamiltonian.hpp"
#include "hamlab/vertex_gadget.hpp"

namespace hamlab {

ChainSpec::ChainSpec(int L_, double a_) : L(L_), a(a_) {
    if (L < 3 || L % 2 == 0) throw DomainError("ChainSpec: L must be odd and >= 3");
    if (!(a > 1) || !std::isfinite(a)) throw DomainError("ChainSpec: a must be > 1");
}

namespace {

Tridiagonal odd_block(const ChainSpec& s) {
    const double p = 1 + s.gamma(), q = 1 - s.gamma();
    const int m = s.m();
    Tridiagonal T{Eigen::VectorXd::Constant(m, p * p + q * q), Eigen::VectorXd::Constant(m - 1, p * q)};
    T.d(0) = q * q;
    T.d(m - 1) = p * p;
    return T;
}

Tridiagonal even_block(const ChainSpec& s) {
    const double p = 1 + s.gamma(), q = 1 - s.gamma();
    const int n = s.m() - 1;
    return {Eigen::VectorXd::Constant(n, p * p + q * q), Eigen::VectorXd::Constant(std::max(0, n - 1), p * q)};
}

}  // namespace

ChainSolution solve_chain(const ChainSpec& spec) {
    ChainSolution out;
    const Tridiagonal To = odd_block(spec), Te = even_block(spec);
    out.odd_block_eigs = tridiagonal_eigenvalues(To);
    out.even_block_eigs = tridiagonal_eigenvalues(Te);
    out.zero_mode = tridiagonal_eigenvector(To, out.odd_block_eigs(0));

    std::vector<double> sv;
    for (Eigen::Index i = 0; i < out.odd_block_eigs.size(); ++i) sv.push_back(std::sqrt(std::max(0.0, out.odd_block_eigs(i))));
    for (Eigen::Index i = 0; i < out.even_block_eigs.size(); ++i) sv.push_back(std::sqrt(std::max(0.0, out.even_block_eigs(i))));
    std::sort(sv.begin(), sv.end());
    out.singular_values = Eigen::Map<Eigen::VectorXd>(sv.data(), static_cast<Eigen::Index>(sv.size()));

    const double r = spec.r();
    const int m = spec.m();
    out.V_1q = std::sqrt((1 - std::pow(r, -2)) / (1 - std::pow(r, -2 * m)));
    out.U_1q = out.V_1q / std::pow(r, m - 1);
    out.effective_yy_ratio = 1 / std::pow(r, spec.L);
    return out;
}

PauliTerm chain_effective_term(const ChainSpec& spec) { return {1, -std::pow(std::abs(spec.r()), -spec.L), 0}; }

PauliTerm chain_effective_term_interchanged(const ChainSpec& spec) {
    return {std::pow(std::abs(spec.r()), spec.L), 0, -1};
}

CheckReport crosscheck_chain(const ChainSpec& spec) {
    if (spec.L > kChainEdBudget) throw DomainError("crosscheck_chain: L exceeds the exact-diagonalization budget of 13");
    CheckReport rep;
    rep.title = "xy chain L=" + std::to_string(spec.L) + " a=" + fmt(spec.a);
    const ChainSolution sol = solve_chain(spec);
    const double g = spec.gamma(), absr = std::abs(spec.r());
    const int m = spec.m();

    // free-fermion structure
    const double zero_thr = 1e-10 * (2 * g);
    int zeros = 0;
    for (Eigen::Index i = 0; i < sol.singular_values.size(); ++i) zeros += sol.singular_values(i) <= zero_thr;
    rep.add("one zero singular value", zeros == 1, std::to_string(zeros) + " found");
    bool in_range = true;
    for (Eigen::Index i = 1; i < sol.singular_values.size(); ++i)
        in_range &= sol.singular_values(i) >= 2 - 1e-9 && sol.singular_values(i) <= 2 * g + 1e-9;
    rep.add("nonzero singular values in [2, 2 gamma]", in_range);
    double ratio_err = 0;
    for (Eigen::Index j = 1; j < sol.zero_mode.size(); ++j)
        ratio_err = std::max(ratio_err, std::abs(std::abs(sol.zero_mode(j)) - std::abs(sol.zero_mode(0)) * std::pow(absr, -double(j))));
    rep.add("zero mode |v_j| = |v_1| / |r|^(j-1)", ratio_err <= 1e-10, "max err " + fmt(ratio_err, 3));
    const double v1_err = std::abs(std::abs(sol.zero_mode(0)) - sol.V_1q);
    rep.add("zero mode |v_1| = V_1q closed form", v1_err <= 1e-10, "err " + fmt(v1_err, 3));

    // exact diagonalization
    const PauliTerm K{1 + g, 1 - g, 0};
    const WeightedGraph G = WeightedGraph::path(spec.L);
    const SparseHamiltonian H = build_hamiltonian(K, G, kHardQubitCap);
    const GroundSpace gs = ground_space(H);
    rep.add("two-fold ground degeneracy", gs.degeneracy == 2, std::to_string(gs.degeneracy));
    const double lam_min = sol.singular_values(1);
    const double gap_err = std::abs(gs.gap - 2 * lam_min);
    rep.add("gap = 2 * min nonzero singular value", gap_err <= 1e-8,
            "ED " + fmt(gs.gap) + " vs " + fmt(2 * lam_min) + " (units of the rescaled chain)");
    const double e0 = -sol.singular_values.sum();
    rep.add("E0 = -sum singular values", std::abs(gs.energy - e0) <= 1e-8, "ED " + fmt(gs.energy) + " vs " + fmt(e0));

    const LogicalCoefficients lc = logical_coeffs(K, G);
    const auto& t = lc.sites[0];
    const double tx2_err = std::abs(t.tX * t.tX - sol.V_1q * sol.V_1q);
    rep.add("|t^X_1| = |V_1q|", tx2_err <= 1e-8, "t^X_1 = " + fmt(t.tX) + ", V_1q = " + fmt(sol.V_1q));
    const double ty_err = std::abs(std::abs(t.tY) - std::abs(sol.U_1q));
    rep.add("|t^Y_1| = |U_1q|", ty_err <= 1e-8,
            "t^Y_1 = " + fmt(t.tY) + ", U_1q = " + fmt(sol.U_1q) + ", ratio t^Y/t^X = " + fmt(t.tY / t.tX) +
                " vs 1/|r|^(m-1) = " + fmt(std::pow(absr, -(m - 1))));
    const double eff = (1 - g) * t.tY * t.tY / ((1 + g) * t.tX * t.tX);
    rep.add("effective YY/XX ratio = 1/r^L", std::abs(eff - sol.effective_yy_ratio) <= 1e-8,
            fmt(eff) + " vs " + fmt(sol.effective_yy_ratio));
    return rep;
}

}  // namespace hamlab
