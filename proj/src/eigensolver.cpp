#include "hamlab/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "hamlab/errors.hpp"

namespace hamlab {

void fix_signs(Eigen::MatrixXd& vecs) {
    for (Eigen::Index j = 0; j < vecs.cols(); ++j) {
        auto v = vecs.col(j);
        const double cut = 1e-10 * v.cwiseAbs().maxCoeff();
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            if (std::abs(v(i)) > cut) {
                if (v(i) < 0) v = -v;
                break;
            }
        }
    }
}

SpectrumSlice dense_eigenpairs(const Eigen::MatrixXd& A, std::int64_t k) {
    if (k < 1 || k > A.rows()) throw DomainError("dense_eigenpairs: need 1 <= k <= dimension");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    if (es.info() != Eigen::Success) throw ConvergenceError("dense eigensolver failed");
    SpectrumSlice out;
    out.eigenvalues = es.eigenvalues().head(k);
    out.eigenvectors = es.eigenvectors().leftCols(k);
    fix_signs(out.eigenvectors);
    return out;
}

namespace {

// splitmix64: fixed, platform-independent pseudo-random stream
struct SplitMix {
    std::uint64_t state;
    double next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return static_cast<double>(z >> 11) * 0x1.0p-53 - 0.5;
    }
};

// Orthogonalize the columns of W against V (twice) and among themselves; returns the
// surviving orthonormal columns.
Eigen::MatrixXd orthonormalize_against(const Eigen::MatrixXd& V, Eigen::MatrixXd W, double drop_tol) {
    for (int pass = 0; pass < 2; ++pass)
        if (V.cols() > 0) W -= V * (V.transpose() * W);
    std::vector<Eigen::VectorXd> kept;
    for (Eigen::Index j = 0; j < W.cols(); ++j) {
        Eigen::VectorXd w = W.col(j);
        const double before = w.norm();
        if (before == 0) continue;
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& q : kept) w -= q.dot(w) * q;
            if (V.cols() > 0) w -= V * (V.transpose() * w);
        }
        const double after = w.norm();
        if (after > drop_tol * before && after > 1e-300) kept.push_back(w / after);
    }
    Eigen::MatrixXd Q(W.rows(), static_cast<Eigen::Index>(kept.size()));
    for (std::size_t j = 0; j < kept.size(); ++j) Q.col(j) = kept[j];
    return Q;
}

}  // namespace

SpectrumSlice lanczos_eigenpairs(std::int64_t dim, double norm_estimate,
                                 const std::function<void(const double*, double*)>& matvec, std::int64_t k,
                                 const LanczosOptions& opts) {
    if (k < 1 || k > dim) throw DomainError("lanczos_eigenpairs: need 1 <= k <= dimension");
    const double hnorm = std::max(norm_estimate, 1e-300);
    const Eigen::Index p = std::min<std::int64_t>(dim, k + 2);
    const Eigen::Index keep = std::min<std::int64_t>(dim, k + p);
    const Eigen::Index max_basis = std::min<std::int64_t>(dim, std::max<std::int64_t>(3 * k + 60, 2 * keep + 40));

    SplitMix rng{opts.seed};
    auto random_block = [&](Eigen::Index cols) {
        Eigen::MatrixXd R(dim, cols);
        for (Eigen::Index j = 0; j < cols; ++j)
            for (std::int64_t i = 0; i < dim; ++i) R(i, j) = rng.next();
        return R;
    };
    auto apply = [&](const Eigen::MatrixXd& X) {
        Eigen::MatrixXd Y(dim, X.cols());
        for (Eigen::Index j = 0; j < X.cols(); ++j) matvec(X.col(j).data(), Y.col(j).data());
        return Y;
    };

    Eigen::MatrixXd V(dim, 0), AV(dim, 0), T(0, 0);
    Eigen::MatrixXd block = orthonormalize_against(V, random_block(p), 1e-8);
    Eigen::VectorXd theta;
    Eigen::MatrixXd Y;
    Eigen::VectorXd residuals;

    for (int restart = 0; restart <= opts.max_restarts; ++restart) {
        while (true) {
            if (block.cols() == 0) {
                if (V.cols() >= dim) break;
                // invariant subspace reached: continue from fresh random directions
                block = orthonormalize_against(V, random_block(std::min<Eigen::Index>(p, dim - V.cols())), 1e-8);
                if (block.cols() == 0) break;
            }
            Eigen::MatrixXd Ablock = apply(block);
            const Eigen::Index old = V.cols(), add = block.cols();
            V.conservativeResize(Eigen::NoChange, old + add);
            AV.conservativeResize(Eigen::NoChange, old + add);
            V.rightCols(add) = block;
            AV.rightCols(add) = Ablock;

            // projected matrix grows by the new block's rows/columns
            Eigen::MatrixXd cross = V.transpose() * Ablock;
            T.conservativeResize(old + add, old + add);
            T.rightCols(add) = cross;
            T.bottomRows(add) = cross.transpose();
            T.bottomRightCorner(add, add) = 0.5 * (cross.bottomRows(add) + cross.bottomRows(add).transpose());
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
            theta = es.eigenvalues();
            Y = es.eigenvectors();

            const Eigen::Index nk = std::min<Eigen::Index>(k, V.cols());
            Eigen::MatrixXd X = V * Y.leftCols(nk);
            Eigen::MatrixXd R = AV * Y.leftCols(nk) - X * theta.head(nk).asDiagonal();
            residuals = R.colwise().norm().transpose();
            if (nk == k && residuals.maxCoeff() <= opts.residual_tol * hnorm) {
                SpectrumSlice out;
                out.eigenvalues = theta.head(k);
                out.eigenvectors = X;
                // one more orthonormalization pass for clustered eigenvalues
                Eigen::HouseholderQR<Eigen::MatrixXd> qr(out.eigenvectors);
                Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(dim, k);
                Eigen::MatrixXd Rq = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
                for (Eigen::Index j = 0; j < k; ++j)
                    if (Rq(j, j) < 0) Q.col(j) = -Q.col(j);
                out.eigenvectors = Q;
                fix_signs(out.eigenvectors);
                return out;
            }
            if (V.cols() >= max_basis) break;
            block = orthonormalize_against(V, Ablock, 1e-10);
            if (V.cols() + block.cols() > max_basis) block = block.leftCols(max_basis - V.cols()).eval();
        }
        if (V.cols() >= dim && residuals.size() == k) break;
        // thick restart from the lowest Ritz vectors
        const Eigen::Index kk = std::min<Eigen::Index>(keep, V.cols());
        Eigen::MatrixXd Vk = V * Y.leftCols(kk);
        Eigen::MatrixXd AVk = AV * Y.leftCols(kk);
        Eigen::MatrixXd Rk = AVk - Vk * theta.head(kk).asDiagonal();
        V = orthonormalize_against(Eigen::MatrixXd(dim, 0), Vk, 1e-12);
        if (V.cols() != kk) {
            V = Vk;  // keep as-is, Ritz vectors are orthonormal up to rounding
        }
        AV = apply(V);
        T = V.transpose() * AV;
        T = 0.5 * (T + T.transpose()).eval();
        block = orthonormalize_against(V, Rk, 1e-10);
        if (block.cols() > p) block = block.leftCols(p).eval();
    }
    std::ostringstream os;
    os << "lanczos: no convergence for k=" << k << " (dim " << dim << "); residual norms:";
    for (Eigen::Index i = 0; i < residuals.size(); ++i) os << ' ' << residuals(i);
    throw ConvergenceError(os.str());
}

SpectrumSlice lowest_eigenpairs(const CsrMatrix& H, std::int64_t k) {
    if (k < 1 || k > H.dim) throw DomainError("lowest_eigenpairs: need 1 <= k <= dimension");
    if (H.dim <= kDenseCrossover) return dense_eigenpairs(H.to_dense(), k);
    return lanczos_eigenpairs(H.dim, H.norm_inf(), [&](const double* x, double* y) { H.multiply(x, y); }, k);
}

SpectrumSlice lowest_eigenpairs(const SparseHamiltonian& H, std::int64_t k) {
    return lowest_eigenpairs(H.matrix, k);
}

GroundSpace ground_space(const CsrMatrix& H, double tol) {
    if (!(tol > 0)) throw DomainError("ground_space: tol must be positive");
    const double threshold = tol * std::max(1.0, H.norm_inf());
    std::int64_t k = std::min<std::int64_t>(H.dim, 6);
    SpectrumSlice s;
    int deg = 0;
    while (true) {
        s = lowest_eigenpairs(H, k);
        const double e0 = s.eigenvalues(0);
        deg = 0;
        while (deg < k && s.eigenvalues(deg) - e0 <= threshold) ++deg;
        if (deg < k || k == H.dim) break;
        k = std::min<std::int64_t>(H.dim, 2 * k);
    }
    const double e0 = s.eigenvalues(0);
    for (Eigen::Index i = deg; i < s.eigenvalues.size(); ++i) {
        const double d = s.eigenvalues(i) - e0;
        if (d <= 2 * threshold) {
            std::ostringstream os;
            os << "ground_space: eigenvalue at distance " << d << " from the minimum lies within 2x the cut "
               << threshold << "; adjust the degeneracy tolerance";
            throw AmbiguityError(os.str());
        }
    }
    GroundSpace g;
    g.energy = e0;
    g.degeneracy = deg;
    g.basis = s.eigenvectors.leftCols(deg);
    g.gap = deg < s.eigenvalues.size() ? s.eigenvalues(deg) - e0 : std::numeric_limits<double>::infinity();
    g.threshold = threshold;
    return g;
}

GroundSpace ground_space(const SparseHamiltonian& H, double tol) { return ground_space(H.matrix, tol); }

// --- symmetric tridiagonal -------------------------------------------------

Eigen::MatrixXd Tridiagonal::to_dense() const {
    const Eigen::Index n = d.size();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    m.diagonal() = d;
    for (Eigen::Index i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = e(i);
    return m;
}

namespace {

// number of eigenvalues strictly below x
Eigen::Index sturm_count(const Tridiagonal& T, double x, double pivmin) {
    Eigen::Index count = 0;
    double q = T.d(0) - x;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0) ++count;
    for (Eigen::Index i = 1; i < T.size(); ++i) {
        q = T.d(i) - x - T.e(i - 1) * T.e(i - 1) / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0) ++count;
    }
    return count;
}

std::pair<double, double> gershgorin(const Tridiagonal& T) {
    double lo = INFINITY, hi = -INFINITY;
    for (Eigen::Index i = 0; i < T.size(); ++i) {
        double r = 0;
        if (i > 0) r += std::abs(T.e(i - 1));
        if (i + 1 < T.size()) r += std::abs(T.e(i));
        lo = std::min(lo, T.d(i) - r);
        hi = std::max(hi, T.d(i) + r);
    }
    return {lo, hi};
}

}  // namespace

double tridiagonal_eigenvalue(const Tridiagonal& T, Eigen::Index idx) {
    const Eigen::Index n = T.size();
    if (n == 0 || idx < 0 || idx >= n) throw DomainError("tridiagonal_eigenvalue: index out of range");
    if (T.e.size() != std::max<Eigen::Index>(n - 1, 0)) throw DomainError("tridiagonal: off-diagonal size mismatch");
    auto [lo, hi] = gershgorin(T);
    const double scale = std::max({std::abs(lo), std::abs(hi), 1e-300});
    const double pivmin = std::max(1e-300, 1e-30 * scale * scale);
    lo -= 1e-12 * scale + 1e-300;
    hi += 1e-12 * scale + 1e-300;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (sturm_count(T, mid, pivmin) > idx)
            hi = mid;
        else
            lo = mid;
        if (hi - lo <= 2 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi))) break;
    }
    return 0.5 * (lo + hi);
}

Eigen::VectorXd tridiagonal_eigenvalues(const Tridiagonal& T) {
    Eigen::VectorXd out(T.size());
    for (Eigen::Index i = 0; i < T.size(); ++i) out(i) = tridiagonal_eigenvalue(T, i);
    return out;
}

Eigen::VectorXd tridiagonal_eigenvector(const Tridiagonal& T, double lambda) {
    const Eigen::Index n = T.size();
    if (n == 1) return Eigen::VectorXd::Ones(1);
    auto [glo, ghi] = gershgorin(T);
    const double tnorm = std::max({std::abs(glo), std::abs(ghi), 1e-300});
    const double tiny = std::numeric_limits<double>::epsilon() * tnorm;

    // LU with partial pivoting of T - lambda I (LAPACK dgttrf layout)
    std::vector<double> dl(n - 1), dd(n), du(n - 1), du2(std::max<Eigen::Index>(n - 2, 0), 0.0);
    std::vector<char> swapped(n - 1, 0);
    for (Eigen::Index i = 0; i < n; ++i) dd[i] = T.d(i) - lambda;
    for (Eigen::Index i = 0; i + 1 < n; ++i) dl[i] = du[i] = T.e(i);
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        if (std::abs(dd[i]) >= std::abs(dl[i])) {
            if (dd[i] == 0) dd[i] = tiny;
            const double f = dl[i] / dd[i];
            dl[i] = f;
            dd[i + 1] -= f * du[i];
        } else {
            const double f = dd[i] / dl[i];
            dd[i] = dl[i];
            dl[i] = f;
            const double tmp = du[i];
            du[i] = dd[i + 1];
            dd[i + 1] = tmp - f * dd[i + 1];
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = -f * du[i + 1];
            }
            swapped[i] = 1;
        }
    }
    for (auto& v : dd)
        if (std::abs(v) < tiny) v = v < 0 ? -tiny : tiny;

    auto solve = [&](Eigen::VectorXd& b) {
        for (Eigen::Index i = 0; i + 1 < n; ++i) {
            if (!swapped[i]) {
                b(i + 1) -= dl[i] * b(i);
            } else {
                const double t = b(i);
                b(i) = b(i + 1);
                b(i + 1) = t - dl[i] * b(i);
            }
        }
        b(n - 1) /= dd[n - 1];
        b(n - 2) = (b(n - 2) - du[n - 2] * b(n - 1)) / dd[n - 2];
        for (Eigen::Index i = n - 3; i >= 0; --i) b(i) = (b(i) - du[i] * b(i + 1) - du2[i] * b(i + 2)) / dd[i];
    };

    Eigen::VectorXd x(n);
    SplitMix rng{0x7ea1ULL};
    for (Eigen::Index i = 0; i < n; ++i) x(i) = 1.0 + 0.25 * rng.next();
    x.normalize();
    for (int it = 0; it < 8; ++it) {
        Eigen::VectorXd y = x;
        solve(y);
        const double nrm = y.norm();
        if (!std::isfinite(nrm) || nrm == 0) throw ConvergenceError("tridiagonal inverse iteration broke down");
        y /= nrm;
        if (y.dot(x) < 0) y = -y;
        const double change = (y - x).norm();
        x = y;
        if (change < 1e-14 && it >= 1) break;
    }
    // largest-magnitude component positive
    Eigen::Index imax;
    x.cwiseAbs().maxCoeff(&imax);
    if (x(imax) < 0) x = -x;
    return x;
}

}  // namespace hamlab
