#include "hamlab/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "hamlab/errors.hpp"
#include "hamlab/parallel.hpp"

namespace hamlab {

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw DomainError("graph: negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges_) {
        if (e.i < 0 || e.j >= n || e.i >= e.j)
            throw DomainError("graph: edge (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                              ") violates 0 <= i < j < n");
        if (!(e.w > 0) || !std::isfinite(e.w)) throw DomainError("graph: edge weights must be positive");
        if (!seen.insert({e.i, e.j}).second) throw DomainError("graph: duplicate edge");
    }
}

WeightedGraph WeightedGraph::path(int n, double w) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, w});
    return {n, e};
}

WeightedGraph WeightedGraph::complete_bipartite(int left, int right) {
    std::vector<Edge> e;
    for (int i = 0; i < left; ++i)
        for (int j = 0; j < right; ++j) e.push_back({i, left + j, 1.0});
    return {left + right, e};
}

void CsrMatrix::multiply(const double* x, double* y) const {
    parallel_for(dim, [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t r = begin; r < end; ++r) {
            double acc = 0;
            for (std::int64_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k) acc += val[k] * x[col[k]];
            y[r] = acc;
        }
    });
}

Eigen::VectorXd CsrMatrix::operator*(const Eigen::VectorXd& x) const {
    Eigen::VectorXd y(dim);
    multiply(x.data(), y.data());
    return y;
}

Eigen::MatrixXd CsrMatrix::to_dense() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (std::int64_t r = 0; r < dim; ++r)
        for (std::int64_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k) m(r, col[k]) += val[k];
    return m;
}

double CsrMatrix::norm_inf() const {
    double best = 0;
    for (std::int64_t r = 0; r < dim; ++r) {
        double s = 0;
        for (std::int64_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k) s += std::abs(val[k]);
        best = std::max(best, s);
    }
    return best;
}

double CsrMatrix::coeff(std::int64_t r, std::int64_t c) const {
    auto first = col.begin() + row_ptr[r], last = col.begin() + row_ptr[r + 1];
    auto it = std::lower_bound(first, last, c);
    return (it != last && *it == c) ? val[it - col.begin()] : 0.0;
}

namespace {

// Row-by-row CSR assembly; entries within a row are sorted and merged.
template <class RowFn>
CsrMatrix assemble(std::int64_t dim, std::size_t max_per_row, RowFn&& row_fn) {
    CsrMatrix m;
    m.dim = dim;
    m.row_ptr.assign(dim + 1, 0);
    m.col.reserve(dim * max_per_row);
    m.val.reserve(dim * max_per_row);
    std::vector<std::pair<std::int64_t, double>> row;
    for (std::int64_t r = 0; r < dim; ++r) {
        row.clear();
        row_fn(r, row);
        std::sort(row.begin(), row.end(), [](auto& x, auto& y) { return x.first < y.first; });
        for (std::size_t k = 0; k < row.size();) {
            std::int64_t c = row[k].first;
            double v = 0;
            for (; k < row.size() && row[k].first == c; ++k) v += row[k].second;
            if (v != 0.0) {
                m.col.push_back(c);
                m.val.push_back(v);
            }
        }
        m.row_ptr[r + 1] = static_cast<std::int64_t>(m.col.size());
    }
    return m;
}

}  // namespace

SparseHamiltonian build_hamiltonian(const PauliTerm& K, const WeightedGraph& G, int qubit_cap) {
    if (qubit_cap > kHardQubitCap)
        throw DomainError("qubit cap " + std::to_string(qubit_cap) + " exceeds hard limit " +
                          std::to_string(kHardQubitCap));
    if (G.n() > qubit_cap)
        throw DomainError("graph has " + std::to_string(G.n()) + " qubits, cap is " + std::to_string(qubit_cap));
    const std::int64_t dim = std::int64_t{1} << G.n();
    const auto& edges = G.edges();
    SparseHamiltonian H;
    H.n_qubits = G.n();
    H.matrix = assemble(dim, edges.size() + 1, [&](std::int64_t s, auto& row) {
        double diag = 0;
        for (const auto& e : edges) {
            const int bi = (s >> e.i) & 1, bj = (s >> e.j) & 1;
            diag += e.w * K.c * (bi == bj ? 1.0 : -1.0);
            // Y|0> = i|1>, Y|1> = -i|0>: YY contributes -b on equal bits, +b otherwise
            const double amp = e.w * (bi == bj ? K.a - K.b : K.a + K.b);
            if (amp != 0.0) row.push_back({s ^ ((std::int64_t{1} << e.i) | (std::int64_t{1} << e.j)), amp});
        }
        row.push_back({s, diag});
    });
    return H;
}

ParityBlocks parity_blocks(const SparseHamiltonian& H) {
    const CsrMatrix& m = H.matrix;
    ParityBlocks out;
    const std::int64_t half = m.dim / 2;
    auto state_of = [](std::int64_t k, int p) -> std::uint64_t {
        // within a parity sector, bitstring s has block index s >> 1
        std::uint64_t hi = static_cast<std::uint64_t>(k) << 1;
        return hi | static_cast<std::uint64_t>(parity(hi) ^ p);
    };
    if (m.dim == 1) {
        out.even = m;
        out.even_states = {0};
        out.odd.dim = 0;
        out.odd.row_ptr = {0};
        return out;
    }
    for (int p = 0; p < 2; ++p) {
        auto& states = p == 0 ? out.even_states : out.odd_states;
        states.resize(half);
        for (std::int64_t k = 0; k < half; ++k) states[k] = state_of(k, p);
        CsrMatrix blk = assemble(half, 8, [&](std::int64_t k, auto& row) {
            const std::uint64_t s = states[k];
            for (std::int64_t q = m.row_ptr[s]; q < m.row_ptr[s + 1]; ++q) {
                const std::uint64_t t = static_cast<std::uint64_t>(m.col[q]);
                if (parity(t) != p)
                    throw InvariantViolation("parity_blocks: Hamiltonian couples parity sectors at (" +
                                             std::to_string(s) + "," + std::to_string(t) + ")");
                row.push_back({static_cast<std::int64_t>(t >> 1), m.val[q]});
            }
        });
        (p == 0 ? out.even : out.odd) = std::move(blk);
    }
    return out;
}

}  // namespace hamlab
