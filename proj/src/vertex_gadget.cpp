#include "hamlab/vertex_gadget.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hamlab/errors.hpp"
#include "hamlab/parallel.hpp"

namespace hamlab {

namespace {

std::vector<SiteCoefficients> site_sums(const Eigen::VectorXd& chi, const std::vector<std::uint64_t>& states,
                                        int n) {
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<SiteCoefficients> out(n);
    for (int u = 0; u < n; ++u) {
        double tx = 0, ty = 0, tz = 0;
        for (std::size_t k = 0; k < states.size(); ++k) {
            const std::uint64_t z = states[k];
            // flip every bit except u; stays in the even sector because n is odd
            const std::uint64_t partner = z ^ full ^ (std::uint64_t{1} << u);
            const double ap = chi(static_cast<Eigen::Index>(partner >> 1));
            const double sign = ((z >> u) & 1) ? -1.0 : 1.0;
            tx += chi(k) * ap;
            ty += chi(k) * sign * ap;
            tz += chi(k) * chi(k) * sign;
        }
        out[u] = {tx, ty, tz};
    }
    return out;
}

}  // namespace

LogicalCoefficients LogicalCoefficients::rescaled_to(std::uint64_t state) const {
    auto it = std::find(even_states.begin(), even_states.end(), state);
    if (it == even_states.end()) throw DomainError("rescaled_to: reference state is not in the even sector");
    const double ref = ground_vector(it - even_states.begin());
    if (ref == 0) throw DomainError("rescaled_to: reference amplitude is zero");
    LogicalCoefficients out = *this;
    out.ground_vector /= ref;
    const double f = 1.0 / (ref * ref);
    for (auto& s : out.sites) {
        s.tX *= f;
        s.tY *= f;
        s.tZ *= f;
    }
    return out;
}

LogicalCoefficients logical_coeffs(const PauliTerm& K, const WeightedGraph& gadget, const GadgetOptions& opts) {
    const int n = gadget.n();
    if (n % 2 == 0) throw DomainError("logical_coeffs: gadget must have an odd number of vertices");
    SparseHamiltonian H = build_hamiltonian(K, gadget, opts.qubit_cap);
    GroundSpace gs = ground_space(H, opts.tol_degeneracy);
    if (gs.degeneracy != 2) {
        std::ostringstream os;
        os << "gadget-invalid: ground space of H_K(G) has degeneracy " << gs.degeneracy << " (need exactly 2)";
        throw GadgetInvalid(os.str());
    }
    if (!std::isfinite(gs.gap)) throw GadgetInvalid("gadget-invalid: no excited level above the ground space");
    if (!(gs.gap > opts.min_gap)) {
        std::ostringstream os;
        os << "gadget-invalid: spectral gap " << gs.gap << " below threshold " << opts.min_gap;
        throw GadgetInvalid(os.str());
    }
    ParityBlocks blocks = parity_blocks(H);
    SpectrumSlice even = lowest_eigenpairs(blocks.even, 1);
    if (std::abs(even.eigenvalues(0) - gs.energy) > gs.threshold)
        throw InvariantViolation("logical_coeffs: even-sector ground energy differs from global ground energy");

    LogicalCoefficients out;
    out.ground_vector = even.eigenvectors.col(0);
    out.even_states = blocks.even_states;
    out.gap = gs.gap;
    out.energy = gs.energy;
    out.sites = site_sums(out.ground_vector, out.even_states, n);
    return out;
}

EffectiveTerm effective_term(const PauliTerm& K, const LogicalCoefficients& coeffs, int u, int v) {
    const int n = static_cast<int>(coeffs.sites.size());
    if (u < 0 || u >= n || v < 0 || v >= n) throw DomainError("effective_term: site out of range");
    const auto& su = coeffs.sites[u];
    const auto& sv = coeffs.sites[v];
    EffectiveTerm out;
    out.term = {K.a * su.tX * sv.tX, K.b * su.tY * sv.tY, K.c * su.tZ * sv.tZ};
    out.u = u;
    out.v = v;
    out.parent = "K=" + to_string(K) + " on " + std::to_string(n) + "-vertex gadget";
    return out;
}

PauliTerm p3_flow(const PauliTerm& K, int site, const GadgetOptions& opts) {
    if (K.c != -1.0 || !(K.a >= K.b && K.b >= K.c))
        throw DomainError("p3_flow: K must be in normal form with c = -1");
    LogicalCoefficients lc = logical_coeffs(K, WeightedGraph::path(3), opts);
    PauliTerm eff = effective_term(K, lc, site, site).term;
    const double big = std::max({std::abs(eff.a), std::abs(eff.b), std::abs(eff.c)});
    NormalForm nf = normal_form(eff);
    // an arrow needs a genuine negative ZZ-like coefficient to be rescaled to c = -1
    const double cmin = std::min({eff.a, eff.b, eff.c});
    if (!(cmin < -1e-9 * big))
        throw GadgetInvalid("p3_flow: effective term " + to_string(eff) + " has no negative coefficient to rescale");
    return nf.term;
}

std::vector<FlowPoint> flow_field(double a_lo, double a_hi, double b_lo, double b_hi, int na, int nb, bool open_low,
                                  int site, const GadgetOptions& opts) {
    if (na < 1 || nb < 2) throw DomainError("flow_field: grid too small");
    std::vector<FlowPoint> pts(static_cast<std::size_t>(na) * nb);
    for (int i = 0; i < na; ++i) {
        const double a = open_low ? a_lo + (a_hi - a_lo) * (i + 1) / na
                                  : (na == 1 ? a_hi : a_lo + (a_hi - a_lo) * i / (na - 1));
        for (int j = 0; j < nb; ++j) {
            const double b = b_lo + (b_hi - b_lo) * j / (nb - 1);
            pts[static_cast<std::size_t>(i) * nb + j] = {a, b, NAN, NAN, false, ""};
        }
    }
    parallel_for(
        static_cast<std::int64_t>(pts.size()),
        [&](std::int64_t begin, std::int64_t end) {
            for (std::int64_t k = begin; k < end; ++k) {
                FlowPoint& p = pts[k];
                if (p.b > p.a) {
                    p.reason = "a < b (outside normal form)";
                    continue;
                }
                try {
                    PauliTerm out = p3_flow({p.a, p.b, -1.0}, site, opts);
                    p.a_prime = out.a;
                    p.b_prime = out.b;
                    p.valid = true;
                } catch (const GadgetInvalid& e) {
                    p.reason = e.what();
                } catch (const std::exception& e) {
                    // ambiguity or solver failure at a single point is reported, not fatal
                    p.reason = e.what();
                }
            }
        },
        1);
    return pts;
}

WeightedGraph five_node_graph() { return {5, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {2, 4, 1.0}}}; }

std::uint64_t reverse_bits(std::uint64_t s, int n) {
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i)
        if ((s >> i) & 1) r |= std::uint64_t{1} << (n - 1 - i);
    return r;
}

FiveNodeResult five_node_weights(double b, const GadgetOptions& opts) {
    if (!(std::abs(b) < 1)) throw DomainError("five_node_weights: need |b| < 1");
    const PauliTerm K{2, b, -1};
    const WeightedGraph T = five_node_graph();
    LogicalCoefficients lc = logical_coeffs(K, T, opts).rescaled_to(kFiveNodeReferenceState);

    FiveNodeResult r;
    r.t1 = lc.sites[0];
    r.t2 = lc.sites[1];
    const double t1X = r.t1.tX, t1Y = r.t1.tY, t1Z = r.t1.tZ;
    const double t2X = r.t2.tX, t2Y = r.t2.tY, t2Z = r.t2.tZ;
    if (std::abs(t2Y) < 1e-12) throw DomainError("five_node_weights: t2Y vanishes, weight solve is singular");
    r.p12 = 1.0 / (t1Z * t2Z - (t1Y / t2Y) * t2Z * t2Z);
    r.p22 = -r.p12 * t1Y / t2Y;
    r.xx_strength = 2 * t2X * (r.p12 * t1X + r.p22 * t2X);
    r.weights_nonnegative = r.p12 >= 0 && r.p22 >= 0;

    ParityBlocks blocks = parity_blocks(build_hamiltonian(K, T));
    SpectrumSlice all = dense_eigenpairs(blocks.even.to_dense(), blocks.even.dim);
    r.even_spectrum = all.eigenvalues;

    // reorder to the reference listing: lexicographic with site 1 as the leading bit
    std::vector<std::pair<std::uint64_t, double>> rows;
    for (std::size_t k = 0; k < lc.even_states.size(); ++k)
        rows.push_back({reverse_bits(lc.even_states[k], 5), lc.ground_vector(k)});
    std::sort(rows.begin(), rows.end());
    r.ground_vector.resize(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t k = 0; k < rows.size(); ++k) r.ground_vector(k) = rows[k].second;
    return r;
}

}  // namespace hamlab
