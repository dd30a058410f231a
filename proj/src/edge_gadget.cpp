#include "hamlab/edge_gadget.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hamlab/errors.hpp"

namespace hamlab {

EdgeMapResult edge_map(double a, double b) {
    if (!(a > b)) throw DomainError("edge_map: requires a > b");
    if (!(b >= -1)) throw DomainError("edge_map: requires b >= -1");
    if (!(b < 1)) throw DomainError("edge_map: requires b < 1");
    EdgeMapResult r;
    r.a_prime = a * a * (a - b) / (1 - b);
    r.b_prime = b * b * (a - b) / (a + 1);
    r.K1 = {a, b, -1};
    r.K2 = {r.a_prime, -r.b_prime, -1};
    r.K3 = {-r.a_prime, -r.b_prime, -1};
    return r;
}

namespace {

// log2 of a positive argument, with log of exactly 1 treated as 0
double safe_log2(double x) { return x == 1.0 ? 0.0 : std::log2(x); }

int schedule(double value) {
    if (!std::isfinite(value)) throw OverflowError("recursion schedule is not finite");
    const double k = std::ceil(value);
    if (k > kMaxRecursionSteps)
        throw OverflowError("recursion schedule needs " + std::to_string(k) + " steps (cap " +
                            std::to_string(kMaxRecursionSteps) + ")");
    return std::max(0, static_cast<int>(k));
}

}  // namespace

BoostResult recurse_boost(double a, double b, double mu) {
    if (!(a > 1)) throw DomainError("recurse_boost: requires a > 1");
    if (!(b > -1 && b < 1)) throw DomainError("recurse_boost: requires -1 < b < 1");
    if (b == 0) throw DomainError("recurse_boost: requires b != 0");
    if (!(mu > 0 && mu <= std::abs(b))) throw DomainError("recurse_boost: requires 0 < mu <= |b|");
    const double log_a_2 = std::log(2.0) / std::log(a);
    const double log_b_mu = std::log(mu) / std::log(std::abs(b));
    BoostResult r;
    r.k = schedule(std::max(safe_log2(log_a_2), safe_log2(log_b_mu)));
    r.trajectory.push_back({a, b});
    for (int step = 0; step < r.k; ++step) {
        EdgeMapResult m = edge_map(a, b);
        a = m.a_prime;
        b = -m.b_prime;
        if (!std::isfinite(a) || !std::isfinite(b))
            throw OverflowError("recurse_boost: coefficient overflow at step " + std::to_string(step + 1));
        r.trajectory.push_back({a, b});
    }
    return r;
}

RestrictResult restrict_to_a2(double a, double b) {
    if (!(a > 2)) throw DomainError("restrict_to_a2: requires a > 2");
    EdgeMapResult m = edge_map(a, b);
    RestrictResult r;
    r.a_tilde = m.a_prime;
    r.b_tilde = m.b_prime;
    r.mu2 = 0.5 + 1.0 / r.a_tilde;
    r.mu3 = 0.5 - 1.0 / r.a_tilde;
    // mu2 K2 + mu3 K3 = (mu2 - mu3) a~ XX - b~ YY - ZZ
    r.result = {2.0, -r.b_tilde, -1.0};
    return r;
}

XxzBoost boost_xxz(double a) {
    if (!(a > 1)) throw DomainError("boost_xxz: requires a > 1");
    XxzBoost r;
    r.k = schedule(safe_log2(std::log(4.0) / std::log(a)));
    r.trajectory.push_back(a);
    for (int step = 0; step < r.k; ++step) {
        a = a * a * (a + 1) / 2;
        if (!std::isfinite(a)) throw OverflowError("boost_xxz: overflow at step " + std::to_string(step + 1));
        r.trajectory.push_back(a);
    }
    r.a_final = a;
    return r;
}

}  // namespace hamlab
