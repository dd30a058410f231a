#pragma once

#include <utility>
#include <vector>

#include "hamlab/term_algebra.hpp"

namespace hamlab {

struct EdgeMapResult {
    double a_prime, b_prime;
    PauliTerm K1, K2, K3;
};

// a' = a^2 (a-b)/(1-b), b' = b^2 (a-b)/(a+1); requires a > b >= -1, b < 1
EdgeMapResult edge_map(double a, double b);

inline constexpr int kMaxRecursionSteps = 64;

struct BoostResult {
    int k;
    std::vector<std::pair<double, double>> trajectory;  // includes the starting point
};

// Iterates (a, b) -> (a', -b') k times, k = ceil(max(log2 log_a 2, log2 log_|b| mu)).
BoostResult recurse_boost(double a, double b, double mu);

struct RestrictResult {
    double mu2, mu3;
    PauliTerm result;
    double a_tilde, b_tilde;
};

RestrictResult restrict_to_a2(double a, double b);

struct XxzBoost {
    int k;
    double a_final;
    std::vector<double> trajectory;
};

// b = -1 line: a -> a^2 (a+1)/2, k = ceil(log2 log_a 4)
XxzBoost boost_xxz(double a);

}  // namespace hamlab
