#pragma once

#include <array>
#include <complex>
#include <string>

#include <Eigen/Dense>

namespace hamlab {

// a XX + b YY + c ZZ
struct PauliTerm {
    double a = 0, b = 0, c = 0;

    std::array<double, 3> coeffs() const { return {a, b, c}; }
    bool canonical() const { return a >= b && b >= c; }
    bool operator==(const PauliTerm&) const = default;
};

// Triplet energies relative to the singlet |psi->, which sits at 0.
struct BellTerm {
    double alpha = 0;  // |psi+>
    double beta = 0;   // |phi+>
    double gamma = 0;  // |phi->

    bool canonical() const { return alpha >= beta && beta >= gamma; }
    bool operator==(const BellTerm&) const = default;
};

struct BellWithOffset {
    BellTerm bell;
    double offset;
};

struct PauliWithOffset {
    PauliTerm pauli;
    double offset;
};

struct NormalForm {
    PauliTerm term;
    std::array<int, 3> perm;  // term.coeffs()[i] == scale * input.coeffs()[perm[i]]
    double scale;
};

BellWithOffset pauli_to_bell(const PauliTerm& t);
PauliWithOffset bell_to_pauli(const BellTerm& t);
NormalForm normal_form(const PauliTerm& t);
BellTerm canonical_bell(const BellTerm& t);

BellTerm toy_term(double s);
PauliTerm epr_star_term(double b);

// Two-qubit matrices in the basis |q1 q2>, index = 2*q1 + q2.
Eigen::Matrix4d pauli_matrix(const PauliTerm& t);
Eigen::Matrix4d bell_matrix(const BellTerm& t);

enum class Bell { PhiPlus = 0, PhiMinus = 1, PsiPlus = 2, PsiMinus = 3 };
enum class Pauli { X = 0, Y = 1, Z = 2 };

Eigen::Vector4d bell_vector(Bell s);
const char* bell_name(Bell s);

struct BellAction {
    Bell state;
    std::complex<double> phase;  // one of +-1, +-i
};

// sigma_qubit |in> = phase |state>, qubit in {1, 2}
class BellActionTable {
public:
    BellActionTable();
    BellAction apply(Pauli p, int qubit, Bell in) const;

private:
    std::array<std::array<std::array<BellAction, 4>, 2>, 3> table_;
};

const BellActionTable& bell_action_table();

std::string to_string(const PauliTerm& t);
std::string to_string(const BellTerm& t);

}  // namespace hamlab
