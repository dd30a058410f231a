#include "hamlab/term_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hamlab/errors.hpp"

namespace hamlab {

BellWithOffset pauli_to_bell(const PauliTerm& t) {
    return {{2 * (t.a + t.b), 2 * (t.a + t.c), 2 * (t.b + t.c)}, -(t.a + t.b + t.c)};
}

PauliWithOffset bell_to_pauli(const BellTerm& t) {
    const double al = t.alpha, be = t.beta, ga = t.gamma;
    return {{(al + be - ga) / 4, (al - be + ga) / 4, (-al + be + ga) / 4}, (al + be + ga) / 4};
}

NormalForm normal_form(const PauliTerm& t) {
    const auto c = t.coeffs();
    std::array<int, 3> perm{0, 1, 2};
    std::stable_sort(perm.begin(), perm.end(), [&](int i, int j) { return c[i] > c[j]; });
    NormalForm out{{c[perm[0]], c[perm[1]], c[perm[2]]}, perm, 1.0};
    if (out.term.c < 0) {
        out.scale = 1.0 / std::abs(out.term.c);
        out.term.a *= out.scale;
        out.term.b *= out.scale;
        out.term.c = -1.0;
    }
    return out;
}

BellTerm canonical_bell(const BellTerm& t) {
    std::array<double, 3> e{t.alpha, t.beta, t.gamma};
    std::sort(e.begin(), e.end(), std::greater<>());
    return {e[0], e[1], e[2]};
}

BellTerm toy_term(double s) {
    // J(s) = -s|psi-><psi-| - |psi+><psi+|, shifted by +s so the singlet sits at 0
    return canonical_bell({s - 1, s, s});
}

PauliTerm epr_star_term(double b) {
    if (!(b >= -1 && b <= 1))
        throw DomainError("epr_star_term: b must satisfy -1 <= b <= 1");
    return {1, b, -1};
}

Eigen::Matrix4d pauli_matrix(const PauliTerm& t) {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    // XX and YY couple |00>,|11> and |01>,|10>; ZZ is diagonal
    m(0, 3) = m(3, 0) = t.a - t.b;
    m(1, 2) = m(2, 1) = t.a + t.b;
    m(0, 0) = m(3, 3) = t.c;
    m(1, 1) = m(2, 2) = -t.c;
    return m;
}

Eigen::Vector4d bell_vector(Bell s) {
    const double h = 1.0 / std::sqrt(2.0);
    switch (s) {
        case Bell::PhiPlus: return {h, 0, 0, h};
        case Bell::PhiMinus: return {h, 0, 0, -h};
        case Bell::PsiPlus: return {0, h, h, 0};
        case Bell::PsiMinus: return {0, h, -h, 0};
    }
    throw InvariantViolation("bell_vector: bad state");
}

const char* bell_name(Bell s) {
    switch (s) {
        case Bell::PhiPlus: return "phi+";
        case Bell::PhiMinus: return "phi-";
        case Bell::PsiPlus: return "psi+";
        case Bell::PsiMinus: return "psi-";
    }
    return "?";
}

Eigen::Matrix4d bell_matrix(const BellTerm& t) {
    auto proj = [](Bell s) {
        Eigen::Vector4d v = bell_vector(s);
        return Eigen::Matrix4d(v * v.transpose());
    };
    return t.alpha * proj(Bell::PsiPlus) + t.beta * proj(Bell::PhiPlus) + t.gamma * proj(Bell::PhiMinus);
}

BellActionTable::BellActionTable() {
    using B = Bell;
    const std::complex<double> I(0, 1);
    auto set = [&](Pauli p, int q, B in, B out, std::complex<double> ph) {
        table_[int(p)][q - 1][int(in)] = {out, ph};
    };
    set(Pauli::X, 1, B::PhiPlus, B::PsiPlus, 1.0);
    set(Pauli::X, 1, B::PhiMinus, B::PsiMinus, -1.0);
    set(Pauli::X, 1, B::PsiPlus, B::PhiPlus, 1.0);
    set(Pauli::X, 1, B::PsiMinus, B::PhiMinus, -1.0);
    set(Pauli::X, 2, B::PhiPlus, B::PsiPlus, 1.0);
    set(Pauli::X, 2, B::PhiMinus, B::PsiMinus, 1.0);
    set(Pauli::X, 2, B::PsiPlus, B::PhiPlus, 1.0);
    set(Pauli::X, 2, B::PsiMinus, B::PhiMinus, 1.0);

    set(Pauli::Y, 1, B::PhiPlus, B::PsiMinus, -I);
    set(Pauli::Y, 1, B::PhiMinus, B::PsiPlus, I);
    set(Pauli::Y, 1, B::PsiPlus, B::PhiMinus, -I);
    set(Pauli::Y, 1, B::PsiMinus, B::PhiPlus, I);
    set(Pauli::Y, 2, B::PhiPlus, B::PsiMinus, I);
    set(Pauli::Y, 2, B::PhiMinus, B::PsiPlus, I);
    set(Pauli::Y, 2, B::PsiPlus, B::PhiMinus, -I);
    set(Pauli::Y, 2, B::PsiMinus, B::PhiPlus, -I);

    set(Pauli::Z, 1, B::PhiPlus, B::PhiMinus, 1.0);
    set(Pauli::Z, 1, B::PhiMinus, B::PhiPlus, 1.0);
    set(Pauli::Z, 1, B::PsiPlus, B::PsiMinus, 1.0);
    set(Pauli::Z, 1, B::PsiMinus, B::PsiPlus, 1.0);
    set(Pauli::Z, 2, B::PhiPlus, B::PhiMinus, 1.0);
    set(Pauli::Z, 2, B::PhiMinus, B::PhiPlus, 1.0);
    set(Pauli::Z, 2, B::PsiPlus, B::PsiMinus, -1.0);
    set(Pauli::Z, 2, B::PsiMinus, B::PsiPlus, -1.0);
}

BellAction BellActionTable::apply(Pauli p, int qubit, Bell in) const {
    if (qubit != 1 && qubit != 2) throw DomainError("BellActionTable: qubit must be 1 or 2");
    return table_[int(p)][qubit - 1][int(in)];
}

const BellActionTable& bell_action_table() {
    static const BellActionTable table;
    return table;
}

std::string to_string(const PauliTerm& t) {
    std::ostringstream os;
    os.precision(12);
    os << "(" << t.a << ", " << t.b << ", " << t.c << ")";
    return os.str();
}

std::string to_string(const BellTerm& t) {
    std::ostringstream os;
    os.precision(12);
    os << "(" << t.alpha << ", " << t.beta << ", " << t.gamma << ")";
    return os.str();
}

}  // namespace hamlab
