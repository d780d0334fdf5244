#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "hardcore/error.hpp"

namespace hardcore {

struct PauliTerm {
    double coeff = 0.0;
    std::string word; // one of I,X,Y,Z per qubit, qubit 0 leftmost
};

/// Real-coefficient sum of Pauli words. Terms are kept sorted by word with
/// duplicates merged; coefficients must be finite.
class PauliSum {
public:
    static PauliSum from_terms(int n_qubits, std::vector<PauliTerm> terms);

    int n_qubits() const noexcept { return n_qubits_; }
    const std::vector<PauliTerm>& terms() const noexcept { return terms_; }

    /// Coefficient of a word, 0 if absent.
    double coeff(std::string_view word) const;

    /// Dense 2^n x 2^n matrix (qubit 0 is the most significant factor).
    Eigen::MatrixXcd to_matrix() const;

    /// True when every non-identity word uses only X/Z letters on at most
    /// two qubits.
    bool is_xz_two_local() const;

private:
    PauliSum(int n_qubits, std::vector<PauliTerm> terms)
        : n_qubits_(n_qubits), terms_(std::move(terms)) {}

    int n_qubits_ = 0;
    std::vector<PauliTerm> terms_;
};

/// Expansion coefficients c_W = Tr(m W) / 2^n over all Pauli words; words
/// with |c_W| < drop_tol are omitted. The input must be Hermitian within
/// 1e-12 and of power-of-two dimension.
PauliSum pauli_decompose(const Eigen::MatrixXcd& m, double drop_tol = 1e-12);
PauliSum pauli_decompose(const Eigen::MatrixXd& m, double drop_tol = 1e-12);

} // namespace hardcore
