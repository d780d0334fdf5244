#include "hardcore/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace hardcore {

namespace {

using Mat2 = Eigen::Matrix2cd;

Mat2 pauli_matrix(char letter) {
    const std::complex<double> i(0.0, 1.0);
    Mat2 m;
    switch (letter) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw logic_error("pauli: unknown letter in word");
    }
    return m;
}

Eigen::MatrixXcd word_matrix(const std::string& word) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(1, 1);
    for (char letter : word) {
        const Mat2 p = pauli_matrix(letter);
        Eigen::MatrixXcd next(acc.rows() * 2, acc.cols() * 2);
        next.topLeftCorner(acc.rows(), acc.cols()) = p(0, 0) * acc;
        next.topRightCorner(acc.rows(), acc.cols()) = p(0, 1) * acc;
        next.bottomLeftCorner(acc.rows(), acc.cols()) = p(1, 0) * acc;
        next.bottomRightCorner(acc.rows(), acc.cols()) = p(1, 1) * acc;
        acc.swap(next);
    }
    return acc;
}

} // namespace

PauliSum PauliSum::from_terms(int n_qubits, std::vector<PauliTerm> terms) {
    if (n_qubits < 1)
        throw logic_error("pauli: n_qubits must be positive");
    for (const auto& t : terms) {
        if (t.word.size() != static_cast<std::size_t>(n_qubits))
            throw logic_error("pauli: word length does not match n_qubits");
        if (!std::isfinite(t.coeff))
            throw logic_error("pauli: coefficient not finite");
        for (char letter : t.word)
            if (letter != 'I' && letter != 'X' && letter != 'Y' && letter != 'Z')
                throw logic_error("pauli: unknown letter in word");
    }
    std::sort(terms.begin(), terms.end(),
              [](const PauliTerm& a, const PauliTerm& b) { return a.word < b.word; });
    std::vector<PauliTerm> merged;
    for (const auto& t : terms) {
        if (!merged.empty() && merged.back().word == t.word)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(t);
    }
    return PauliSum(n_qubits, std::move(merged));
}

double PauliSum::coeff(std::string_view word) const {
    for (const auto& t : terms_)
        if (t.word == word)
            return t.coeff;
    return 0.0;
}

Eigen::MatrixXcd PauliSum::to_matrix() const {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits_;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& t : terms_)
        m += t.coeff * word_matrix(t.word);
    return m;
}

bool PauliSum::is_xz_two_local() const {
    for (const auto& t : terms_) {
        int support = 0;
        for (char letter : t.word) {
            if (letter == 'Y')
                return false;
            if (letter != 'I')
                ++support;
        }
        if (support > 2)
            return false;
    }
    return true;
}

PauliSum pauli_decompose(const Eigen::MatrixXcd& m, double drop_tol) {
    const Eigen::Index dim = m.rows();
    if (dim != m.cols())
        throw logic_error("pauli_decompose: matrix not square");
    int n_qubits = 0;
    while ((Eigen::Index{1} << n_qubits) < dim)
        ++n_qubits;
    if ((Eigen::Index{1} << n_qubits) != dim || dim < 2)
        throw logic_error("pauli_decompose: dimension is not a power of two");
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw logic_error("pauli_decompose: matrix is not Hermitian within 1e-12");

    static constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};
    std::vector<PauliTerm> terms;
    const long n_words = 1L << (2 * n_qubits);
    for (long code = 0; code < n_words; ++code) {
        std::string word(static_cast<std::size_t>(n_qubits), 'I');
        long rest = code;
        for (int q = n_qubits - 1; q >= 0; --q) {
            word[static_cast<std::size_t>(q)] = kLetters[rest & 3];
            rest >>= 2;
        }
        const std::complex<double> trace = (m * word_matrix(word)).trace();
        const double c = trace.real() / static_cast<double>(dim);
        if (std::abs(c) >= drop_tol)
            terms.push_back({c, std::move(word)});
    }
    return PauliSum::from_terms(n_qubits, std::move(terms));
}

PauliSum pauli_decompose(const Eigen::MatrixXd& m, double drop_tol) {
    return pauli_decompose(Eigen::MatrixXcd(m.cast<std::complex<double>>()), drop_tol);
}

} // namespace hardcore
