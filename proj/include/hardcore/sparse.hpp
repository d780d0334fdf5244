#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hardcore/error.hpp"

namespace hardcore {

struct Triplet {
    int row = 0;
    int col = 0;
    double value = 0.0;
};

/// Real symmetric sparse operator. Only the upper triangle (row <= col) is
/// stored; entries are sorted, merged and zero-free after construction, so a
/// SparseHermitian is exactly symmetric by representation.
class SparseHermitian {
public:
    /// Canonicalizes arbitrary triplets: lower-triangle entries are mirrored,
    /// duplicates summed, exact zeros dropped.
    static SparseHermitian from_triplets(int dim, std::vector<Triplet> triplets);

    static SparseHermitian identity(int dim, double scale = 1.0);

    int dim() const noexcept { return dim_; }
    const std::vector<Triplet>& entries() const noexcept { return entries_; }

    Eigen::MatrixXd to_dense() const;

    /// y = A x with implicit symmetric completion (single-threaded).
    void multiply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const;

private:
    SparseHermitian(int dim, std::vector<Triplet> entries)
        : dim_(dim), entries_(std::move(entries)) {}

    int dim_ = 0;
    std::vector<Triplet> entries_;
};

/// alpha*A + beta*B (dimensions must match).
SparseHermitian sparse_sum(const SparseHermitian& a, double alpha, const SparseHermitian& b,
                           double beta);

/// Symmetrizes and sparsifies a dense matrix; entries with |v| <= drop_tol
/// are discarded.
SparseHermitian sparse_from_dense(const Eigen::MatrixXd& m, double drop_tol = 0.0);

enum class EigMethod { automatic, dense, iterative };

struct EigOptions {
    EigMethod method = EigMethod::automatic;
    double iterative_tol = 1e-6;
    std::uint64_t seed = 0x5EED;
    int matvec_cap_factor = 10; // iteration cap = factor * dim
};

/// Smallest eigenvalue. Dense path (LAPACK-style full solve) up to dim 4096
/// under `automatic`; above that a seeded, restarted Lanczos iteration with
/// full reorthogonalization. Throws a numeric error carrying the residual
/// norm if the iteration cap is reached without convergence.
double min_eigenvalue(const SparseHermitian& op, const EigOptions& opts = {});
double min_eigenvalue(const SparseHermitian& op, EigMethod method);

/// Full spectrum, ascending (dense solve; intended for desk-scale operators).
std::vector<double> dense_spectrum(const SparseHermitian& op);

/// Coordinate-list text form: "dim\nrow col value\n..." with 17 significant
/// digits, canonical entry order.
std::string to_coordinate_text(const SparseHermitian& op);

/// Shortest text form of a double that survives a round trip (17 significant
/// digits, printf %.17g).
std::string format_g17(double v);

} // namespace hardcore
