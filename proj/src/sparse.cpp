#include "hardcore/sparse.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <random>
#include <thread>

#include <Eigen/Eigenvalues>

namespace hardcore {

SparseHermitian SparseHermitian::from_triplets(int dim, std::vector<Triplet> triplets) {
    if (dim < 0)
        throw logic_error("sparse: negative dimension");
    for (auto& t : triplets) {
        if (t.row < 0 || t.col < 0 || t.row >= dim || t.col >= dim)
            throw logic_error("sparse: triplet index out of range");
        if (t.row > t.col)
            std::swap(t.row, t.col);
    }
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return std::pair(a.row, a.col) < std::pair(b.row, b.col);
    });
    std::vector<Triplet> merged;
    merged.reserve(triplets.size());
    for (const auto& t : triplets) {
        if (!merged.empty() && merged.back().row == t.row && merged.back().col == t.col)
            merged.back().value += t.value;
        else
            merged.push_back(t);
    }
    std::erase_if(merged, [](const Triplet& t) { return t.value == 0.0; });
    return SparseHermitian(dim, std::move(merged));
}

SparseHermitian SparseHermitian::identity(int dim, double scale) {
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i)
        t.push_back({i, i, scale});
    return from_triplets(dim, std::move(t));
}

Eigen::MatrixXd SparseHermitian::to_dense() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
    for (const auto& t : entries_) {
        m(t.row, t.col) += t.value;
        if (t.row != t.col)
            m(t.col, t.row) += t.value;
    }
    return m;
}

void SparseHermitian::multiply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const {
    y.setZero(dim_);
    for (const auto& t : entries_) {
        y[t.row] += t.value * x[t.col];
        if (t.row != t.col)
            y[t.col] += t.value * x[t.row];
    }
}

SparseHermitian sparse_sum(const SparseHermitian& a, double alpha, const SparseHermitian& b,
                           double beta) {
    if (a.dim() != b.dim())
        throw logic_error("sparse_sum: dimension mismatch");
    std::vector<Triplet> t;
    t.reserve(a.entries().size() + b.entries().size());
    for (const auto& e : a.entries())
        t.push_back({e.row, e.col, alpha * e.value});
    for (const auto& e : b.entries())
        t.push_back({e.row, e.col, beta * e.value});
    return SparseHermitian::from_triplets(a.dim(), std::move(t));
}

SparseHermitian sparse_from_dense(const Eigen::MatrixXd& m, double drop_tol) {
    if (m.rows() != m.cols())
        throw logic_error("sparse_from_dense: matrix not square");
    const int dim = static_cast<int>(m.rows());
    std::vector<Triplet> t;
    for (int r = 0; r < dim; ++r)
        for (int c = r; c < dim; ++c) {
            const double v = (r == c) ? m(r, c) : 0.5 * (m(r, c) + m(c, r));
            if (std::abs(v) > drop_tol)
                t.push_back({r, c, v});
        }
    return SparseHermitian::from_triplets(dim, std::move(t));
}

std::vector<double> dense_spectrum(const SparseHermitian& op) {
    if (op.dim() < 1)
        throw logic_error("dense_spectrum: empty operator");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(op.to_dense(),
                                                          Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw numeric_error("dense_spectrum: eigensolver failed");
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

namespace {

constexpr int kDenseThreshold = 4096;

int worker_count(int dim) {
    int workers = 1;
    if (dim >= 512) {
        const unsigned hw = std::thread::hardware_concurrency();
        workers = static_cast<int>(hw == 0 ? 1 : std::min(hw, 4u));
    }
    if (const char* env = std::getenv("HARDCORE_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1)
            workers = std::min<long>(workers, cap);
    }
    return std::max(workers, 1);
}

/// CSR view with explicit symmetric completion; rows can be processed
/// independently, so row-partitioned products are deterministic for any
/// worker count.
struct CsrMatrix {
    int dim;
    std::vector<int> row_ptr;
    std::vector<int> col;
    std::vector<double> val;

    explicit CsrMatrix(const SparseHermitian& op) : dim(op.dim()), row_ptr(op.dim() + 1, 0) {
        std::vector<int> counts(dim, 0);
        for (const auto& t : op.entries()) {
            ++counts[t.row];
            if (t.row != t.col)
                ++counts[t.col];
        }
        for (int r = 0; r < dim; ++r)
            row_ptr[r + 1] = row_ptr[r] + counts[r];
        col.resize(row_ptr[dim]);
        val.resize(row_ptr[dim]);
        std::vector<int> cursor(row_ptr.begin(), row_ptr.end() - 1);
        for (const auto& t : op.entries()) {
            col[cursor[t.row]] = t.col;
            val[cursor[t.row]++] = t.value;
            if (t.row != t.col) {
                col[cursor[t.col]] = t.row;
                val[cursor[t.col]++] = t.value;
            }
        }
    }

    void multiply(const Eigen::VectorXd& x, Eigen::VectorXd& y, int workers) const {
        auto run = [&](int row_begin, int row_end) {
            for (int r = row_begin; r < row_end; ++r) {
                double acc = 0.0;
                for (int p = row_ptr[r]; p < row_ptr[r + 1]; ++p)
                    acc += val[p] * x[col[p]];
                y[r] = acc;
            }
        };
        if (workers <= 1 || dim < 2 * workers) {
            run(0, dim);
            return;
        }
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        const int chunk = (dim + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const int lo = w * chunk;
            const int hi = std::min(dim, lo + chunk);
            if (lo < hi)
                pool.emplace_back(run, lo, hi);
        }
        for (auto& th : pool)
            th.join();
    }
};

double lanczos_min_eigenvalue(const SparseHermitian& op, const EigOptions& opts) {
    const int dim = op.dim();
    const CsrMatrix csr(op);
    const int workers = worker_count(dim);
    const long matvec_cap = static_cast<long>(opts.matvec_cap_factor) * dim;

    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXd q(dim);
    for (int i = 0; i < dim; ++i)
        q[i] = gauss(rng);
    q.normalize();

    const int block = std::min(dim, 48);
    long matvecs = 0;
    double theta = 0.0;
    double residual = std::numeric_limits<double>::infinity();

    Eigen::MatrixXd basis(dim, block);
    Eigen::VectorXd alpha(block), beta(block), w(dim);

    while (true) {
        int steps = 0;
        basis.col(0) = q;
        for (int j = 0; j < block; ++j) {
            csr.multiply(basis.col(j), w, workers);
            ++matvecs;
            alpha[j] = basis.col(j).dot(w);
            w -= alpha[j] * basis.col(j);
            if (j > 0)
                w -= beta[j - 1] * basis.col(j - 1);
            // Full reorthogonalization, two passes.
            for (int pass = 0; pass < 2; ++pass)
                for (int i = 0; i <= j; ++i)
                    w -= basis.col(i).dot(w) * basis.col(i);
            steps = j + 1;
            const double norm = w.norm();
            if (j + 1 < block) {
                if (norm < 1e-13) {
                    break; // invariant subspace found
                }
                beta[j] = norm;
                basis.col(j + 1) = w / norm;
            }
        }

        Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(steps, steps);
        for (int j = 0; j < steps; ++j) {
            tri(j, j) = alpha[j];
            if (j + 1 < steps)
                tri(j, j + 1) = tri(j + 1, j) = beta[j];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(tri);
        theta = small.eigenvalues()[0];
        q = basis.leftCols(steps) * small.eigenvectors().col(0);
        q.normalize();

        csr.multiply(q, w, workers);
        ++matvecs;
        residual = (w - theta * q).norm();
        if (residual <= opts.iterative_tol * std::max(1.0, std::abs(theta)))
            return theta;
        if (matvecs >= matvec_cap)
            throw numeric_error("min_eigenvalue: Lanczos iteration cap reached, residual norm " +
                                format_g17(residual));
    }
}

} // namespace

double min_eigenvalue(const SparseHermitian& op, const EigOptions& opts) {
    if (op.dim() < 1)
        throw logic_error("min_eigenvalue: operator must have dim >= 1");
    EigMethod method = opts.method;
    if (method == EigMethod::automatic)
        method = op.dim() <= kDenseThreshold ? EigMethod::dense : EigMethod::iterative;
    if (method == EigMethod::dense)
        return dense_spectrum(op).front();
    return lanczos_min_eigenvalue(op, opts);
}

double min_eigenvalue(const SparseHermitian& op, EigMethod method) {
    EigOptions opts;
    opts.method = method;
    return min_eigenvalue(op, opts);
}

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_coordinate_text(const SparseHermitian& op) {
    std::string out = std::to_string(op.dim());
    out.push_back('\n');
    for (const auto& t : op.entries()) {
        out += std::to_string(t.row);
        out.push_back(' ');
        out += std::to_string(t.col);
        out.push_back(' ');
        out += format_g17(t.value);
        out.push_back('\n');
    }
    return out;
}

} // namespace hardcore
