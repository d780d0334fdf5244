#include <doctest.h>

#include <random>

#include "hardcore/assemble.hpp"
#include "hardcore/pauli.hpp"
#include "hardcore/homology.hpp"
#include "hardcore/sparse.hpp"
#include "oracles.hpp"

using namespace hardcore;

namespace {

std::vector<double> sorted_eigs(const SparseHermitian& op) { return dense_spectrum(op); }

} // namespace

TEST_CASE("sparse canonicalization") {
    auto m = SparseHermitian::from_triplets(3, {{2, 0, 1.5}, {0, 2, 0.5}, {1, 1, -1.0},
                                                {0, 0, 2.0}, {0, 0, -2.0}});
    // lower-triangle entry mirrored and merged, exact zero dropped
    REQUIRE(m.entries().size() == 2);
    CHECK(m.entries()[0].row == 0);
    CHECK(m.entries()[0].col == 2);
    CHECK(m.entries()[0].value == doctest::Approx(2.0));
    CHECK(m.entries()[1].value == doctest::Approx(-1.0));

    const Eigen::MatrixXd d = m.to_dense();
    CHECK((d - d.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(SparseHermitian::from_triplets(2, {{0, 5, 1.0}}), Error);
}

TEST_CASE("coordinate text export") {
    const auto m = SparseHermitian::from_triplets(2, {{0, 1, -0.5}, {1, 1, 2.0}});
    CHECK(to_coordinate_text(m) == "2\n0 1 -0.5\n1 1 2\n");
}

TEST_CASE("assemble_hopping") {
    SUBCASE("triangle plus identity reproduces the encoding spectrum") {
        const ConstraintGraph g = build_triangle_graph().with_uniform_hopping(1.0);
        const FockBasis b = enumerate_basis(g, 1);
        const SparseHermitian h =
            sparse_sum(assemble_hopping(g, b), 1.0, SparseHermitian::identity(3), 1.0);
        const auto eigs = sorted_eigs(h);
        CHECK(eigs[0] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(eigs[1] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(eigs[2] == doctest::Approx(3.0).epsilon(1e-12));
    }
    SUBCASE("single edge") {
        const ConstraintGraph g(2, {{0, 1}}, {}, {1.0});
        const auto eigs = sorted_eigs(assemble_hopping(g, enumerate_basis(g, 1)));
        CHECK(eigs[0] == doctest::Approx(-1.0));
        CHECK(eigs[1] == doctest::Approx(1.0));
    }
    SUBCASE("zero weights give the zero matrix") {
        const ConstraintGraph g = build_triangle_graph();
        CHECK(assemble_hopping(g, enumerate_basis(g, 1)).entries().empty());
    }
    SUBCASE("basis from another graph is rejected") {
        const ConstraintGraph g = build_triangle_graph();
        const ConstraintGraph other(3, {{0, 1}});
        CHECK_THROWS_AS(assemble_hopping(g, enumerate_basis(other, 1)), Error);
    }
    SUBCASE("hopping never mixes particle sectors") {
        // Union of the 0-, 1- and 2-particle bases of a path graph: blocks
        // between different popcounts must stay empty.
        const ConstraintGraph g(3, {{0, 1}, {1, 2}}, {}, {1.0, 1.0});
        std::vector<std::uint64_t> all;
        for (int k = 0; k <= 3; ++k) {
            const FockBasis basis = enumerate_basis(g, k);
            all.insert(all.end(), basis.states().begin(), basis.states().end());
        }
        std::sort(all.begin(), all.end());
        const SparseHermitian h = assemble_hopping_on_states(g, all);
        for (const auto& t : h.entries())
            CHECK(std::popcount(all[static_cast<std::size_t>(t.row)]) ==
                  std::popcount(all[static_cast<std::size_t>(t.col)]));
    }
}

TEST_CASE("assemble_projector_term") {
    const ConstraintGraph triangle = build_triangle_graph();
    SUBCASE("P_0 on the triangle one-particle sector") {
        const FockBasis b = enumerate_basis(triangle, 1);
        const Eigen::MatrixXd p = assemble_projector_term(triangle, 0, b).to_dense();
        CHECK(p(0, 0) == 1.0); // {mode0}: neighbors 1,2 empty
        CHECK(p(1, 1) == 0.0);
        CHECK(p(2, 2) == 0.0);
    }
    SUBCASE("every projector is 1 on the vacuum") {
        const FockBasis vac = enumerate_basis(triangle, 0);
        for (Mode i = 0; i < 3; ++i)
            CHECK(assemble_projector_term(triangle, i, vac).to_dense()(0, 0) == 1.0);
    }
    SUBCASE("gadget projector includes the mediator factor") {
        const GadgetLayout layout = two_qubit_layout();
        const ConstraintGraph g = build_interaction_graph({0, 1}, layout);
        const FockBasis b = enumerate_basis(g, 2);
        const Mode i1 = layout.qubit(0)[0];
        const Mode z = layout.mediator(0, 1)[2];
        const Eigen::MatrixXd p = assemble_projector_term(g, i1, b).to_dense();
        // A state occupying z must be annihilated by P_{i1}.
        const auto idx = b.index_of((std::uint64_t{1} << z) | (std::uint64_t{1} << 4));
        REQUIRE(idx);
        CHECK(p(static_cast<Eigen::Index>(*idx), static_cast<Eigen::Index>(*idx)) == 0.0);
    }
    SUBCASE("mode out of range") {
        const FockBasis b = enumerate_basis(triangle, 1);
        CHECK_THROWS_AS(assemble_projector_term(triangle, 7, b), Error);
    }
}

TEST_CASE("assemble_number_weighted") {
    SUBCASE("unit weights count particles") {
        const ConstraintGraph g(4, {});
        const FockBasis b = enumerate_basis(g, 2);
        const Eigen::MatrixXd d = assemble_number_weighted(g, b).to_dense();
        for (Eigen::Index i = 0; i < d.rows(); ++i)
            CHECK(d(i, i) == doctest::Approx(2.0));
    }
    SUBCASE("diagonal equals the occupied vertex weight") {
        const ConstraintGraph g = build_triangle_graph().with_vertex_weights({1.0, 3.0, 1.0});
        const FockBasis b = enumerate_basis(g, 1);
        const Eigen::MatrixXd d = assemble_number_weighted(g, b).to_dense();
        CHECK(d(0, 0) == doctest::Approx(1.0));
        CHECK(d(1, 1) == doctest::Approx(3.0));
        CHECK(d(2, 2) == doctest::Approx(1.0));
    }
    SUBCASE("sector maxima recover the classical optimum") {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 20; ++trial) {
            const int n = 4 + static_cast<int>(rng() % 7);
            const ConstraintGraph g = oracle::random_graph(rng, n, 0.4, true);
            double best = 0.0;
            for (int k = 0; k <= n; ++k) {
                const FockBasis b = enumerate_basis(g, k);
                if (b.size() == 0)
                    continue;
                const auto eigs = sorted_eigs(assemble_number_weighted(g, b));
                best = std::max(best, eigs.back());
            }
            CHECK(best == doctest::Approx(max_weight_independent_set(g).weight).epsilon(1e-12));
        }
    }
}

TEST_CASE("min_eigenvalue") {
    SUBCASE("identity") {
        CHECK(min_eigenvalue(SparseHermitian::identity(5)) == doctest::Approx(1.0));
    }
    SUBCASE("triangle encoding Hamiltonian has ground energy zero") {
        const ConstraintGraph g = build_triangle_graph().with_uniform_hopping(1.0);
        const SparseHermitian h = sparse_sum(assemble_hopping(g, enumerate_basis(g, 1)), 1.0,
                                             SparseHermitian::identity(3), 1.0);
        CHECK(min_eigenvalue(h) == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("two-qubit XX + ZZ coupling reaches -2") {
        const Eigen::MatrixXd m =
            PauliSum::from_terms(2, {{1.0, "XX"}, {1.0, "ZZ"}}).to_matrix().real();
        CHECK(min_eigenvalue(sparse_from_dense(m)) == doctest::Approx(-2.0).epsilon(1e-12));
    }
    SUBCASE("dense and iterative paths agree") {
        std::mt19937_64 rng(29);
        std::normal_distribution<double> gauss;
        for (int trial = 0; trial < 5; ++trial) {
            const int dim = 40 + static_cast<int>(rng() % 200);
            std::vector<Triplet> t;
            for (int nnz = 0; nnz < 6 * dim; ++nnz) {
                const int r = static_cast<int>(rng() % static_cast<std::uint64_t>(dim));
                const int c = static_cast<int>(rng() % static_cast<std::uint64_t>(dim));
                t.push_back({r, c, gauss(rng)});
            }
            const auto m = SparseHermitian::from_triplets(dim, std::move(t));
            const double dense = min_eigenvalue(m, EigMethod::dense);
            const double iter = min_eigenvalue(m, EigMethod::iterative);
            CHECK(iter == doctest::Approx(dense).epsilon(1e-6));
        }
    }
    SUBCASE("iterative path handles a degenerate PSD kernel") {
        const ConstraintGraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
        const SparseHermitian lap = laplacian(c5, 2);
        CHECK(min_eigenvalue(lap, EigMethod::iterative) ==
              doctest::Approx(min_eigenvalue(lap, EigMethod::dense)).epsilon(1e-6));
    }
    SUBCASE("automatic method switches to Lanczos above the dense threshold") {
        std::vector<Triplet> t;
        for (int i = 0; i < 5000; ++i)
            t.push_back({i, i, static_cast<double>(i % 97) - 3.0});
        const auto m = SparseHermitian::from_triplets(5000, std::move(t));
        CHECK(min_eigenvalue(m) == doctest::Approx(-3.0).epsilon(1e-6));
    }
    SUBCASE("worker count does not change the result") {
        // Rows are partitioned deterministically, so the Lanczos trajectory is
        // identical for any HARDCORE_THREADS value.
        std::mt19937_64 rng(37);
        std::normal_distribution<double> gauss;
        std::vector<Triplet> t;
        for (int nnz = 0; nnz < 8000; ++nnz)
            t.push_back({static_cast<int>(rng() % 700), static_cast<int>(rng() % 700),
                         gauss(rng)});
        const auto m = SparseHermitian::from_triplets(700, std::move(t));
        setenv("HARDCORE_THREADS", "1", 1);
        const double single = min_eigenvalue(m, EigMethod::iterative);
        setenv("HARDCORE_THREADS", "4", 1);
        const double multi = min_eigenvalue(m, EigMethod::iterative);
        unsetenv("HARDCORE_THREADS");
        CHECK(single == multi);
    }
    SUBCASE("unreachable tolerance reports non-convergence with residual") {
        std::mt19937_64 rng(31);
        std::normal_distribution<double> gauss;
        std::vector<Triplet> t;
        for (int nnz = 0; nnz < 500; ++nnz)
            t.push_back({static_cast<int>(rng() % 60), static_cast<int>(rng() % 60), gauss(rng)});
        const auto m = SparseHermitian::from_triplets(60, std::move(t));
        EigOptions opts;
        opts.method = EigMethod::iterative;
        opts.iterative_tol = 1e-30;
        CHECK_THROWS_WITH_AS(min_eigenvalue(m, opts),
                             doctest::Contains("residual norm"), Error);
    }
    SUBCASE("empty operator is rejected") {
        CHECK_THROWS_AS(min_eigenvalue(SparseHermitian::from_triplets(0, {})), Error);
    }
}
