#include <doctest.h>

#include <algorithm>
#include <random>

#include "hardcore/json_io.hpp"
#include "hardcore/pauli.hpp"

using namespace hardcore;

TEST_CASE("pauli_decompose basics") {
    SUBCASE("identity") {
        const PauliSum p = pauli_decompose(Eigen::MatrixXd(Eigen::MatrixXd::Identity(4, 4)));
        REQUIRE(p.terms().size() == 1);
        CHECK(p.terms()[0].word == "II");
        CHECK(p.terms()[0].coeff == doctest::Approx(1.0));
    }
    SUBCASE("XX + ZZ has spectrum {-2, 0, 0, 2}") {
        const PauliSum p = PauliSum::from_terms(2, {{1.0, "XX"}, {1.0, "ZZ"}});
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(p.to_matrix());
        CHECK(es.eigenvalues()[0] == doctest::Approx(-2.0));
        CHECK(es.eigenvalues()[1] == doctest::Approx(0.0));
        CHECK(es.eigenvalues()[2] == doctest::Approx(0.0));
        CHECK(es.eigenvalues()[3] == doctest::Approx(2.0));
    }
    SUBCASE("round trip on random Hermitian matrices") {
        std::mt19937_64 rng(13);
        std::normal_distribution<double> gauss;
        for (int trial = 0; trial < 10; ++trial) {
            Eigen::MatrixXcd m(4, 4);
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c)
                    m(r, c) = std::complex<double>(gauss(rng), gauss(rng));
            m = ((m + m.adjoint()) / 2.0).eval();
            const PauliSum p = pauli_decompose(m, 0.0);
            CHECK((p.to_matrix() - m).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
    SUBCASE("real symmetric input has no odd-Y words") {
        // Words with an odd number of Y letters are antisymmetric, so a real
        // symmetric matrix cannot contain them.
        std::mt19937_64 rng(19);
        std::normal_distribution<double> gauss;
        Eigen::MatrixXd m(8, 8);
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c)
                m(r, c) = gauss(rng);
        m = ((m + m.transpose()) / 2.0).eval();
        const PauliSum p = pauli_decompose(m, 1e-10);
        for (const auto& t : p.terms())
            CHECK(std::count(t.word.begin(), t.word.end(), 'Y') % 2 == 0);
    }
    SUBCASE("dimension must be a power of two") {
        CHECK_THROWS_AS(pauli_decompose(Eigen::MatrixXd(Eigen::MatrixXd::Identity(3, 3))), Error);
    }
    SUBCASE("non-Hermitian input is rejected") {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
        m(0, 1) = 1.0;
        CHECK_THROWS_AS(pauli_decompose(m), Error);
    }
}

TEST_CASE("PauliSum validation and queries") {
    CHECK_THROWS_AS(PauliSum::from_terms(2, {{1.0, "XYZ"}}), Error); // wrong length
    CHECK_THROWS_AS(PauliSum::from_terms(2, {{1.0, "XQ"}}), Error);  // bad letter

    const PauliSum merged = PauliSum::from_terms(2, {{0.5, "XX"}, {0.25, "XX"}});
    REQUIRE(merged.terms().size() == 1);
    CHECK(merged.coeff("XX") == doctest::Approx(0.75));
    CHECK(merged.coeff("ZZ") == 0.0);

    CHECK(PauliSum::from_terms(2, {{1.0, "XX"}, {1.0, "ZI"}}).is_xz_two_local());
    CHECK(!PauliSum::from_terms(2, {{1.0, "XY"}}).is_xz_two_local());
    CHECK(!PauliSum::from_terms(3, {{1.0, "XXX"}}).is_xz_two_local());
}

TEST_CASE("pauli JSON serialization is canonical") {
    const PauliSum p = PauliSum::from_terms(2, {{0.5, "ZZ"}, {-1.0, "II"}, {0.25, "XX"}});
    CHECK(pauli_to_json(p) ==
          "[{\"coeff\": -1, \"word\": \"II\"}, {\"coeff\": 0.25, \"word\": \"XX\"}, "
          "{\"coeff\": 0.5, \"word\": \"ZZ\"}]");
}
