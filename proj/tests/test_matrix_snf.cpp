#include <doctest.h>

#include <random>

#include "lpa/oracle.hpp"
#include "lpa/snf.hpp"
#include "testutil.hpp"

using lpa::FgAbGroup;
using lpa::IntMatrix;
using testutil::mat;

TEST_CASE("determinant via fraction-free elimination") {
    CHECK(IntMatrix::identity(4).determinant() == 1);
    CHECK(mat(2, 2, {2, 4, 6, 8}).determinant() == -8);
    CHECK(mat(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9}).determinant() == 0);
    CHECK(IntMatrix(0, 0).determinant() == 1);
    CHECK(mat(2, 2, {0, 1, 1, 0}).determinant() == -1);
}

TEST_CASE("smith normal form on pinned cases") {
    auto id = lpa::smith_normal_form(IntMatrix::identity(3));
    CHECK(id.d == IntMatrix::identity(3));
    CHECK(id.invariant_factors == std::vector<mpz_class>{1, 1, 1});

    auto two_by_two = lpa::smith_normal_form(mat(2, 2, {2, 4, 6, 8}));
    CHECK(two_by_two.invariant_factors == std::vector<mpz_class>{2, 4});

    auto empty = lpa::smith_normal_form(IntMatrix(2, 0));
    CHECK(empty.invariant_factors.empty());
    CHECK(empty.d.rows() == 2);
    CHECK(empty.d.cols() == 0);
    CHECK(empty.u == IntMatrix::identity(2));
}

TEST_CASE("smith normal form is deterministic") {
    IntMatrix a = mat(3, 3, {4, -2, 7, 0, 5, -3, 8, 1, 1});
    auto first = lpa::smith_normal_form(a);
    auto second = lpa::smith_normal_form(a);
    CHECK(first.u == second.u);
    CHECK(first.d == second.d);
    CHECK(first.v == second.v);
}

TEST_CASE("smith normal form invariants on random matrices") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 200; ++iter) {
        IntMatrix a = testutil::random_matrix(rng, 6, 20);
        auto snf = lpa::smith_normal_form(a);

        CHECK(snf.u * a * snf.v == snf.d);
        CHECK(abs(snf.u.determinant()) == 1);
        CHECK(abs(snf.v.determinant()) == 1);

        const auto& f = snf.invariant_factors;
        for (std::size_t i = 0; i + 1 < f.size(); ++i) {
            CHECK(f[i] > 0);
            CHECK(f[i + 1] % f[i] == 0);
        }
        // diagonal zeros only after the nonzero prefix
        for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) {
            if (i < f.size()) {
                CHECK(snf.d.at(i, i) == f[i]);
            } else {
                CHECK(snf.d.at(i, i) == 0);
            }
        }
        if (a.rows() <= 5 && a.cols() <= 5) {
            CHECK(lpa::oracle::minors_gcd_invariant_factors(a) == f);
        }
        // the product of the first k factors is the gcd of all k x k
        // minors; check k = 1, 2 directly on every size
        if (!f.empty()) {
            mpz_class g1 = 0;
            for (std::size_t i = 0; i < a.rows(); ++i)
                for (std::size_t j = 0; j < a.cols(); ++j)
                    mpz_gcd(g1.get_mpz_t(), g1.get_mpz_t(), a.at(i, j).get_mpz_t());
            CHECK(f[0] == g1);
        }
        if (f.size() >= 2) {
            mpz_class g2 = 0;
            for (std::size_t r1 = 0; r1 < a.rows(); ++r1)
                for (std::size_t r2 = r1 + 1; r2 < a.rows(); ++r2)
                    for (std::size_t c1 = 0; c1 < a.cols(); ++c1)
                        for (std::size_t c2 = c1 + 1; c2 < a.cols(); ++c2) {
                            mpz_class det = a.at(r1, c1) * a.at(r2, c2) -
                                            a.at(r1, c2) * a.at(r2, c1);
                            mpz_gcd(g2.get_mpz_t(), g2.get_mpz_t(), det.get_mpz_t());
                        }
            CHECK(f[0] * f[1] == g2);
        }
    }
}

TEST_CASE("decomposition data from presentation-shaped matrices") {
    // one vertex with n >= 3 loops: matrix (n - 1)
    auto dd = lpa::decomposition_data(mat(1, 1, {4}), 0);
    CHECK(dd.ones == 0);
    CHECK(dd.factors == std::vector<mpz_class>{4});
    CHECK(dd.m == 0);

    dd = lpa::decomposition_data(mat(1, 1, {0}), 0);
    CHECK(dd.factors.empty());
    CHECK(dd.m == 1);

    dd = lpa::decomposition_data(mat(2, 1, {1, 1}), 1);
    CHECK(dd.ones == 1);
    CHECK(dd.factors.empty());
    CHECK(dd.m == 0);
    CHECK(dd.s == 1);
}

TEST_CASE("integral cokernel and kernel") {
    CHECK(lpa::cokernel_over_z(mat(1, 1, {4})) == FgAbGroup::cyclic(4));
    CHECK(lpa::cokernel_over_z(IntMatrix(2, 0)) == FgAbGroup::free(2));
    CHECK(lpa::cokernel_over_z(mat(2, 1, {1, 1})) == FgAbGroup::free(1));

    CHECK(lpa::kernel_over_z(mat(2, 1, {1, 1})) == FgAbGroup::trivial());
    CHECK(lpa::kernel_over_z(mat(1, 1, {0})) == FgAbGroup::free(1));
    CHECK(lpa::kernel_over_z(mat(2, 2, {2, 4, 1, 2})) == FgAbGroup::free(1));
}

TEST_CASE("mod-m cokernel and kernel on pinned cases") {
    CHECK(lpa::cokernel_mod(mat(1, 1, {2}), 4) == FgAbGroup::cyclic(2));
    CHECK(lpa::cokernel_mod(mat(1, 1, {1}), 9) == FgAbGroup::trivial());
    CHECK(lpa::cokernel_mod(mat(2, 1, {1, 1}), 6) == FgAbGroup::cyclic(6));

    CHECK(lpa::kernel_mod(mat(1, 1, {2}), 4) == FgAbGroup::cyclic(2));
    CHECK(lpa::kernel_mod(mat(2, 1, {1, 1}), 10) == FgAbGroup::trivial());
    CHECK(lpa::kernel_mod(mat(1, 1, {0}), 5) == FgAbGroup::cyclic(5));

    CHECK_THROWS_AS(lpa::cokernel_mod(mat(1, 1, {2}), 1), std::invalid_argument);
    CHECK_THROWS_AS(lpa::kernel_mod(mat(1, 1, {2}), 0), std::invalid_argument);
}

TEST_CASE("mod-m computations agree with enumeration") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long> modulus(2, 8);
    for (int iter = 0; iter < 150; ++iter) {
        IntMatrix a = testutil::random_matrix(rng, 3, 9);
        long m = modulus(rng);
        lpa::oracle::FiniteModuleMap fm{a, m};
        CHECK(lpa::kernel_mod(a, m) == lpa::oracle::brute_kernel_mod(fm));
        CHECK(lpa::cokernel_mod(a, m) == lpa::oracle::brute_cokernel_mod(fm));
    }
}

TEST_CASE("square maps balance kernel and cokernel cardinality") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> modulus(2, 12);
    for (int iter = 0; iter < 100; ++iter) {
        IntMatrix a = testutil::random_matrix(rng, 5, 15);
        if (a.rows() != a.cols()) continue;
        long m = modulus(rng);
        CHECK(lpa::kernel_mod(a, m).torsion_order() == lpa::cokernel_mod(a, m).torsion_order());
    }
}

TEST_CASE("rank bookkeeping of kernel and cokernel") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 100; ++iter) {
        IntMatrix a = testutil::random_matrix(rng, 6, 12);
        std::size_t rank = lpa::smith_normal_form(a).invariant_factors.size();
        CHECK(lpa::cokernel_over_z(a).free_rank() + rank == a.rows());
        CHECK(lpa::kernel_over_z(a).free_rank() + rank == a.cols());
    }
}
