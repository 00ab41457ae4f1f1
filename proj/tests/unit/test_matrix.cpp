#include "doctest.h"
#include "specdata/field.hpp"
#include "specdata/matrix.hpp"
#include "specdata/rng.hpp"

using namespace specdata;

namespace {

DenseMatrix<Rational> rat_mat(int rows, int cols, std::initializer_list<long long> vals) {
    DenseMatrix<Rational> m(rows, cols);
    auto it = vals.begin();
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Rational(*it++);
    return m;
}

}  // namespace

TEST_CASE("rank and kernel") {
    const auto id3 = DenseMatrix<Rational>::Identity(3, 3).eval();
    const auto rk_id = rank_kernel<Rational>(id3);
    CHECK(rk_id.rank == 3);
    CHECK(rk_id.kernel_basis.cols() == 0);

    DenseMatrix<Rational> zero(2, 2);
    zero.setConstant(Rational(0));
    const auto rk_zero = rank_kernel(zero);
    CHECK(rk_zero.rank == 0);
    CHECK(rk_zero.kernel_basis.cols() == 2);

    const auto m = rat_mat(2, 2, {1, 2, 2, 4});
    const auto rk = rank_kernel(m);
    CHECK(rk.rank == 1);
    REQUIRE(rk.kernel_basis.cols() == 1);
    CHECK(rk.kernel_basis(0, 0) == Rational(-2));
    CHECK(rk.kernel_basis(1, 0) == Rational(1));
    CHECK(is_zero_matrix((m * rk.kernel_basis).eval()));
}

TEST_CASE("characteristic polynomial examples") {
    const auto diag = rat_mat(2, 2, {1, 0, 0, 2});
    CHECK(char_poly(diag) == UniPoly<Rational>(std::vector<Rational>{2, -3, 1}));

    const auto nil = rat_mat(2, 2, {0, 1, 0, 0});
    CHECK(char_poly(nil) == UniPoly<Rational>(std::vector<Rational>{0, 0, 1}));

    const auto single = rat_mat(1, 1, {5});
    CHECK(char_poly(single) == UniPoly<Rational>(std::vector<Rational>{-5, 1}));
    CHECK(char_poly(single).to_string() == "s - 5");

    CHECK_THROWS_AS(char_poly(rat_mat(1, 2, {1, 2})), BadInputError);
}

TEST_CASE("characteristic polynomial is a conjugation invariant") {
    SeededRng rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform(0, 2));
        DenseMatrix<Rational> m(n, n), p(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = Rational(rng.uniform(-4, 4));
        do {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) p(i, j) = Rational(rng.uniform(-3, 3));
        } while (rank_of(p) < n);
        const auto conj = (p * m * inverse(p).value()).eval();
        CHECK(char_poly(conj) == char_poly(m));
    }
}

TEST_CASE("characteristic polynomial over a prime field") {
    DenseMatrix<Fp> m(2, 2);
    m << Fp::make(1, 7), Fp::make(2, 7), Fp::make(0, 7), Fp::make(3, 7);
    const auto cp = char_poly(m);
    // (s-1)(s-3) = s^2 - 4s + 3
    CHECK(cp.coeff(2) == Fp::make(1, 7));
    CHECK(cp.coeff(1) == Fp::make(-4, 7));
    CHECK(cp.coeff(0) == Fp::make(3, 7));
}

TEST_CASE("exact solve and inverse") {
    const auto a = rat_mat(2, 2, {1, 2, 3, 4});
    const auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK(matrices_equal((a * (*inv)).eval(), DenseMatrix<Rational>::Identity(2, 2).eval()));
    CHECK(!inverse(rat_mat(2, 2, {1, 2, 2, 4})).has_value());

    // Inconsistent system has no solution.
    const auto sing = rat_mat(2, 2, {1, 1, 1, 1});
    const auto b = rat_mat(2, 1, {0, 1});
    CHECK(!solve_columns(sing, b).has_value());
}
