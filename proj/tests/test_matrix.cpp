#include <doctest.h>

#include "support/generators.hpp"
#include "tnn/matrix.hpp"

using namespace tnn;
using tnn::testing::Rng;
using tnn::testing::random_polynomial;

namespace {

Polynomial sym(const char* name) { return Polynomial::symbol(name); }

// Weight matrix of the order-3 running example.
PolyMatrix example_matrix() {
    Polynomial a = sym("a"), b = sym("b"), c = sym("c"), d = sym("d");
    Polynomial e = sym("e"), f = sym("f"), g = sym("g"), h = sym("h");
    return PolyMatrix{{a * d, a * e * f, a * e * g},
                      {b * d, b * e * f, b * e * g},
                      {Polynomial(), c * f, c * g + h}};
}

PolyMatrix random_matrix(Rng& rng, int rows, int cols) {
    PolyMatrix M(rows, cols);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) M.at(i, j) = random_polynomial(rng, 2);
    return M;
}

} // namespace

TEST_CASE("submatrix selection and bounds") {
    PolyMatrix W = example_matrix();
    PolyMatrix S = submatrix(W, {2, 3}, {2, 3});
    CHECK(S.at(1, 1) == sym("b") * sym("e") * sym("f"));
    CHECK(S.at(2, 2) == sym("c") * sym("g") + sym("h"));

    CHECK_THROWS_AS(submatrix(W, {1, 1}, {1, 2}), DimensionError);
    CHECK_THROWS_AS(submatrix(W, {3, 1}, {1, 2}), DimensionError);
    CHECK_THROWS_AS(submatrix(W, {1, 4}, {1, 2}), DimensionError);
    CHECK_THROWS_AS(submatrix(W, {1, 2}, {1}), DimensionError);
    CHECK_THROWS_AS(submatrix(W, {}, {}), DimensionError);
}

TEST_CASE("minors of the order-3 example") {
    PolyMatrix W = example_matrix();
    // 2x2 windows: only the bottom-right one survives cancellation.
    CHECK(minor(W, {1, 2}, {1, 2}).is_zero());
    CHECK(minor(W, {1, 2}, {2, 3}).is_zero());
    CHECK(minor(W, {2, 3}, {1, 2}) == sym("b") * sym("c") * sym("d") * sym("f"));
    CHECK(minor(W, {2, 3}, {2, 3}) == sym("b") * sym("e") * sym("f") * sym("h"));
    CHECK(minor(W, {1, 3}, {1, 3}) ==
          sym("a") * sym("c") * sym("d") * sym("g") + sym("a") * sym("d") * sym("h"));
    // Rows 1 and 2 are proportional, so the full determinant vanishes.
    CHECK(determinant(W).is_zero());
}

TEST_CASE("determinant agrees with the permutation expansion") {
    Rng rng(7);
    for (int k = 1; k <= 5; ++k)
        for (int rep = 0; rep < (k <= 3 ? 30 : 8); ++rep) {
            PolyMatrix M = random_matrix(rng, k, k);
            CHECK(determinant(M) == determinant_by_permutations(M));
        }
    CHECK_THROWS_AS(determinant(PolyMatrix(2, 3)), DimensionError);
}

TEST_CASE("determinant multilinearity in a row") {
    Rng rng(17);
    for (int rep = 0; rep < 20; ++rep) {
        PolyMatrix M = random_matrix(rng, 3, 3);
        PolyMatrix M2 = M;
        Polynomial extra = random_polynomial(rng, 2);
        M2.at(2, 1) = M.at(2, 1) + extra;
        PolyMatrix E = M;
        E.at(2, 1) = extra;
        E.at(2, 2) = Polynomial();
        E.at(2, 3) = Polynomial();
        CHECK(determinant(M2) == determinant(M) + determinant(E));
    }
}

TEST_CASE("minor matrix of the example") {
    PolyMatrix W = example_matrix();

    PolyMatrix T = l_operator(W);
    CHECK(T.rows() == 2);
    CHECK(T.cols() == 2);
    CHECK(T == minor_matrix(W, {0, 1}, {0, 1}));
    CHECK(T.at(1, 1).is_zero());
    CHECK(T.at(1, 2).is_zero());
    CHECK(T.at(2, 1) == sym("b") * sym("c") * sym("d") * sym("f"));
    CHECK(T.at(2, 2) == sym("b") * sym("e") * sym("f") * sym("h"));

    PolyMatrix corners = minor_matrix(W, {0, 2}, {0, 2});
    CHECK(corners.rows() == 1);
    CHECK(corners.at(1, 1) == minor(W, {1, 3}, {1, 3}));

    // Singleton offsets reproduce a shifted copy of the matrix.
    PolyMatrix shifted = minor_matrix(W, {1}, {0});
    CHECK(shifted.rows() == 2);
    CHECK(shifted.cols() == 3);
    CHECK(shifted.at(1, 2) == W.at(2, 2));

    CHECK_THROWS_AS(minor_matrix(W, {0, 3}, {0, 3}), DimensionError);
    CHECK_THROWS_AS(minor_matrix(W, {0, 1}, {0}), DimensionError);
    CHECK_THROWS_AS(minor_matrix(W, {1, 0}, {0, 1}), DimensionError);
    CHECK_THROWS_AS(minor_matrix(W, {-1, 0}, {0, 1}), DimensionError);
}

TEST_CASE("index set enumeration order") {
    auto sets = index_sets_upto(3, 2);
    std::vector<IndexSet> expected{{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(sets == expected);
    CHECK(index_sets_upto(4, 99).size() == 15); // 2^4 - 1 nonempty subsets
}

TEST_CASE("subtraction-free sweep finds the first failing minor") {
    PolyMatrix W = example_matrix();
    MinorSweepReport clean = all_minors_subtraction_free(W, 3);
    CHECK(clean.ok);

    // Swapping two rows flips the signs of every 2x2 minor through them.
    PolyMatrix bad = W;
    std::swap(bad.at(2, 1), bad.at(3, 1));
    std::swap(bad.at(2, 2), bad.at(3, 2));
    std::swap(bad.at(2, 3), bad.at(3, 3));
    // First negative window in (|I|, I, J) order: rows {2,3} x cols {1,2},
    // whose minor is now -b*c*d*f.
    MinorSweepReport rep = all_minors_subtraction_free(bad, 3);
    CHECK_FALSE(rep.ok);
    CHECK(rep.failing_rows == IndexSet{2, 3});
    CHECK(rep.failing_cols == IndexSet{1, 2});
}

TEST_CASE("parallel and serial sweeps agree") {
    Rng rng(29);
    for (int rep = 0; rep < 15; ++rep) {
        PolyMatrix M = random_matrix(rng, 4, 4);
        MinorSweepReport a = all_minors_subtraction_free(M, 4);
        MinorSweepReport b = all_minors_subtraction_free_serial(M, 4);
        CHECK(a.ok == b.ok);
        CHECK(a.failing_rows == b.failing_rows);
        CHECK(a.failing_cols == b.failing_cols);
    }
}

TEST_CASE("numeric total nonnegativity") {
    PolyMatrix tnn{{Polynomial(1), Polynomial(1), Polynomial(0)},
                   {Polynomial(1), Polynomial(2), Polynomial(1)},
                   {Polynomial(0), Polynomial(1), Polynomial(2)}};
    CHECK(is_totally_nonnegative(tnn, 3).ok);

    PolyMatrix not_tnn{{Polynomial(0), Polynomial(1)}, {Polynomial(1), Polynomial(0)}};
    MinorSweepReport rep = is_totally_nonnegative(not_tnn, 2);
    CHECK_FALSE(rep.ok);
    CHECK(rep.failing_rows == IndexSet{1, 2});
    CHECK(rep.failing_cols == IndexSet{1, 2});

    PolyMatrix symbolic{{sym("a")}};
    CHECK_THROWS_AS(is_totally_nonnegative(symbolic, 1), DimensionError);
}

TEST_CASE("matrix rendering") {
    PolyMatrix W = example_matrix();
    CHECK(W.str() == "a*d | a*e*f | a*e*g\nb*d | b*e*f | b*e*g\n0 | c*f | c*g + h\n");
}
