#include <doctest.h>

#include <algorithm>

#include "support/generators.hpp"
#include "tnn/lindstrom.hpp"
#include "tnn/logconcavity.hpp"

using namespace tnn;
using tnn::testing::Rng;

namespace {

Sequence seq(std::initializer_list<long long> values) {
    Sequence s;
    for (long long v : values) s.emplace_back(v);
    return s;
}

Polynomial sym(const std::string& name) { return Polynomial::symbol(name); }

} // namespace

TEST_CASE("one log-concavity step") {
    CHECK(logconcave_step(seq({1, 4, 6, 4, 1})) == seq({1, 10, 20, 10, 1}));
    CHECK(logconcave_step(seq({1, 1, 5})) == seq({1, -4, 25}));
    CHECK(logconcave_step(seq({3})) == seq({9}));
    CHECK(logconcave_step(Sequence{}) == Sequence{});
}

TEST_CASE("iterated log-concavity") {
    auto binomial = is_infinitely_logconcave_upto(seq({1, 4, 6, 4, 1}), 3);
    CHECK(binomial.holds);
    CHECK(binomial.failing_iteration == -1);
    REQUIRE(binomial.iterates.size() == 4);
    CHECK(binomial.iterates[1] == seq({1, 10, 20, 10, 1}));

    auto failing = is_infinitely_logconcave_upto(seq({1, 1, 5}), 3);
    CHECK_FALSE(failing.holds);
    CHECK(failing.failing_iteration == 1);
    CHECK(failing.failing_index == 1);

    auto negative_input = is_infinitely_logconcave_upto(seq({1, -1}), 2);
    CHECK_FALSE(negative_input.holds);
    CHECK(negative_input.failing_iteration == 0);
    CHECK(negative_input.failing_index == 1);

    CHECK(is_infinitely_logconcave_upto(seq({1, 4, 6, 4, 1}), 0).holds);
    CHECK_THROWS_AS(is_infinitely_logconcave_upto(seq({1}), -1), std::invalid_argument);
}

TEST_CASE("coefficients from roots") {
    CHECK(coeffs_from_roots({}) == seq({1}));
    CHECK(coeffs_from_roots({Rational(2)}) == seq({2, 1}));
    CHECK(coeffs_from_roots({Rational(2), Rational(3)}) == seq({6, 5, 1}));
    CHECK(coeffs_from_roots({1, 1, 1, 1}) == seq({1, 4, 6, 4, 1}));
    CHECK(coeffs_from_roots({Rational(1, 2), Rational(2)}) == Sequence{1, Rational(5, 2), 1});
    CHECK_THROWS_AS(coeffs_from_roots({Rational(0)}), std::invalid_argument);
    CHECK_THROWS_AS(coeffs_from_roots({Rational(-1)}), std::invalid_argument);
}

TEST_CASE("products of positive-rooted polynomials stay log-concave for a while") {
    Rng rng(83);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<Rational> roots;
        const int m = rng.between(1, 4);
        for (int k = 0; k < m; ++k) roots.emplace_back(rng.between(1, 5), rng.between(1, 3));
        auto report = is_infinitely_logconcave_upto(coeffs_from_roots(roots), 3);
        CHECK_MESSAGE(report.holds, "roots of a real-rooted polynomial");
    }
}

TEST_CASE("toeplitz layout") {
    PolyMatrix W = toeplitz_matrix(seq({1, 2}), 3);
    CHECK(W == PolyMatrix{{Polynomial(1), Polynomial(2), Polynomial(0)},
                          {Polynomial(0), Polynomial(1), Polynomial(2)},
                          {Polynomial(0), Polynomial(0), Polynomial(1)}});
    CHECK_THROWS_AS(toeplitz_matrix(seq({1}), 0), DimensionError);
}

TEST_CASE("sequence network weight matrix is the elementary-symmetric band") {
    // Symbolic, two columns, order three: superdiagonal e1, next band e2.
    PlanarNetwork net = sequence_network_symbolic(2, 3);
    CHECK(net.validate().ok());
    PolyMatrix W = net.weight_matrix();
    Polynomial x1 = sym("x1"), x2 = sym("x2");
    PolyMatrix expected{{Polynomial(1), x1 + x2, x1 * x2},
                        {Polynomial(0), Polynomial(1), x1 + x2},
                        {Polynomial(0), Polynomial(0), Polynomial(1)}};
    CHECK(W == expected);
    CHECK(W == net.weight_matrix_by_enumeration());

    // Numeric roots fill the band with elementary symmetric values.
    PlanarNetwork numeric = sequence_network(std::vector<Rational>{2, 3}, 3);
    CHECK(numeric.validate().ok());
    CHECK(numeric.weight_matrix() == toeplitz_matrix(seq({1, 5, 6}), 3));

    // Unit roots give binomial bands.
    PlanarNetwork ones = sequence_network(std::vector<Rational>{1, 1, 1, 1}, 5);
    CHECK(ones.weight_matrix() == toeplitz_matrix(seq({1, 4, 6, 4, 1}), 5));

    // No columns: the identity.
    PlanarNetwork trivial = sequence_network(std::vector<Rational>{}, 2);
    CHECK(trivial.weight_matrix() == toeplitz_matrix(seq({1}), 2));

    CHECK_THROWS_AS(sequence_network(std::vector<Rational>{-1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(sequence_network(std::vector<Rational>{1}, 0), DimensionError);
}

TEST_CASE("sequence networks validate across sizes") {
    for (int m = 0; m <= 4; ++m)
        for (int n = 1; n <= 5; ++n) {
            PlanarNetwork net = sequence_network_symbolic(m, n);
            CHECK_MESSAGE(net.validate().ok(), "m=" << m << " n=" << n);
            CHECK(net.weight_matrix() == net.weight_matrix_by_enumeration());
        }
}

TEST_CASE("minor identity holds on sequence networks") {
    PlanarNetwork net = sequence_network_symbolic(3, 4);
    for (const auto& I : index_sets_upto(4, 2))
        for (const auto& J : index_sets_upto(4, 2))
            if (I.size() == J.size()) CHECK(verify_lindstrom(net, I, J));
}

TEST_CASE("conjecture harness") {
    // One consecutive-minor step on a symbolic band matrix stays
    // subtraction-free.
    PlanarNetwork net = sequence_network_symbolic(2, 4);
    std::vector<std::pair<OffsetSet, OffsetSet>> one_step{{{0, 1}, {0, 1}}};
    ConjectureReport report = conjecture_check(net, one_step, 3);
    CHECK(report.ok);
    CHECK(report.sweep.ok);
    CHECK(report.failing_step == -1);

    // Two steps shrink 4 -> 3 -> 2; still fine.
    std::vector<std::pair<OffsetSet, OffsetSet>> two_steps{{{0, 1}, {0, 1}}, {{0, 1}, {0, 1}}};
    CHECK(conjecture_check(net, two_steps, 2).ok);

    // A window that does not fit is reported with the failing step index.
    std::vector<std::pair<OffsetSet, OffsetSet>> too_big{{{0, 1}, {0, 1}}, {{0, 3}, {0, 3}}};
    ConjectureReport bad = conjecture_check(net, too_big, 2);
    CHECK_FALSE(bad.ok);
    CHECK(bad.failing_step == 1);
    CHECK_FALSE(bad.error.empty());
}

TEST_CASE("minor-matrix step commutes with the log-concavity step on toeplitz matrices") {
    // The 2x2 consecutive minors of the Toeplitz matrix of a sequence form
    // the Toeplitz matrix of the stepped sequence (rows shifted into the
    // band), so checking l_operator against logconcave_step on the band is a
    // direct cross-validation of both implementations.
    Rng rng(97);
    for (int rep = 0; rep < 50; ++rep) {
        const int m = rng.between(1, 4);
        std::vector<Rational> roots;
        for (int k = 0; k < m; ++k) roots.emplace_back(rng.between(1, 6), rng.between(1, 2));
        Sequence coeffs = coeffs_from_roots(roots);
        Sequence band(coeffs.rbegin(), coeffs.rend()); // e_0 .. e_m
        const int n = m + 2 + rng.below(3);

        PolyMatrix T = l_operator(toeplitz_matrix(band, n));
        Sequence stepped = logconcave_step(band);
        PolyMatrix expected = toeplitz_matrix(stepped, n - 1);
        // The first band entry of the step loses its left neighbour only in
        // the infinite picture; on the finite matrix both agree exactly.
        CHECK(T == expected);

        // And the network realization matches the Toeplitz matrix it models.
        CHECK(sequence_network(roots, n).weight_matrix() == toeplitz_matrix(band, n));
    }
}
