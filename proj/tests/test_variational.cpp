#include <doctest.h>

#include <random>

#include "novlag/error.hpp"
#include "novlag/novikov.hpp"
#include "novlag/random.hpp"
#include "novlag/variational.hpp"
#include "oracles.hpp"

using namespace novlag;

namespace {

DiffPoly x(int k, int order = 0) { return DiffPoly::variable(k, order); }

DiffPoly worked_example() {
    return Rational(2) * x(1, 2) * x(1) * x(2) + Rational(2) * x(1, 1) * x(1, 1) * x(2) -
           Rational(3) * x(1) * x(1) * x(2, 2) - Rational(4) * x(1, 1) * x(1) * x(2, 1);
}

DiffPoly worked_potential() {
    return Rational(2) * x(1, 1) * x(1) * x(2) - Rational(3) * x(1) * x(1) * x(2, 1);
}

std::vector<int> ones(int n) { return std::vector<int>(static_cast<std::size_t>(n), 1); }

// Random element of span(sym_basis(lambda)).
DiffPoly random_symmetric(Rng& rng, const std::vector<int>& lambda) {
    const auto basis = sym_basis(lambda);
    std::uniform_int_distribution<int> coeff(-5, 5);
    DiffPoly s;
    for (const auto& b : basis) s += Rational(coeff(rng)) * b.value;
    return s;
}

}  // namespace

TEST_CASE("euler examples") {
    CHECK(euler(x(1) * x(1), 1) == Rational(2) * x(1));
    CHECK(euler(x(1) * x(1, 1), 1).is_zero());
    CHECK(euler(worked_example(), 1).is_zero());
    CHECK(euler(worked_example(), 2).is_zero());
    CHECK(euler(x(1, 1) * x(2), 2) == x(1, 1));
    CHECK_THROWS_AS(euler(x(1), 0), InvalidArgument);
}

TEST_CASE("euler_all") {
    const auto r = euler_all(worked_example());
    REQUIRE(r.components.size() == 2);
    CHECK(r.is_zero());

    const auto gen = euler_all(x(1));
    REQUIRE(gen.components.size() == 1);
    CHECK(gen.components[0] == DiffPoly(Rational(1)));

    CHECK(euler_all(x(1), 3).components.size() == 3);
}

TEST_CASE("antiderivative examples") {
    CHECK(antiderivative(x(1, 1) * x(2) + x(1) * x(2, 1)) == x(1) * x(2));
    CHECK(antiderivative(worked_example()) == worked_potential());
    CHECK(antiderivative(DiffPoly{}).is_zero());
    CHECK_THROWS_AS(antiderivative(x(1)), NotExact);
    CHECK_THROWS_AS(antiderivative(x(1, 1) + DiffPoly(Rational(3))), NotExact);
    CHECK_THROWS_AS(antiderivative(x(1, 1) * x(2)), NotExact);
}

TEST_CASE("is_null_lagrangian") {
    CHECK(is_null_lagrangian(worked_example()));
    CHECK_FALSE(is_null_lagrangian(x(1, 1) * x(2)));
    CHECK(is_null_lagrangian(DiffPoly(Rational(4))));
}

TEST_CASE("sym_basis examples") {
    const auto b3 = sym_basis(ones(3));
    REQUIRE(b3.size() == 3);
    CHECK(to_string(b3[0]) == "(x1*x2*x3')'");
    const DiffPoly expected = derive(x(1, 1) * x(2) * x(3)) + derive(x(1) * x(2, 1) * x(3)) +
                              derive(x(1) * x(2) * x(3, 1));
    CHECK(b3[0].value + b3[1].value + b3[2].value == expected);

    const auto b2 = sym_basis(ones(2));
    REQUIRE(b2.size() == 1);
    CHECK(b2[0].value == derive(x(1) * x(2)));

    const auto b1 = sym_basis(std::vector<int>{0, 1});
    REQUIRE(b1.size() == 1);
    CHECK(b1[0].value == x(2));
    CHECK_FALSE(b1[0].potential.has_value());

    CHECK(sym_basis(ones(4)).size() == 10);
    CHECK_THROWS_AS(sym_basis(std::vector<int>{}), InvalidArgument);
}

TEST_CASE("symmetric dimension") {
    CHECK(multilinear_sym_dim(1) == 1);
    for (int n = 2; n <= 7; ++n) {
        CHECK(multilinear_sym_dim(n) == oracle::binomial(2 * n - 3, n - 1));
        CHECK(2 * oracle::binomial(2 * n - 3, n - 1) == oracle::binomial(2 * n - 2, n - 1));
        CHECK(sym_basis(ones(n)).size() == multilinear_sym_dim(n));
    }
}

TEST_CASE("is_symmetric") {
    const auto r = is_symmetric(worked_example());
    CHECK(r.symmetric);
    REQUIRE(r.certificate);
    CHECK(r.certificate->potential == worked_potential());
    CHECK(r.certificate->generator_part.is_zero());

    CHECK_FALSE(is_symmetric(x(1, 1) * x(2)).symmetric);

    const auto g = is_symmetric(x(1));
    CHECK(g.symmetric);
    CHECK(g.certificate->generator_part == x(1));

    const auto mixed = is_symmetric(x(1) + derive(x(1) * x(2)));
    CHECK(mixed.symmetric);
    CHECK(mixed.certificate->potential == x(1) * x(2));

    CHECK_THROWS_AS(is_symmetric(x(1) * x(2)), InvalidArgument);
}

TEST_CASE("criterion_check") {
    const auto r = criterion_check(worked_example());
    CHECK(r.condition1);
    CHECK(r.condition2);
    CHECK(r.condition3);
    CHECK(r.equivalent());

    const auto n = criterion_check(x(1, 1) * x(2));
    CHECK_FALSE(n.condition1);
    CHECK_FALSE(n.condition2);
    CHECK_FALSE(n.condition3);
    CHECK(n.equivalent());

    CHECK_THROWS_AS(criterion_check(DiffPoly{}), InvalidArgument);
    CHECK_THROWS_AS(criterion_check(x(1)), InvalidArgument);
    CHECK_THROWS_AS(criterion_check(x(1) * x(2)), InvalidArgument);
    CHECK_THROWS_AS(criterion_check(x(1, 1) * x(1) + x(1, 1) * x(2)), InvalidArgument);
    CHECK_THROWS_AS(criterion_check(x(1, 1) * x(2), 3), InvalidArgument);
    CHECK_THROWS_AS(criterion_check(x(2, 1) * x(3)), InvalidArgument);
}

TEST_CASE("exactness ranks") {
    const auto r = exactness_check(std::vector<int>{2, 2}, 3);
    CHECK(r.dimension == oracle::brute_monomials({2, 2}, 3).size());
    CHECK(r.image_in_kernel);
    CHECK(r.exact());
    // The generator component: E is injective on x1, and D has nothing to map from.
    const auto g = exactness_check(std::vector<int>{1}, 0);
    CHECK(g.dimension == 1);
    CHECK(g.kernel_dim == 0);
    CHECK(g.image_dim == 0);
}

TEST_CASE("property: E o D = 0 and antiderivative round trip") {
    Rng rng(31);
    for (int t = 0; t < 100; ++t) {
        const DiffPoly g = random_diffpoly(rng);
        const DiffPoly f = derive(g);
        CHECK(euler_all(f).is_zero());
        const DiffPoly h = antiderivative(f);
        CHECK(derive(h) == f);
        CHECK(h == g);  // random_diffpoly has no constant term
    }
}

TEST_CASE("property: some-k implies all-k on perturbed homogeneous elements") {
    Rng rng(32);
    const std::vector<std::vector<int>> shapes{{1, 1}, {2, 1}, {1, 2}, {1, 1, 1}, {2, 2}, {2, 1, 1}};
    for (int t = 0; t < 120; ++t) {
        const auto& lambda = shapes[static_cast<std::size_t>(t) % shapes.size()];
        int total = 0;
        for (int v : lambda) total += v;
        DiffPoly f = derive(random_homogeneous(rng, lambda, total - 2));
        if (t % 2 == 1) f += random_homogeneous(rng, lambda, total - 1, 1, 3);
        if (f.is_zero()) continue;
        const auto r = criterion_check(f);
        CHECK(r.equivalent());
        if (euler(f, 1).is_zero()) CHECK(r.condition2);
    }
}

TEST_CASE("property: symmetric closure under circ") {
    Rng rng(33);
    const std::vector<std::vector<int>> shapes{{1}, {0, 1}, {1, 1}, {2, 1}, {1, 0, 1}};
    std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
    for (int t = 0; t < 60; ++t) {
        const DiffPoly s = random_symmetric(rng, shapes[pick(rng)]);
        const DiffPoly u = random_symmetric(rng, shapes[pick(rng)]);
        CHECK(is_symmetric(s).symmetric);
        CHECK(is_symmetric(circ_product(s, u)).symmetric);
    }
}
