#include <doctest.h>

#include "novlag/error.hpp"
#include "novlag/repr.hpp"
#include "novlag/variational.hpp"
#include "oracles.hpp"

using namespace novlag;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::uint64_t factorial(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

}  // namespace

TEST_CASE("Partition validation and parsing") {
    CHECK_THROWS_AS(P({1, 2}), InvalidArgument);
    CHECK_THROWS_AS(P({2, 0}), InvalidArgument);
    CHECK(parse_partition("2,1,1") == P({2, 1, 1}));
    CHECK(parse_partition("(3,1)") == P({3, 1}));
    CHECK(parse_partition("") == Partition{});
    CHECK_THROWS(parse_partition("2,x"));
    CHECK(to_string(P({2, 1})) == "(2,1)");
    CHECK(P({3, 2}).size() == 5);
}

TEST_CASE("partitions") {
    CHECK(partitions(3) == std::vector<Partition>{P({3}), P({2, 1}), P({1, 1, 1})});
    CHECK(partitions(0) == std::vector<Partition>{Partition{}});
    CHECK(partitions(8).size() == 22);
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) {
        const auto ps = partitions(n);
        CHECK(ps.size() == counts[static_cast<std::size_t>(n)]);
        for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1] > ps[i]);
    }
    CHECK_THROWS_AS(partitions(-1), InvalidArgument);
}

TEST_CASE("w_alpha") {
    CHECK(w_alpha(P({1})) == P({2, 1}));
    CHECK(w_alpha(P({2})) == P({3, 1}));
    CHECK(w_alpha(P({1, 1})) == P({2, 2}));
    for (int n = 2; n <= 9; ++n) CHECK(w_alpha(P({n})) == P({n + 1, 1}));
    for (int n = 1; n <= 8; ++n)
        for (const auto& a : partitions(n)) CHECK(w_alpha(a).size() == n + 2);
    CHECK_THROWS_AS(w_alpha(Partition{}), InvalidArgument);
}

TEST_CASE("kostka") {
    CHECK(kostka(P({2, 1}), P({1, 1, 1})) == 2);
    CHECK(kostka(P({1, 1, 1}), P({2, 1})) == 0);
    for (int n = 1; n <= 7; ++n)
        for (const auto& b : partitions(n)) CHECK(kostka(b, b) == 1);
    CHECK_THROWS_AS(kostka(P({2}), P({1})), InvalidArgument);
}

TEST_CASE("kostka agrees with exhaustive filling count") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& b : partitions(n))
            for (const auto& m : partitions(n)) CHECK(kostka(b, m) == oracle::brute_kostka(b.parts(), m.parts()));
}

TEST_CASE("kostka positivity is dominance") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& b : partitions(n))
            for (const auto& m : partitions(n)) CHECK((kostka(b, m) > 0) == dominates(b, m));
}

TEST_CASE("specht_dim") {
    CHECK(specht_dim(P({5})) == 1);
    CHECK(specht_dim(P({2, 1})) == 2);
    CHECK(specht_dim(P({2, 2})) == 2);
    CHECK(specht_dim(P({3, 2})) == 5);
    // Sum of squares equals n!.
    for (int n = 1; n <= 8; ++n) {
        std::uint64_t s = 0;
        for (const auto& b : partitions(n)) s += specht_dim(b) * specht_dim(b);
        CHECK(s == factorial(n));
    }
}

TEST_CASE("Young's rule dimension check") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& mu : partitions(n)) {
            std::uint64_t s = 0;
            for (const auto& b : partitions(n)) s += kostka(b, mu) * specht_dim(b);
            CHECK(s == permutation_module_dim(mu));
        }
}

TEST_CASE("is_admissible") {
    CHECK(is_admissible(P({3})));
    CHECK_FALSE(is_admissible(P({1, 1, 1})));
    CHECK_FALSE(is_admissible(P({2, 1, 1})));
    CHECK(is_admissible(P({2, 2})));
    CHECK_THROWS_AS(is_admissible(P({2})), InvalidArgument);
}

TEST_CASE("sym_decomposition examples") {
    const auto t1 = sym_decomposition(1);
    CHECK(t1.multiplicity(P({3})) == 1);
    CHECK(t1.multiplicity(P({2, 1})) == 1);
    CHECK(t1.multiplicity(P({1, 1, 1})) == 0);
    CHECK(t1.total_dim == 3);

    const auto t2 = sym_decomposition(2);
    CHECK(t2.multiplicity(P({4})) == 2);
    CHECK(t2.multiplicity(P({3, 1})) == 2);
    CHECK(t2.multiplicity(P({2, 2})) == 1);
    CHECK(t2.multiplicity(P({2, 1, 1})) == 0);
    CHECK(t2.multiplicity(P({1, 1, 1, 1})) == 0);
    CHECK(t2.total_dim == 10);
    CHECK(t2.terms.size() == 5);

    CHECK_THROWS_AS(sym_decomposition(0), InvalidArgument);
}

TEST_CASE("decomposition dimension and admissibility") {
    for (int n = 1; n <= 6; ++n) {
        const auto t = sym_decomposition(n);
        std::uint64_t s = 0;
        for (const auto& term : t.terms) {
            s += term.multiplicity * term.specht_dim;
            CHECK(term.admissible == (term.multiplicity > 0));
            CHECK(term.admissible == is_admissible(term.beta));
        }
        CHECK(s == t.total_dim);
        CHECK(s == oracle::binomial(2 * n + 1, n + 1));
        CHECK(s == multilinear_sym_dim(n + 2));
    }
}
