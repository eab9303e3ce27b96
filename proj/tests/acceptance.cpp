// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "novlag/error.hpp"
#include "novlag/gdtransform.hpp"
#include "novlag/linalg.hpp"
#include "novlag/novikov.hpp"
#include "novlag/parser.hpp"
#include "novlag/random.hpp"
#include "novlag/repr.hpp"
#include "novlag/variational.hpp"
#include "oracles.hpp"

using namespace novlag;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

constexpr int kTrials = 100;

std::vector<int> ones(int n) { return std::vector<int>(static_cast<std::size_t>(n), 1); }

int total(const std::vector<int>& lambda) {
    int s = 0;
    for (int v : lambda) s += v;
    return s;
}

// Compositions of every m in [1, max_total] into positive parts.
std::vector<std::vector<int>> positive_shapes(int max_total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (!cur.empty()) out.push_back(cur);
        for (int p = 1; p <= left; ++p) {
            cur.push_back(p);
            rec(left - p);
            cur.pop_back();
        }
    };
    rec(max_total);
    return out;
}

// A homogeneous Novikov element of positive multidegree: D(g), plus a
// random Novikov perturbation on odd trials.
DiffPoly random_novikov_element(Rng& rng, const std::vector<int>& lambda, bool perturb) {
    DiffPoly f = derive(random_homogeneous(rng, lambda, total(lambda) - 2));
    if (perturb) f += random_homogeneous(rng, lambda, total(lambda) - 1, 2, 5);
    return f;
}

Outcome criterion1() {
    Outcome o;
    const DiffPoly f = parse_diff("2*x1''*x1*x2 + 2*x1'^2*x2 - 3*x1^2*x2'' - 4*x1'*x1*x2'");
    o.require(euler(f, 1).is_zero(), "E^1(f) != 0");
    o.require(euler(f, 2).is_zero(), "E^2(f) != 0");
    const DiffPoly g = antiderivative(f);
    o.require(g == parse_diff("2*x1'*x1*x2 - 3*x1^2*x2'"), "antiderivative = " + to_string(g));
    o.require(to_string(g) == "2*x1'*x1*x2 - 3*x1^2*x2'", "rendered antiderivative " + to_string(g));
    const DiffPoly e = eval(parse_nov("(5/2)*((x1 o x1) o x2) - 3*((x1 o x2) o x1)"));
    o.require(e.terms() == f.terms(), "nov expression evaluates to " + to_string(e));
    return o;
}

Outcome criterion2() {
    Outcome o;
    for (int n = 1; n <= 8; ++n) {
        const auto nb = nov_basis(ones(n)).size();
        const auto sb = sym_basis(ones(n)).size();
        const auto nov_expected = oracle::binomial(2 * n - 2, n - 1);
        const auto sym_expected = n == 1 ? 1 : oracle::binomial(2 * n - 3, n - 1);
        o.require(nb == nov_expected, "n=" + std::to_string(n) + ": |nov_basis| = " + std::to_string(nb));
        o.require(sb == sym_expected, "n=" + std::to_string(n) + ": |sym_basis| = " + std::to_string(sb));
        if (n >= 2) o.require(2 * sym_expected == nov_expected, "half-dimension relation at n=" + std::to_string(n));
        o.require(multilinear_nov_dim(n) == nov_expected, "multilinear_nov_dim");
        o.require(multilinear_sym_dim(n) == sym_expected, "multilinear_sym_dim");
    }
    return o;
}

Outcome criterion3() {
    Outcome o;
    Rng rng(2024);
    const RandomPolyOptions opts{3, 3, 2, 3, 10};
    for (const auto id : all_identities()) {
        for (int t = 0; t < kTrials; ++t) {
            std::vector<DiffPoly> args;
            for (std::size_t i = 0; i < identity_arity(id); ++i) args.push_back(random_diffpoly(rng, opts));
            const DiffPoly defect = identity_defect(id, args);
            o.require(defect.is_zero(), std::string(identity_name(id)) + " defect nonzero at trial " +
                                            std::to_string(t));
        }
    }
    return o;
}

Outcome criterion4() {
    Outcome o;
    Rng rng(4);
    for (int t = 0; t < kTrials; ++t) {
        const DiffPoly g = random_diffpoly(rng);
        o.require(euler_all(derive(g)).is_zero(), "E(D(g)) != 0 for g = " + to_string(g));
    }
    for (const std::vector<int>& lambda : {std::vector<int>{1, 1}, {2, 1}, {1, 1, 1}, {2, 2}}) {
        for (int d = 0; d <= 4; ++d) {
            const auto r = exactness_check(lambda, d);
            const std::string where = "lambda size " + std::to_string(lambda.size()) + " total " +
                                      std::to_string(total(lambda)) + ", d=" + std::to_string(d);
            o.require(r.image_in_kernel, "im D not inside ker E at " + where);
            o.require(r.kernel_dim == r.image_dim, "dim ker E != dim im D at " + where);
        }
    }
    return o;
}

Outcome criterion5() {
    Outcome o;
    Rng rng(5);
    const std::vector<std::vector<int>> shapes{{1, 1}, {2, 1}, {1, 2}, {1, 1, 1}, {2, 2}, {3, 1}, {2, 1, 1}};
    int exact_seen = 0, inexact_seen = 0, tested = 0;
    for (int t = 0; tested < kTrials || t < 2 * kTrials; ++t) {
        const auto& lambda = shapes[static_cast<std::size_t>(t) % shapes.size()];
        const DiffPoly f = random_novikov_element(rng, lambda, t % 2 == 1);
        if (f.is_zero()) continue;
        ++tested;
        const auto r = criterion_check(f);
        o.require(r.condition1 == r.condition2 && r.condition2 == r.condition3,
                  "conditions disagree for " + to_string(f));
        bool all = true;
        for (const auto& e : r.euler.components) all = all && e.is_zero();
        if (r.euler.components.front().is_zero()) o.require(all, "E^1 = 0 but some E^k != 0 for " + to_string(f));
        (all ? exact_seen : inexact_seen)++;
    }
    o.require(exact_seen > 0 && inexact_seen > 0, "random sample did not cover both outcomes");
    return o;
}

Outcome criterion6() {
    Outcome o;
    Rng rng(6);
    const auto shapes = positive_shapes(4);
    for (int t = 0; t < kTrials; ++t) {
        const auto& lambda = shapes[static_cast<std::size_t>(t) % shapes.size()];
        const DiffPoly f = random_homogeneous(rng, lambda, t % 5);
        for (std::size_t k = 0; k < lambda.size(); ++k)
            o.require(commute_check(f, static_cast<int>(k) + 1), "commute_check failed for " + to_string(f));
    }
    for (const auto& lambda : shapes) {
        for (int d = 0; d <= 4; ++d) {
            const auto basis = monomials_of(lambda, d);
            linalg::EchelonBasis<TensorMonomial> echelon;
            for (const auto& m : basis) {
                const TensorPoly phi = gd_transform(DiffPoly(m));
                echelon.insert({phi.terms().begin(), phi.terms().end()});
            }
            o.require(echelon.rank() == basis.size(), "dependent transforms at d=" + std::to_string(d));
        }
    }
    return o;
}

Outcome criterion7() {
    Outcome o;
    for (int n = 1; n <= 6; ++n) {
        const auto table = sym_decomposition(n);
        std::uint64_t dim = 0;
        for (const auto& term : table.terms) {
            dim += term.multiplicity * specht_dim(term.beta);
            o.require(is_admissible(term.beta) == (term.multiplicity > 0),
                      "admissibility mismatch at " + to_string(term.beta));
        }
        const auto expected = oracle::binomial(2 * n + 1, n + 1);
        o.require(dim == expected, "n=" + std::to_string(n) + ": dimension " + std::to_string(dim));
        o.require(dim == sym_basis(ones(n + 2)).size(), "n=" + std::to_string(n) + ": sym_basis count differs");
    }
    return o;
}

Outcome criterion8() {
    Outcome o;
    for (int n = 0; n <= 6; ++n)
        for (const auto& b : partitions(n))
            for (const auto& m : partitions(n))
                o.require(kostka(b, m) == oracle::brute_kostka(b.parts(), m.parts()),
                          "K(" + to_string(b) + ", " + to_string(m) + ")");

    Rng rng(8);
    int solved = 0;
    for (int t = 0; t < 2 * kTrials; ++t) {
        DiffPoly f = derive(random_diffpoly(rng));
        if (t % 3 == 0) f += random_diffpoly(rng, {3, 3, 2, 1, 10});
        try {
            const DiffPoly g = antiderivative(f);
            o.require(derive(g) == f, "derive(antiderivative(f)) != f for " + to_string(f));
            ++solved;
        } catch (const NotExact&) {
            o.require(!euler_all(f).is_zero(), "NotExact raised for a null Lagrangian " + to_string(f));
        }
    }
    o.require(solved >= kTrials, "too few successful antiderivatives");
    return o;
}

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;  // 0 = no limit
    Outcome (*run)();
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "worked example: Euler values, antiderivative, nov expression", 1.0, criterion1},
        {2, "basis dimensions for n = 1..8", 10.0, criterion2},
        {3, "identity suite on random substitutions", 0.0, criterion3},
        {4, "E o D = 0 and ker E = im D on small components", 0.0, criterion4},
        {5, "criterion conditions agree; E^1 = 0 forces all E^k = 0", 0.0, criterion5},
        {6, "transform commutes with Euler; basis transforms independent", 0.0, criterion6},
        {7, "Sym_{n+2} decomposition dimensions and admissibility, n = 1..6", 60.0, criterion7},
        {8, "Kostka oracle for |beta| <= 6; antiderivative round trip", 0.0, criterion8},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && c.limit_seconds > 0 && secs >= c.limit_seconds) {
            o.ok = false;
            o.detail = "runtime limit of " + std::to_string(c.limit_seconds) + " s exceeded";
        }
        if (!o.ok) ++failures;
        std::printf("criterion %d: %s  %s  (%.3f s)%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.title, secs,
                    o.ok ? "" : "  -- ", o.detail.c_str());
    }
    std::fflush(stdout);
    return failures == 0 ? 0 : 1;
}
