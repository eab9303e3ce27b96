#include "novlag/random.hpp"

#include "novlag/error.hpp"

namespace novlag {

namespace {

Rational random_coeff(Rng& rng, int range) {
    std::uniform_int_distribution<int> dist(1, range);
    std::bernoulli_distribution sign(0.5);
    const int v = dist(rng);
    return Rational(sign(rng) ? -v : v);
}

}  // namespace

DiffPoly random_diffpoly(Rng& rng, const RandomPolyOptions& opts) {
    if (opts.max_var < 1 || opts.max_degree < 1 || opts.max_order < 0 || opts.max_terms < 1 ||
        opts.coeff_range < 1)
        throw InvalidArgument("invalid random polynomial options");

    std::uniform_int_distribution<int> terms(1, opts.max_terms);
    std::uniform_int_distribution<int> degree(1, opts.max_degree);
    std::uniform_int_distribution<int> var(1, opts.max_var);
    std::uniform_int_distribution<int> order(0, opts.max_order);

    DiffPoly out;
    while (out.is_zero()) {
        const int count = terms(rng);
        for (int t = 0; t < count; ++t) {
            std::vector<DiffVar> factors;
            const int deg = degree(rng);
            for (int i = 0; i < deg; ++i) factors.push_back(DiffVar{var(rng), order(rng)});
            out.add_term(DiffMonomial(std::move(factors)), random_coeff(rng, opts.coeff_range));
        }
    }
    return out;
}

DiffPoly random_homogeneous(Rng& rng, std::span<const int> lambda, int d, int max_terms, int coeff_range) {
    const auto basis = monomials_of(lambda, d);
    if (basis.empty()) return {};
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> terms(1, std::max(1, max_terms));
    DiffPoly out;
    while (out.is_zero()) {
        const int count = terms(rng);
        for (int t = 0; t < count; ++t) out.add_term(basis[pick(rng)], random_coeff(rng, coeff_range));
    }
    return out;
}

}  // namespace novlag
