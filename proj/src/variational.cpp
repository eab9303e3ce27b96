#include "novlag/variational.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "novlag/error.hpp"
#include "novlag/linalg.hpp"
#include "novlag/novikov.hpp"

namespace novlag {

namespace {

linalg::SparseVec<DiffMonomial> to_vec(const DiffPoly& p) {
    return {p.terms().begin(), p.terms().end()};
}

std::string describe(const ComponentKey& key) {
    std::string s = "(";
    for (std::size_t i = 0; i < key.lambda.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(key.lambda[i]);
    }
    return s + "), d = " + std::to_string(key.d);
}

DiffPoly antiderivative_component(const ComponentKey& key, const DiffPoly& part) {
    if (key.lambda.empty()) throw NotExact("nonzero constant term is not a total derivative");
    if (key.d == 0) throw NotExact("component " + describe(key) + " has no preimage under D");

    const auto basis = monomials_of(key.lambda, key.d - 1);
    linalg::EchelonBasis<DiffMonomial> echelon;
    for (const auto& m : basis) echelon.insert(to_vec(derive(DiffPoly(m))));
    auto solution = echelon.solve(to_vec(part));
    if (!solution) throw NotExact("component " + describe(key) + " is not in the image of D");

    DiffPoly g;
    for (const auto& [index, c] : *solution) g.add_term(basis[index], c);
    return g;
}

}  // namespace

DiffPoly euler(const DiffPoly& f, int k) {
    if (k < 1) throw InvalidArgument("variable index must be >= 1");
    DiffPoly out;
    const int top = f.max_order(k);
    for (int i = 0; i <= top; ++i) {
        DiffPoly term = derive(partial(f, k, i), i);
        if (i % 2 == 0)
            out += term;
        else
            out -= term;
    }
    return out;
}

bool EulerResult::is_zero() const {
    return std::all_of(components.begin(), components.end(),
                       [](const DiffPoly& p) { return p.is_zero(); });
}

EulerResult euler_all(const DiffPoly& f, int n_vars) {
    const int n = std::max(n_vars, f.max_var());
    EulerResult r;
    r.components.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) r.components.push_back(euler(f, k));
    return r;
}

bool is_null_lagrangian(const DiffPoly& f) {
    const int n = f.max_var();
    for (int k = 1; k <= n; ++k)
        if (!euler(f, k).is_zero()) return false;
    return true;
}

DiffPoly antiderivative(const DiffPoly& f) {
    DiffPoly g;
    for (const auto& [key, part] : split_components(f)) g += antiderivative_component(key, part);
    return g;
}

std::string to_string(const SymBasisElem& e) {
    if (!e.potential) return to_string(e.value);
    return "(" + to_string(*e.potential) + ")'";
}

std::vector<SymBasisElem> sym_basis(std::span<const int> lambda) {
    int total = 0;
    for (int v : lambda) {
        if (v < 0) throw InvalidArgument("multidegree entries must be nonnegative");
        total += v;
    }
    if (total < 1) throw InvalidArgument("multidegree must have a positive entry");

    std::vector<SymBasisElem> out;
    if (total == 1) {
        const auto it = std::find(lambda.begin(), lambda.end(), 1);
        const int k = static_cast<int>(it - lambda.begin()) + 1;
        out.push_back(SymBasisElem{DiffPoly::variable(k), std::nullopt});
        return out;
    }
    for (auto& u : monomials_of(lambda, total - 2)) {
        DiffPoly value = derive(DiffPoly(u));
        out.push_back(SymBasisElem{std::move(value), std::move(u)});
    }
    return out;
}

std::uint64_t multilinear_sym_dim(int n) {
    if (n < 1) throw InvalidArgument("degree must be >= 1");
    if (n == 1) return 1;
    return multilinear_nov_dim(n) / 2;
}

SymmetryResult is_symmetric(const DiffPoly& f) {
    if (!is_novikov_element(f)) throw InvalidArgument("is_symmetric requires a Novikov element");

    DiffPoly generators;
    DiffPoly rest;
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() == 1)
            generators.add_term(m, c);
        else
            rest.add_term(m, c);
    }

    DiffPoly g;
    try {
        g = antiderivative(rest);
    } catch (const NotExact&) {
        return {};
    }
    const bool supported = std::all_of(g.terms().begin(), g.terms().end(), [](const auto& t) {
        return t.first.degree() - t.first.diff_degree() == 2;
    });
    if (!supported) return {};
    return SymmetryResult{true, SymmetryCertificate{std::move(generators), std::move(g)}};
}

CriterionReport criterion_check(const DiffPoly& f, int n_vars) {
    if (f.is_zero()) throw InvalidArgument("criterion requires a nonzero element");
    if (!is_novikov_element(f)) throw InvalidArgument("criterion requires a Novikov element");
    const auto md = multidegree(f);
    if (md.kind != Homogeneity::homogeneous) throw InvalidArgument("criterion requires a homogeneous element");
    const int n = std::max(n_vars, f.max_var());
    Multidegree lambda = md.degrees;
    lambda.resize(static_cast<std::size_t>(n), 0);
    if (std::any_of(lambda.begin(), lambda.end(), [](int v) { return v <= 0; }))
        throw InvalidArgument("criterion requires every variable x1..x" + std::to_string(n) +
                              " to occur");
    const int deg = std::accumulate(lambda.begin(), lambda.end(), 0);
    if (deg <= 1) throw InvalidArgument("criterion requires deg(f) > 1");

    CriterionReport r;
    r.euler = euler_all(f, n);
    const auto& comps = r.euler.components;
    r.condition2 = std::all_of(comps.begin(), comps.end(), [](const DiffPoly& p) { return p.is_zero(); });
    r.condition3 = std::any_of(comps.begin(), comps.end(), [](const DiffPoly& p) { return p.is_zero(); });
    r.some_implies_all = !r.condition3 || r.condition2;
    r.condition1 = is_symmetric(f).symmetric;
    return r;
}

ExactnessReport exactness_check(std::span<const int> lambda, int d) {
    if (d < 0) throw InvalidArgument("differential degree must be >= 0");
    const int total = std::accumulate(lambda.begin(), lambda.end(), 0);
    if (total < 1) throw InvalidArgument("multidegree must have a positive entry");
    const int n = static_cast<int>(lambda.size());

    using Key = std::pair<int, DiffMonomial>;
    const auto euler_vec = [n](const DiffPoly& p) {
        linalg::SparseVec<Key> v;
        for (int k = 1; k <= n; ++k) {
            const DiffPoly e = euler(p, k);
            for (const auto& [m, c] : e.terms()) v.emplace(Key{k, m}, c);
        }
        return v;
    };

    ExactnessReport r;
    const auto top = monomials_of(lambda, d);
    r.dimension = top.size();
    linalg::EchelonBasis<Key> e_rows;
    for (const auto& m : top) e_rows.insert(euler_vec(DiffPoly(m)));
    r.euler_rank = e_rows.rank();
    r.kernel_dim = r.dimension - r.euler_rank;

    r.image_in_kernel = true;
    linalg::EchelonBasis<DiffMonomial> d_rows;
    for (const auto& m : monomials_of(lambda, d - 1)) {
        DiffPoly image = derive(DiffPoly(m));
        if (!euler_vec(image).empty()) r.image_in_kernel = false;
        d_rows.insert(to_vec(image));
    }
    r.image_dim = d_rows.rank();
    return r;
}

}  // namespace novlag
