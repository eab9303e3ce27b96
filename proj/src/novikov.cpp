#include "novlag/novikov.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <tuple>

#include "novlag/error.hpp"

namespace novlag {

DiffPoly nov_product(const DiffPoly& a, const DiffPoly& b) { return derive(a) * b; }

DiffPoly circ_product(const DiffPoly& a, const DiffPoly& b) { return derive(a * b); }

DiffPoly lie_bracket(const DiffPoly& a, const DiffPoly& b) {
    return derive(a) * b - derive(b) * a;
}

// ---------------------------------------------------------------------------
// NovExpr

NovExpr NovExpr::gen(int k) {
    if (k < 1) throw InvalidArgument("generator index must be >= 1");
    NovExpr e(Kind::gen);
    e.gen_ = k;
    return e;
}

NovExpr NovExpr::nov_prod(NovExpr a, NovExpr b) {
    NovExpr e(Kind::nov_prod);
    e.children_ = {std::move(a), std::move(b)};
    return e;
}

NovExpr NovExpr::circ(NovExpr a, NovExpr b) {
    NovExpr e(Kind::circ);
    e.children_ = {std::move(a), std::move(b)};
    return e;
}

NovExpr NovExpr::lie(NovExpr a, NovExpr b) {
    NovExpr e(Kind::lie);
    e.children_ = {std::move(a), std::move(b)};
    return e;
}

NovExpr NovExpr::scale(Rational c, NovExpr sub) {
    NovExpr e(Kind::scale);
    e.scalar_ = std::move(c);
    e.children_ = {std::move(sub)};
    return e;
}

NovExpr NovExpr::sum(std::vector<NovExpr> terms) {
    if (terms.empty()) throw InvalidArgument("sum of zero expressions");
    NovExpr e(Kind::sum);
    e.children_ = std::move(terms);
    return e;
}

DiffPoly eval(const NovExpr& e) {
    switch (e.kind()) {
        case NovExpr::Kind::gen:
            return DiffPoly::variable(e.generator());
        case NovExpr::Kind::nov_prod:
            return nov_product(eval(e.left()), eval(e.right()));
        case NovExpr::Kind::circ:
            return circ_product(eval(e.left()), eval(e.right()));
        case NovExpr::Kind::lie:
            return lie_bracket(eval(e.left()), eval(e.right()));
        case NovExpr::Kind::scale:
            return e.scalar() * eval(e.left());
        case NovExpr::Kind::sum: {
            DiffPoly out;
            for (const auto& c : e.children()) out += eval(c);
            return out;
        }
    }
    return {};
}

std::string to_string(const NovExpr& e) {
    switch (e.kind()) {
        case NovExpr::Kind::gen:
            return "x" + std::to_string(e.generator());
        case NovExpr::Kind::nov_prod:
            return "(" + to_string(e.left()) + " * " + to_string(e.right()) + ")";
        case NovExpr::Kind::circ:
            return "(" + to_string(e.left()) + " o " + to_string(e.right()) + ")";
        case NovExpr::Kind::lie:
            return "[" + to_string(e.left()) + ", " + to_string(e.right()) + "]";
        case NovExpr::Kind::scale:
            return "(" + e.scalar().get_str() + ")*" + to_string(e.left());
        case NovExpr::Kind::sum: {
            std::string out;
            for (const auto& c : e.children()) {
                if (!out.empty()) out += " + ";
                out += to_string(c);
            }
            return out;
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Basis and dimension

std::vector<DiffMonomial> nov_basis(std::span<const int> lambda) {
    int total = 0;
    for (int v : lambda) {
        if (v < 0) throw InvalidArgument("multidegree entries must be nonnegative");
        total += v;
    }
    if (total < 1) throw InvalidArgument("multidegree must have a positive entry");
    return monomials_of(lambda, total - 1);
}

std::uint64_t multilinear_nov_dim(int n) {
    if (n < 1) throw InvalidArgument("degree must be >= 1");
    if (n > 33) throw InvalidArgument("degree too large for 64-bit dimension");
    // C(2n-2, n-1); every partial product is itself a binomial coefficient.
    std::uint64_t r = 1;
    const std::uint64_t k = static_cast<std::uint64_t>(n - 1);
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (k + i) / i;
    return r;
}

bool is_novikov_element(const DiffPoly& p) {
    return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) {
        return t.first.degree() - t.first.diff_degree() == 1;
    });
}

// ---------------------------------------------------------------------------
// Identities

namespace {

constexpr std::array kIdentities{
    Identity::right_symmetry, Identity::left_commutativity, Identity::triple_product,
    Identity::tortken,        Identity::circ_degree5,       Identity::lie_degree5,
};

DiffPoly circ_assoc(const DiffPoly& a, const DiffPoly& b, const DiffPoly& c) {
    return circ_product(a, circ_product(b, c)) - circ_product(circ_product(a, b), c);
}

DiffPoly circ5(const DiffPoly& a, const DiffPoly& b) {
    // Left-normed o-products of a word in {a, b}.
    const auto word = [&](std::initializer_list<int> letters) {
        auto it = letters.begin();
        DiffPoly acc = *it == 0 ? a : b;
        for (++it; it != letters.end(); ++it) acc = circ_product(acc, *it == 0 ? a : b);
        return acc;
    };
    DiffPoly out = word({0, 0, 0, 1, 1});
    out += word({0, 1, 1, 0, 0});
    out += Rational(2) * word({0, 0, 1, 1, 0});
    out += Rational(2) * word({0, 1, 0, 0, 1});
    out -= Rational(3) * word({0, 0, 1, 0, 1});
    out -= Rational(3) * word({0, 1, 0, 1, 0});
    return out;
}

// Signed sum over orderings s of the first four arguments of the
// right-normed bracket [x_s1, [x_s2, [x_s3, [x_s4, x5]]]]. Inner brackets
// depend only on a suffix of the ordering and are memoized by it.
DiffPoly lie5(std::span<const DiffPoly> x) {
    std::map<std::vector<int>, DiffPoly> memo;
    // inner(suffix) = [x_suffix[0], [x_suffix[1], ..., x5]]
    std::function<const DiffPoly&(const std::vector<int>&)> inner =
        [&](const std::vector<int>& suffix) -> const DiffPoly& {
        auto it = memo.find(suffix);
        if (it != memo.end()) return it->second;
        DiffPoly value;
        if (suffix.empty()) {
            value = x[4];
        } else {
            std::vector<int> rest(suffix.begin() + 1, suffix.end());
            value = lie_bracket(x[static_cast<std::size_t>(suffix.front())], inner(rest));
        }
        return memo.emplace(suffix, std::move(value)).first->second;
    };

    std::array<int, 4> perm{0, 1, 2, 3};
    DiffPoly out;
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
        const DiffPoly& term = inner(std::vector<int>(perm.begin(), perm.end()));
        if (inversions % 2 == 0)
            out += term;
        else
            out -= term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

std::string_view identity_name(Identity id) {
    switch (id) {
        case Identity::right_symmetry: return "right-symmetry";
        case Identity::left_commutativity: return "left-commutativity";
        case Identity::triple_product: return "triple-product";
        case Identity::tortken: return "tortken";
        case Identity::circ_degree5: return "circ-degree5";
        case Identity::lie_degree5: return "lie-degree5";
    }
    return {};
}

Identity identity_from_name(std::string_view name) {
    for (Identity id : kIdentities)
        if (identity_name(id) == name) return id;
    throw InvalidArgument("unknown identity: " + std::string(name));
}

std::size_t identity_arity(Identity id) {
    switch (id) {
        case Identity::right_symmetry:
        case Identity::left_commutativity:
        case Identity::triple_product: return 3;
        case Identity::tortken: return 4;
        case Identity::circ_degree5: return 2;
        case Identity::lie_degree5: return 5;
    }
    return 0;
}

std::vector<Identity> all_identities() { return {kIdentities.begin(), kIdentities.end()}; }

DiffPoly identity_defect(Identity id, std::span<const DiffPoly> args) {
    if (args.size() != identity_arity(id))
        throw InvalidArgument(std::string(identity_name(id)) + " takes " +
                              std::to_string(identity_arity(id)) + " arguments, got " +
                              std::to_string(args.size()));
    switch (id) {
        case Identity::right_symmetry: {
            const auto& [a, b, c] = std::tie(args[0], args[1], args[2]);
            DiffPoly lhs = nov_product(nov_product(a, b), c) - nov_product(a, nov_product(b, c));
            DiffPoly rhs = nov_product(nov_product(a, c), b) - nov_product(a, nov_product(c, b));
            return lhs - rhs;
        }
        case Identity::left_commutativity: {
            const auto& [a, b, c] = std::tie(args[0], args[1], args[2]);
            return nov_product(a, nov_product(b, c)) - nov_product(b, nov_product(a, c));
        }
        case Identity::triple_product: {
            const auto& [a, b, c] = std::tie(args[0], args[1], args[2]);
            DiffPoly lhs = Rational(2) * derive(derive(a) * b * c);
            DiffPoly rhs = derive(derive(a * b) * c) + derive(derive(a * c) * b) -
                           derive(derive(b * c) * a);
            return lhs - rhs;
        }
        case Identity::tortken: {
            const auto& [a, b, c, d] = std::tie(args[0], args[1], args[2], args[3]);
            DiffPoly lhs = circ_product(circ_product(a, b), circ_product(c, d)) -
                           circ_product(circ_product(a, d), circ_product(c, b));
            DiffPoly rhs = circ_product(circ_assoc(a, b, c), d) - circ_product(circ_assoc(a, d, c), b);
            return lhs - rhs;
        }
        case Identity::circ_degree5:
            return circ5(args[0], args[1]);
        case Identity::lie_degree5:
            return lie5(args);
    }
    return {};
}

bool check_identity(Identity id, std::span<const DiffPoly> args) {
    return identity_defect(id, args).is_zero();
}

}  // namespace novlag
