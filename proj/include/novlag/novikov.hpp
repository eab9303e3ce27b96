#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "novlag/diffpoly.hpp"

namespace novlag {

// Products of the Gel'fand-Dorfman Novikov structure on F{X}.

/// a . b = D(a) b
DiffPoly nov_product(const DiffPoly& a, const DiffPoly& b);
/// a o b = a . b + b . a = D(ab)
DiffPoly circ_product(const DiffPoly& a, const DiffPoly& b);
/// [a, b] = a . b - b . a
DiffPoly lie_bracket(const DiffPoly& a, const DiffPoly& b);

/// Expression tree over generators. Values are immutable; children are held
/// by value.
class NovExpr {
public:
    enum class Kind { gen, nov_prod, circ, lie, scale, sum };

    static NovExpr gen(int k);
    static NovExpr nov_prod(NovExpr a, NovExpr b);
    static NovExpr circ(NovExpr a, NovExpr b);
    static NovExpr lie(NovExpr a, NovExpr b);
    static NovExpr scale(Rational c, NovExpr sub);
    static NovExpr sum(std::vector<NovExpr> terms);

    Kind kind() const noexcept { return kind_; }
    int generator() const noexcept { return gen_; }
    const Rational& scalar() const noexcept { return scalar_; }
    std::span<const NovExpr> children() const noexcept { return children_; }
    const NovExpr& left() const { return children_.at(0); }
    const NovExpr& right() const { return children_.at(1); }

    friend bool operator==(const NovExpr&, const NovExpr&) = default;

private:
    explicit NovExpr(Kind kind) : kind_(kind) {}

    Kind kind_;
    int gen_ = 0;
    Rational scalar_;
    std::vector<NovExpr> children_;
};

DiffPoly eval(const NovExpr& e);
std::string to_string(const NovExpr& e);

/// Novikov basis elements of the given multidegree: monomials u with
/// deg(u) - d(u) = 1, in canonical order.
std::vector<DiffMonomial> nov_basis(std::span<const int> lambda);

/// C(2n-2, n-1), the dimension of the multilinear degree-n component.
std::uint64_t multilinear_nov_dim(int n);

/// Every support monomial satisfies deg - d = 1.
bool is_novikov_element(const DiffPoly& p);

enum class Identity {
    right_symmetry,      // (ab)c - a(bc) = (ac)b - a(cb)
    left_commutativity,  // a(bc) = b(ac)
    triple_product,      // 2(a'bc)' = ((ab)'c)' + ((ac)'b)' - ((bc)'a)'
    tortken,             // degree-4 identity of o
    circ_degree5,        // two-variable degree-5 identity of o
    lie_degree5,         // alternating sum of right-normed brackets
};

std::string_view identity_name(Identity id);
/// Accepts the names produced by identity_name().
Identity identity_from_name(std::string_view name);
std::size_t identity_arity(Identity id);
std::vector<Identity> all_identities();

/// Left side minus right side after substituting args; zero iff the
/// identity holds for this substitution.
DiffPoly identity_defect(Identity id, std::span<const DiffPoly> args);
bool check_identity(Identity id, std::span<const DiffPoly> args);

}  // namespace novlag
