#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "novlag/rational.hpp"

namespace novlag {

/// The symbol x_k^(i): generator index k >= 1, derivation order i >= 0.
struct DiffVar {
    int var = 1;
    int order = 0;

    friend constexpr auto operator<=>(const DiffVar&, const DiffVar&) = default;
};

/// Multidegree vector (lambda_1, ..., lambda_n). Trailing zeros are never
/// significant; helpers in this header keep them trimmed.
using Multidegree = std::vector<int>;

void trim_trailing_zeros(Multidegree& lambda);

/// A commutative product of DiffVars. Factors are kept sorted by
/// (var, order); the empty product is the unit monomial.
class DiffMonomial {
public:
    DiffMonomial() = default;
    explicit DiffMonomial(std::vector<DiffVar> factors);
    DiffMonomial(std::initializer_list<DiffVar> factors);

    std::span<const DiffVar> factors() const noexcept { return factors_; }
    bool is_unit() const noexcept { return factors_.empty(); }

    /// Standard degree: number of factors.
    int degree() const noexcept { return static_cast<int>(factors_.size()); }
    /// Differential degree: sum of orders.
    int diff_degree() const noexcept { return diff_degree_; }
    int degree_in(int var) const;
    int max_var() const noexcept { return factors_.empty() ? 0 : factors_.back().var; }
    /// Highest order of x_var present, or -1 if x_var is absent.
    int max_order(int var) const;
    /// Per-variable degrees with trailing zeros trimmed.
    Multidegree multidegree() const;

    friend DiffMonomial operator*(const DiffMonomial& a, const DiffMonomial& b);

    friend bool operator==(const DiffMonomial& a, const DiffMonomial& b) {
        return a.factors_ == b.factors_;
    }
    /// Canonical order: differential degree first, then the sorted factor
    /// lists lexicographically.
    friend std::strong_ordering operator<=>(const DiffMonomial& a, const DiffMonomial& b);

private:
    std::vector<DiffVar> factors_;
    int diff_degree_ = 0;
};

struct Degrees {
    int deg = 0;
    int d = 0;
    Multidegree per_var;
};

Degrees degrees(const DiffMonomial& m);

/// Element of F{X}: a finite Q-linear combination of DiffMonomials.
class DiffPoly {
public:
    using TermMap = std::map<DiffMonomial, Rational>;

    DiffPoly() = default;
    explicit DiffPoly(const Rational& constant);
    explicit DiffPoly(DiffMonomial m, const Rational& c = 1);

    /// x_var^(order)
    static DiffPoly variable(int var, int order = 0);

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    /// Coefficient of m (zero when absent).
    Rational coeff(const DiffMonomial& m) const;
    int max_var() const noexcept;
    int max_order(int var) const;

    /// Adds c*m, pruning the entry if it cancels.
    void add_term(const DiffMonomial& m, const Rational& c);

    DiffPoly& operator+=(const DiffPoly& other);
    DiffPoly& operator-=(const DiffPoly& other);
    DiffPoly& operator*=(const Rational& c);

    friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
    friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
    friend DiffPoly operator-(DiffPoly a) { return a *= Rational(-1); }
    friend DiffPoly operator*(DiffPoly a, const Rational& c) { return a *= c; }
    friend DiffPoly operator*(const Rational& c, DiffPoly a) { return a *= c; }
    friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);

    friend bool operator==(const DiffPoly& a, const DiffPoly& b) { return a.terms_ == b.terms_; }

private:
    TermMap terms_;
};

DiffPoly add(const DiffPoly& p, const DiffPoly& q);
DiffPoly mul(const DiffPoly& p, const DiffPoly& q);

/// Total derivative D, extended from x_k^(i) -> x_k^(i+1) by Leibniz.
DiffPoly derive(const DiffPoly& p);
DiffPoly derive(const DiffPoly& p, int times);

/// Formal partial derivative with respect to x_var^(order).
DiffPoly partial(const DiffPoly& p, int var, int order);

enum class Homogeneity { zero, homogeneous, inhomogeneous };

struct MultidegreeResult {
    Homogeneity kind = Homogeneity::zero;
    Multidegree degrees;  // meaningful only when kind == homogeneous
};

MultidegreeResult multidegree(const DiffPoly& p);

/// All monomials with per-variable degrees lambda and differential degree d,
/// in ascending canonical order.
std::vector<DiffMonomial> monomials_of(std::span<const int> lambda, int d);

/// Splits p into its (multidegree, differential degree) components.
struct ComponentKey {
    Multidegree lambda;
    int d = 0;
    friend auto operator<=>(const ComponentKey&, const ComponentKey&) = default;
};
std::map<ComponentKey, DiffPoly> split_components(const DiffPoly& p);

std::string to_string(const DiffVar& v);
std::string to_string(const DiffMonomial& m);
/// Terms in descending canonical order, e.g. `2*x1'^2*x2 - 3*x1^2*x2''`.
std::string to_string(const DiffPoly& p);

std::ostream& operator<<(std::ostream& os, const DiffMonomial& m);
std::ostream& operator<<(std::ostream& os, const DiffPoly& p);

}  // namespace novlag
