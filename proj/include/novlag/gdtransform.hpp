#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "novlag/diffpoly.hpp"

namespace novlag {

/// Slot symbol e_{group,slot}.
struct TensorVar {
    int group = 1;
    int slot = 1;

    friend constexpr auto operator<=>(const TensorVar&, const TensorVar&) = default;
};

/// Occurrence counts (N_1, ..., N_n). Entries may be zero; trailing zeros are
/// trimmed so shapes compare by content.
using GroupShape = std::vector<int>;

/// Product of powers of slot symbols, stored as (symbol, exponent) pairs
/// sorted by symbol with positive exponents only.
class TensorMonomial {
public:
    using Entry = std::pair<TensorVar, int>;

    TensorMonomial() = default;
    explicit TensorMonomial(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    int exponent(TensorVar v) const;
    int total_degree() const;

    friend TensorMonomial operator*(const TensorMonomial& a, const TensorMonomial& b);
    friend auto operator<=>(const TensorMonomial&, const TensorMonomial&) = default;

private:
    std::vector<Entry> entries_;
};

/// Polynomial in the slot symbols, attached to a GroupShape.
class TensorPoly {
public:
    using TermMap = std::map<TensorMonomial, Rational>;

    TensorPoly() = default;
    explicit TensorPoly(GroupShape shape);

    const GroupShape& shape() const noexcept { return shape_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// N_k for group k (zero past the end of the shape).
    int slots(int group) const;

    /// Adds c*m. Throws if m references a symbol outside the shape.
    void add_term(const TensorMonomial& m, const Rational& c);

    TensorPoly& operator+=(const TensorPoly& other);
    TensorPoly& operator*=(const Rational& c);
    friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
    friend TensorPoly operator*(const Rational& c, TensorPoly a) { return a *= c; }

    friend bool operator==(const TensorPoly&, const TensorPoly&) = default;

private:
    GroupShape shape_;
    TermMap terms_;
};

/// Generalized Gel'fand-Dikii transform. f must be homogeneous; its
/// multidegree is the shape. The zero polynomial maps to zero on `shape`.
TensorPoly gd_transform(const DiffPoly& f);
TensorPoly gd_transform(const DiffPoly& f, const GroupShape& shape);

/// Invariant under every permutation of slots inside each group.
bool is_symmetrized(const TensorPoly& phi);

/// Transformed Euler operator: N_k * phi with e_{k,N_k} replaced by minus
/// the sum of every other slot symbol. Result lives on the shape with N_k
/// decremented.
TensorPoly gd_euler(const TensorPoly& phi, int k);

/// gd_transform(euler(f, k)) == gd_euler(gd_transform(f), k).
bool commute_check(const DiffPoly& f, int k);

std::string to_string(const TensorMonomial& m);
std::string to_string(const TensorPoly& p);
std::ostream& operator<<(std::ostream& os, const TensorPoly& p);

}  // namespace novlag
