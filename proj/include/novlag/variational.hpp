#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "novlag/diffpoly.hpp"

namespace novlag {

/// Euler operator E^k = sum_i (-D)^i d/dx_k^(i). The sum stops at the highest
/// order of x_k present in f.
DiffPoly euler(const DiffPoly& f, int k);

struct EulerResult {
    std::vector<DiffPoly> components;  // components[k-1] = E^k(f)

    bool is_zero() const;
};

/// E(f) over variables 1..max(n_vars, highest variable in f).
EulerResult euler_all(const DiffPoly& f, int n_vars = 0);

/// E^k(f) = 0 for every variable occurring in f.
bool is_null_lagrangian(const DiffPoly& f);

/// The unique g without constant term such that D(g) = f. Solved exactly on
/// each (multidegree, differential degree) component.
/// Throws NotExact when no such g exists.
DiffPoly antiderivative(const DiffPoly& f);

/// Basis element of the symmetric subspace: either a bare generator or
/// D(u) for a monomial u with deg(u) - d(u) = 2.
struct SymBasisElem {
    DiffPoly value;
    std::optional<DiffMonomial> potential;  // u, absent for generators
};

std::string to_string(const SymBasisElem& e);

std::vector<SymBasisElem> sym_basis(std::span<const int> lambda);

/// dim Sym_n = C(2n-3, n-1) for n >= 2, and 1 for n = 1.
std::uint64_t multilinear_sym_dim(int n);

struct SymmetryCertificate {
    DiffPoly generator_part;  // l: terms on bare generators
    DiffPoly potential;       // g with D(g) = f - l
};

struct SymmetryResult {
    bool symmetric = false;
    std::optional<SymmetryCertificate> certificate;
};

/// Decides membership in S<X>. f must be a Novikov element.
SymmetryResult is_symmetric(const DiffPoly& f);

/// The three conditions of the null Lagrangian criterion, evaluated
/// independently for a homogeneous Novikov element with positive multidegree.
struct CriterionReport {
    bool condition1 = false;  // symmetric with deg > 1
    bool condition2 = false;  // E^k(f) = 0 for all k
    bool condition3 = false;  // E^k(f) = 0 for some k
    bool some_implies_all = false;
    EulerResult euler;

    bool equivalent() const {
        return condition1 == condition2 && condition2 == condition3 && some_implies_all;
    }
};

CriterionReport criterion_check(const DiffPoly& f, int n_vars = 0);

/// Rank data for E restricted to one component (lambda, d) against
/// D on (lambda, d-1).
struct ExactnessReport {
    std::size_t dimension = 0;    // dim of component (lambda, d)
    std::size_t euler_rank = 0;
    std::size_t kernel_dim = 0;   // dimension - euler_rank
    std::size_t image_dim = 0;    // rank of D on (lambda, d-1)
    bool image_in_kernel = false; // E(D(m)) = 0 for every m in (lambda, d-1)

    bool exact() const { return image_in_kernel && kernel_dim == image_dim; }
};

ExactnessReport exactness_check(std::span<const int> lambda, int d);

}  // namespace novlag
