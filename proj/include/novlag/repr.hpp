#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace novlag {

/// Weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    /// Throws InvalidArgument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    /// parts()[i], or 0 past the end.
    int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Parses "2,1,1" (also accepts "(2,1,1)" and "" for the empty partition).
Partition parse_partition(const std::string& text);
std::string to_string(const Partition& p);
std::ostream& operator<<(std::ostream& os, const Partition& p);

/// All partitions of n in reverse-lexicographic order: (n), ..., (1^n).
std::vector<Partition> partitions(int n);

/// a dominates b (|a| = |b| required).
bool dominates(const Partition& a, const Partition& b);

/// w(alpha): sort(n + 2 - sum_j i_j, i_1, ..., i_n) with zeros dropped, where
/// i_j is the multiplicity of j in alpha.
Partition w_alpha(const Partition& alpha);

/// Number of semistandard tableaux of shape `shape` and content `content`.
std::uint64_t kostka(const Partition& shape, const Partition& content);

/// Hook length formula.
std::uint64_t specht_dim(const Partition& shape);

/// |mu|! / (mu_1! ... mu_k!), the dimension of the permutation module M^mu.
std::uint64_t permutation_module_dim(const Partition& mu);

/// beta_1 - 2 >= sum_{j >= 3} (j - 2) beta_j.
bool is_admissible(const Partition& beta);

struct DecompositionTerm {
    Partition beta;
    std::uint64_t multiplicity = 0;
    std::uint64_t specht_dim = 0;
    bool admissible = false;
};

/// Specht multiplicities of Sym_{n+2}, one entry per beta |- n+2 (zero
/// multiplicities included) in reverse-lexicographic order.
struct DecompositionTable {
    int n = 0;
    std::vector<DecompositionTerm> terms;
    std::uint64_t total_dim = 0;

    std::uint64_t multiplicity(const Partition& beta) const;
};

DecompositionTable sym_decomposition(int n);

}  // namespace novlag
