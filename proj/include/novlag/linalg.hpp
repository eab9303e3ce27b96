#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "novlag/rational.hpp"

namespace novlag::linalg {

/// Sparse vector over Q indexed by an ordered key type. Zero entries are
/// never stored.
template <class Key>
using SparseVec = std::map<Key, Rational>;

template <class Key>
void axpy(SparseVec<Key>& y, const Rational& a, const SparseVec<Key>& x) {
    for (const auto& [k, v] : x) {
        auto [it, inserted] = y.try_emplace(k, a * v);
        if (inserted) continue;
        it->second += a * v;
        if (it->second == 0) y.erase(it);
    }
}

/// Incrementally built row-echelon basis. Every stored vector has a distinct
/// pivot (its largest key), and tracks the combination of inserted vectors
/// that produced it so membership queries can return coefficients.
template <class Key>
class EchelonBasis {
public:
    struct Reduced {
        SparseVec<Key> residual;
        SparseVec<std::size_t> combination;  // residual = v - sum combination[i] * input_i
    };

    /// Inserts v; returns true iff it was independent of the vectors so far.
    bool insert(const SparseVec<Key>& v) {
        const std::size_t index = inserted_++;
        Reduced r = reduce(v);
        if (r.residual.empty()) return false;
        // Express the new row in terms of original inputs.
        SparseVec<std::size_t> combo;
        combo.emplace(index, Rational(1));
        for (const auto& [i, c] : r.combination) {
            auto [it, ins] = combo.try_emplace(i, -c);
            if (!ins) {
                it->second -= c;
                if (it->second == 0) combo.erase(it);
            }
        }
        Key pivot = r.residual.rbegin()->first;
        rows_.emplace(std::move(pivot), Row{std::move(r.residual), std::move(combo)});
        return true;
    }

    /// Leading-term reduction against the stored rows.
    Reduced reduce(const SparseVec<Key>& v) const {
        Reduced r{v, {}};
        while (!r.residual.empty()) {
            const auto& lead = *r.residual.rbegin();
            auto row = rows_.find(lead.first);
            if (row == rows_.end()) break;
            const Rational factor = lead.second / row->second.vec.rbegin()->second;
            axpy(r.residual, -factor, row->second.vec);
            axpy(r.combination, factor, row->second.combo);
        }
        return r;
    }

    /// Coefficients x with sum x_i * input_i == v, or nullopt if v is not in
    /// the span.
    std::optional<SparseVec<std::size_t>> solve(const SparseVec<Key>& v) const {
        Reduced r = reduce(v);
        if (!r.residual.empty()) return std::nullopt;
        return std::move(r.combination);
    }

    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t inserted() const noexcept { return inserted_; }

private:
    struct Row {
        SparseVec<Key> vec;
        SparseVec<std::size_t> combo;
    };
    std::map<Key, Row> rows_;
    std::size_t inserted_ = 0;
};

template <class Key>
std::size_t rank(const std::vector<SparseVec<Key>>& vectors) {
    EchelonBasis<Key> basis;
    for (const auto& v : vectors) basis.insert(v);
    return basis.rank();
}

}  // namespace novlag::linalg
