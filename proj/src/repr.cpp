#include "novlag/repr.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "novlag/error.hpp"
#include "novlag/rational.hpp"

namespace novlag {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw InvalidArgument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidArgument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition parse_partition(const std::string& text) {
    std::string body;
    for (char ch : text)
        if (ch != '(' && ch != ')' && ch != ' ') body += ch;
    std::vector<int> parts;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw InvalidArgument("empty part in partition '" + text + "'");
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw InvalidArgument("bad partition part '" + item + "'");
        }
        if (used != item.size()) throw InvalidArgument("bad partition part '" + item + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

std::string to_string(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.parts()[i]);
    }
    return s + ")";
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }

std::vector<Partition> partitions(int n) {
    if (n < 0) throw InvalidArgument("cannot partition a negative integer");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) throw InvalidArgument("dominance compares partitions of the same size");
    int sa = 0;
    int sb = 0;
    const std::size_t len = static_cast<std::size_t>(std::max(a.length(), b.length()));
    for (std::size_t i = 0; i < len; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb) return false;
    }
    return true;
}

Partition w_alpha(const Partition& alpha) {
    const int n = alpha.size();
    if (n < 1) throw InvalidArgument("w(alpha) needs a partition of n >= 1");
    std::vector<int> mult(static_cast<std::size_t>(n) + 1, 0);
    for (int part : alpha.parts()) ++mult[static_cast<std::size_t>(part)];

    std::vector<int> entries{n + 2 - alpha.length()};
    for (int j = 1; j <= n; ++j) entries.push_back(mult[static_cast<std::size_t>(j)]);
    std::erase(entries, 0);
    std::sort(entries.begin(), entries.end(), std::greater<>());
    return Partition(std::move(entries));
}

std::uint64_t kostka(const Partition& shape, const Partition& content) {
    if (shape.size() != content.size())
        throw InvalidArgument("Kostka number needs |shape| = |content|");

    // Fill values 1, 2, ... in turn; the cells holding value v form a
    // horizontal strip added to the shape filled so far. Row-weak, column-
    // strict fillings correspond exactly to such strip sequences.
    const auto& mu = content.parts();
    const auto& target = shape.parts();
    const std::size_t rows = target.size();
    std::vector<int> filled(rows, 0);
    std::uint64_t count = 0;

    std::function<void(std::size_t)> place_value = [&](std::size_t value) {
        if (value == mu.size()) {
            if (filled == target) ++count;
            return;
        }
        // Distribute mu[value] cells over rows; row r may grow up to the
        // previous length of row r-1 (strip condition) and up to target[r].
        const std::vector<int> before = filled;
        std::function<void(std::size_t, int)> distribute = [&](std::size_t r, int left) {
            if (r == rows) {
                if (left == 0) place_value(value + 1);
                return;
            }
            const int cap_strip = r == 0 ? target[0] : before[r - 1];
            const int cap = std::min(target[r], cap_strip) - before[r];
            for (int add = std::min(cap, left); add >= 0; --add) {
                filled[r] = before[r] + add;
                distribute(r + 1, left - add);
            }
            filled[r] = before[r];
        };
        distribute(0, mu[value]);
    };
    place_value(0);
    return count;
}

std::uint64_t specht_dim(const Partition& shape) {
    const auto& parts = shape.parts();
    Integer numerator = 1;
    for (int i = 2; i <= shape.size(); ++i) numerator *= i;
    Integer hooks = 1;
    for (std::size_t r = 0; r < parts.size(); ++r) {
        for (int c = 0; c < parts[r]; ++c) {
            int below = 0;
            for (std::size_t rr = r + 1; rr < parts.size() && parts[rr] > c; ++rr) ++below;
            hooks *= (parts[r] - c - 1) + below + 1;
        }
    }
    Integer q = numerator / hooks;
    if (!q.fits_ulong_p()) throw InvalidArgument("Specht dimension exceeds 64 bits");
    return q.get_ui();
}

std::uint64_t permutation_module_dim(const Partition& mu) {
    Integer r = 1;
    for (int i = 2; i <= mu.size(); ++i) r *= i;
    for (int part : mu.parts())
        for (int i = 2; i <= part; ++i) r /= i;
    if (!r.fits_ulong_p()) throw InvalidArgument("permutation module dimension exceeds 64 bits");
    return r.get_ui();
}

bool is_admissible(const Partition& beta) {
    if (beta.size() < 3) throw InvalidArgument("admissibility is defined for partitions of n + 2 >= 3");
    long rhs = 0;
    for (std::size_t j = 3; j <= beta.parts().size(); ++j)
        rhs += static_cast<long>(j - 2) * beta.parts()[j - 1];
    return beta.part(0) - 2 >= rhs;
}

std::uint64_t DecompositionTable::multiplicity(const Partition& beta) const {
    for (const auto& t : terms)
        if (t.beta == beta) return t.multiplicity;
    return 0;
}

DecompositionTable sym_decomposition(int n) {
    if (n < 1) throw InvalidArgument("decomposition of Sym_{n+2} needs n >= 1");
    std::vector<Partition> contents;
    for (const auto& alpha : partitions(n)) contents.push_back(w_alpha(alpha));

    DecompositionTable table;
    table.n = n;
    for (auto& beta : partitions(n + 2)) {
        DecompositionTerm term;
        for (const auto& mu : contents) term.multiplicity += kostka(beta, mu);
        term.specht_dim = specht_dim(beta);
        term.admissible = is_admissible(beta);
        term.beta = std::move(beta);
        table.total_dim += term.multiplicity * term.specht_dim;
        table.terms.push_back(std::move(term));
    }
    return table;
}

}  // namespace novlag
