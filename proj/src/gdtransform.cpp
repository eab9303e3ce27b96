#include "novlag/gdtransform.hpp"

#include <algorithm>

#include "novlag/error.hpp"
#include "novlag/variational.hpp"

namespace novlag {

namespace {

GroupShape trimmed(GroupShape shape) {
    trim_trailing_zeros(shape);
    return shape;
}

TensorPoly multiply(const TensorPoly& a, const TensorPoly& b, const GroupShape& shape) {
    TensorPoly out(shape);
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, ca * cb);
    return out;
}

TensorPoly one(const GroupShape& shape) {
    TensorPoly p(shape);
    p.add_term(TensorMonomial{}, Rational(1));
    return p;
}

// Applies a relabelling of slots to every monomial.
template <class F>
TensorPoly relabel(const TensorPoly& p, F&& map_var) {
    TensorPoly out(p.shape());
    for (const auto& [m, c] : p.terms()) {
        std::vector<TensorMonomial::Entry> entries;
        entries.reserve(m.entries().size());
        for (const auto& [v, e] : m.entries()) entries.emplace_back(map_var(v), e);
        out.add_term(TensorMonomial(std::move(entries)), c);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// TensorMonomial

TensorMonomial::TensorMonomial(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end());
    for (auto& [v, e] : entries) {
        if (v.group < 1 || v.slot < 1) throw InvalidArgument("slot symbol indices must be >= 1");
        if (e < 0) throw InvalidArgument("negative exponent");
        if (e == 0) continue;
        if (!entries_.empty() && entries_.back().first == v)
            entries_.back().second += e;
        else
            entries_.emplace_back(v, e);
    }
}

int TensorMonomial::exponent(TensorVar v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const Entry& en, const TensorVar& x) { return en.first < x; });
    return (it != entries_.end() && it->first == v) ? it->second : 0;
}

int TensorMonomial::total_degree() const {
    int s = 0;
    for (const auto& [v, e] : entries_) s += e;
    return s;
}

TensorMonomial operator*(const TensorMonomial& a, const TensorMonomial& b) {
    std::vector<TensorMonomial::Entry> merged;
    merged.reserve(a.entries_.size() + b.entries_.size());
    merged.insert(merged.end(), a.entries_.begin(), a.entries_.end());
    merged.insert(merged.end(), b.entries_.begin(), b.entries_.end());
    return TensorMonomial(std::move(merged));
}

// ---------------------------------------------------------------------------
// TensorPoly

TensorPoly::TensorPoly(GroupShape shape) : shape_(trimmed(std::move(shape))) {
    for (int n : shape_)
        if (n < 0) throw InvalidArgument("group sizes must be nonnegative");
}

int TensorPoly::slots(int group) const {
    if (group < 1 || group > static_cast<int>(shape_.size())) return 0;
    return shape_[static_cast<std::size_t>(group - 1)];
}

void TensorPoly::add_term(const TensorMonomial& m, const Rational& c) {
    if (c == 0) return;
    for (const auto& [v, e] : m.entries())
        if (v.slot > slots(v.group))
            throw InvalidArgument("symbol e[" + std::to_string(v.group) + "," + std::to_string(v.slot) +
                                  "] is outside the shape");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& other) {
    if (other.shape_ != shape_) throw InvalidArgument("adding tensor polynomials of different shapes");
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

TensorPoly& TensorPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

// ---------------------------------------------------------------------------
// Transform

TensorPoly gd_transform(const DiffPoly& f) {
    const auto md = multidegree(f);
    if (md.kind == Homogeneity::inhomogeneous)
        throw InvalidArgument("Gel'fand-Dikii transform requires a homogeneous polynomial");
    return gd_transform(f, md.degrees);
}

TensorPoly gd_transform(const DiffPoly& f, const GroupShape& shape_in) {
    const GroupShape shape = trimmed(shape_in);
    TensorPoly out(shape);
    for (const auto& [m, c] : f.terms()) {
        if (m.multidegree() != shape)
            throw InvalidArgument("monomial " + to_string(m) + " does not match the transform shape");

        // sigma(e_1^{I_1} (x) ... (x) e_n^{I_n}): average over all slot
        // permutations in each group. Distinct arrangements of a multiset
        // each occur (prod of multiplicities)! times, so averaging over
        // distinct arrangements gives the same result.
        TensorPoly acc = one(shape);
        auto fs = m.factors();
        for (std::size_t begin = 0; begin < fs.size();) {
            std::size_t end = begin;
            while (end < fs.size() && fs[end].var == fs[begin].var) ++end;
            const int group = fs[begin].var;
            std::vector<int> orders;
            for (std::size_t i = begin; i < end; ++i) orders.push_back(fs[i].order);

            TensorPoly block(shape);
            long arrangements = 0;
            do {
                std::vector<TensorMonomial::Entry> entries;
                for (std::size_t j = 0; j < orders.size(); ++j)
                    entries.emplace_back(TensorVar{group, static_cast<int>(j) + 1}, orders[j]);
                block.add_term(TensorMonomial(std::move(entries)), Rational(1));
                ++arrangements;
            } while (std::next_permutation(orders.begin(), orders.end()));
            block *= Rational(1) / arrangements;
            acc = multiply(acc, block, shape);
            begin = end;
        }
        acc *= c;
        out += acc;
    }
    return out;
}

bool is_symmetrized(const TensorPoly& phi) {
    const auto& shape = phi.shape();
    for (std::size_t g = 0; g < shape.size(); ++g) {
        const int group = static_cast<int>(g) + 1;
        // Adjacent transpositions generate the symmetric group.
        for (int j = 1; j < shape[g]; ++j) {
            auto swapped = relabel(phi, [&](TensorVar v) {
                if (v.group == group && v.slot == j) return TensorVar{group, j + 1};
                if (v.group == group && v.slot == j + 1) return TensorVar{group, j};
                return v;
            });
            if (swapped != phi) return false;
        }
    }
    return true;
}

TensorPoly gd_euler(const TensorPoly& phi, int k) {
    const int nk = phi.slots(k);
    if (nk < 1) throw InvalidArgument("transformed Euler operator needs N_" + std::to_string(k) + " >= 1");

    GroupShape shape = phi.shape();
    --shape[static_cast<std::size_t>(k - 1)];
    shape = trimmed(shape);

    // L = -(sum of every slot symbol of the reduced shape).
    TensorPoly linear(shape);
    for (std::size_t g = 0; g < shape.size(); ++g)
        for (int j = 1; j <= shape[g]; ++j)
            linear.add_term(TensorMonomial({{TensorVar{static_cast<int>(g) + 1, j}, 1}}), Rational(-1));

    std::vector<TensorPoly> powers{one(shape)};
    const auto power = [&](int e) -> const TensorPoly& {
        while (static_cast<int>(powers.size()) <= e) powers.push_back(multiply(powers.back(), linear, shape));
        return powers[static_cast<std::size_t>(e)];
    };

    const TensorVar last{k, nk};
    TensorPoly out(shape);
    for (const auto& [m, c] : phi.terms()) {
        std::vector<TensorMonomial::Entry> rest;
        int e = 0;
        for (const auto& entry : m.entries()) {
            if (entry.first == last)
                e = entry.second;
            else
                rest.push_back(entry);
        }
        TensorPoly head(shape);
        head.add_term(TensorMonomial(std::move(rest)), c * nk);
        out += multiply(head, power(e), shape);
    }
    return out;
}

bool commute_check(const DiffPoly& f, int k) {
    const auto md = multidegree(f);
    if (md.kind != Homogeneity::homogeneous) throw InvalidArgument("commute_check requires a nonzero homogeneous polynomial");
    if (k < 1 || k > static_cast<int>(md.degrees.size()) || md.degrees[static_cast<std::size_t>(k - 1)] < 1)
        throw InvalidArgument("commute_check requires deg_x" + std::to_string(k) + "(f) >= 1");

    GroupShape reduced = md.degrees;
    --reduced[static_cast<std::size_t>(k - 1)];
    const TensorPoly lhs = gd_transform(euler(f, k), reduced);
    const TensorPoly rhs = gd_euler(gd_transform(f), k);
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Rendering

std::string to_string(const TensorMonomial& m) {
    if (m.entries().empty()) return "1";
    std::string out;
    for (const auto& [v, e] : m.entries()) {
        if (!out.empty()) out += '*';
        out += "e[" + std::to_string(v.group) + "," + std::to_string(v.slot) + "]";
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string to_string(const TensorPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        const bool negative = c < 0;
        const Rational mag = abs(c);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (m.entries().empty())
            out += mag.get_str();
        else if (mag == 1)
            out += to_string(m);
        else
            out += mag.get_str() + "*" + to_string(m);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const TensorPoly& p) { return os << to_string(p); }

}  // namespace novlag
