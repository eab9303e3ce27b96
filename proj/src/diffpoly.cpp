#include "novlag/diffpoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "novlag/error.hpp"

namespace novlag {

void trim_trailing_zeros(Multidegree& lambda) {
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
}

// ---------------------------------------------------------------------------
// DiffMonomial

DiffMonomial::DiffMonomial(std::vector<DiffVar> factors) : factors_(std::move(factors)) {
    for (const auto& f : factors_) {
        if (f.var < 1) throw InvalidArgument("variable index must be >= 1");
        if (f.order < 0) throw InvalidArgument("derivation order must be >= 0");
        diff_degree_ += f.order;
    }
    std::sort(factors_.begin(), factors_.end());
}

DiffMonomial::DiffMonomial(std::initializer_list<DiffVar> factors)
    : DiffMonomial(std::vector<DiffVar>(factors)) {}

int DiffMonomial::degree_in(int var) const {
    return static_cast<int>(std::count_if(factors_.begin(), factors_.end(),
                                          [var](const DiffVar& f) { return f.var == var; }));
}

int DiffMonomial::max_order(int var) const {
    int best = -1;
    for (const auto& f : factors_)
        if (f.var == var) best = std::max(best, f.order);
    return best;
}

Multidegree DiffMonomial::multidegree() const {
    Multidegree lambda(static_cast<std::size_t>(max_var()), 0);
    for (const auto& f : factors_) ++lambda[static_cast<std::size_t>(f.var - 1)];
    return lambda;
}

DiffMonomial operator*(const DiffMonomial& a, const DiffMonomial& b) {
    DiffMonomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    std::merge(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
               std::back_inserter(out.factors_));
    out.diff_degree_ = a.diff_degree_ + b.diff_degree_;
    return out;
}

std::strong_ordering operator<=>(const DiffMonomial& a, const DiffMonomial& b) {
    if (auto c = a.diff_degree_ <=> b.diff_degree_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(),
                                                  b.factors_.begin(), b.factors_.end());
}

Degrees degrees(const DiffMonomial& m) {
    return Degrees{m.degree(), m.diff_degree(), m.multidegree()};
}

// ---------------------------------------------------------------------------
// DiffPoly

DiffPoly::DiffPoly(const Rational& constant) {
    if (constant != 0) terms_.emplace(DiffMonomial{}, constant);
}

DiffPoly::DiffPoly(DiffMonomial m, const Rational& c) {
    if (c != 0) terms_.emplace(std::move(m), c);
}

DiffPoly DiffPoly::variable(int var, int order) {
    return DiffPoly(DiffMonomial{DiffVar{var, order}});
}

Rational DiffPoly::coeff(const DiffMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int DiffPoly::max_var() const noexcept {
    int best = 0;
    for (const auto& [m, c] : terms_) best = std::max(best, m.max_var());
    return best;
}

int DiffPoly::max_order(int var) const {
    int best = -1;
    for (const auto& [m, c] : terms_) best = std::max(best, m.max_order(var));
    return best;
}

void DiffPoly::add_term(const DiffMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

DiffPoly& DiffPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
    DiffPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

DiffPoly add(const DiffPoly& p, const DiffPoly& q) { return p + q; }
DiffPoly mul(const DiffPoly& p, const DiffPoly& q) { return p * q; }

DiffPoly derive(const DiffPoly& p) {
    DiffPoly out;
    std::vector<DiffVar> buf;
    for (const auto& [m, c] : p.terms()) {
        auto fs = m.factors();
        // Each run of equal factors contributes once with its multiplicity.
        for (std::size_t i = 0; i < fs.size();) {
            std::size_t j = i;
            while (j < fs.size() && fs[j] == fs[i]) ++j;
            buf.assign(fs.begin(), fs.end());
            ++buf[i].order;
            out.add_term(DiffMonomial(buf), c * static_cast<long>(j - i));
            i = j;
        }
    }
    return out;
}

DiffPoly derive(const DiffPoly& p, int times) {
    DiffPoly out = p;
    for (int i = 0; i < times; ++i) out = derive(out);
    return out;
}

DiffPoly partial(const DiffPoly& p, int var, int order) {
    const DiffVar target{var, order};
    DiffPoly out;
    std::vector<DiffVar> buf;
    for (const auto& [m, c] : p.terms()) {
        auto fs = m.factors();
        auto lo = std::lower_bound(fs.begin(), fs.end(), target);
        auto hi = std::upper_bound(lo, fs.end(), target);
        if (lo == hi) continue;
        buf.assign(fs.begin(), fs.end());
        buf.erase(buf.begin() + (lo - fs.begin()));
        out.add_term(DiffMonomial(buf), c * static_cast<long>(hi - lo));
    }
    return out;
}

MultidegreeResult multidegree(const DiffPoly& p) {
    MultidegreeResult r;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        auto lambda = m.multidegree();
        if (first) {
            r.kind = Homogeneity::homogeneous;
            r.degrees = std::move(lambda);
            first = false;
        } else if (lambda != r.degrees) {
            return MultidegreeResult{Homogeneity::inhomogeneous, {}};
        }
    }
    return r;
}

std::vector<DiffMonomial> monomials_of(std::span<const int> lambda, int d) {
    if (d < 0) return {};
    for (int v : lambda)
        if (v < 0) throw InvalidArgument("multidegree entries must be nonnegative");

    // One slot per factor; orders are weakly increasing inside a variable so
    // every multiset is produced exactly once.
    std::vector<int> slot_var;
    for (std::size_t k = 0; k < lambda.size(); ++k)
        for (int j = 0; j < lambda[k]; ++j) slot_var.push_back(static_cast<int>(k) + 1);

    std::vector<DiffMonomial> out;
    std::vector<DiffVar> current(slot_var.size());
    std::function<void(std::size_t, int)> rec = [&](std::size_t slot, int remaining) {
        if (slot == slot_var.size()) {
            if (remaining == 0) out.emplace_back(current);
            return;
        }
        const int var = slot_var[slot];
        const bool same_var = slot > 0 && slot_var[slot - 1] == var;
        const int lo = same_var ? current[slot - 1].order : 0;
        // Remaining slots of this variable need at least `order` each.
        std::size_t tail = 0;
        for (std::size_t s = slot + 1; s < slot_var.size() && slot_var[s] == var; ++s) ++tail;
        for (int order = lo; order + static_cast<int>(tail) * order <= remaining; ++order) {
            current[slot] = DiffVar{var, order};
            rec(slot + 1, remaining - order);
        }
    };
    rec(0, d);
    std::sort(out.begin(), out.end());
    return out;
}

std::map<ComponentKey, DiffPoly> split_components(const DiffPoly& p) {
    std::map<ComponentKey, DiffPoly> out;
    for (const auto& [m, c] : p.terms())
        out[ComponentKey{m.multidegree(), m.diff_degree()}].add_term(m, c);
    return out;
}

// ---------------------------------------------------------------------------
// Rendering

std::string to_string(const DiffVar& v) {
    std::string s = "x" + std::to_string(v.var);
    if (v.order <= 2)
        s.append(static_cast<std::size_t>(v.order), '\'');
    else
        s += "^(" + std::to_string(v.order) + ")";
    return s;
}

std::string to_string(const DiffMonomial& m) {
    if (m.is_unit()) return "1";
    auto fs = m.factors();
    std::string out;
    // Variables ascending, orders descending inside a variable.
    std::size_t var_begin = 0;
    while (var_begin < fs.size()) {
        std::size_t var_end = var_begin;
        while (var_end < fs.size() && fs[var_end].var == fs[var_begin].var) ++var_end;
        std::size_t i = var_end;
        while (i > var_begin) {
            std::size_t j = i;
            while (j > var_begin && fs[j - 1] == fs[i - 1]) --j;
            if (!out.empty()) out += '*';
            out += to_string(fs[i - 1]);
            if (i - j > 1) out += "^" + std::to_string(i - j);
            i = j;
        }
        var_begin = var_end;
    }
    return out;
}

std::string to_string(const DiffPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        const bool negative = c < 0;
        Rational mag = abs(c);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (m.is_unit()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += to_string(m);
        } else {
            out += mag.get_str() + "*" + to_string(m);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const DiffMonomial& m) { return os << to_string(m); }
std::ostream& operator<<(std::ostream& os, const DiffPoly& p) { return os << to_string(p); }

}  // namespace novlag
