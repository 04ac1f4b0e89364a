#include "schubertkit/poly.hpp"

#include <algorithm>
#include <sstream>

namespace schubertkit {

int Monomial::x_degree() const {
    int d = 0;
    for (auto& [v, e] : xs) d += e;
    return d;
}

int Monomial::exponent(int var) const {
    for (auto& [v, e] : xs)
        if (v == var) return e;
    return 0;
}

namespace {

Monomial with_exponent(const Monomial& m, int var, int exp) {
    Monomial out;
    out.beta = m.beta;
    bool placed = false;
    for (auto& [v, e] : m.xs) {
        if (v == var) {
            if (exp > 0) out.xs.emplace_back(v, exp);
            placed = true;
        } else {
            out.xs.emplace_back(v, e);
        }
    }
    if (!placed && exp > 0) {
        out.xs.emplace_back(var, exp);
        std::sort(out.xs.begin(), out.xs.end());
    }
    return out;
}

Monomial mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.beta = a.beta + b.beta;
    auto i = a.xs.begin();
    auto j = b.xs.begin();
    while (i != a.xs.end() && j != b.xs.end()) {
        if (i->first < j->first) out.xs.push_back(*i++);
        else if (j->first < i->first) out.xs.push_back(*j++);
        else {
            out.xs.emplace_back(i->first, i->second + j->second);
            ++i, ++j;
        }
    }
    out.xs.insert(out.xs.end(), i, a.xs.end());
    out.xs.insert(out.xs.end(), j, b.xs.end());
    return out;
}

}  // namespace

MultiPoly MultiPoly::constant(long long c) {
    MultiPoly p;
    p.add_term({}, c);
    return p;
}

MultiPoly MultiPoly::variable(int i, int exp) {
    MultiPoly p;
    Monomial m;
    if (exp > 0) m.xs.emplace_back(i, exp);
    p.add_term(m, 1);
    return p;
}

MultiPoly MultiPoly::beta(int exp) {
    MultiPoly p;
    Monomial m;
    m.beta = exp;
    p.add_term(m, 1);
    return p;
}

long long MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

MultiPoly& MultiPoly::add_term(Monomial m, long long c) {
    if (c == 0) return *this;
    auto [it, fresh] = terms_.emplace(std::move(m), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly out;
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) out.add_term(mul(m1, m2), c1 * c2);
    return out;
}

MultiPoly MultiPoly::operator*(long long c) const {
    MultiPoly out;
    if (c == 0) return out;
    for (auto& [m, k] : terms_) out.add_term(m, k * c);
    return out;
}

MultiPoly MultiPoly::swap_vars(int i, int j) const {
    MultiPoly out;
    for (auto& [m, c] : terms_) {
        int ei = m.exponent(i), ej = m.exponent(j);
        Monomial m2 = with_exponent(with_exponent(m, i, ej), j, ei);
        out.add_term(std::move(m2), c);
    }
    return out;
}

MultiPoly MultiPoly::substitute_beta(long long value) const {
    MultiPoly out;
    for (auto& [m, c] : terms_) {
        long long factor = 1;
        for (int k = 0; k < m.beta; ++k) factor *= value;
        Monomial m2 = m;
        m2.beta = 0;
        out.add_term(std::move(m2), c * factor);
    }
    return out;
}

MultiPoly MultiPoly::scale_vars_by_minus_beta() const {
    MultiPoly out;
    for (auto& [m, c] : terms_) {
        int d = m.x_degree();
        Monomial m2 = m;
        m2.beta += d;
        out.add_term(std::move(m2), (d % 2 == 0) ? c : -c);
    }
    return out;
}

MultiPoly MultiPoly::shift_vars(int offset) const {
    MultiPoly out;
    for (auto& [m, c] : terms_) {
        Monomial m2 = m;
        for (auto& [v, e] : m2.xs) v += offset;
        out.add_term(std::move(m2), c);
    }
    return out;
}

MultiPoly MultiPoly::truncate_x_degree(int max_deg) const {
    MultiPoly out;
    for (auto& [m, c] : terms_)
        if (m.x_degree() <= max_deg) out.add_term(m, c);
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, long long>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        int da = a.first.x_degree(), db = b.first.x_degree();
        if (da != db) return da < db;
        if (a.first.beta != b.first.beta) return a.first.beta < b.first.beta;
        return a.first.xs < b.first.xs;
    });
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : sorted) {
        long long a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::vector<std::string> factors;
        if (a != 1 || (m.xs.empty() && m.beta == 0)) factors.push_back(std::to_string(a));
        for (auto& [v, e] : m.xs) {
            std::string f = "x" + std::to_string(v);
            if (e > 1) f += "^" + std::to_string(e);
            factors.push_back(f);
        }
        if (m.beta > 0) {
            std::string f = "b";
            if (m.beta > 1) f += "^" + std::to_string(m.beta);
            factors.push_back(f);
        }
        for (size_t k = 0; k < factors.size(); ++k) {
            if (k) os << "*";
            os << factors[k];
        }
    }
    return os.str();
}

MultiPoly divided_difference(const MultiPoly& f, int i) {
    MultiPoly g = f - f.swap_vars(i, i + 1);
    if (g.is_zero()) return g;
    // synthetic division by (x_i - x_{i+1}): coefficients of x_i powers
    std::map<int, MultiPoly> coeff;
    int deg = 0;
    for (auto& [m, c] : g.terms()) {
        int d = m.exponent(i);
        deg = std::max(deg, d);
        coeff[d].add_term(with_exponent(m, i, 0), c);
    }
    MultiPoly xi1 = MultiPoly::variable(i + 1);
    std::map<int, MultiPoly> q;
    MultiPoly carry;  // q_d, walking downward
    for (int d = deg; d >= 1; --d) {
        MultiPoly cd = coeff.count(d) ? coeff[d] : MultiPoly();
        carry = (d == deg) ? cd : cd + xi1 * carry;
        q[d - 1] = carry;
    }
    MultiPoly remainder = (coeff.count(0) ? coeff[0] : MultiPoly()) + xi1 * carry;
    if (!remainder.is_zero())
        throw std::logic_error("divided difference: nonzero remainder");
    MultiPoly out;
    for (auto& [d, p] : q)
        for (auto& [m, c] : p.terms()) out.add_term(with_exponent(m, i, d), c);
    return out;
}

MultiPoly k_divided_difference(const MultiPoly& f, int i) {
    MultiPoly factor = MultiPoly::constant(1) + MultiPoly::beta() * MultiPoly::variable(i + 1);
    return divided_difference(factor * f, i);
}

MultiPoly staircase_monomial(int n) {
    MultiPoly out = MultiPoly::constant(1);
    for (int i = 1; i < n; ++i) out = out * MultiPoly::variable(i, n - i);
    return out;
}

PolynomialTable::PolynomialTable(int n) : n_(n) {}

const MultiPoly& PolynomialTable::grothendieck_beta(const Permutation& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    if (!w.supported_on(1, n_)) throw std::domain_error("support exceeds [1,n]");
    MultiPoly value;
    if (w == Permutation::longest(n_)) {
        value = staircase_monomial(n_);
    } else {
        int ascent = 0;
        for (int i = 1; i < n_; ++i)
            if (!w.is_descent(i)) {
                ascent = i;
                break;
            }
        value = k_divided_difference(grothendieck_beta(w * Permutation::simple(ascent)), ascent);
    }
    return memo_.emplace(w, std::move(value)).first->second;
}

MultiPoly PolynomialTable::schubert(const Permutation& w) {
    return grothendieck_beta(w).substitute_beta(0);
}

MultiPoly PolynomialTable::grothendieck(const Permutation& w) {
    return grothendieck_beta(w).substitute_beta(-1);
}

MultiPoly PolynomialTable::grothendieck_at(const Permutation& w, long long beta) {
    return grothendieck_beta(w).substitute_beta(beta);
}

MultiPoly schubert_polynomial(const Permutation& w, int n) {
    PolynomialTable t(n);
    return t.schubert(w);
}

MultiPoly grothendieck_polynomial_beta(const Permutation& w, int n) {
    PolynomialTable t(n);
    return t.grothendieck_beta(w);
}

MultiPoly grothendieck_polynomial(const Permutation& w, int n) {
    PolynomialTable t(n);
    return t.grothendieck(w);
}

}  // namespace schubertkit
