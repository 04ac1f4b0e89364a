#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "schubertkit/perm.hpp"

namespace schubertkit {

// Monomial in integer-indexed variables x_i and the formal parameter beta.
// Only nonzero exponents are stored; xs is sorted by variable index.
struct Monomial {
    std::vector<std::pair<int, int>> xs;
    int beta = 0;

    int x_degree() const;
    int exponent(int var) const;
    auto operator<=>(const Monomial&) const = default;
};

// Sparse polynomial over Z in the x_i and beta; arithmetic is exact.
class MultiPoly {
  public:
    MultiPoly() = default;
    static MultiPoly constant(long long c);
    static MultiPoly variable(int i, int exp = 1);
    static MultiPoly beta(int exp = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, long long>& terms() const { return terms_; }
    long long coefficient(const Monomial& m) const;

    MultiPoly& add_term(Monomial m, long long c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(long long c) const;
    MultiPoly operator-() const { return *this * -1; }
    bool operator==(const MultiPoly&) const = default;

    MultiPoly swap_vars(int i, int j) const;       // exchange x_i and x_j
    MultiPoly substitute_beta(long long c) const;  // beta -> c
    MultiPoly scale_vars_by_minus_beta() const;    // x_i -> -beta * x_i
    MultiPoly shift_vars(int offset) const;        // x_i -> x_{i+offset}
    MultiPoly truncate_x_degree(int max_deg) const;

    // Canonical text form: terms sorted by (x-degree, beta-degree, exponents).
    std::string to_string() const;

  private:
    std::map<Monomial, long long> terms_;
};

// Newton divided difference N_i(f) = (f - s_i f) / (x_i - x_{i+1}),
// computed by synthetic division in x_i; a nonzero remainder is an internal
// consistency failure.
MultiPoly divided_difference(const MultiPoly& f, int i);
// K-theoretic variant N_i((1 + beta x_{i+1}) f); beta stays formal.
MultiPoly k_divided_difference(const MultiPoly& f, int i);

// x_1^{n-1} x_2^{n-2} ... x_{n-1}.
MultiPoly staircase_monomial(int n);

// beta-Grothendieck polynomials computed by divided-difference descent from
// the staircase monomial; results are memoized per table. The Schubert
// polynomial is the beta = 0 slice.
class PolynomialTable {
  public:
    explicit PolynomialTable(int n);
    int n() const { return n_; }
    const MultiPoly& grothendieck_beta(const Permutation& w);  // beta formal
    MultiPoly schubert(const Permutation& w);                  // beta = 0
    MultiPoly grothendieck(const Permutation& w);              // beta = -1
    MultiPoly grothendieck_at(const Permutation& w, long long beta);

  private:
    int n_;
    std::map<Permutation, MultiPoly> memo_;
};

MultiPoly schubert_polynomial(const Permutation& w, int n);
MultiPoly grothendieck_polynomial_beta(const Permutation& w, int n);
MultiPoly grothendieck_polynomial(const Permutation& w, int n);

}  // namespace schubertkit
