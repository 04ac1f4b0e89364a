#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace schubertkit {

using Word = std::vector<int>;

// Matrix coordinates: cell (i,j) sits in row i from the top, column j from
// the left. Rows and columns may be nonpositive in back-stable contexts.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

using CellSet = std::set<Cell>;

// A permutation of the integers with finite support, stored as its one-line
// window. The window is canonicalized to the smallest interval containing
// all non-fixed points, so equality and hashing are stable under the natural
// inclusions S_n -> S_{n+1} and shifts of ambient window.
class Permutation {
  public:
    Permutation() = default;

    static Permutation identity() { return {}; }
    static Permutation from_one_line(std::vector<int> images, int window_lo = 1);
    static Permutation simple(int i);          // s_i = (i, i+1)
    static Permutation transposition(int i, int j);
    static Permutation longest(int n);         // w0 in S_n

    int operator()(int i) const;
    bool is_identity() const { return img_.empty(); }

    // Canonical support window. For the identity lo() == 1 and hi() == 0.
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(img_.size()) - 1; }

    // One-line notation on an explicit window (pads with fixed points).
    std::vector<int> one_line(int window_lo, int window_hi) const;
    // One-line on [1,n]; requires support within [1,n].
    std::vector<int> one_line(int n) const;

    bool supported_on(int window_lo, int window_hi) const;

    Permutation inverse() const;
    // Function composition: (u * v)(i) = u(v(i)). Right multiplication by
    // s_i or t_{i,j} acts on positions: (w * t_{i,j}) swaps images at i, j.
    Permutation operator*(const Permutation& other) const;

    long long length() const;                  // Coxeter length = #inversions
    bool is_descent(int i) const { return (*this)(i) > (*this)(i + 1); }
    std::vector<int> descents() const;         // all i with w(i) > w(i+1)

    // Demazure 0-Hecke actions. raise = w * tau_i, lower = w [] tau_i.
    Permutation hecke_raise(int i) const;
    Permutation hecke_lower(int i) const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

  private:
    void canonicalize();

    int lo_ = 1;
    std::vector<int> img_;   // images of lo_, lo_+1, ...
};

// ---- words and Demazure products ----

// Left-to-right 0-Hecke fold of a word. Letters may be any integers.
Permutation demazure_product(const Word& word);
// Checked variant: every letter must lie in [1, n-1].
Permutation demazure_product(const Word& word, int n);

bool is_reduced_word(const Word& word);

// All reduced words of w. Exponential; intended for small lengths.
std::set<Word> reduced_words(const Permutation& w);
// All words of length <= max_len whose Demazure product is w.
std::set<Word> hecke_words(const Permutation& w, int max_len);

// ---- diagrams ----

// Lehmer code (c_w(1),...,c_w(n)); requires support within [1,n].
std::vector<int> lehmer_code(const Permutation& w, int n);
CellSet rothe_diagram(const Permutation& w, int n);
Permutation permutation_from_lehmer(const std::vector<int>& code);

// Largest Young diagram contained in `cells`, as a partition, plus the
// addable cells of that diagram.
struct DominantPart {
    std::vector<int> lambda;
    CellSet addable;
};
DominantPart dominant_part(const CellSet& cells);
DominantPart dominant_part(const Permutation& w, int n);

// Leftmost column j with an addable cell (i,j) of dom(w) satisfying
// i + j <= n; nullopt iff w = w0.
std::optional<Cell> alpha_cell(const Permutation& w, int n);

// ---- Bruhat order ----

// rank table rk_w(a,b) = #{ i <= a : w(i) <= b } on [0,n]^2.
std::vector<std::vector<int>> rank_table(const Permutation& w, int n);
bool bruhat_leq(const Permutation& u, const Permutation& v, int n);
// Least upper bound within S_n, if it exists. Pointwise rank-min shortcut
// with brute-force fallback.
std::optional<Permutation> bruhat_join(const Permutation& u, const Permutation& v, int n);
std::vector<Permutation> all_permutations(int n);
// Closed Bruhat interval [u, v] within S_n.
std::vector<Permutation> bruhat_interval(const Permutation& u, const Permutation& v, int n);

// ---- co-transition index sets ----

// Rows a of the neighbors (a, w(a)) of the cell (i, w(i)).
std::set<int> phi_rows(const Permutation& w, int i);
// w_{U,i} = w t_{i,u_k} ... t_{i,u_1} for U = {u_1 < ... < u_k}.
Permutation w_sub_u(const Permutation& w, int i, const std::set<int>& U);

struct CotransitionSets {
    std::set<int> phi;                              // neighbor rows
    std::set<Permutation> Phi;                      // { w t_{i,j} : j in phi }
    std::set<Permutation> Phi_bar;                  // { w_{U,i} : U nonempty }
    std::map<std::set<int>, Permutation> by_subset; // U -> w_{U,i}, incl. empty
};
// Requires (i, w(i)) to be an addable cell of dom(w); n gives the ambient
// diagram bound used for that check.
CotransitionSets cotransition_sets(const Permutation& w, int i, int n);

// Multiplication by w0 of S_n on either side; requires support in [1,n].
Permutation mul_w0_left(const Permutation& w, int n);
Permutation mul_w0_right(const Permutation& w, int n);

}  // namespace schubertkit
