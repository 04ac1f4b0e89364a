#pragma once

#include <map>
#include <vector>

#include "schubertkit/bpd.hpp"
#include "schubertkit/perm.hpp"
#include "schubertkit/pipedream.hpp"
#include "schubertkit/poly.hpp"

namespace schubertkit {

enum class ExpansionBase { Schubert, Grothendieck };
enum class ExpandMethod { Bpd, Pd, Chains };

ExpandMethod expand_method_from_string(const std::string& s);

// Signed integer coefficients of a change-of-basis expansion. Signs are
// folded into the coefficients.
struct ExpansionMap {
    Permutation source;
    ExpansionBase base;  // basis being expanded into
    std::map<Permutation, long long> coeffs;

    bool operator==(const ExpansionMap&) const = default;
};

// Grothendieck into Schubert: signed counts of objects with reduced
// co-object, bucketed by co-permutation.
ExpansionMap groth_to_schub(const Permutation& w, int n, ExpandMethod method);
// Schubert into Grothendieck: counts of reduced objects bucketed by
// co-permutation; all coefficients positive.
ExpansionMap schub_to_groth(const Permutation& w, int n, ExpandMethod method);

// ---- chain graphs ----

enum class ChainGraphKind { G, Gbar, R };

ChainGraphKind chain_graph_kind_from_string(const std::string& s);

struct ChainEdge {
    Permutation source;
    Cell label;  // the alpha cell (i, j) of the source
    Permutation target;
    auto operator<=>(const ChainEdge&) const = default;
};

struct ChainGraph {
    int n;
    ChainGraphKind kind;
    std::vector<ChainEdge> edges;  // sorted
};

ChainGraph chain_graph(int n, ChainGraphKind kind);

struct Chain {
    std::vector<Permutation> vertices;  // w = v_0, ..., v_k = w0
    std::vector<Cell> labels;

    Word word() const;  // edge rows read back to front
    bool reduced() const { return is_reduced_word(word()); }
    // Exponent of x_r in wt(p) = number of edges in row r.
    std::map<int, int> weight_exponents() const;
};

std::vector<Chain> paths_to_w0(const ChainGraph& g, const Permutation& w);

// Staircase monomial times sum of 1/wt(p); kind G gives the Schubert
// polynomial, Gbar the beta=1 Grothendieck polynomial. Quotients are taken
// by exponent subtraction and checked nonnegative.
MultiPoly chain_monomial_formula(const Permutation& w, int n, ChainGraphKind kind);

// T_n minus the edge labels of the path.
PipeDream path_to_pipedream(const Chain& p, int n);

// ---- back stable expansion ----

struct BackstableExpansion {
    Permutation source;
    int degree_cap;
    std::map<Permutation, long long> coeffs;  // signed, lengths <= degree_cap
    int stabilized_lo;                        // left end of the first stable window
};

// Coefficients of the back stable Grothendieck-to-Schubert expansion,
// computed through finite windows extended leftward until two consecutive
// windows agree on all lengths <= degree_cap.
BackstableExpansion backstable_g2s(const Permutation& w, int degree_cap,
                                   int window_cap = kDefaultBpdCap);

// Windowed polynomial evaluations: the shifted ordinary polynomials on the
// alphabet x_p..x_q.
MultiPoly windowed_schubert(const Permutation& w, int p, int q);
MultiPoly windowed_grothendieck_beta(const Permutation& w, int p, int q);

// Compatible-sequence monomial sums over red(w) / hecke(w); the hecke sum is
// truncated to words of length <= max_len (each word of length L contributes
// degree-L monomials only). Grothendieck terms carry sign (-1)^{L - l(w)}.
MultiPoly compat_schubert(const Permutation& w, int p, int q);
MultiPoly compat_grothendieck(const Permutation& w, int p, int q, int max_len);

}  // namespace schubertkit
