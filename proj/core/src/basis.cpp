#include "schubertkit/basis.hpp"

#include <algorithm>
#include <functional>

namespace schubertkit {

ExpandMethod expand_method_from_string(const std::string& s) {
    if (s == "bpd") return ExpandMethod::Bpd;
    if (s == "pd") return ExpandMethod::Pd;
    if (s == "chains") return ExpandMethod::Chains;
    throw std::domain_error("unknown method: " + s);
}

ChainGraphKind chain_graph_kind_from_string(const std::string& s) {
    if (s == "G") return ChainGraphKind::G;
    if (s == "Gbar") return ChainGraphKind::Gbar;
    if (s == "R") return ChainGraphKind::R;
    throw std::domain_error("unknown chain graph kind: " + s);
}

namespace {

long long g2s_sign(const Permutation& v, const Permutation& w) {
    return ((v.length() - w.length()) % 2 == 0) ? 1 : -1;
}

}  // namespace

ExpansionMap groth_to_schub(const Permutation& w, int n, ExpandMethod method) {
    ExpansionMap out{w, ExpansionBase::Schubert, {}};
    switch (method) {
        case ExpandMethod::Bpd:
            for (const Bpd& b : bpds_of(w, n, /*reduced=*/false)) {
                CoBpd cb = co_bpd(b);
                if (!cb.reduced()) continue;
                Permutation v = cb.delta();
                out.coeffs[v] += g2s_sign(v, w);
            }
            break;
        case ExpandMethod::Pd:
            for (const PipeDream& p : enumerate_pipe_dreams(w, n, /*reduced=*/false)) {
                CoPipeDream cp = co_pipe_dream(p);
                if (!cp.reduced()) continue;
                Permutation v = cp.delta();
                out.coeffs[v] += g2s_sign(v, w);
            }
            break;
        case ExpandMethod::Chains: {
            ChainGraph g = chain_graph(n, ChainGraphKind::R);
            for (const Chain& p : paths_to_w0(g, w)) {
                if (!p.reduced()) continue;
                Permutation v = mul_w0_left(demazure_product(p.word()), n);
                out.coeffs[v] += g2s_sign(v, w);
            }
            break;
        }
    }
    std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
    return out;
}

ExpansionMap schub_to_groth(const Permutation& w, int n, ExpandMethod method) {
    ExpansionMap out{w, ExpansionBase::Grothendieck, {}};
    switch (method) {
        case ExpandMethod::Bpd:
            for (const Bpd& b : bpds_of(w, n, /*reduced=*/true)) out.coeffs[co_bpd(b).delta()] += 1;
            break;
        case ExpandMethod::Pd:
            for (const PipeDream& p : enumerate_pipe_dreams(w, n, /*reduced=*/true))
                out.coeffs[co_pipe_dream(p).delta()] += 1;
            break;
        case ExpandMethod::Chains: {
            ChainGraph g = chain_graph(n, ChainGraphKind::G);
            for (const Chain& p : paths_to_w0(g, w))
                out.coeffs[mul_w0_left(demazure_product(p.word()), n)] += 1;
            break;
        }
    }
    return out;
}

ChainGraph chain_graph(int n, ChainGraphKind kind) {
    ChainGraph g{n, kind, {}};
    Permutation w0 = Permutation::longest(n);
    for (const Permutation& w : all_permutations(n)) {
        if (w == w0) continue;
        Cell cell = *alpha_cell(w, n);
        int i = cell.row;
        CotransitionSets sets = cotransition_sets(w, i, n);
        const std::set<Permutation>& targets =
            kind == ChainGraphKind::G ? sets.Phi : sets.Phi_bar;
        Permutation wsi = w * Permutation::simple(i);
        for (const Permutation& u : targets) {
            if (kind == ChainGraphKind::R && !bruhat_leq(wsi, u, n)) continue;
            g.edges.push_back({w, cell, u});
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

Word Chain::word() const {
    Word w;
    for (auto it = labels.rbegin(); it != labels.rend(); ++it) w.push_back(it->row);
    return w;
}

std::map<int, int> Chain::weight_exponents() const {
    std::map<int, int> out;
    for (const Cell& c : labels) ++out[c.row];
    return out;
}

std::vector<Chain> paths_to_w0(const ChainGraph& g, const Permutation& w) {
    Permutation w0 = Permutation::longest(g.n);
    std::map<Permutation, std::vector<const ChainEdge*>> out_edges;
    for (const ChainEdge& e : g.edges) out_edges[e.source].push_back(&e);
    std::vector<Chain> paths;
    Chain current;
    current.vertices.push_back(w);
    std::function<void(const Permutation&)> dfs = [&](const Permutation& v) {
        if (v == w0) {
            paths.push_back(current);
            return;
        }
        for (const ChainEdge* e : out_edges[v]) {
            current.vertices.push_back(e->target);
            current.labels.push_back(e->label);
            dfs(e->target);
            current.vertices.pop_back();
            current.labels.pop_back();
        }
    };
    dfs(w);
    return paths;
}

MultiPoly chain_monomial_formula(const Permutation& w, int n, ChainGraphKind kind) {
    if (kind == ChainGraphKind::R)
        throw std::domain_error("monomial path formula applies to G and Gbar");
    ChainGraph g = chain_graph(n, kind);
    std::vector<int> staircase(n + 1, 0);
    for (int i = 1; i < n; ++i) staircase[i] = n - i;
    MultiPoly out;
    for (const Chain& p : paths_to_w0(g, w)) {
        Monomial m;
        std::map<int, int> wt = p.weight_exponents();
        for (int i = 1; i <= n; ++i) {
            int e = staircase[i] - (wt.count(i) ? wt.at(i) : 0);
            if (e < 0) throw std::logic_error("path weight does not divide the staircase");
            if (e > 0) m.xs.emplace_back(i, e);
        }
        out.add_term(std::move(m), 1);
    }
    return out;
}

PipeDream path_to_pipedream(const Chain& p, int n) {
    if (p.vertices.empty() || p.vertices.back() != Permutation::longest(n))
        throw std::domain_error("path must end at the longest permutation");
    CellSet cells;
    for (int r = 1; r <= n; ++r)
        for (int c = 1; r + c <= n; ++c) cells.insert({r, c});
    for (const Cell& lab : p.labels) {
        if (!cells.count(lab)) throw std::domain_error("path labels repeat a cell");
        cells.erase(lab);
    }
    return PipeDream(n, std::move(cells));
}

// ---- back stable ----

namespace {

// Coefficient map of the window [lo, hi]: shifted finite computation.
std::map<Permutation, long long> window_g2s(const Permutation& w, int lo, int hi, int degree_cap,
                                            int cap) {
    int m = hi - lo + 1;
    std::vector<int> img = w.one_line(lo, hi);
    for (int& v : img) v -= lo - 1;
    Permutation shifted = Permutation::from_one_line(std::move(img));
    std::map<Permutation, long long> out;
    for (const Bpd& b : bpds_of(shifted, m, /*reduced=*/false, cap)) {
        CoBpd cb = co_bpd(b);
        if (!cb.reduced()) continue;
        Permutation v = cb.delta();
        if (v.length() > degree_cap) continue;
        std::vector<int> vimg = v.one_line(1, m);
        for (int& x : vimg) x += lo - 1;
        Permutation vz = Permutation::from_one_line(std::move(vimg), lo);
        out[vz] += ((vz.length() - w.length()) % 2 == 0) ? 1 : -1;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

}  // namespace

BackstableExpansion backstable_g2s(const Permutation& w, int degree_cap, int window_cap) {
    if (degree_cap < w.length()) throw std::domain_error("degree cap below length of w");
    int hi = std::max(w.hi(), w.lo());
    int lo = std::min(w.lo(), hi);
    auto prev = window_g2s(w, lo, hi, degree_cap, window_cap);
    while (true) {
        int next_lo = lo - 1;
        if (hi - next_lo + 1 > window_cap)
            throw std::runtime_error("back stable window exceeds enumeration cap");
        auto cur = window_g2s(w, next_lo, hi, degree_cap, window_cap);
        if (cur == prev) return {w, degree_cap, std::move(cur), next_lo};
        prev = std::move(cur);
        lo = next_lo;
    }
}

MultiPoly windowed_schubert(const Permutation& w, int p, int q) {
    if (!w.supported_on(p, q)) return {};
    std::vector<int> img = w.one_line(p, q);
    for (int& v : img) v -= p - 1;
    Permutation shifted = Permutation::from_one_line(std::move(img));
    return schubert_polynomial(shifted, q - p + 1).shift_vars(p - 1);
}

MultiPoly windowed_grothendieck_beta(const Permutation& w, int p, int q) {
    if (!w.supported_on(p, q)) return {};
    std::vector<int> img = w.one_line(p, q);
    for (int& v : img) v -= p - 1;
    Permutation shifted = Permutation::from_one_line(std::move(img));
    return grothendieck_polynomial_beta(shifted, q - p + 1).shift_vars(p - 1);
}

namespace {

// Sum of x_{b_1}...x_{b_L} over p <= b_1 <= ... <= b_L <= q with b_i <= a_i
// and strict growth at weak ascents of the word.
MultiPoly compat_sum(const Word& a, int p, int q) {
    int L = static_cast<int>(a.size());
    MultiPoly total;
    Monomial m;
    std::function<void(int, int)> rec = [&](int idx, int min_b) {
        if (idx == L) {
            total.add_term(m, 1);
            return;
        }
        for (int b = min_b; b <= std::min(q, a[idx]); ++b) {
            Monomial saved = m;
            bool found = false;
            for (auto& [v, e] : m.xs)
                if (v == b) {
                    ++e;
                    found = true;
                }
            if (!found) {
                m.xs.emplace_back(b, 1);
                std::sort(m.xs.begin(), m.xs.end());
            }
            bool strict = idx + 1 < L && a[idx] <= a[idx + 1];
            rec(idx + 1, strict ? b + 1 : b);
            m = std::move(saved);
        }
    };
    rec(0, p);
    return total;
}

}  // namespace

MultiPoly compat_schubert(const Permutation& w, int p, int q) {
    MultiPoly out;
    for (const Word& a : reduced_words(w)) out = out + compat_sum(a, p, q);
    return out;
}

MultiPoly compat_grothendieck(const Permutation& w, int p, int q, int max_len) {
    MultiPoly out;
    for (const Word& a : hecke_words(w, max_len)) {
        long long sign = ((static_cast<long long>(a.size()) - w.length()) % 2 == 0) ? 1 : -1;
        out = out + compat_sum(a, p, q) * sign;
    }
    return out;
}

}  // namespace schubertkit
