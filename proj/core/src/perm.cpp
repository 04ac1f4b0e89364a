#include "schubertkit/perm.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace schubertkit {

void Permutation::canonicalize() {
    int n = static_cast<int>(img_.size());
    int a = 0, b = n;
    while (a < b && img_[a] == lo_ + a) ++a;
    while (b > a && img_[b - 1] == lo_ + b - 1) --b;
    img_ = std::vector<int>(img_.begin() + a, img_.begin() + b);
    lo_ += a;
    if (img_.empty()) lo_ = 1;
}

Permutation Permutation::from_one_line(std::vector<int> images, int window_lo) {
    int n = static_cast<int>(images.size());
    std::vector<int> seen(n, 0);
    for (int v : images) {
        if (v < window_lo || v >= window_lo + n || seen[v - window_lo]++)
            throw std::domain_error("one-line notation is not a bijection of its window");
    }
    Permutation w;
    w.lo_ = window_lo;
    w.img_ = std::move(images);
    w.canonicalize();
    return w;
}

Permutation Permutation::simple(int i) { return transposition(i, i + 1); }

Permutation Permutation::transposition(int i, int j) {
    if (i == j) throw std::domain_error("transposition needs distinct points");
    if (i > j) std::swap(i, j);
    std::vector<int> img(j - i + 1);
    std::iota(img.begin(), img.end(), i);
    std::swap(img.front(), img.back());
    return from_one_line(std::move(img), i);
}

Permutation Permutation::longest(int n) {
    std::vector<int> img(n);
    for (int k = 0; k < n; ++k) img[k] = n - k;
    return from_one_line(std::move(img), 1);
}

int Permutation::operator()(int i) const {
    if (i < lo_ || i > hi()) return i;
    return img_[i - lo_];
}

std::vector<int> Permutation::one_line(int window_lo, int window_hi) const {
    if (!supported_on(window_lo, window_hi))
        throw std::domain_error("window does not contain the support");
    std::vector<int> out;
    out.reserve(window_hi - window_lo + 1);
    for (int i = window_lo; i <= window_hi; ++i) out.push_back((*this)(i));
    return out;
}

std::vector<int> Permutation::one_line(int n) const { return one_line(1, n); }

bool Permutation::supported_on(int window_lo, int window_hi) const {
    return is_identity() || (lo_ >= window_lo && hi() <= window_hi);
}

Permutation Permutation::inverse() const {
    Permutation w;
    w.lo_ = lo_;
    w.img_.resize(img_.size());
    for (int k = 0; k < static_cast<int>(img_.size()); ++k)
        w.img_[img_[k] - lo_] = lo_ + k;
    w.canonicalize();
    return w;
}

Permutation Permutation::operator*(const Permutation& other) const {
    if (is_identity()) return other;
    if (other.is_identity()) return *this;
    int a = std::min(lo_, other.lo_);
    int b = std::max(hi(), other.hi());
    Permutation w;
    w.lo_ = a;
    w.img_.reserve(b - a + 1);
    for (int i = a; i <= b; ++i) w.img_.push_back((*this)(other(i)));
    w.canonicalize();
    return w;
}

long long Permutation::length() const {
    long long inv = 0;
    int n = static_cast<int>(img_.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (img_[a] > img_[b]) ++inv;
    return inv;
}

std::vector<int> Permutation::descents() const {
    std::vector<int> out;
    for (int i = lo_ - 1; i <= hi(); ++i)
        if (is_descent(i)) out.push_back(i);
    return out;
}

Permutation Permutation::hecke_raise(int i) const {
    return is_descent(i) ? *this : *this * simple(i);
}

Permutation Permutation::hecke_lower(int i) const {
    return is_descent(i) ? *this * simple(i) : *this;
}

Permutation demazure_product(const Word& word) {
    Permutation w;
    for (int a : word) w = w.hecke_raise(a);
    return w;
}

Permutation demazure_product(const Word& word, int n) {
    for (int a : word)
        if (a < 1 || a > n - 1) throw std::domain_error("letter outside [1, n-1]");
    return demazure_product(word);
}

bool is_reduced_word(const Word& word) {
    Permutation w;
    for (int a : word) {
        if (w.is_descent(a)) return false;
        w = w * Permutation::simple(a);
    }
    return true;
}

namespace {

void reduced_words_rec(const Permutation& w, Word& suffix, std::set<Word>& out) {
    if (w.is_identity()) {
        Word word(suffix.rbegin(), suffix.rend());
        out.insert(std::move(word));
        return;
    }
    for (int i : w.descents()) {
        suffix.push_back(i);
        reduced_words_rec(w * Permutation::simple(i), suffix, out);
        suffix.pop_back();
    }
}

}  // namespace

std::set<Word> reduced_words(const Permutation& w) {
    std::set<Word> out;
    Word suffix;
    reduced_words_rec(w, suffix, out);
    return out;
}

std::set<Word> hecke_words(const Permutation& w, int max_len) {
    if (max_len < w.length()) throw std::domain_error("max_len below length");
    // words_m(w) = { a ++ (i) : i descent of w, a in words_{m-1}(w) or words_{m-1}(w s_i) }
    std::map<std::pair<Permutation, int>, std::set<Word>> memo;
    std::function<const std::set<Word>&(const Permutation&, int)> gen =
        [&](const Permutation& v, int m) -> const std::set<Word>& {
        auto key = std::make_pair(v, m);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::set<Word> words;
        if (m == 0) {
            if (v.is_identity()) words.insert(Word{});
        } else if (v.length() <= m) {
            for (int i : v.descents()) {
                for (const std::set<Word>* src :
                     {&gen(v, m - 1), &gen(v * Permutation::simple(i), m - 1)}) {
                    for (const Word& a : *src) {
                        Word b = a;
                        b.push_back(i);
                        words.insert(std::move(b));
                    }
                }
            }
        }
        return memo.emplace(key, std::move(words)).first->second;
    };
    std::set<Word> out;
    for (int m = static_cast<int>(w.length()); m <= max_len; ++m) {
        const auto& ws = gen(w, m);
        out.insert(ws.begin(), ws.end());
    }
    return out;
}

std::vector<int> lehmer_code(const Permutation& w, int n) {
    if (!w.supported_on(1, n)) throw std::domain_error("support exceeds [1,n]");
    std::vector<int> code(n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(i) > w(j)) ++code[i - 1];
    return code;
}

CellSet rothe_diagram(const Permutation& w, int n) {
    if (!w.supported_on(1, n)) throw std::domain_error("support exceeds [1,n]");
    Permutation winv = w.inverse();
    CellSet cells;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (j < w(i) && i < winv(j)) cells.insert({i, j});
    return cells;
}

Permutation permutation_from_lehmer(const std::vector<int>& code) {
    int n = static_cast<int>(code.size());
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> img;
    img.reserve(n);
    for (int i = 0; i < n; ++i) {
        int c = code[i];
        if (c < 0 || c >= static_cast<int>(pool.size()))
            throw std::domain_error("invalid Lehmer code entry");
        img.push_back(pool[c]);
        pool.erase(pool.begin() + c);
    }
    return Permutation::from_one_line(std::move(img));
}

DominantPart dominant_part(const CellSet& cells) {
    DominantPart out;
    int prev = std::numeric_limits<int>::max();
    for (int i = 1; prev > 0; ++i) {
        int len = 0;
        while (len < prev && cells.count({i, len + 1})) ++len;
        if (len == 0) break;
        out.lambda.push_back(len);
        prev = len;
    }
    const auto& l = out.lambda;
    auto row_len = [&](int i) { return i >= 1 && i <= static_cast<int>(l.size()) ? l[i - 1] : 0; };
    int rows = static_cast<int>(l.size());
    for (int i = 1; i <= rows + 1; ++i) {
        int j = row_len(i) + 1;
        if (i == 1 || j <= row_len(i - 1)) out.addable.insert({i, j});
    }
    return out;
}

DominantPart dominant_part(const Permutation& w, int n) {
    return dominant_part(rothe_diagram(w, n));
}

std::optional<Cell> alpha_cell(const Permutation& w, int n) {
    if (!w.supported_on(1, n)) throw std::domain_error("support exceeds [1,n]");
    DominantPart dom = dominant_part(w, n);
    std::optional<Cell> best;
    for (const Cell& c : dom.addable) {
        if (c.row + c.col > n) continue;
        if (!best || c.col < best->col) best = c;
    }
    return best;
}

std::vector<std::vector<int>> rank_table(const Permutation& w, int n) {
    if (!w.supported_on(1, n)) throw std::domain_error("support exceeds [1,n]");
    std::vector<std::vector<int>> rk(n + 1, std::vector<int>(n + 1, 0));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            rk[a][b] = rk[a - 1][b] + (w(a) <= b ? 1 : 0);
    return rk;
}

bool bruhat_leq(const Permutation& u, const Permutation& v, int n) {
    auto ru = rank_table(u, n), rv = rank_table(v, n);
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b)
            if (ru[a][b] < rv[a][b]) return false;
    return true;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_one_line(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::optional<Permutation> bruhat_join(const Permutation& u, const Permutation& v, int n) {
    auto ru = rank_table(u, n), rv = rank_table(v, n);
    // Fast path: reconstruct a permutation from the pointwise min, if valid.
    std::vector<std::vector<int>> rk(n + 1, std::vector<int>(n + 1, 0));
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) rk[a][b] = std::min(ru[a][b], rv[a][b]);
    std::vector<int> img(n, 0);
    bool valid = true;
    for (int a = 1; a <= n && valid; ++a) {
        int hits = 0;
        for (int b = 1; b <= n; ++b) {
            int d = rk[a][b] - rk[a - 1][b] - rk[a][b - 1] + rk[a - 1][b - 1];
            if (d == 1) {
                img[a - 1] = b;
                ++hits;
            } else if (d != 0) {
                valid = false;
                break;
            }
        }
        if (hits != 1) valid = false;
    }
    if (valid) {
        std::vector<int> seen(n + 1, 0);
        for (int b : img) {
            if (b < 1 || b > n || seen[b]++) {
                valid = false;
                break;
            }
        }
    }
    if (valid) {
        Permutation cand = Permutation::from_one_line(img);
        if (rank_table(cand, n) == rk) return cand;
    }
    // Brute force: unique minimal common upper bound, if any.
    std::vector<Permutation> ubs;
    for (const Permutation& w : all_permutations(n))
        if (bruhat_leq(u, w, n) && bruhat_leq(v, w, n)) ubs.push_back(w);
    std::vector<Permutation> minimal;
    for (const Permutation& w : ubs) {
        bool is_min = true;
        for (const Permutation& x : ubs)
            if (x != w && bruhat_leq(x, w, n)) {
                is_min = false;
                break;
            }
        if (is_min) minimal.push_back(w);
    }
    if (minimal.size() == 1) return minimal.front();
    return std::nullopt;
}

std::vector<Permutation> bruhat_interval(const Permutation& u, const Permutation& v, int n) {
    std::vector<Permutation> out;
    for (const Permutation& w : all_permutations(n))
        if (bruhat_leq(u, w, n) && bruhat_leq(w, v, n)) out.push_back(w);
    return out;
}

std::set<int> phi_rows(const Permutation& w, int i) {
    std::set<int> rows;
    int hi = std::max(w.hi(), i) + 1;
    for (int a = i + 1; a <= hi; ++a) {
        if (w(a) < w(i)) continue;
        bool blocked = false;
        for (int c = i + 1; c < a && !blocked; ++c)
            if (w(i) < w(c) && w(c) < w(a)) blocked = true;
        if (!blocked) rows.insert(a);
    }
    return rows;
}

Permutation w_sub_u(const Permutation& w, int i, const std::set<int>& U) {
    Permutation v = w;
    for (auto it = U.rbegin(); it != U.rend(); ++it)
        v = v * Permutation::transposition(i, *it);
    return v;
}

CotransitionSets cotransition_sets(const Permutation& w, int i, int n) {
    DominantPart dom = dominant_part(w, n);
    if (!dom.addable.count({i, w(i)}))
        throw std::domain_error("(i, w(i)) is not an addable cell of dom(w)");
    CotransitionSets out;
    out.phi = phi_rows(w, i);
    out.by_subset.emplace(std::set<int>{}, w);
    std::vector<int> rows(out.phi.begin(), out.phi.end());
    int k = static_cast<int>(rows.size());
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::set<int> U;
        for (int b = 0; b < k; ++b)
            if (mask & (1u << b)) U.insert(rows[b]);
        Permutation v = w_sub_u(w, i, U);
        if (U.size() == 1) out.Phi.insert(v);
        out.Phi_bar.insert(v);
        out.by_subset.emplace(std::move(U), std::move(v));
    }
    return out;
}

Permutation mul_w0_left(const Permutation& w, int n) {
    std::vector<int> img = w.one_line(n);
    for (int& v : img) v = n + 1 - v;
    return Permutation::from_one_line(std::move(img));
}

Permutation mul_w0_right(const Permutation& w, int n) {
    std::vector<int> img = w.one_line(n);
    std::reverse(img.begin(), img.end());
    return Permutation::from_one_line(std::move(img));
}

}  // namespace schubertkit
