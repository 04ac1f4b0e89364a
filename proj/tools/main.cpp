#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "schubertkit/basis.hpp"
#include "schubertkit/bpd.hpp"
#include "schubertkit/json_io.hpp"
#include "schubertkit/perm.hpp"
#include "schubertkit/pipedream.hpp"
#include "schubertkit/poly.hpp"
#include "schubertkit/verify.hpp"

using namespace schubertkit;

namespace {

int max_enumeration_size() {
    const char* env = std::getenv("SCHUBERTKIT_MAX_N");
    if (!env) return 6;
    int v = std::atoi(env);
    return v > 0 ? v : 6;
}

// One-line permutation syntax: digits only for n <= 9 ("1423"), otherwise
// comma or space separated ("10,3,2,..."). The typed length fixes the
// ambient S_n even when trailing fixed points canonicalize away.
Permutation parse_perm(const std::string& text, int window_lo, int* typed_len = nullptr) {
    std::vector<int> img;
    if (text.find(',') == std::string::npos && text.find(' ') == std::string::npos) {
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw CLI::ValidationError("perm", "expected digits 1-9 or a comma separated list");
            img.push_back(ch - '0');
        }
    } else {
        std::string norm = text;
        for (char& ch : norm)
            if (ch == ',') ch = ' ';
        std::istringstream ss(norm);
        int v;
        while (ss >> v) img.push_back(v);
    }
    if (typed_len) *typed_len = window_lo - 1 + static_cast<int>(img.size());
    return Permutation::from_one_line(std::move(img), window_lo);
}

std::string perm_str(const Permutation& w, int pad_hi = 1) {
    int lo = std::min(w.lo(), 1);
    int hi = std::max(w.hi(), pad_hi);
    std::vector<int> img = w.one_line(lo, hi);
    bool digits = lo == 1 && hi <= 9;
    std::string out;
    for (size_t k = 0; k < img.size(); ++k) {
        if (!digits && k) out += ",";
        out += std::to_string(img[k]);
    }
    if (lo != 1) out += "@" + std::to_string(lo);
    return out;
}

std::string expansion_text(const ExpansionMap& e) {
    std::vector<std::pair<Permutation, long long>> sorted(e.coeffs.begin(), e.coeffs.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.first.length() != b.first.length()) return a.first.length() < b.first.length();
        return a.first < b.first;
    });
    std::string base = e.base == ExpansionBase::Schubert ? "S" : "G";
    std::string out;
    for (auto& [v, c] : sorted) {
        if (!out.empty()) out += " ";
        out += (c < 0 ? "-" : "+");
        long long a = c < 0 ? -c : c;
        if (a != 1) out += std::to_string(a);
        out += base + "[" + perm_str(v) + "]";
    }
    return out;
}

int ambient_size(const Permutation& w) { return std::max(w.hi(), 1); }

std::string word_str(const Word& w) {
    std::string out;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(w[k]);
    }
    return out;
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("file", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"schubertkit: pipe dreams, bumpless pipe dreams, and Schubert/Grothendieck "
                 "change of basis"};
    app.require_subcommand(1);

    // ---- expand ----
    auto* expand = app.add_subcommand("expand", "expand G_w over Schuberts or S_w over Grothendiecks");
    std::string expand_dir, expand_perm, expand_method = "bpd";
    int expand_lo = 1, expand_n = 0;
    bool expand_json = false;
    expand->add_option("direction", expand_dir)->required()->check(CLI::IsMember({"g2s", "s2g"}));
    expand->add_option("--perm", expand_perm)->required();
    expand->add_option("--method", expand_method)->check(CLI::IsMember({"bpd", "pd", "chains"}));
    expand->add_option("--window-lo", expand_lo);
    expand->add_option("--n", expand_n, "ambient size (default: window of perm)");
    expand->add_flag("--json", expand_json);

    // ---- enumerate ----
    auto* enumerate = app.add_subcommand("enumerate", "list pipe dreams / BPDs / co-objects of w");
    std::string enum_kind, enum_perm, enum_format = "ascii";
    bool enum_reduced = false;
    int enum_n = 0;
    enumerate->add_option("kind", enum_kind)
        ->required()
        ->check(CLI::IsMember({"pipedreams", "bpds", "copipedreams", "cobpds"}));
    enumerate->add_option("perm", enum_perm)->required();
    enumerate->add_flag("--reduced", enum_reduced);
    enumerate->add_option("--format", enum_format)->check(CLI::IsMember({"ascii", "json", "tikz"}));
    enumerate->add_option("--n", enum_n);

    // ---- poly ----
    auto* poly = app.add_subcommand("poly", "Schubert / Grothendieck polynomial of w");
    std::string poly_base, poly_perm, poly_beta = "formal";
    bool poly_json = false;
    poly->add_option("base", poly_base)->required()->check(CLI::IsMember({"schubert", "grothendieck"}));
    poly->add_option("perm", poly_perm)->required();
    poly->add_option("--beta", poly_beta, "integer or 'formal'");
    poly->add_flag("--json", poly_json);

    // ---- insert ----
    auto* insert = app.add_subcommand("insert", "column insertion on a reduced BPD");
    std::string insert_perm, insert_bpd_file, insert_format = "ascii";
    int insert_col = 0;
    insert->add_option("--perm", insert_perm)->required();
    insert->add_option("--column", insert_col)->required();
    insert->add_option("--bpd", insert_bpd_file, "grid JSON file (default: Rothe BPD of perm)");
    insert->add_option("--format", insert_format)->check(CLI::IsMember({"ascii", "json", "tikz"}));

    // ---- kappa ----
    auto* kap = app.add_subcommand("kappa", "canonical bijection on a reduced pipe dream");
    std::string kappa_perm, kappa_pd_file, kappa_format = "ascii";
    kap->add_option("perm", kappa_perm)->required();
    kap->add_option("--pipedream", kappa_pd_file)->required();
    kap->add_option("--format", kappa_format)->check(CLI::IsMember({"ascii", "json", "tikz"}));

    // ---- chains ----
    auto* chains = app.add_subcommand("chains", "co-transition chain graphs");
    int chains_n = 3;
    std::string chains_kind = "G", chains_from;
    chains->add_option("--n", chains_n)->required();
    chains->add_option("--kind", chains_kind)->check(CLI::IsMember({"G", "Gbar", "R"}));
    chains->add_option("--from", chains_from, "list paths from this permutation to w0");

    // ---- backstable ----
    auto* backstable = app.add_subcommand("backstable", "back stable Grothendieck to Schubert");
    std::string back_word;
    int back_cap = -1;
    bool back_json = false;
    backstable->add_option("--word", back_word, "word for w, e.g. \"2 1\" or \"0,2,1\"")->required();
    backstable->add_option("--degree-cap", back_cap)->required();
    backstable->add_flag("--json", back_json);

    // ---- render ----
    auto* render = app.add_subcommand("render", "re-render a tile grid JSON file");
    std::string render_file, render_format = "ascii";
    render->add_option("--file", render_file)->required();
    render->add_option("--format", render_format)->check(CLI::IsMember({"ascii", "json", "tikz"}));

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "replay the acceptance suite");
    int verify_n = 5;
    std::string verify_suite = "all";
    verify->add_option("--n", verify_n);
    verify->add_option("--suite", verify_suite)
        ->check(CLI::IsMember({"all", "basis", "kappa", "cotransition", "poly"}));

    CLI11_PARSE(app, argc, argv);

    try {
        int cap = max_enumeration_size();
        if (*expand) {
            int typed = 1;
            Permutation w = parse_perm(expand_perm, expand_lo, &typed);
            int n = expand_n ? expand_n : std::max(typed, ambient_size(w));
            if (n > cap) throw std::runtime_error("n exceeds SCHUBERTKIT_MAX_N");
            ExpandMethod method = expand_method_from_string(expand_method);
            ExpansionMap e = expand_dir == "g2s" ? groth_to_schub(w, n, method)
                                                 : schub_to_groth(w, n, method);
            std::cout << (expand_json ? to_json(e) : expansion_text(e)) << "\n";
        } else if (*enumerate) {
            int typed = 1;
            Permutation w = parse_perm(enum_perm, 1, &typed);
            int n = enum_n ? enum_n : std::max(typed, ambient_size(w));
            if (n > cap) throw std::runtime_error("n exceeds SCHUBERTKIT_MAX_N");
            std::vector<TileGrid> grids;
            std::vector<std::string> jsons;
            if (enum_kind == "pipedreams" || enum_kind == "copipedreams") {
                for (const PipeDream& p : enumerate_pipe_dreams(w, n, enum_reduced)) {
                    if (enum_kind == "pipedreams") {
                        grids.push_back(p.grid());
                        jsons.push_back(to_json(p));
                    } else {
                        CoPipeDream cp = co_pipe_dream(p);
                        grids.push_back(cp.grid());
                        jsons.push_back(to_json(cp));
                    }
                }
            } else {
                for (const Bpd& b : bpds_of(w, n, enum_reduced, cap)) {
                    if (enum_kind == "bpds") {
                        grids.push_back(b.grid());
                        jsons.push_back(to_json(b.grid()));
                    } else {
                        grids.push_back(co_bpd(b).grid());
                        jsons.push_back(to_json(co_bpd(b).grid()));
                    }
                }
            }
            if (enum_format == "json") {
                std::cout << "[";
                for (size_t k = 0; k < jsons.size(); ++k)
                    std::cout << (k ? "," : "") << "\n  " << jsons[k];
                std::cout << "\n]\n";
            } else {
                for (const TileGrid& g : grids)
                    std::cout << (enum_format == "ascii" ? render_ascii(g) : render_tikz(g)) << "\n";
            }
        } else if (*poly) {
            int typed = 1;
            Permutation w = parse_perm(poly_perm, 1, &typed);
            int n = std::max(typed, ambient_size(w));
            MultiPoly f;
            if (poly_base == "schubert") {
                f = schubert_polynomial(w, n);
            } else {
                f = grothendieck_polynomial_beta(w, n);
                if (poly_beta != "formal") f = f.substitute_beta(std::stoll(poly_beta));
            }
            std::cout << (poly_json ? to_json(f) : f.to_string()) << "\n";
        } else if (*insert) {
            int typed = 1;
            Permutation w = parse_perm(insert_perm, 1, &typed);
            int n = std::max(typed, ambient_size(w));
            if (n > cap) throw std::runtime_error("n exceeds SCHUBERTKIT_MAX_N");
            Bpd b = insert_bpd_file.empty()
                        ? rothe_bpd(w, n)
                        : Bpd(tilegrid_from_json(read_file(insert_bpd_file)));
            if (b.delta() != w) throw std::domain_error("BPD does not belong to the permutation");
            Bpd result = column_insert_general(b, insert_col).result;
            if (insert_format == "json") std::cout << to_json(result.grid()) << "\n";
            else if (insert_format == "tikz") std::cout << render_tikz(result.grid());
            else std::cout << render_ascii(result.grid());
        } else if (*kap) {
            Permutation w = parse_perm(kappa_perm, 1);
            PipeDream p = pipedream_from_json(read_file(kappa_pd_file));
            if (p.delta() != w) throw std::domain_error("pipe dream does not belong to the permutation");
            if (p.n() > cap) throw std::runtime_error("n exceeds SCHUBERTKIT_MAX_N");
            Bpd b = kappa(p);
            if (kappa_format == "json") std::cout << to_json(b.grid()) << "\n";
            else if (kappa_format == "tikz") std::cout << render_tikz(b.grid());
            else std::cout << render_ascii(b.grid());
        } else if (*chains) {
            if (chains_n > cap) throw std::runtime_error("n exceeds SCHUBERTKIT_MAX_N");
            ChainGraph g = chain_graph(chains_n, chain_graph_kind_from_string(chains_kind));
            if (chains_from.empty()) {
                for (const ChainEdge& e : g.edges)
                    std::cout << perm_str(e.source, chains_n) << " -(" << e.label.row << ","
                              << e.label.col << ")-> " << perm_str(e.target, chains_n) << "\n";
            } else {
                Permutation w = parse_perm(chains_from, 1);
                for (const Chain& p : paths_to_w0(g, w)) {
                    for (size_t k = 0; k < p.vertices.size(); ++k) {
                        if (k) std::cout << " -(" << p.labels[k - 1].row << ","
                                          << p.labels[k - 1].col << ")-> ";
                        std::cout << perm_str(p.vertices[k], chains_n);
                    }
                    std::cout << "  word=" << word_str(p.word())
                              << (p.reduced() ? "  reduced" : "  non-reduced") << "\n";
                }
            }
        } else if (*backstable) {
            std::string norm = back_word;
            for (char& ch : norm)
                if (ch == ',') ch = ' ';
            std::istringstream ss(norm);
            Word word;
            int v;
            while (ss >> v) word.push_back(v);
            Permutation w = demazure_product(word);
            BackstableExpansion e = backstable_g2s(w, back_cap, cap + 1);
            if (back_json) {
                ExpansionMap em{w, ExpansionBase::Schubert, e.coeffs};
                std::cout << to_json(em) << "\n";
            } else {
                std::vector<std::pair<Permutation, long long>> sorted(e.coeffs.begin(),
                                                                      e.coeffs.end());
                std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
                    if (a.first.length() != b.first.length())
                        return a.first.length() < b.first.length();
                    return a.first < b.first;
                });
                for (auto& [u, c] : sorted)
                    std::cout << (c < 0 ? "-" : "+") << (std::abs(c) != 1 ? std::to_string(std::abs(c)) : "")
                              << "S[" << perm_str(u) << "]\n";
            }
        } else if (*render) {
            for (const TileGrid& g : tilegrids_from_json(read_file(render_file))) {
                if (render_format == "json") std::cout << to_json(g) << "\n";
                else if (render_format == "tikz") std::cout << render_tikz(g);
                else std::cout << render_ascii(g) << "\n";
            }
        } else if (*verify) {
            auto results = run_acceptance(criteria_for_suite(verify_suite), verify_n);
            bool ok = true;
            for (const CriterionResult& r : results) {
                std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name
                          << " (" << r.seconds << "s)";
                if (!r.pass) std::cout << " -- " << r.detail;
                std::cout << "\n";
                ok = ok && r.pass;
            }
            return ok ? 0 : 1;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
