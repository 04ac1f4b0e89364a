#include <doctest.h>

#include <algorithm>

#include "schubertkit/json_io.hpp"
#include "schubertkit/pipedream.hpp"
#include "test_util.hpp"

using namespace schubertkit;
using schubertkit::testing::cells;
using schubertkit::testing::perm;

namespace {

CellSet full_staircase(int n) {
    CellSet out;
    for (int r = 1; r <= n; ++r)
        for (int c = 1; r + c <= n; ++c) out.insert({r, c});
    return out;
}

}  // namespace

TEST_CASE("bottom pipe dreams") {
    CHECK(bottom_pipe_dream(Permutation::identity(), 4).crossings().empty());
    CHECK(bottom_pipe_dream(perm({2, 1, 4, 3}), 4).crossings() == cells({{1, 1}, {3, 1}}));
    CHECK(bottom_pipe_dream(Permutation::longest(5), 5).crossings() == full_staircase(5));
    for (const Permutation& w : all_permutations(4)) {
        PipeDream b = bottom_pipe_dream(w, 4);
        CHECK(b.delta() == w);
        CHECK(b.reduced());
    }
}

TEST_CASE("words, deltas and weights") {
    PipeDream p(5, cells({{1, 2}, {2, 1}, {2, 3}, {3, 1}}));
    CHECK(p.word() == Word{4, 2, 2, 3});
    CHECK(p.delta() == perm({1, 3, 5, 2, 4}));
    CHECK_FALSE(p.reduced());
    CHECK(p.weight() == MultiPoly::variable(1) * MultiPoly::variable(2, 2) *
                            MultiPoly::variable(3));
    CHECK(read_permutation(p.grid()) == p.delta());

    PipeDream empty(4, {});
    CHECK(empty.word().empty());
    CHECK(empty.delta() == Permutation::identity());
    CHECK(empty.weight() == MultiPoly::constant(1));

    CHECK_THROWS_AS(PipeDream(4, cells({{2, 3}})), std::domain_error);  // outside T_4
}

TEST_CASE("co-pipe dreams") {
    PipeDream p(5, cells({{1, 2}, {2, 1}, {2, 3}, {3, 1}}));
    CoPipeDream cp = co_pipe_dream(p);
    CHECK(cp.crossings() == cells({{2, 1}, {4, 2}, {4, 3}, {5, 1}, {5, 2}, {5, 4}}));
    CHECK(cp.word() == Word{4, 4, 2, 3, 1, 4});
    CHECK(demazure_product(cp.word()) == perm({3, 1, 5, 4, 2}));
    CHECK(cp.delta() == perm({2, 4, 5, 1, 3}));

    PipeDream top(4, full_staircase(4));
    CHECK(co_pipe_dream(top).crossings().empty());
    CHECK(co_pipe_dream(top).delta() == Permutation::longest(4));

    // the reading route and the word route agree on every subset
    for (auto& [w, pipes] : all_pipe_dreams_by_delta(4))
        for (const PipeDream& q : pipes) {
            CoPipeDream c = co_pipe_dream(q);
            CHECK(c.delta() == mul_w0_right(demazure_product(c.word()), 4));
        }
}

TEST_CASE("pipe dreams of 1423 match the known five") {
    Permutation w = perm({1, 4, 2, 3});
    std::set<PipeDream> all = enumerate_pipe_dreams(w, 4, false);
    std::set<PipeDream> expected = {
        PipeDream(4, cells({{1, 2}, {1, 3}})),          // co-permutation 1423, co reduced
        PipeDream(4, cells({{1, 3}, {2, 1}})),          // 2413
        PipeDream(4, cells({{2, 1}, {2, 2}})),          // 3412 (bottom)
        PipeDream(4, cells({{1, 2}, {1, 3}, {2, 1}})),  // 2413, co reduced
        PipeDream(4, cells({{1, 3}, {2, 1}, {2, 2}})),  // 3412
    };
    CHECK(all == expected);
    CHECK(enumerate_pipe_dreams(w, 4, true).size() == 3);

    CHECK(co_pipe_dream(PipeDream(4, cells({{1, 2}, {1, 3}}))).delta() == perm({1, 4, 2, 3}));
    std::multiset<Permutation> coperms, reduced_coperms;
    for (const PipeDream& p : all) {
        CoPipeDream c = co_pipe_dream(p);
        coperms.insert(c.delta());
        if (c.reduced()) reduced_coperms.insert(c.delta());
    }
    CHECK(coperms == std::multiset<Permutation>{perm({1, 4, 2, 3}), perm({2, 4, 1, 3}),
                                                perm({2, 4, 1, 3}), perm({3, 4, 1, 2}),
                                                perm({3, 4, 1, 2})});
    CHECK(reduced_coperms ==
          std::multiset<Permutation>{perm({1, 4, 2, 3}), perm({2, 4, 1, 3})});
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_pipe_dreams(perm({2, 1, 4, 3}), 4, true).size() == 3);
    CHECK(enumerate_pipe_dreams(perm({2, 1, 4, 3}), 4, false).size() == 7);
    Permutation w0 = Permutation::longest(4);
    CHECK(enumerate_pipe_dreams(w0, 4, true) ==
          std::set<PipeDream>{PipeDream(4, full_staircase(4))});
    CHECK(enumerate_pipe_dreams(w0, 4, false) ==
          std::set<PipeDream>{PipeDream(4, full_staircase(4))});
}

TEST_CASE("ladder moves") {
    // simple ladder and K-theoretic ladder on a 2x2 patch
    PipeDream p(3, cells({{2, 1}}));
    CHECK(ladder_successors(p, LadderKind::Ladder) ==
          std::set<PipeDream>{PipeDream(3, cells({{1, 2}}))});
    CHECK(ladder_successors(p, LadderKind::KTheoretic) ==
          std::set<PipeDream>{PipeDream(3, cells({{1, 2}, {2, 1}}))});

    // the two-column ladder: rungs in rows 2..4 and a foot at (5,1)
    PipeDream before(7, cells({{2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {5, 1}}));
    PipeDream ladder_after(7, cells({{1, 2}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}, {4, 2}}));
    PipeDream k_after(7,
                      cells({{1, 2}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {5, 1}}));
    CHECK(ladder_successors(before, LadderKind::Ladder).count(ladder_after) == 1);
    CHECK(ladder_successors(before, LadderKind::KTheoretic).count(k_after) == 1);

    // moves preserve the permutation
    for (const PipeDream& q : ladder_successors(before, LadderKind::Ladder))
        CHECK(q.delta() == before.delta());
    for (const PipeDream& q : ladder_successors(before, LadderKind::KTheoretic))
        CHECK(q.delta() == before.delta());

    CHECK(ladder_successors(PipeDream(4, full_staircase(4)), LadderKind::Ladder).empty());
    CHECK(ladder_successors(PipeDream(4, full_staircase(4)), LadderKind::KTheoretic).empty());
}

TEST_CASE("co-transition on pipe dreams") {
    auto small = pd_cotransition(Permutation::identity(), 2);
    REQUIRE(small.size() == 1);
    const auto& [src, img] = *small.begin();
    CHECK(src == PipeDream(2, {}));
    CHECK(img.first == PipeDream(2, cells({{1, 1}})));
    CHECK(img.second == perm({2, 1}));

    // image cardinalities partition by target permutation for 1243
    Permutation w = perm({1, 2, 4, 3});
    auto mapping = pd_cotransition(w, 4);
    CotransitionSets sets = cotransition_sets(w, alpha_cell(w, 4)->row, 4);
    std::map<Permutation, size_t> counts;
    for (auto& [p, qi] : mapping) counts[qi.second] += 1;
    size_t total = 0;
    for (const Permutation& u : sets.Phi_bar) {
        CHECK(counts[u] == enumerate_pipe_dreams(u, 4, false).size());
        total += counts[u];
    }
    CHECK(total == mapping.size());

    CHECK_THROWS_AS(pd_cotransition(Permutation::longest(4), 4), std::domain_error);
}

TEST_CASE("subword monotonicity") {
    auto by_delta = all_pipe_dreams_by_delta(4);
    std::vector<std::pair<PipeDream, Permutation>> all;
    for (auto& [w, pipes] : by_delta)
        for (const PipeDream& p : pipes) all.emplace_back(p, w);
    for (auto& [p, wp] : all)
        for (auto& [r, wr] : all) {
            if (!std::includes(r.crossings().begin(), r.crossings().end(),
                               p.crossings().begin(), p.crossings().end()))
                continue;
            CHECK(bruhat_leq(wp, wr, 4));
        }
    // downward: u <= delta(P) admits a sub-pipe-dream of u inside P
    for (auto& [p, wp] : all)
        for (const Permutation& u : all_permutations(4)) {
            if (!bruhat_leq(u, wp, 4)) continue;
            bool found = false;
            for (const PipeDream& q : by_delta[u])
                if (std::includes(p.crossings().begin(), p.crossings().end(),
                                  q.crossings().begin(), q.crossings().end()))
                    found = true;
            CHECK(found);
        }
}

TEST_CASE("pipe dream json") {
    PipeDream p(4, cells({{1, 2}, {2, 1}}));
    CHECK(to_json(p) == R"({"crossings":[[1,2],[2,1]],"n":4})");
    CHECK(pipedream_from_json(to_json(p)) == p);
}
