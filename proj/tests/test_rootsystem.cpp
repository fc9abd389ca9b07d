#include "doctest.h"

#include "gsp/rootsystem.hpp"
#include "testutil.hpp"

#include <algorithm>
#include <set>

using namespace gsp;

TEST_CASE("root counts and families") {
    auto r3 = roots(3);
    CHECK(r3.size() == 18);
    int compact = 0, pos_nc = 0;
    for (auto& r : r3) {
        if (r.compact) ++compact;
        if (r.positive && !r.compact) ++pos_nc;
    }
    CHECK(compact == 6);
    CHECK(pos_nc == 6);

    auto r1 = roots(1);
    REQUIRE(r1.size() == 2);
    CHECK(r1[0].wt == Weight{2});
    CHECK(!r1[0].compact);

    auto r2 = roots(2);
    CHECK(r2.size() == 8);
    std::set<Weight> pos;
    for (auto& r : r2)
        if (r.positive) pos.insert(r.wt);
    CHECK(pos == std::set<Weight>{{2, 0}, {0, 2}, {1, 1}, {1, -1}});
}

TEST_CASE("rho") {
    CHECK(rho(3) == Weight{3, 2, 1});
    CHECK(rho(1) == Weight{1});
    CHECK(rho(4) == Weight{4, 3, 2, 1});
}

TEST_CASE("signed permutations compose like the hyperoctahedral group") {
    auto rng = gsptest::make_rng(1);
    auto random_elt = [&](int n) {
        SignedPerm w;
        w.perm.resize(static_cast<size_t>(n));
        w.signs.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) w.perm[static_cast<size_t>(i)] = i;
        std::shuffle(w.perm.begin(), w.perm.end(), rng);
        for (auto& s : w.signs) s = (rng() & 1) ? 1 : -1;
        return w;
    };
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        auto a = random_elt(n), b = random_elt(n);
        Weight x(static_cast<size_t>(n));
        for (auto& c : x) c = static_cast<long long>(rng() % 19) - 9;
        CHECK(act(compose(a, b), x) == act(a, act(b, x)));
        CHECK(act(compose(a, inverse(a)), x) == x);
        CHECK(act(compose(inverse(a), a), x) == x);
    }
}

TEST_CASE("coset representatives for n = 3, trivial weight") {
    auto reps = coset_reps(3, {0, 0, 0});
    REQUIRE(reps.size() == 8);
    std::vector<Weight> want = {{3, 2, 1},  {3, 2, -1},  {3, 1, -2},  {2, 1, -3},
                                {3, -1, -2}, {2, -1, -3}, {1, -2, -3}, {-1, -2, -3}};
    for (size_t i = 0; i < 8; ++i) {
        CHECK(reps[i].image == want[i]);
        CHECK(act(reps[i].w, Weight{3, 2, 1}) == want[i]);
        for (size_t j = 0; j + 1 < 3; ++j) CHECK(reps[i].image[j] > reps[i].image[j + 1]);
    }
}

TEST_CASE("coset representatives, tiny ranks") {
    auto r1 = coset_reps(1, {0});
    REQUIRE(r1.size() == 2);
    CHECK(r1[0].image == Weight{1});
    CHECK(r1[1].image == Weight{-1});

    auto r2 = coset_reps(2, {0, 0});
    REQUIRE(r2.size() == 4);
    CHECK(r2[0].image == Weight{2, 1});
    CHECK(r2[1].image == Weight{2, -1});
    CHECK(r2[2].image == Weight{1, -2});
    CHECK(r2[3].image == Weight{-1, -2});

    CHECK_THROWS_AS(coset_reps(2, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(coset_reps(2, {1, -1}), std::invalid_argument);
}

TEST_CASE("half sums") {
    auto hs = delta_sums({3, 2, 1}, 3);
    CHECK(hs.delta_g == std::vector<Rat>{3, 2, 1});
    CHECK(hs.delta_k == std::vector<Rat>{1, 0, -1});

    auto hs2 = delta_sums({2, 1, -3}, 3);
    CHECK(hs2.delta_g == std::vector<Rat>{2, 1, -3});

    auto hs1 = delta_sums({1}, 1);
    CHECK(hs1.delta_g == std::vector<Rat>{1});
    CHECK(hs1.delta_k == std::vector<Rat>{0});

    CHECK_THROWS_AS(delta_sums({2, 1, 1}, 3), std::invalid_argument); // singular
    CHECK_THROWS_AS(delta_sums({1, 0}, 2), std::invalid_argument);    // zero entry
}

TEST_CASE("half-integral compact half sums stay exact") {
    auto hs = delta_sums({2, 1}, 2);
    CHECK(hs.delta_k == std::vector<Rat>{Rat(1, 2), Rat(-1, 2)});
}

TEST_CASE("discrete series packet for n = 3, trivial weight") {
    auto packet = discrete_series_packet(3, {0, 0, 0});
    REQUIRE(packet.size() == 8);
    std::vector<Weight> mins = {{4, 4, 4},   {4, 4, 0},   {4, 2, -2},  {2, 2, -4},
                                {4, -2, -2}, {2, -2, -4}, {0, -4, -4}, {-4, -4, -4}};
    for (size_t i = 0; i < 8; ++i) CHECK(packet[i].min_k_type == mins[i]);

    // Hodge (3,3) members and the generic (4,2)/(2,4) ones
    for (auto& d : packet) {
        CHECK(d.hodge.first + d.hodge.second == 6);
        if (d.hc_param == Weight{2, 1, -3}) {
            CHECK(d.hodge == std::pair<int, int>{3, 3});
            CHECK(d.min_k_type == Weight{2, 2, -4});
        }
        if (d.hc_param == Weight{3, -1, -2}) {
            CHECK(d.hodge == std::pair<int, int>{3, 3});
            CHECK(d.min_k_type == Weight{4, -2, -2});
        }
        if (d.hc_param == Weight{3, 1, -2}) CHECK(d.hodge == std::pair<int, int>{4, 2});
        if (d.hc_param == Weight{2, -1, -3}) CHECK(d.hodge == std::pair<int, int>{2, 4});
    }
}

TEST_CASE("weight-one packet, SL(2) shape") {
    auto packet = discrete_series_packet(1, {0});
    REQUIRE(packet.size() == 2);
    CHECK(packet[0].min_k_type == Weight{2});
    CHECK(packet[1].min_k_type == Weight{-2});
}

TEST_CASE("delta_g equals the chamber image of rho") {
    for (int n = 1; n <= 5; ++n) {
        for (auto& rep : coset_reps(n, Weight(static_cast<size_t>(n), 0))) {
            auto hs = delta_sums(rep.image, n);
            Weight wrho = act(rep.w, rho(n));
            for (int i = 0; i < n; ++i)
                CHECK(hs.delta_g[static_cast<size_t>(i)] == Rat(wrho[static_cast<size_t>(i)]));
        }
    }
}

TEST_CASE("conjugation flip maps the packet to itself and swaps the Hodge type") {
    for (int n : {2, 3, 4}) {
        auto packet = discrete_series_packet(n, Weight(static_cast<size_t>(n), 0));
        std::set<std::pair<Weight, std::pair<int, int>>> items;
        for (auto& d : packet) items.insert({d.hc_param, d.hodge});
        for (auto& d : packet) {
            Weight flip(d.hc_param.rbegin(), d.hc_param.rend());
            for (auto& c : flip) c = -c;
            CHECK(items.count({flip, {d.hodge.second, d.hodge.first}}) == 1);
        }
    }
}

TEST_CASE("nonzero dominant weight shifts the packet") {
    auto packet = discrete_series_packet(3, {2, 1, 0});
    REQUIRE(packet.size() == 8);
    CHECK(packet[0].hc_param == Weight{5, 3, 1});
    for (auto& d : packet) CHECK(d.hodge.first + d.hodge.second == 6);
}
