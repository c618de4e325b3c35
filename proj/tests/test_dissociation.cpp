#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "sbohr/dissociation.hpp"

using namespace sbohr;

namespace {

// independent full-enumeration reference for S-dissociativity
bool s_dissociated_slow(const CharacterSet& lambda, const CharacterSet& s) {
    const Group& g = lambda.group();
    const auto& mem = lambda.members();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < mem.size(); ++i) total *= 3;
    for (std::uint64_t code = 1; code < total; ++code) {
        std::uint64_t c = code;
        index_t v = 0;
        for (std::size_t i = 0; i < mem.size(); ++i) {
            const int d = int(c % 3);
            c /= 3;
            if (d == 1) v = g.add(v, mem[i]);
            if (d == 2) v = g.sub(v, mem[i]);
        }
        if (s.contains(v)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("standard basis of the cube is dissociated") {
    Group g = Group::make({2, 2, 2, 2});
    CharacterSet basis(g, {1, 2, 4, 8});
    CHECK(is_dissociated(basis).dissociated);
}

TEST_CASE("witness for {1,2,3}") {
    Group g = Group::make({100});
    CharacterSet lam(g, {1, 2, 3});
    auto r = is_dissociated(lam);
    REQUIRE_FALSE(r.dissociated);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->weight() == 3);
    CHECK(r.witness->signs == std::vector<int>{1, 1, -1});
    CHECK(r.witness->evaluate(g, lam.members()) == 0);
}

TEST_CASE("powers of two are dissociated in Z/100") {
    Group g = Group::make({100});
    CharacterSet lam(g, {1, 2, 4, 8, 16});
    CHECK(is_dissociated(lam).dissociated);
    CHECK(s_dissociated_slow(lam, CharacterSet::zero_only(g)));
}

TEST_CASE("s-dissociativity against the exhaustive scan") {
    Group g = Group::make({256});
    oracle::Rng rng(61);
    // S built from the transform of an interval cutoff, as downstream code does
    std::vector<index_t> interval;
    for (index_t x = 0; x <= 10; ++x) interval.push_back(x);
    for (index_t x = 246; x < 256; ++x) interval.push_back(x);
    Spectrum bh = stieltjes(GroupMeasure::uniform_on(g, interval));
    std::vector<index_t> smem;
    for (index_t gamma = 0; gamma < 256; ++gamma)
        if (std::abs(bh.coef[std::size_t(gamma)]) >= 1.0 / 3.0) smem.push_back(gamma);
    CharacterSet s(g, smem);
    REQUIRE(s.contains(0));
    REQUIRE(s.is_symmetric());

    for (int t = 0; t < 30; ++t) {
        std::vector<index_t> mem;
        for (int i = 0; i < 5; ++i) mem.push_back(1 + rng.below(255));
        CharacterSet lam(g, mem);
        CHECK(is_s_dissociated(lam, s).dissociated == s_dissociated_slow(lam, s));
    }

    // with S = {0} the relative notion collapses to the vanilla one
    for (int t = 0; t < 20; ++t) {
        std::vector<index_t> mem;
        for (int i = 0; i < 4; ++i) mem.push_back(1 + rng.below(255));
        CharacterSet lam(g, mem);
        CHECK(is_s_dissociated(lam, CharacterSet::zero_only(g)).dissociated ==
              is_dissociated(lam).dissociated);
    }
}

TEST_CASE("lambda inside S is rejected immediately") {
    Group g = Group::make({20});
    CharacterSet s(g, {0, 1, 19});
    CharacterSet lam(g, {1});
    auto r = is_s_dissociated(lam, s);
    CHECK_FALSE(r.dissociated);
    CHECK(r.witness->weight() == 1);
}

TEST_CASE("s-set validation") {
    Group g = Group::make({10});
    CharacterSet lam(g, {1, 2});
    CHECK_THROWS_AS(is_s_dissociated(lam, CharacterSet(g, {0, 1})), parse_error);   // asymmetric
    CHECK_THROWS_AS(is_s_dissociated(lam, CharacterSet(g, {1, 9})), parse_error);   // missing 0
    CharacterSet big(g, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    Group cube = Group::make(std::vector<std::int64_t>(21, 2));
    std::vector<index_t> toomany;
    for (index_t i = 0; i < 21; ++i) toomany.push_back(index_t(1) << i);
    CHECK_THROWS_AS(is_dissociated(CharacterSet(cube, toomany)), size_error);
}

TEST_CASE("greedy maximal subset") {
    Group g = Group::make({100});
    // already dissociated input comes back unchanged
    CharacterSet lam(g, {1, 2, 4, 8});
    auto r = max_dissociated_subset(lam, CharacterSet::zero_only(g));
    CHECK(r.lambda.members() == lam.members());
    CHECK_FALSE(r.budget_hit);

    // {1,2,3}: greedy keeps 1, 2 and drops 3 = 1+2
    auto r2 = max_dissociated_subset(CharacterSet(g, {1, 2, 3}), CharacterSet::zero_only(g));
    CHECK(r2.lambda.members() == std::vector<index_t>{1, 2});
    CHECK(span(r2.lambda).contains(3));

    // the full dual of F_2^3 collapses to a basis of size 3
    Group cube = Group::make({2, 2, 2});
    std::vector<index_t> all;
    for (index_t i = 0; i < 8; ++i) all.push_back(i);
    auto r3 = max_dissociated_subset(CharacterSet(cube, all), CharacterSet::zero_only(cube));
    CHECK(r3.lambda.size() == 3);
    CHECK(covers(CharacterSet(cube, all), r3.lambda, CharacterSet::zero_only(cube)));
}

TEST_CASE("span and rider counts") {
    Group g = Group::make({64});
    CHECK(span(CharacterSet::empty_set(g)).sorted_values() == std::vector<index_t>{0});

    CharacterSet lam(g, {1, 2, 4});
    REQUIRE(is_dissociated(lam).dissociated);
    CHECK(rider_count(lam, 0, 0) == 1);

    auto table = rider_counts_all(lam);
    for (const auto& [gamma, row] : table)
        for (std::size_t r = 0; r < row.size(); ++r)
            CHECK(row[r] <= (std::int64_t(1) << r));

    // spot values: gamma = 3 = 1+2 = -1+4 has two weight-2 patterns
    CHECK(rider_count(lam, 3, 2) == 2);
    CHECK(rider_count(lam, 7, 3) == 1);  // 7 = 1+2+4 only

    oracle::Rng rng(67);
    for (int t = 0; t < 10; ++t) {
        std::vector<index_t> mem;
        for (int i = 0; i < 6; ++i) mem.push_back(1 + rng.below(63));
        CharacterSet l2(g, mem);
        if (!is_dissociated(l2).dissociated) continue;
        auto tab = rider_counts_all(l2);
        for (const auto& [gamma, row] : tab)
            for (std::size_t r = 0; r < row.size(); ++r)
                CHECK(row[r] <= (std::int64_t(1) << r));
    }
}
