#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "sbohr/group.hpp"

using namespace sbohr;
using Catch::Approx;

namespace {
double sup_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}
}  // namespace

TEST_CASE("make_group basic shapes") {
    Group z17 = Group::make({17});
    CHECK(z17.order() == 17);
    CHECK(z17.kind() == Group::Kind::cyclic);

    Group cube = Group::make(std::vector<std::int64_t>(12, 2));
    CHECK(cube.order() == 4096);
    CHECK(cube.kind() == Group::Kind::boolean_cube);

    Group z43 = Group::make({4, 3});
    CHECK(z43.order() == 12);
    CHECK(z43.kind() == Group::Kind::mixed);

    CHECK_THROWS_AS(Group::make({1, 5}), size_error);
    CHECK_THROWS_AS(Group::make({1 << 13, 1 << 13}), size_error);  // 2^26 over cap
}

TEST_CASE("element arithmetic and pairing") {
    Group g = Group::make({4, 3});
    // index = x0 + 4*x1
    index_t a = g.from_coords({3, 2});
    index_t b = g.from_coords({2, 2});
    CHECK(g.add(a, b) == g.from_coords({1, 1}));
    CHECK(g.neg(a) == g.from_coords({1, 1}));
    CHECK(g.sub(a, a) == 0);
    CHECK(g.element_order(g.from_coords({1, 0})) == 4);
    CHECK(g.element_order(g.from_coords({1, 1})) == 12);

    // pairing is a bilinear unit-modulus form
    for (index_t gamma = 0; gamma < g.order(); ++gamma)
        for (index_t x = 0; x < g.order(); ++x) {
            CHECK(std::abs(g.pairing(gamma, x)) == Approx(1.0));
            CHECK(std::abs(g.pairing(gamma, g.add(x, b)) -
                           g.pairing(gamma, x) * g.pairing(gamma, b)) < 1e-12);
        }

    // valuation is exact: on Z/12 the character 3 at x=2 has value e^{2 pi i /2}
    Group z12 = Group::make({12});
    CHECK(z12.valuation(3, 2) == Approx(0.5));
    CHECK(z12.valuation(3, 4) == 0.0);
}

TEST_CASE("character column matches pairing") {
    Group g = Group::make({5, 2, 3});
    oracle::Rng rng(11);
    for (int t = 0; t < 4; ++t) {
        index_t gamma = rng.below(g.order());
        auto col = g.character_column(gamma);
        for (index_t x = 0; x < g.order(); ++x)
            CHECK(std::abs(col[std::size_t(x)] - g.pairing(gamma, x)) < 1e-12);
    }
}

TEST_CASE("fourier of constant and characters") {
    Group g = Group::make({6, 4});
    Spectrum s = fourier(GroupFunction::constant(g, 1.0));
    CHECK(std::abs(s.coef[0] - 1.0) < 1e-12);
    for (index_t gamma = 1; gamma < g.order(); ++gamma)
        CHECK(std::abs(s.coef[std::size_t(gamma)]) < 1e-12);

    index_t g0 = g.from_coords({2, 3});
    Spectrum s2 = fourier(GroupFunction::character(g, g0));
    for (index_t gamma = 0; gamma < g.order(); ++gamma) {
        const cplx want = (gamma == g0) ? 1.0 : 0.0;
        CHECK(std::abs(s2.coef[std::size_t(gamma)] - want) < 1e-12);
    }
}

TEST_CASE("fourier of chi_{0,1} on Z/4") {
    Group g = Group::make({4});
    Spectrum s = fourier(GroupFunction::indicator(g, {0, 1}));
    CHECK(std::abs(s.coef[0] - 0.5) < 1e-12);
    CHECK(std::abs(s.coef[1]) == Approx(std::sqrt(2.0) / 4.0));
    CHECK(std::abs(s.coef[2]) < 1e-12);
    CHECK(std::abs(s.coef[3]) == Approx(std::sqrt(2.0) / 4.0));
}

TEST_CASE("fast transform equals direct oracle") {
    oracle::Rng rng(23);
    for (auto factors : std::vector<std::vector<std::int64_t>>{
             {16}, {2, 2, 2, 2, 2, 2}, {12}, {4, 3}, {5, 5, 5}, {127}, {60, 9}}) {
        Group g = Group::make(factors);
        GroupFunction f = oracle::random_function(g, rng);
        Spectrum fast = fourier(f);
        Spectrum slow = oracle::dft_direct(f);
        CHECK(sup_diff(fast.coef, slow.coef) < 1e-10);
    }
}

TEST_CASE("roundtrip and single-coefficient inversion") {
    oracle::Rng rng(5);
    Group g = Group::make({128, 128});  // |G| = 2^14
    GroupFunction f = oracle::random_function(g, rng);
    GroupFunction back = inverse(fourier(f));
    double sup = 0.0, ref = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        sup = std::max(sup, std::abs(back.values[i] - f.values[i]));
        ref = std::max(ref, std::abs(f.values[i]));
    }
    CHECK(sup <= 1e-10 * ref);

    Group h = Group::make({9});
    const cplx c(0.3, -0.7);
    GroupFunction one = inverse(Spectrum::unit(h, 0, 1.0));
    for (cplx v : one.values) CHECK(std::abs(v - 1.0) < 1e-12);
    GroupFunction tw = inverse(Spectrum::unit(h, 4, c));
    for (index_t x = 0; x < h.order(); ++x)
        CHECK(std::abs(tw.values[std::size_t(x)] - c * h.pairing(4, x)) < 1e-12);
}

TEST_CASE("parseval on random functions") {
    oracle::Rng rng(7);
    for (auto factors : std::vector<std::vector<std::int64_t>>{{64}, {2, 2, 2, 2, 2}, {7, 11}}) {
        Group g = Group::make(factors);
        for (int t = 0; t < 20; ++t) {
            GroupFunction f = oracle::random_function(g, rng);
            double l2sq = norm(f, NormKind::L2);
            l2sq *= l2sq;
            double coefsq = 0.0;
            for (cplx c : fourier(f).coef) coefsq += std::norm(c);
            CHECK(std::abs(coefsq - l2sq) <= 1e-10 * (1.0 + l2sq));
        }
    }
}

TEST_CASE("convolution identities") {
    Group g = Group::make({12});
    oracle::Rng rng(9);
    GroupFunction f = oracle::random_function(g, rng);

    // point mass at 0 is the identity
    GroupFunction same = convolve(f, GroupMeasure::point_mass(g, 0));
    CHECK(sup_diff(same.values, f.values) < 1e-10);

    // uniform measure on the subgroup {0,4,8} is idempotent
    GroupMeasure beta = GroupMeasure::uniform_on(g, {0, 4, 8});
    GroupMeasure beta2 = convolve(beta, beta);
    CHECK(sup_diff(beta2.weights, beta.weights) < 1e-12);

    // chi_A * beta matches the direct double sum
    GroupFunction chi = GroupFunction::indicator(g, {0, 1, 2, 3, 4, 5});
    GroupFunction viaFft = convolve(chi, beta);
    GroupFunction viaSum = oracle::convolve_direct(chi, beta);
    CHECK(sup_diff(viaFft.values, viaSum.values) < 1e-10);

    // transform multiplicativity for functions
    GroupFunction h = oracle::random_function(g, rng);
    Spectrum lhs = fourier(convolve(f, h));
    Spectrum fa = fourier(f), fb = fourier(h);
    for (std::size_t i = 0; i < lhs.coef.size(); ++i)
        CHECK(std::abs(lhs.coef[i] - fa.coef[i] * fb.coef[i]) < 1e-10);

    Group other = Group::make({13});
    CHECK_THROWS_AS(convolve(f, GroupFunction::constant(other, 1.0)), parse_error);
}

TEST_CASE("norms") {
    Group g = Group::make({10});
    GroupFunction one = GroupFunction::constant(g, 1.0);
    for (auto k : {NormKind::L1, NormKind::L2, NormKind::Linf, NormKind::A})
        CHECK(norm(one, k) == Approx(1.0));

    Group z = Group::make({37});
    GroupFunction d0 = GroupFunction::indicator(z, {0});
    CHECK(norm(d0, NormKind::L1) == Approx(1.0 / 37.0));
    CHECK(norm(d0, NormKind::A) == Approx(1.0));

    // golden: A-norm of chi_{0..8} on Z/17 from the direct-DFT oracle
    Group z17 = Group::make({17});
    GroupFunction chi = GroupFunction::indicator(z17, {0, 1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(norm(chi, NormKind::A) == Approx(1.8831766679451896).epsilon(1e-10));
    CHECK(norm(chi, NormKind::A) == Approx(oracle::anorm_direct(chi)).epsilon(1e-11));

    // Hausdorff triviality: A_f >= 1
    oracle::Rng rng(3);
    for (int t = 0; t < 10; ++t) {
        GroupFunction f = oracle::random_function(z17, rng);
        CHECK(af_ratio(f) >= 1.0 - 1e-9);
    }
    CHECK_THROWS_AS(af_ratio(GroupFunction(z17)), degenerate_error);
    CHECK(tv_norm(GroupMeasure::haar(z)) == Approx(1.0));
}

TEST_CASE("stieltjes transform bounded by tv norm") {
    Group g = Group::make({8, 3});
    oracle::Rng rng(17);
    GroupMeasure mu(g);
    for (auto& w : mu.weights) w = rng.complex_unit_box();
    Spectrum s = stieltjes(mu);
    Spectrum slow = oracle::stieltjes_direct(mu);
    CHECK(sup_diff(s.coef, slow.coef) < 1e-10);
    const double tv = tv_norm(mu);
    for (cplx c : s.coef) CHECK(std::abs(c) <= tv + 1e-12);
}

TEST_CASE("recenter and measure translation") {
    Group g = Group::make({11});
    oracle::Rng rng(31);
    GroupFunction f = oracle::random_function(g, rng);
    GroupFunction r = recenter(f, 4);
    for (index_t t = 0; t < 11; ++t)
        CHECK(r.values[std::size_t(t)] == f.values[std::size_t((t + 4) % 11)]);

    GroupMeasure mu = GroupMeasure::point_mass(g, 2);
    GroupMeasure shifted = translate(mu, 5);
    CHECK(std::abs(shifted.weights[7] - 1.0) < 1e-15);
}
