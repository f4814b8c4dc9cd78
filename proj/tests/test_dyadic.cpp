#include <doctest.h>

#include <cmath>

#include "frlp/dyadic.hpp"
#include "frlp/rng.hpp"

using namespace frlp;

TEST_CASE("tree construction validates alignment") {
    GridSpec g = make_grid(1, 8.0, 256);
    CHECK_NOTHROW(make_tree(g, 0, 8));
    CHECK_THROWS_AS(make_tree(g, 0, 9), Error);   // 512 cells > 256 samples
    GridSpec g2 = make_grid(1, 8.0, 96);
    CHECK_NOTHROW(make_tree(g2, 0, 5));           // 96 / 32 = 3
    CHECK_THROWS_AS(make_tree(g2, 0, 6), Error);  // 96 / 64 not integral
}

TEST_CASE("expectation of constants is the identity; scales validate") {
    GridSpec g = make_grid(1, 8.0, 64);
    auto tree = make_tree(g, 0, 6);
    Signal f(g);
    for (auto& z : f.v) z = {3.0, -1.0};
    for (int k = 0; k <= 6; ++k) {
        Signal e = expectation(f, tree, k);
        for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::abs(e.v[i] - f.v[i]) < 1e-15);
    }
    CHECK_THROWS_AS(expectation(f, tree, 7), Error);
    CHECK_THROWS_AS(difference(f, tree, 0), Error);
}

TEST_CASE("2-d expectations average square cells") {
    GridSpec g = make_grid(2, 8.0, 16);
    auto tree = make_tree(g, 0, 4);
    Rng rng(2);
    Signal f(g);
    for (auto& z : f.v) z = rng.cgauss();
    Signal e = expectation(f, tree, 3);  // cells of 2x2 samples
    for (int a = 0; a < 16; a += 2)
        for (int b = 0; b < 16; b += 2) {
            cplx avg = (f.at(a, b) + f.at(a + 1, b) + f.at(a, b + 1) + f.at(a + 1, b + 1)) / 4.0;
            CHECK(std::abs(e.at(a, b) - avg) < 1e-15);
            CHECK(std::abs(e.at(a + 1, b + 1) - avg) < 1e-15);
        }
    // twisted telescoping holds in 2-d as well
    FracParam p = frac_param(1.1);
    Signal acc = expectation(f, tree, 0, p);
    for (int k = 1; k <= 4; ++k) {
        Signal d = difference(f, tree, k, p);
        for (std::size_t i = 0; i < acc.size(); ++i) acc.v[i] += d.v[i];
    }
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::abs(acc.v[i] - f.v[i]) < 1e-12);
}

TEST_CASE("differences at distinct scales are orthogonal") {
    GridSpec g = make_grid(1, 8.0, 256);
    auto tree = make_tree(g, 0, 8);
    FracParam p = frac_param(1.3);
    Rng rng(3);
    Signal f(g);
    for (auto& z : f.v) z = rng.cgauss();
    auto inner = [&](const Signal& a, const Signal& b) {
        cplx acc{0.0, 0.0};
        for (std::size_t i = 0; i < a.size(); ++i) acc += a.v[i] * std::conj(b.v[i]);
        return std::abs(acc * g.dx());
    };
    Signal d3 = difference(f, tree, 3, p);
    Signal d5 = difference(f, tree, 5, p);
    Signal d8 = difference(f, tree, 8, p);
    double scale = lp_norm(f, 2.0) * lp_norm(f, 2.0);
    CHECK(inner(d3, d5) < 1e-12 * scale);
    CHECK(inner(d3, d8) < 1e-12 * scale);
    CHECK(inner(d5, d8) < 1e-12 * scale);
}

TEST_CASE("haar transform needs 1-d full-depth trees") {
    GridSpec g2 = make_grid(2, 8.0, 16);
    auto t2 = make_tree(g2, 0, 4);
    Signal f2(g2);
    CHECK_THROWS_AS(haar_transform(f2, t2), Error);

    GridSpec g = make_grid(1, 8.0, 256);
    auto shallow = make_tree(g, 0, 4);
    Signal f(g);
    CHECK_THROWS_AS(haar_transform(f, shallow), Error);
}

TEST_CASE("haar transform of a single chirped haar function is a unit coefficient") {
    GridSpec g = make_grid(1, 8.0, 64);
    auto tree = make_tree(g, 0, 6);
    FracParam p = frac_param(1.1);
    // build h_I^alpha for I = cell 1 at scale 2 (16 samples per cell)
    Signal h(g);
    int w = tree.cell_samples(2);
    double norm = 1.0 / std::sqrt(w * g.dx());
    int a = 1 * w;
    for (int i = 0; i < w / 2; ++i) h.v[std::size_t(a + i)] = {norm, 0.0};
    for (int i = w / 2; i < w; ++i) h.v[std::size_t(a + i)] = {-norm, 0.0};
    Signal ha = chirp_mul(h, p, ChirpDirection::inverse);
    auto hc = haar_transform(ha, tree, p);
    CHECK(std::abs(hc.scaling) < 1e-13);
    for (const auto& e : hc.entries) {
        double expect = (e.scale == 2 && e.offset == 1) ? 1.0 : 0.0;
        CHECK(std::abs(e.coef - cplx{expect, 0.0}) < 1e-12);
    }
}

TEST_CASE("haar coefficients serialize deterministically through the struct") {
    GridSpec g = make_grid(1, 8.0, 32);
    auto tree = make_tree(g, 0, 5);
    Rng rng(5);
    Signal f(g);
    for (auto& z : f.v) z = rng.cgauss();
    auto hc = haar_transform(f, tree);
    CHECK(hc.entries.size() == 31);  // 2^5 - 1 differences + scaling
    Signal back = inverse_haar(hc, tree);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::abs(back.v[i] - f.v[i]) < 1e-12);
}

TEST_CASE("dyadic square function vanishes on chirped constants") {
    GridSpec g = make_grid(1, 8.0, 256);
    auto tree = make_tree(g, 0, 8);
    FracParam p = frac_param(1.7);
    Signal c(g);
    for (int i = 0; i < g.samples; ++i) {
        double x = g.coord(i);
        c.v[std::size_t(i)] = std::polar(2.0, -std::numbers::pi * x * x * p.kappa);
    }
    Signal s = dyadic_square_function(c, tree, p);
    CHECK(lp_norm(s, std::numeric_limits<double>::infinity()) < 1e-13);
}

TEST_CASE("mixed probe reports equality and a decaying envelope") {
    GridSpec g = make_grid(1, 1.0, 512);
    auto tree = make_tree(g, 0, 9);
    auto bank = build_bank(g, 3, 7);
    FracParam p = frac_param(1.1);
    std::vector<std::pair<int, int>> pairs = {{5, 5}, {5, 3}, {5, 7}, {4, 8}, {6, 2}};
    auto rep = mixed_orthogonality_probe(tree, bank, pairs, p, 150, 0x5EED);
    CHECK(rep.rows.size() == pairs.size());
    for (const auto& row : rep.rows) CHECK(row.equality_err < 1e-8);
    CHECK(rep.baseline > 0.1);
    // |j-k| = 4 pairs sit well below the near-diagonal baseline
    for (const auto& row : rep.rows)
        if (row.distance >= 4) CHECK(row.classical_norm < rep.baseline * std::pow(2.0, -1.2));
}
