#include "doctest.h"

#include <cstdint>

#include "daugavet/models.hpp"

using dgv::AtomicSpec;
using dgv::C0FactoredSpec;
using dgv::DensitySpec;
using dgv::Expression;
using dgv::GridModel;
using dgv::InputError;
using dgv::KernelOperator;
using dgv::KernelSpec;
using dgv::MeasureSpec;
using dgv::Rational;
using dgv::RankOneSpec;

TEST_CASE("grid midpoints are exact odd multiples") {
    GridModel g(4);
    CHECK(g.point(0) == Rational(1, 8));
    CHECK(g.point(3) == Rational(7, 8));
    CHECK(g.point_d(1) == 0.375);
    CHECK_THROWS_AS(GridModel(1), InputError);
    CHECK_THROWS_AS(GridModel(4097), InputError);
    CHECK(GridModel(2).point(0) == Rational(1, 4));
    CHECK(GridModel(4096).point(0) == Rational(1, 8192));
}

TEST_CASE("odd grids place a midpoint exactly at one half") {
    for (int n : {3, 9, 27, 81}) {
        GridModel g(n);
        CHECK(g.point((n - 1) / 2) == Rational(1, 2));
    }
}

TEST_CASE("cell lookup rejects boundary atoms") {
    GridModel g(3);
    CHECK(g.cell_of(Rational(1, 2)) == 1);
    CHECK(g.cell_of(Rational(1, 10)) == 0);
    CHECK(g.cell_of(Rational(9, 10)) == 2);
    CHECK_THROWS_AS(g.cell_of(Rational(1, 3)), InputError);
    CHECK_THROWS_AS(g.cell_of(Rational(2, 3)), InputError);
    CHECK_THROWS_AS(g.cell_of(Rational(0)), InputError);
    CHECK_THROWS_AS(g.cell_of(Rational(1)), InputError);
    CHECK_THROWS_AS(g.cell_of(Rational(-1, 10)), InputError);
    CHECK_THROWS_AS(g.cell_of(Rational(11, 10)), InputError);

    try {
        g.cell_of(Rational(1, 3));
        FAIL("expected the boundary error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("cell boundary") != std::string::npos);
    }
}

TEST_CASE("grid spaces carry midpoint coordinates") {
    auto sp = GridModel(4).space();
    CHECK(sp.size() == 4);
    CHECK(sp.coord(0) == 0.125);
    CHECK(sp.coord(3) == 0.875);
}

TEST_CASE("density specs discretize to cell averages") {
    KernelSpec spec = DensitySpec{Expression::parse("-1")};
    auto T = dgv::discretize<Rational>(spec, 4);
    for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t) CHECK(T.entry(s, t) == Rational(-1, 4));

    KernelSpec st = DensitySpec{Expression::parse("s*t")};
    auto U = dgv::discretize<Rational>(st, 2);
    CHECK(U.entry(0, 1) == Rational(1, 4) * Rational(3, 4) * Rational(1, 2));
}

TEST_CASE("atomic specs put weights in the cells of their locations") {
    AtomicSpec spec;
    spec.points.emplace_back(Rational(1, 2), Expression::parse("-1"));
    auto T = dgv::discretize<Rational>(KernelSpec{spec}, 3);
    for (int s = 0; s < 3; ++s) {
        CHECK(T.entry(s, 1) == Rational(-1));
        CHECK(T.entry(s, 0) == Rational(0));
        CHECK(T.entry(s, 2) == Rational(0));
    }
    CHECK_THROWS_AS(dgv::discretize<Rational>(KernelSpec{spec}, 4), InputError);
}

TEST_CASE("atomic weights may vary with s") {
    AtomicSpec spec;
    spec.points.emplace_back(Rational(1, 2), Expression::parse("s"));
    auto T = dgv::discretize<Rational>(KernelSpec{spec}, 3);
    CHECK(T.entry(0, 1) == Rational(1, 6));
    CHECK(T.entry(1, 1) == Rational(1, 2));
    CHECK(T.entry(2, 1) == Rational(5, 6));
}

TEST_CASE("rank one specs factor through one functional") {
    RankOneSpec spec{Expression::parse("s"),
                     MeasureSpec::from_atoms({{Rational(1, 2), Rational(2)}})};
    auto T = dgv::discretize<Rational>(KernelSpec{spec}, 3);
    CHECK(T.entry(0, 1) == Rational(1, 3));
    CHECK(T.entry(2, 1) == Rational(5, 3));
    CHECK(T.entry(1, 0) == Rational(0));
}

TEST_CASE("factored specs sum their terms") {
    auto T = dgv::discretize<Rational>(dgv::preset_three_atom_factored(), 9);
    CHECK(T.entry(0, 2) == Rational(-1));   // 3/10 lands in cell 2
    CHECK(T.entry(0, 4) == Rational(1, 2)); // 1/2 lands in cell 4
    CHECK(T.entry(0, 6) == Rational(-1, 4));
    CHECK(T.row(0).total_variation() == Rational(7, 4));
    for (int s = 1; s < 9; ++s) CHECK(T.row(s).total_variation() == Rational(7, 4));
}

TEST_CASE("the shipped presets avoid odd-level boundaries") {
    for (int n : {3, 9, 27, 81}) {
        CHECK_NOTHROW(dgv::discretize<Rational>(dgv::preset_delta_half(), n));
        CHECK_NOTHROW(dgv::discretize<Rational>(dgv::preset_three_atom_factored(), n));
    }
    CHECK_THROWS_AS(dgv::discretize<Rational>(dgv::preset_delta_half(), 4), InputError);
    CHECK(std::holds_alternative<C0FactoredSpec>(dgv::preset_by_name("delta-half")));
    CHECK_THROWS_AS(dgv::preset_by_name("nope"), InputError);
}

TEST_CASE("discretization level caps") {
    KernelSpec spec = DensitySpec{Expression::parse("-1")};
    CHECK_THROWS_AS(dgv::discretize<Rational>(spec, 1), InputError);
    CHECK_THROWS_AS(dgv::discretize<Rational>(spec, 4097), InputError);
    CHECK_NOTHROW(dgv::discretize<Rational>(spec, 2));
}

TEST_CASE("zero atom points are the all-zero columns") {
    auto T = KernelOperator<Rational>::from_matrix({{Rational(0), Rational(1), Rational(0)},
                                                    {Rational(0), Rational(0), Rational(0)},
                                                    {Rational(0), Rational(-1), Rational(0)}});
    CHECK(dgv::zero_atom_points(T) == std::vector<int>{0, 2});
    auto I = KernelOperator<Rational>::identity(dgv::DiscreteSpace(2));
    CHECK(dgv::zero_atom_points(I).empty());
}

TEST_CASE("random kernels are deterministic in the seed") {
    auto a = dgv::random_signed_kernel(4, 99);
    auto b = dgv::random_signed_kernel(4, 99);
    auto c = dgv::random_signed_kernel(4, 100);
    CHECK(a == b);
    CHECK_FALSE(a == c);
    for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t) {
            CHECK(a.entry(s, t) <= 1.0);
            CHECK(a.entry(s, t) >= -1.0);
        }

    auto p = dgv::random_positive_kernel(3, 5, 2.0);
    for (int s = 0; s < 3; ++s)
        for (int t = 0; t < 3; ++t) {
            CHECK(p.entry(s, t) >= 0.0);
            CHECK(p.entry(s, t) <= 2.0);
        }

    auto q = dgv::random_rational_kernel(3, 17);
    CHECK(q == dgv::random_rational_kernel(3, 17));
    for (int s = 0; s < 3; ++s)
        for (int t = 0; t < 3; ++t) {
            CHECK(q.entry(s, t).den() <= 64);
            CHECK(abs(q.entry(s, t)) <= Rational(1));
        }

    auto z = dgv::random_complex_kernel(2, 7);
    CHECK(z == dgv::random_complex_kernel(2, 7));
    CHECK(std::abs(z.entry(0, 0).real()) <= 1.0);
    CHECK(std::abs(z.entry(0, 0).imag()) <= 1.0);
}

TEST_CASE("splitmix stream matches the published constants") {
    // seed 1234567: first outputs of the reference implementation
    dgv::SplitMix64 rng{1234567};
    CHECK(rng.next() == UINT64_C(6457827717110365317));
    CHECK(rng.next() == UINT64_C(3203168211198807973));
    dgv::SplitMix64 zero{0};
    CHECK(zero.next() == UINT64_C(16294208416658607535));
}
