#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "daugavet/expression.hpp"
#include "daugavet/kernel.hpp"
#include "daugavet/rng.hpp"

namespace dgv {

/// A fixed measure rho: either a density in t or a finite atom list
/// (location, weight), locations exact rationals in [0,1].
struct MeasureSpec {
    std::optional<Expression> density;
    std::vector<std::pair<Rational, Rational>> atoms;

    static MeasureSpec from_density(Expression e) { return {std::move(e), {}}; }
    static MeasureSpec from_atoms(std::vector<std::pair<Rational, Rational>> a) {
        return {std::nullopt, std::move(a)};
    }
};

/// mu_s has density t -> expr(s, t).
struct DensitySpec {
    Expression expr;
};

/// mu_s = shape(s) * meas.
struct RankOneSpec {
    Expression shape;
    MeasureSpec meas;
};

/// mu_s = sum_n coef_n(s) * rho_n: the factored-through-c0 form.
struct C0FactoredSpec {
    std::vector<std::pair<Expression, MeasureSpec>> terms;
};

/// Purely atomic rows: mu_s = sum of weight_k(s) at location_k.
struct AtomicSpec {
    std::vector<std::pair<Rational, Expression>> points;
};

using KernelSpec = std::variant<DensitySpec, RankOneSpec, C0FactoredSpec, AtomicSpec>;

/// Level-n midpoint grid: points g_i = (i + 1/2)/n, cells C_i = [i/n, (i+1)/n).
/// Midpoints keep grid points off the endpoints and, for odd n, off 1/2.
struct GridModel {
    int level;

    explicit GridModel(int n);

    [[nodiscard]] Rational point(int i) const { return Rational(2 * i + 1, 2LL * level); }
    [[nodiscard]] double point_d(int i) const { return point(i).to_double(); }

    /// Index of the cell containing x; exact boundary hits are input errors
    /// (an atom on a cell edge has no canonical cell and silent splitting
    /// would make discretizations implementation-dependent).
    [[nodiscard]] int cell_of(const Rational& x) const;

    [[nodiscard]] DiscreteSpace space() const;
};

constexpr int kMinLevel = 2;
constexpr int kMaxLevel = 4096;

/// Finite shadow of the kernel at grid level n. Density parts enter by
/// midpoint quadrature, expr(g_i, g_j)/n; atomic parts put their full weight
/// on the cell containing the atom.
template <RealScalar S>
KernelOperator<S> discretize(const KernelSpec& spec, int n);

/// Columns t with entry(s, t) = 0 for every s: the discrete form of the
/// dense zero-atom set diagnostic.
template <RealScalar S>
std::vector<int> zero_atom_points(const KernelOperator<S>& T, const Comparator<S>& cmp) {
    std::vector<int> out;
    for (int t = 0; t < T.size(); ++t) {
        bool all_zero = true;
        for (int s = 0; s < T.size(); ++s)
            if (!cmp.is_zero(T.entry(s, t))) {
                all_zero = false;
                break;
            }
        if (all_zero) out.push_back(t);
    }
    return out;
}

template <RealScalar S>
std::vector<int> zero_atom_points(const KernelOperator<S>& T) {
    return zero_atom_points(T, Comparator<S>{});
}

/// Entries uniform in [-magnitude, magnitude], row-major draw order.
KernelOperator<double> random_signed_kernel(int n, std::uint64_t seed, double magnitude = 1.0);

/// Entries uniform in [0, magnitude].
KernelOperator<double> random_positive_kernel(int n, std::uint64_t seed, double magnitude = 1.0);

/// Exact rationals p/q, q uniform in {1..max_den}, p uniform in
/// [-q*scale, q*scale]; two draws per entry (q first), row-major.
KernelOperator<Rational> random_rational_kernel(int n, std::uint64_t seed, long long max_den = 64,
                                                long long scale = 1);

/// Real and imaginary parts uniform in [-magnitude, magnitude], re before im.
KernelOperator<std::complex<double>> random_complex_kernel(int n, std::uint64_t seed,
                                                           double magnitude = 1.0);

/// -delta_{1/2} as a single-term factored spec: every row is minus the unit
/// atom at 1/2. Discretize at odd levels only (1/2 is a cell edge when n is
/// even).
KernelSpec preset_delta_half();

/// Three fixed atoms with constant coefficients:
///   -1 at 3/10, +1/2 at 1/2, -1/4 at 7/10.
/// All rows share norm 7/4 and the row owning the 1/2-cell has diagonal
/// +1/2, so the attaining-row condition holds and the defect is exactly 0 at
/// every level where no atom meets a cell edge (all of 3, 9, 27, 81 qualify;
/// thirds would sit on cell edges at those levels).
KernelSpec preset_three_atom_factored();

/// Lookup by CLI name: "delta-half" or "three-atom-factored".
KernelSpec preset_by_name(const std::string& name);

}  // namespace dgv
