#include "daugavet/models.hpp"

namespace dgv {
namespace {

template <RealScalar S>
S to_scalar(const Rational& r) {
    if constexpr (scalar_traits<S>::is_exact)
        return r;
    else
        return r.to_double();
}

template <RealScalar S>
S grid_point(const GridModel& grid, int i) {
    if constexpr (scalar_traits<S>::is_exact)
        return grid.point(i);
    else
        return grid.point_d(i);
}

// Adds c * meas to row i of m. Measure densities are expressions in t.
template <RealScalar S>
void add_measure(std::vector<S>& row, const GridModel& grid, const S& c,
                 const MeasureSpec& meas) {
    const int n = grid.level;
    if (meas.density) {
        S inv_n = to_scalar<S>(Rational(1, n));
        for (int j = 0; j < n; ++j)
            row[j] = row[j] + c * meas.density->template eval<S>(S{}, grid_point<S>(grid, j)) * inv_n;
    }
    for (const auto& [loc, w] : meas.atoms) {
        int j = grid.cell_of(loc);
        row[j] = row[j] + c * to_scalar<S>(w);
    }
}

}  // namespace

GridModel::GridModel(int n) : level(n) {
    if (n < kMinLevel) throw InputError("grid level must be at least 2");
    if (n > kMaxLevel) throw InputError("grid level above the 4096 cap");
}

int GridModel::cell_of(const Rational& x) const {
    if (x < Rational(0) || Rational(1) < x) throw InputError("atom location outside [0,1]");
    Rational scaled = x * Rational(level);
    if (scaled.den() == 1)
        throw InputError("atom at " + x.to_fraction_string() +
                         " sits exactly on a cell boundary at level " + std::to_string(level) +
                         "; choose another level or move the atom");
    return static_cast<int>(scaled.num() / scaled.den());
}

DiscreteSpace GridModel::space() const {
    std::vector<double> coords;
    coords.reserve(level);
    for (int i = 0; i < level; ++i) coords.push_back(point_d(i));
    return DiscreteSpace(level, std::move(coords));
}

template <RealScalar S>
KernelOperator<S> discretize(const KernelSpec& spec, int n) {
    GridModel grid(n);
    std::vector<std::vector<S>> m(n, std::vector<S>(n, S{}));
    S inv_n = to_scalar<S>(Rational(1, n));

    if (const auto* d = std::get_if<DensitySpec>(&spec)) {
        for (int i = 0; i < n; ++i) {
            S gi = grid_point<S>(grid, i);
            for (int j = 0; j < n; ++j)
                m[i][j] = d->expr.eval<S>(gi, grid_point<S>(grid, j)) * inv_n;
        }
    } else if (const auto* r = std::get_if<RankOneSpec>(&spec)) {
        for (int i = 0; i < n; ++i) {
            S c = r->shape.eval<S>(grid_point<S>(grid, i));
            add_measure(m[i], grid, c, r->meas);
        }
    } else if (const auto* f = std::get_if<C0FactoredSpec>(&spec)) {
        for (int i = 0; i < n; ++i) {
            S gi = grid_point<S>(grid, i);
            for (const auto& [coef, meas] : f->terms) add_measure(m[i], grid, coef.template eval<S>(gi), meas);
        }
    } else if (const auto* a = std::get_if<AtomicSpec>(&spec)) {
        for (int i = 0; i < n; ++i) {
            S gi = grid_point<S>(grid, i);
            for (const auto& [loc, wexpr] : a->points) {
                int j = grid.cell_of(loc);
                m[i][j] = m[i][j] + wexpr.template eval<S>(gi);
            }
        }
    }
    return KernelOperator<S>::from_matrix(grid.space(), std::move(m));
}

template KernelOperator<double> discretize<double>(const KernelSpec&, int);
template KernelOperator<Rational> discretize<Rational>(const KernelSpec&, int);

KernelOperator<double> random_signed_kernel(int n, std::uint64_t seed, double magnitude) {
    if (n < 1) throw InputError("kernel size must be positive");
    SplitMix64 rng(seed);
    std::vector<std::vector<double>> m(n, std::vector<double>(n));
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) m[s][t] = (2.0 * rng.uniform01() - 1.0) * magnitude;
    return KernelOperator<double>::from_matrix(std::move(m));
}

KernelOperator<double> random_positive_kernel(int n, std::uint64_t seed, double magnitude) {
    if (n < 1) throw InputError("kernel size must be positive");
    SplitMix64 rng(seed);
    std::vector<std::vector<double>> m(n, std::vector<double>(n));
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) m[s][t] = rng.uniform01() * magnitude;
    return KernelOperator<double>::from_matrix(std::move(m));
}

KernelOperator<Rational> random_rational_kernel(int n, std::uint64_t seed, long long max_den,
                                                long long scale) {
    if (n < 1) throw InputError("kernel size must be positive");
    if (max_den < 1 || scale < 1) throw InputError("max_den and scale must be positive");
    SplitMix64 rng(seed);
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            long long q = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(max_den)));
            long long span = 2 * q * scale + 1;
            long long p = static_cast<long long>(rng.below(static_cast<std::uint64_t>(span))) - q * scale;
            m[s][t] = Rational(p, q);
        }
    return KernelOperator<Rational>::from_matrix(std::move(m));
}

KernelOperator<std::complex<double>> random_complex_kernel(int n, std::uint64_t seed,
                                                           double magnitude) {
    if (n < 1) throw InputError("kernel size must be positive");
    SplitMix64 rng(seed);
    std::vector<std::vector<std::complex<double>>> m(n, std::vector<std::complex<double>>(n));
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            double re = (2.0 * rng.uniform01() - 1.0) * magnitude;
            double im = (2.0 * rng.uniform01() - 1.0) * magnitude;
            m[s][t] = {re, im};
        }
    return KernelOperator<std::complex<double>>::from_matrix(std::move(m));
}

KernelSpec preset_delta_half() {
    C0FactoredSpec spec;
    spec.terms.emplace_back(Expression::parse("-1"),
                            MeasureSpec::from_atoms({{Rational(1, 2), Rational(1)}}));
    return spec;
}

KernelSpec preset_three_atom_factored() {
    C0FactoredSpec spec;
    spec.terms.emplace_back(Expression::parse("-1"),
                            MeasureSpec::from_atoms({{Rational(3, 10), Rational(1)}}));
    spec.terms.emplace_back(Expression::parse("0.5"),
                            MeasureSpec::from_atoms({{Rational(1, 2), Rational(1)}}));
    spec.terms.emplace_back(Expression::parse("-0.25"),
                            MeasureSpec::from_atoms({{Rational(7, 10), Rational(1)}}));
    return spec;
}

KernelSpec preset_by_name(const std::string& name) {
    if (name == "delta-half") return preset_delta_half();
    if (name == "three-atom-factored") return preset_three_atom_factored();
    throw InputError("unknown preset '" + name + "'");
}

}  // namespace dgv
