#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "daugavet/daugavet.hpp"
#include "daugavet/models.hpp"

namespace dgv {

template <RealScalar S>
struct LevelResult {
    int level;
    DaugavetReport<S> report;
};

/// Per-level reports for one spec plus the fitted decay exponent of
/// defect_bound against n: least-squares slope on log-log over the levels
/// with strictly positive bound (absent when fewer than two qualify, e.g.
/// when the defect is identically zero).
template <RealScalar S>
struct RefinementStudy {
    std::vector<LevelResult<S>> levels;
    std::optional<double> decay_exponent;
};

namespace detail {

inline std::optional<double> fit_loglog_slope(const std::vector<std::pair<double, double>>& pts) {
    if (pts.size() < 2) return std::nullopt;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
        double lx = std::log(x), ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double n = static_cast<double>(pts.size());
    double denom = n * sxx - sx * sx;
    if (denom == 0) return std::nullopt;
    return (n * sxy - sx * sy) / denom;
}

template <RealScalar S>
RefinementStudy<S> run_study(const KernelSpec& spec, const std::vector<int>& levels,
                             const Comparator<S>& cmp, bool transpose) {
    if (levels.empty()) throw InputError("refinement study needs at least one level");
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels[i] < 2) throw InputError("refinement levels must be at least 2");
        if (i > 0 && levels[i] <= levels[i - 1])
            throw InputError("refinement levels must be strictly increasing");
    }
    const bool density = std::holds_alternative<DensitySpec>(spec);
    RefinementStudy<S> study;
    std::vector<std::pair<double, double>> fit_pts;
    for (int n : levels) {
        KernelOperator<S> T = discretize<S>(spec, n);
        if (transpose) T = T.transpose();
        auto rep = daugavet_report(T, cmp);
        if (density && !cmp.leq(rep.defect, S{2} * rep.max_abs_diagonal))
            throw std::logic_error("diffuse bound violated: defect above twice the max diagonal");
        if (S{} < rep.defect_bound)
            fit_pts.emplace_back(static_cast<double>(n),
                                 scalar_traits<S>::to_double(rep.defect_bound));
        study.levels.push_back({n, std::move(rep)});
    }
    study.decay_exponent = fit_loglog_slope(fit_pts);
    return study;
}

}  // namespace detail

template <RealScalar S>
RefinementStudy<S> refinement_study(const KernelSpec& spec, const std::vector<int>& levels,
                                    const Comparator<S>& cmp = {}) {
    return detail::run_study<S>(spec, levels, cmp, false);
}

/// Same pipeline on the transposed discretization: the finite l1 shadow of
/// the atomless-L1 statement.
template <RealScalar S>
RefinementStudy<S> dual_study(const KernelSpec& spec, const std::vector<int>& levels,
                              const Comparator<S>& cmp = {}) {
    return detail::run_study<S>(spec, levels, cmp, true);
}

}  // namespace dgv
