#include "daugavet/foias.hpp"

#include <algorithm>
#include <cmath>

namespace dgv {
namespace {

double dyadic_point(int level, long long k) {
    return (static_cast<double>(k) + 0.5) / static_cast<double>(1LL << level);
}

struct ConstMock : KernelOracle {
    double value;
    ConstMock(double v, double bound, int max_level) : KernelOracle(bound, max_level), value(v) {}
    double atom(double, double, int) const override { return value; }
};

struct DiagMock : KernelOracle {
    double value;
    DiagMock(double v, double bound, int max_level) : KernelOracle(bound, max_level), value(v) {}
    double atom(double s, double t, int) const override { return s == t ? value : 0.0; }
};

struct SpecOracle : KernelOracle {
    KernelSpec spec;
    SpecOracle(KernelSpec sp, double bound, int max_level)
        : KernelOracle(bound, max_level), spec(std::move(sp)) {}

    double atom(double s, double t, int level) const override {
        double cell = 1.0 / static_cast<double>(1LL << level);
        double out = 0.0;
        if (const auto* d = std::get_if<DensitySpec>(&spec)) {
            out += d->expr.eval<double>(s, t) * cell;
        } else if (const auto* r = std::get_if<RankOneSpec>(&spec)) {
            out += measure_atom(r->meas, r->shape.eval<double>(s), t, cell);
        } else if (const auto* f = std::get_if<C0FactoredSpec>(&spec)) {
            for (const auto& [coef, meas] : f->terms)
                out += measure_atom(meas, coef.eval<double>(s), t, cell);
        } else if (const auto* a = std::get_if<AtomicSpec>(&spec)) {
            for (const auto& [loc, wexpr] : a->points)
                if (loc.to_double() == t) out += wexpr.eval<double>(s);
        }
        return out;
    }

private:
    static double measure_atom(const MeasureSpec& meas, double c, double t, double cell) {
        double out = 0.0;
        if (meas.density) out += c * meas.density->eval<double>(0.0, t) * cell;
        for (const auto& [loc, w] : meas.atoms)
            if (loc.to_double() == t) out += c * w.to_double();
        return out;
    }
};

// All dyadic midpoints of the given level inside [lo, hi), ascending.
void append_level_points(std::vector<double>& pool, int level, double lo, double hi) {
    long long count = 1LL << level;
    for (long long k = 0; k < count; ++k) {
        double p = dyadic_point(level, k);
        if (p >= lo && p < hi) pool.push_back(p);
    }
}

struct Stepper {
    const KernelOracle& oracle;
    double beta;
    ContinuityMode mode;
    WitnessChain& chain;
    std::vector<double> pool;  // all admitted-resolution grid points in the patch
    int current_level;

    bool is_used(double x) const {
        return std::find(chain.points.begin(), chain.points.end(), x) != chain.points.end();
    }

    // Finite total-variation distance of rows x and y at the probe set:
    // every pool point plus the two rows' own diagonals.
    double norm_distance(double x, double y, int level) const {
        double sum = 0.0;
        for (double u : pool) sum += std::fabs(oracle.atom(x, u, level) - oracle.atom(y, u, level));
        for (double u : {x, y})
            if (std::find(pool.begin(), pool.end(), u) == pool.end())
                sum += std::fabs(oracle.atom(x, u, level) - oracle.atom(y, u, level));
        return sum;
    }

    bool member(double x, int level) const {
        if (oracle.atom(x, x, level) >= -2.0 * beta) return false;  // patch condition
        for (double sj : chain.points) {
            if (mode == ContinuityMode::atom) {
                if (std::fabs(oracle.atom(x, sj, level) - oracle.atom(sj, sj, level)) >= beta)
                    return false;
            } else {
                if (norm_distance(x, sj, level) >= beta) return false;
            }
        }
        return true;
    }

    std::vector<double> members_at_current() const {
        std::vector<double> out;
        for (double x : pool)
            if (!is_used(x) && member(x, current_level)) out.push_back(x);
        return out;
    }
};

}  // namespace

std::string to_string(StallReason r) {
    return r == StallReason::empty_refinement_set ? "empty-refinement-set"
                                                  : "resolution-exhausted";
}

EscalationOutcome escalate(const KernelOracle& oracle, double beta, ContinuityMode mode) {
    if (beta <= 0) throw InputError("beta must be positive");

    // Patch scan: coarsest level first, smallest coordinate first.
    int discovery = -1;
    long long cell_idx = -1;
    for (int level = 0; level <= oracle.max_level() && discovery < 0; ++level) {
        long long count = 1LL << level;
        for (long long k = 0; k < count; ++k) {
            double p = dyadic_point(level, k);
            if (oracle.atom(p, p, level) < -2.0 * beta) {
                discovery = level;
                cell_idx = k;
                break;
            }
        }
    }
    if (discovery < 0) return {EscalationOutcome::Kind::no_negative_patch, {}, 0,
                               StallReason::empty_refinement_set};

    WitnessChain chain;
    chain.beta = beta;
    chain.patch_lo = static_cast<double>(cell_idx) / static_cast<double>(1LL << discovery);
    chain.patch_hi = static_cast<double>(cell_idx + 1) / static_cast<double>(1LL << discovery);
    chain.points.push_back(dyadic_point(discovery, cell_idx));
    chain.point_levels.push_back(discovery);

    Stepper st{oracle, beta, mode, chain, {}, discovery};
    for (int level = 0; level <= discovery; ++level)
        append_level_points(st.pool, level, chain.patch_lo, chain.patch_hi);

    for (int step = 1;; ++step) {
        std::vector<double> candidates = st.members_at_current();
        while (candidates.empty() && st.current_level < oracle.max_level()) {
            ++st.current_level;
            append_level_points(st.pool, st.current_level, chain.patch_lo, chain.patch_hi);
            candidates = st.members_at_current();
        }
        if (candidates.empty()) {
            bool any_unused = false;
            for (double x : st.pool)
                if (!st.is_used(x)) {
                    any_unused = true;
                    break;
                }
            return {EscalationOutcome::Kind::stalled, std::move(chain), step,
                    any_unused ? StallReason::empty_refinement_set
                               : StallReason::resolution_exhausted};
        }
        double next = *std::min_element(candidates.begin(), candidates.end());
        chain.sets.push_back(std::move(candidates));
        chain.points.push_back(next);
        chain.point_levels.push_back(st.current_level);

        double mass = 0.0;
        for (std::size_t j = 0; j + 1 < chain.points.size(); ++j)
            mass += std::fabs(oracle.atom(next, chain.points[j], st.current_level));
        chain.certified_mass = mass;
        if (mass > oracle.claimed_bound())
            return {EscalationOutcome::Kind::bound_violated, std::move(chain), 0,
                    StallReason::empty_refinement_set};
    }
}

bool verify_chain(const KernelOracle& oracle, const WitnessChain& chain) {
    const std::size_t k = chain.points.size();
    if (k == 0) return chain.certified_mass == 0;
    if (chain.point_levels.size() != k) return false;
    if (chain.beta <= 0) return false;

    for (std::size_t j = 0; j < k; ++j) {
        double sj = chain.points[j];
        if (sj < chain.patch_lo || sj >= chain.patch_hi) return false;
        if (oracle.atom(sj, sj, chain.point_levels[j]) >= -2.0 * chain.beta) return false;
        for (std::size_t i = 0; i < j; ++i)
            if (chain.points[i] == sj) return false;
    }
    for (std::size_t m = 1; m < k; ++m) {
        int level = chain.point_levels[m];
        for (std::size_t j = 0; j < m; ++j) {
            double diff = oracle.atom(chain.points[m], chain.points[j], level) -
                          oracle.atom(chain.points[j], chain.points[j], level);
            if (std::fabs(diff) >= chain.beta) return false;
        }
    }
    double mass = 0.0;
    for (std::size_t j = 0; j + 1 < k; ++j)
        mass += std::fabs(oracle.atom(chain.points[k - 1], chain.points[j],
                                      chain.point_levels[k - 1]));
    if (mass != chain.certified_mass) return false;
    return mass >= static_cast<double>(k - 1) * chain.beta;
}

std::unique_ptr<KernelOracle> make_mock_oracle(const std::string& name, double claimed_bound,
                                               int max_level) {
    if (name == "const-neg-quarter")
        return std::make_unique<ConstMock>(-0.25, claimed_bound, max_level);
    if (name == "diag-neg-quarter")
        return std::make_unique<DiagMock>(-0.25, claimed_bound, max_level);
    if (name == "nonneg") return std::make_unique<ConstMock>(0.25, claimed_bound, max_level);
    throw InputError("unknown mock oracle '" + name + "'");
}

std::unique_ptr<KernelOracle> make_spec_oracle(KernelSpec spec, double claimed_bound,
                                               int max_level) {
    return std::make_unique<SpecOracle>(std::move(spec), claimed_bound, max_level);
}

}  // namespace dgv
