#pragma once

#include <string>
#include <vector>

#include "daugavet/daugavet.hpp"
#include "daugavet/models.hpp"

namespace dgv {

/// Predicates:
///   prop1-identity          max(||I+T||, ||I-T||) = 1 + ||T||   (theorem, exact only)
///   lemma5-biconditional    defect = 0 <=> double_star          (theorem, exact only)
///   positive-defect-zero    entrywise T >= 0 implies defect = 0 (theorem)
///   star-implies-defect-zero  all diagonals >= 0 implies defect = 0 (theorem)
///   defect-zero             defect = 0 (not a theorem on finite spaces; findings expected)
struct SearchConfig {
    std::string kernel_class;  // "signed" | "positive" | "rational-signed"
    int n = 2;
    int trials = 100;
    std::uint64_t seed = 0;
    std::string predicate;
};

template <RealScalar S>
struct Finding {
    int trial;
    KernelOperator<S> kernel;
    DaugavetReport<S> report;
    std::string predicate;
};

bool is_theorem_predicate(const std::string& predicate);
bool is_known_predicate(const std::string& predicate);

namespace detail {

template <RealScalar S>
bool predicate_violated(const std::string& pred, const KernelOperator<S>& T,
                        const DaugavetReport<S>& rep, const Comparator<S>& cmp) {
    if (pred == "prop1-identity") {
        S lhs = rep.norm_id_plus < rep.norm_id_minus ? rep.norm_id_minus : rep.norm_id_plus;
        return !(lhs == S{1} + rep.op_norm);
    }
    if (pred == "lemma5-biconditional") return (rep.defect == S{}) != rep.double_star;
    if (pred == "positive-defect-zero") {
        for (int s = 0; s < T.size(); ++s)
            for (int t = 0; t < T.size(); ++t)
                if (!cmp.geq(T.entry(s, t), S{})) return false;
        return !cmp.is_zero(rep.defect);
    }
    if (pred == "star-implies-defect-zero") return rep.star && !cmp.is_zero(rep.defect);
    if (pred == "defect-zero") return !cmp.is_zero(rep.defect);
    throw InputError("unknown predicate '" + pred + "'");
}

}  // namespace detail

/// Runs the configured trials and returns every violation, sorted by trial.
/// Theorem predicates should return nothing; a finding there means the
/// implementation itself is broken, which is the point of running them.
template <RealScalar S>
std::vector<Finding<S>> search_counterexamples(const SearchConfig& cfg,
                                               const Comparator<S>& cmp = {}) {
    if (cfg.trials < 1) throw InputError("trials must be at least 1");
    if (!is_known_predicate(cfg.predicate)) throw InputError("unknown predicate '" + cfg.predicate + "'");
    constexpr bool exact = scalar_traits<S>::is_exact;
    if ((cfg.predicate == "prop1-identity" || cfg.predicate == "lemma5-biconditional") && !exact)
        throw InputError("predicate '" + cfg.predicate + "' requires exact mode");
    if constexpr (exact) {
        if (cfg.kernel_class != "rational-signed")
            throw InputError("exact search requires the rational-signed class");
    } else {
        if (cfg.kernel_class != "signed" && cfg.kernel_class != "positive")
            throw InputError("float search requires the signed or positive class");
    }

    std::vector<Finding<S>> findings;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        std::uint64_t trial_seed = cfg.seed + static_cast<std::uint64_t>(trial);
        KernelOperator<S> T = [&] {
            if constexpr (exact) {
                return random_rational_kernel(cfg.n, trial_seed);
            } else {
                return cfg.kernel_class == "positive" ? random_positive_kernel(cfg.n, trial_seed)
                                                      : random_signed_kernel(cfg.n, trial_seed);
            }
        }();
        auto rep = daugavet_report(T, cmp);
        if (detail::predicate_violated(cfg.predicate, T, rep, cmp))
            findings.push_back({trial, std::move(T), std::move(rep), cfg.predicate});
    }
    return findings;
}

struct ScanSummary {
    long long total = 0;
    long long defect_zero = 0;
    long long star = 0;
    long long double_star = 0;
    long long prop1_violations = 0;
    long long biconditional_violations = 0;
};

/// Every n x n matrix with entries drawn from the given set, exact mode;
/// cross-validates max(||I+T||,||I-T||) = 1+||T|| and the defect-zero <=>
/// double_star equivalence on each one. Refuses runs beyond 10^7 matrices.
ScanSummary exhaustive_scan(const std::vector<Rational>& entries, int n);

}  // namespace dgv
