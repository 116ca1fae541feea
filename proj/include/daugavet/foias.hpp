#pragma once

#include <memory>
#include <string>
#include <vector>

#include "daugavet/models.hpp"

namespace dgv {

/// A kernel the escalation procedure can probe: the atom mass mu_s({t}),
/// queryable at any dyadic resolution. The oracle claims sup_s ||mu_s|| <= B
/// but makes no continuity promise; the procedure's whole point is to expose
/// claims the diagonal behaviour contradicts.
class KernelOracle {
public:
    KernelOracle(double claimed_bound, int max_level)
        : bound_(claimed_bound), max_level_(max_level) {
        if (claimed_bound < 0) throw InputError("claimed bound must be nonnegative");
        if (max_level < 0 || max_level > 20) throw InputError("max_level must lie in [0, 20]");
    }
    virtual ~KernelOracle() = default;

    [[nodiscard]] virtual double atom(double s, double t, int level) const = 0;
    [[nodiscard]] double claimed_bound() const { return bound_; }
    [[nodiscard]] int max_level() const { return max_level_; }

private:
    double bound_;
    int max_level_;
};

/// Record of an escalation run: points s_0..s_k in the patch U, each
/// admitted at some dyadic resolution, with atoms within beta of the
/// predecessors' diagonals. Valid chains certify ||mu_{s_k}|| >= k*beta.
struct WitnessChain {
    double beta = 0;
    double patch_lo = 0, patch_hi = 1;     // U = [patch_lo, patch_hi)
    std::vector<double> points;            // s_0, s_1, ..
    std::vector<int> point_levels;         // resolution at which each was admitted
    std::vector<std::vector<double>> sets; // U_m membership lists at admission time
    double certified_mass = 0;             // sum over j<k of |atom(s_k, s_j)|
};

enum class StallReason { empty_refinement_set, resolution_exhausted };

std::string to_string(StallReason r);

struct EscalationOutcome {
    enum class Kind { bound_violated, stalled, no_negative_patch };
    Kind kind;
    WitnessChain chain;       // meaningful for bound_violated; partial progress otherwise
    int stalled_step = 0;     // index of the point that could not be selected
    StallReason stall_reason = StallReason::empty_refinement_set;
};

enum class ContinuityMode { atom, norm };

/// The inductive escalation: find a patch with diagonal atoms below
/// -2*beta, then repeatedly select fresh grid points whose atoms at all
/// earlier points stay within beta of those points' diagonals, so each new
/// point certifies beta more mass. Stops as soon as the certified mass
/// exceeds the oracle's claimed bound, or reports the honest finite verdict:
/// Stalled(empty-refinement-set) when unused points exist at max resolution
/// but none qualifies, Stalled(resolution-exhausted) when every grid point
/// is already used, NoNegativePatch when no diagonal is ever below -2*beta.
EscalationOutcome escalate(const KernelOracle& oracle, double beta, ContinuityMode mode);

/// Re-checks every chain invariant with fresh oracle queries at the
/// recorded resolutions: patch membership, diagonal condition at every
/// point, the beta-closeness of every point to all predecessors, and the
/// certified mass.
bool verify_chain(const KernelOracle& oracle, const WitnessChain& chain);

/// Built-in oracles: "const-neg-quarter" (atom identically -0.25),
/// "diag-neg-quarter" (-0.25 on the diagonal, 0 elsewhere, at every
/// resolution), "nonneg" (atom identically +0.25).
std::unique_ptr<KernelOracle> make_mock_oracle(const std::string& name, double claimed_bound,
                                               int max_level);

/// Oracle backed by a KernelSpec: atomic parts contribute their weight at
/// exactly-matching probe points; density parts contribute the probe cell's
/// mass, expr(s,t)/2^level.
std::unique_ptr<KernelOracle> make_spec_oracle(KernelSpec spec, double claimed_bound,
                                               int max_level);

}  // namespace dgv
