// Acceptance gate: ten checks, one line each, nonzero exit if any fails.
// Each one pins the library against an independently computable fact.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "daugavet/asymptotic.hpp"
#include "daugavet/cli.hpp"
#include "daugavet/daugavet.hpp"
#include "daugavet/foias.hpp"
#include "daugavet/io.hpp"
#include "daugavet/search.hpp"

using namespace dgv;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool identity_attained(const DaugavetReport<Rational>& rep) {
    Rational lhs = rep.norm_id_plus < rep.norm_id_minus ? rep.norm_id_minus : rep.norm_id_plus;
    return lhs == Rational(1) + rep.op_norm;
}

KernelOperator<Rational> shift_diagonal(const KernelOperator<Rational>& T, const Rational& c) {
    auto m = T.matrix();
    for (int i = 0; i < T.size(); ++i) m[i][i] += c;
    return KernelOperator<Rational>::from_matrix(T.space(), std::move(m));
}

// every n x n matrix over {-1, 0, 1}, n = 2
std::vector<KernelOperator<Rational>> ternary_square() {
    std::vector<KernelOperator<Rational>> out;
    const Rational vals[3] = {Rational(-1), Rational(0), Rational(1)};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d)
                    out.push_back(KernelOperator<Rational>::from_matrix(
                        {{vals[a], vals[b]}, {vals[c], vals[d]}}));
    return out;
}

bool criterion_1() {
    // max(||I+T||, ||I-T||) = 1 + ||T|| exactly, 1000 rational kernels, n 1..6
    auto t0 = Clock::now();
    for (int trial = 0; trial < 1000; ++trial) {
        auto T = random_rational_kernel(1 + trial % 6, 1000 + trial);
        if (!identity_attained(daugavet_report(T))) return false;
    }
    return seconds_since(t0) < 5.0;
}

bool criterion_2() {
    // defect = 0 <=> a norm-attaining row has nonnegative diagonal,
    // exhaustively over {-1,0,1}^(2x2) and on 1000 random rational kernels
    auto scan = exhaustive_scan({Rational(-1), Rational(0), Rational(1)}, 2);
    if (scan.total != 81 || scan.biconditional_violations != 0) return false;
    for (int trial = 0; trial < 1000; ++trial) {
        auto T = random_rational_kernel(1 + trial % 6, 2000 + trial);
        auto rep = daugavet_report(T);
        if ((rep.defect == Rational(0)) != rep.double_star) return false;
    }
    return true;
}

bool criterion_3() {
    // row formulas match the exhaustive sign-vector oracle exactly
    auto t0 = Clock::now();
    auto check_one = [](const KernelOperator<Rational>& T) {
        if (brute_force_norm(T) != T.sup_operator_norm()) return false;
        if (brute_force_norm(shift_diagonal(T, Rational(1))) !=
            norm_id_plus_scaled(T, Rational(1)))
            return false;
        return brute_force_norm(shift_diagonal(T, Rational(-1))) ==
               norm_id_plus_scaled(T, Rational(-1));
    };
    for (const auto& T : ternary_square())
        if (!check_one(T)) return false;
    for (int trial = 0; trial < 1000; ++trial)
        if (!check_one(random_rational_kernel(1 + trial % 6, 2000 + trial))) return false;
    for (int trial = 0; trial < 500; ++trial)
        if (!check_one(random_rational_kernel(1 + trial % 10, 3000 + trial))) return false;
    return seconds_since(t0) < 60.0;
}

bool criterion_4() {
    // entrywise nonnegative kernels satisfy the equation, 10^4 float trials
    Comparator<double> cmp{1e-9};
    for (int trial = 0; trial < 10000; ++trial) {
        auto T = random_positive_kernel(1 + trial % 8, 4000 + trial);
        auto rep = daugavet_report(T, cmp);
        if (!rep.holds) return false;
    }
    return true;
}

bool criterion_5() {
    // unit-circle sweep attains 1 + ||T|| bit for bit; dense grid within 1e-3
    for (int trial = 0; trial < 200; ++trial) {
        auto T = random_complex_kernel(1 + trial % 5, 5000 + trial);
        auto res = complex_sweep_max(T);
        if (res.max_norm != res.expected) return false;
        double grid = sweep_grid_oracle(T);
        if (grid > res.max_norm + 1e-12) return false;
        if (res.max_norm - grid > 1e-3) return false;
    }
    return true;
}

bool criterion_6() {
    // diffuse cosine kernel: defect <= 2/n at every level, n = 1024 under 10 s
    KernelSpec spec = DensitySpec{Expression::parse("cos(pi*(s+t))")};
    Comparator<double> cmp{1e-9};
    for (int n : {16, 64, 256}) {
        auto rep = daugavet_report(discretize<double>(spec, n), cmp);
        if (rep.defect > 2.0 / n) return false;
    }
    auto t0 = Clock::now();
    auto rep = daugavet_report(discretize<double>(spec, 1024), cmp);
    if (rep.defect > 2.0 / 1024) return false;
    return seconds_since(t0) < 10.0;
}

bool criterion_7() {
    // factored atomic presets keep defect exactly 0 at odd levels; the
    // third-point variant lands on cell boundaries and is refused outright
    for (int n : {3, 9, 27, 81}) {
        for (const char* name : {"delta-half", "three-atom-factored"}) {
            auto rep = daugavet_report(discretize<Rational>(preset_by_name(name), n));
            if (rep.defect != Rational(0)) return false;
        }
        C0FactoredSpec thirds;
        thirds.terms.emplace_back(Expression::parse("-1"),
                                  MeasureSpec::from_atoms({{Rational(1, 3), Rational(1)}}));
        thirds.terms.emplace_back(Expression::parse("0.5"),
                                  MeasureSpec::from_atoms({{Rational(1, 2), Rational(1)}}));
        thirds.terms.emplace_back(Expression::parse("-0.25"),
                                  MeasureSpec::from_atoms({{Rational(2, 3), Rational(1)}}));
        try {
            discretize<Rational>(KernelSpec{thirds}, n);
            return false;
        } catch (const InputError&) {
        }
    }
    return true;
}

bool criterion_8() {
    // transposes satisfy the same identity, and the l1 norm is the dual sup norm
    for (int trial = 0; trial < 500; ++trial) {
        auto T = random_rational_kernel(1 + trial % 6, 8000 + trial);
        auto Tt = T.transpose();
        if (!identity_attained(daugavet_report(Tt))) return false;
        if (l1_operator_norm(T) != Tt.sup_operator_norm()) return false;
    }
    return true;
}

bool criterion_9() {
    // escalation: constant -1/4 oracle beats a unit bound in 6 steps with
    // mass 5/4 and a replayable chain; diagonal-only -1/4 stalls at step 1
    auto oracle = make_mock_oracle("const-neg-quarter", 1.0, 12);
    auto o = escalate(*oracle, 0.1, ContinuityMode::atom);
    if (o.kind != EscalationOutcome::Kind::bound_violated) return false;
    if (o.chain.points.size() != 6) return false;
    if (o.chain.certified_mass != 1.25) return false;
    if (!verify_chain(*oracle, o.chain)) return false;

    auto diag = make_mock_oracle("diag-neg-quarter", 1.0, 12);
    auto d = escalate(*diag, 0.1, ContinuityMode::atom);
    if (d.kind != EscalationOutcome::Kind::stalled) return false;
    if (d.stalled_step != 1) return false;
    return d.stall_reason == StallReason::empty_refinement_set;
}

bool criterion_10() {
    // the strict equation fails on discrete spaces: -I has defect exactly 2
    auto path = std::filesystem::temp_directory_path() / "dgv_acceptance_negid.json";
    {
        std::ofstream os(path);
        os << R"({"scalar": "exact", "matrix": [["-1", "0"], ["0", "-1"]]})";
    }
    std::ostringstream out, err;
    int code = cli::run({"check", "--input", path.string()}, out, err);
    if (code != 1) return false;
    auto j = nlohmann::json::parse(out.str());
    return j["report"]["defect"] == "2";
}

struct Criterion {
    const char* label;
    bool (*fn)();
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"exact identity max(||I+T||,||I-T||) = 1+||T||, 1000 kernels", criterion_1},
        {"defect-zero biconditional, 81 exhaustive + 1000 random", criterion_2},
        {"row formulas vs sign-vector oracle, 1581 kernels", criterion_3},
        {"nonnegative kernels hold, 10^4 float trials", criterion_4},
        {"complex sweep bit-exact + 4096-angle grid within 1e-3", criterion_5},
        {"cosine density defect <= 2/n, levels 16..1024", criterion_6},
        {"atomic presets defect 0 at odd levels, boundary atoms refused", criterion_7},
        {"transpose identity and l1 duality, 500 kernels", criterion_8},
        {"escalation bound violation and stall outcomes", criterion_9},
        {"check on -I: defect exactly 2, exit 1", criterion_10},
    };

    int failed = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        auto t0 = Clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = c.fn();
        } catch (const std::exception& e) {
            note = std::string(" [") + e.what() + "]";
        }
        std::printf("criterion %2d: %s  (%.2f s)  %s%s\n", index, ok ? "pass" : "FAIL",
                    seconds_since(t0), c.label, note.c_str());
        std::fflush(stdout);
        if (!ok) ++failed;
    }
    if (failed == 0) {
        std::printf("acceptance: all 10 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d of 10 criteria FAILED\n", failed);
    return 1;
}
