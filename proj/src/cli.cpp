#include "daugavet/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "daugavet/daugavet.hpp"
#include "daugavet/foias.hpp"
#include "daugavet/io.hpp"
#include "daugavet/search.hpp"

namespace dgv::cli {
namespace {

int cmd_check(const std::string& input, int level, const std::string& output,
              std::ostream& out) {
    KernelFile f = KernelFile::load(input);
    nlohmann::json rep_json;
    bool holds = false;
    if (f.exact) {
        auto rep = daugavet_report(exact_operator(f, level));
        rep_json = report_to_json(rep);
        holds = rep.holds;
    } else {
        auto rep = daugavet_report(float_operator(f, level), Comparator<double>{f.tol});
        rep_json = report_to_json(rep, f.tol);
        holds = rep.holds;
    }
    nlohmann::json doc{{"version", kToolVersion}, {"report", rep_json}};
    if (level != 0) doc["level"] = level;
    std::string text = doc.dump(2) + "\n";
    if (!output.empty()) {
        std::ofstream os(output);
        if (!os) throw InputError("cannot open '" + output + "' for writing");
        os << text;
    }
    out << text;
    return holds ? 0 : 1;
}

template <RealScalar S>
int refine_with(const KernelFile& f, const std::vector<int>& levels, bool dual,
                const std::string& csv, std::ostream& out, const Comparator<S>& cmp) {
    RefinementStudy<S> study =
        dual ? dual_study<S>(*f.spec, levels, cmp) : refinement_study<S>(*f.spec, levels, cmp);
    bool all_hold = true;
    for (const auto& lv : study.levels) {
        const auto& r = lv.report;
        out << "level " << lv.level << ": opnorm "
            << format_double(scalar_traits<S>::to_double(r.op_norm)) << " defect "
            << format_double(scalar_traits<S>::to_double(r.defect)) << " bound "
            << format_double(scalar_traits<S>::to_double(r.defect_bound))
            << (r.holds ? " holds" : " fails") << "\n";
        all_hold = all_hold && r.holds;
    }
    if (study.decay_exponent)
        out << "decay_exponent " << format_double(*study.decay_exponent) << "\n";
    else
        out << "decay_exponent n/a\n";
    if (!csv.empty()) {
        std::ofstream os(csv);
        if (!os) throw InputError("cannot open '" + csv + "' for writing");
        write_refinement_csv(os, study);
        out << "csv written to " << csv << "\n";
    }
    return all_hold ? 0 : 1;
}

int cmd_refine(const std::string& input, const std::vector<int>& levels, bool dual,
               const std::string& csv, std::ostream& out) {
    KernelFile f = KernelFile::load(input);
    if (!f.spec) throw InputError("refine needs a spec kernel file, not a matrix");
    if (f.exact) return refine_with<Rational>(f, levels, dual, csv, out, Comparator<Rational>{});
    return refine_with<double>(f, levels, dual, csv, out, Comparator<double>{f.tol});
}

int cmd_sweep(const std::string& input, int level, std::ostream& out) {
    KernelFile f = KernelFile::load(input);
    auto T = complexify(operator_as_float(f, level));
    SweepResult res = complex_sweep_max(T);
    double re = res.arg_max.real(), im = res.arg_max.imag();
    out << "lambda " << format_double(re) << (im < 0 ? " - " : " + ")
        << format_double(std::fabs(im)) << "i\n";
    out << "max_norm " << format_double(res.max_norm) << "\n";
    out << "expected " << format_double(res.expected) << "\n";
    return std::fabs(res.max_norm - res.expected) <= 1e-9 ? 0 : 1;
}

int cmd_escalate(const std::string& mock, const std::string& specfile, double beta,
                 double bound, int max_level, const std::string& mode, std::ostream& out) {
    if (mock.empty() == specfile.empty())
        throw InputError("escalate needs exactly one of --mock or --spec");
    std::unique_ptr<KernelOracle> oracle;
    if (!mock.empty()) {
        oracle = make_mock_oracle(mock, bound, max_level);
    } else {
        KernelFile f = KernelFile::load(specfile);
        if (!f.spec) throw InputError("escalate needs a spec kernel file, not a matrix");
        oracle = make_spec_oracle(*f.spec, bound, max_level);
    }
    ContinuityMode cm = mode == "norm" ? ContinuityMode::norm : ContinuityMode::atom;
    EscalationOutcome o = escalate(*oracle, beta, cm);
    const WitnessChain& c = o.chain;
    switch (o.kind) {
    case EscalationOutcome::Kind::bound_violated:
        out << "BoundViolated: " << c.points.size() << " points certify mass "
            << format_double(c.certified_mass) << " against claimed bound "
            << format_double(oracle->claimed_bound()) << "\n";
        out << "patch [" << format_double(c.patch_lo) << ", " << format_double(c.patch_hi)
            << ")\n";
        for (std::size_t i = 0; i < c.points.size(); ++i)
            out << "s_" << i << " = " << format_double(c.points[i]) << " (level "
                << c.point_levels[i] << ")\n";
        out << (verify_chain(*oracle, c) ? "chain verified\n" : "chain verification FAILED\n");
        return 1;
    case EscalationOutcome::Kind::stalled:
        out << "Stalled at step " << o.stalled_step << " (" << to_string(o.stall_reason)
            << "); certified mass " << format_double(c.certified_mass) << " from "
            << c.points.size() << " points\n";
        return 0;
    case EscalationOutcome::Kind::no_negative_patch:
    default:
        out << "NoNegativePatch: no diagonal atom sits below -2*beta at any probed level\n";
        return 0;
    }
}

template <RealScalar S>
void print_findings(const std::vector<Finding<S>>& findings, int trials, std::ostream& out) {
    out << "findings " << findings.size() << " of " << trials << " trials\n";
    if (findings.empty()) return;
    constexpr std::size_t cap = 100;
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < findings.size() && i < cap; ++i) {
        const auto& f = findings[i];
        KernelFile kf;
        kf.exact = scalar_traits<S>::is_exact;
        if constexpr (scalar_traits<S>::is_exact) {
            kf.exact_matrix = f.kernel.matrix();
        } else {
            kf.float_matrix = f.kernel.matrix();
        }
        nlohmann::json item{{"trial", f.trial},
                            {"predicate", f.predicate},
                            {"kernel", kf.to_json()}};
        if constexpr (scalar_traits<S>::is_exact)
            item["report"] = report_to_json(f.report);
        else
            item["report"] = report_to_json(f.report, Comparator<S>{}.tol);
        arr.push_back(std::move(item));
    }
    out << arr.dump(2) << "\n";
    if (findings.size() > cap) out << "(first " << cap << " shown)\n";
}

int cmd_search(const std::string& kclass, int n, int trials, std::uint64_t seed,
               const std::string& predicate, std::ostream& out) {
    SearchConfig cfg{kclass, n, trials, seed, predicate};
    std::size_t count = 0;
    if (kclass == "rational-signed") {
        auto findings = search_counterexamples<Rational>(cfg);
        count = findings.size();
        print_findings(findings, trials, out);
    } else {
        auto findings = search_counterexamples<double>(cfg);
        count = findings.size();
        print_findings(findings, trials, out);
    }
    return count > 0 && is_theorem_predicate(predicate) ? 1 : 0;
}

template <RealScalar S>
int oracle_with(const KernelOperator<S>& T, std::ostream& out, const Comparator<S>& cmp) {
    const S sup = T.sup_operator_norm();
    const S brute = brute_force_norm(T);
    auto m = T.matrix();
    for (int i = 0; i < T.size(); ++i) m[i][i] = m[i][i] + S{1};
    const S nip = norm_id_plus_scaled(T, S{1});
    const S brute_ip = brute_force_norm(KernelOperator<S>::from_matrix(T.space(), std::move(m)));
    out << "op_norm analytic " << format_double(scalar_traits<S>::to_double(sup)) << "\n";
    out << "op_norm brute " << format_double(scalar_traits<S>::to_double(brute)) << "\n";
    out << "norm_id_plus analytic " << format_double(scalar_traits<S>::to_double(nip)) << "\n";
    out << "norm_id_plus brute " << format_double(scalar_traits<S>::to_double(brute_ip)) << "\n";
    const bool ok = cmp.eq(sup, brute) && cmp.eq(nip, brute_ip);
    out << (ok ? "match\n" : "mismatch\n");
    return ok ? 0 : 1;
}

int cmd_oracle(const std::string& input, int level, std::ostream& out) {
    KernelFile f = KernelFile::load(input);
    if (f.exact) return oracle_with(exact_operator(f, level), out, Comparator<Rational>{});
    return oracle_with(float_operator(f, level), out, Comparator<double>{f.tol});
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Daugavet equation toolkit for stochastic kernels on C(S)"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    std::string in_check, out_check;
    int level_check = 0;
    auto* check = app.add_subcommand("check", "Daugavet report for one kernel file");
    check->add_option("--input", in_check, "kernel JSON file")->required();
    check->add_option("--level", level_check, "grid level for spec inputs");
    check->add_option("--output", out_check, "also write the report here");

    std::string in_refine, csv_refine;
    std::vector<int> levels_refine;
    bool dual_refine = false;
    auto* refine = app.add_subcommand("refine", "run a spec across grid levels");
    refine->add_option("--spec", in_refine, "spec kernel JSON file")->required();
    refine->add_option("--levels", levels_refine, "comma-separated grid levels")
        ->required()
        ->delimiter(',');
    refine->add_flag("--dual", dual_refine, "study the transposed kernels");
    refine->add_option("--csv", csv_refine, "write per-level CSV here");

    std::string in_sweep;
    int level_sweep = 0;
    auto* sweep = app.add_subcommand("sweep", "max of ||I + lambda T|| over |lambda| = 1");
    sweep->add_option("--input", in_sweep, "kernel JSON file")->required();
    sweep->add_option("--level", level_sweep, "grid level for spec inputs");

    std::string mock_esc, spec_esc, mode_esc = "atom";
    double beta_esc = 0, bound_esc = 0;
    int maxlev_esc = 12;
    auto* esc = app.add_subcommand("escalate", "hunt a mass-bound violation witness chain");
    esc->add_option("--mock", mock_esc, "built-in oracle name");
    esc->add_option("--spec", spec_esc, "spec kernel JSON file");
    esc->add_option("--beta", beta_esc, "per-step certified mass")->required();
    esc->add_option("--bound", bound_esc, "claimed total variation bound")->required();
    esc->add_option("--max-level", maxlev_esc, "finest dyadic level");
    esc->add_option("--mode", mode_esc, "closeness test: atom or norm")
        ->check(CLI::IsMember({"atom", "norm"}));

    std::string class_search, pred_search;
    int n_search = 2, trials_search = 100;
    std::uint64_t seed_search = 0;
    auto* search = app.add_subcommand("search", "random counterexample search");
    search->add_option("--class", class_search, "signed, positive or rational-signed")
        ->required()
        ->check(CLI::IsMember({"signed", "positive", "rational-signed"}));
    search->add_option("--n", n_search, "space size");
    search->add_option("--trials", trials_search, "number of random kernels");
    search->add_option("--seed", seed_search, "base seed");
    search->add_option("--predicate", pred_search, "property to falsify")->required();

    std::string in_oracle;
    int level_oracle = 0;
    auto* oracle = app.add_subcommand("oracle", "cross-check norms against brute force");
    oracle->add_option("--input", in_oracle, "kernel JSON file")->required();
    oracle->add_option("--level", level_oracle, "grid level for spec inputs");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return cmd_check(in_check, level_check, out_check, out);
        if (refine->parsed())
            return cmd_refine(in_refine, levels_refine, dual_refine, csv_refine, out);
        if (sweep->parsed()) return cmd_sweep(in_sweep, level_sweep, out);
        if (esc->parsed())
            return cmd_escalate(mock_esc, spec_esc, beta_esc, bound_esc, maxlev_esc, mode_esc,
                                out);
        if (search->parsed())
            return cmd_search(class_search, n_search, trials_search, seed_search, pred_search,
                              out);
        if (oracle->parsed()) return cmd_oracle(in_oracle, level_oracle, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace dgv::cli
