#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "json.hpp"

#include "daugavet/daugavet.hpp"
#include "daugavet/foias.hpp"
#include "daugavet/io.hpp"
#include "daugavet/search.hpp"

namespace py = pybind11;

namespace {

using namespace dgv;

nlohmann::json parse_json(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("input JSON: " + std::string(e.what()));
    }
}

// The python surface speaks JSON strings for everything structured, so the
// schemas match the CLI and the files on disk exactly.
std::string report_json(const std::string& kernel_json, int level) {
    KernelFile f = KernelFile::from_json(parse_json(kernel_json));
    nlohmann::json rep;
    if (f.exact)
        rep = report_to_json(daugavet_report(exact_operator(f, level)));
    else
        rep = report_to_json(daugavet_report(float_operator(f, level), Comparator<double>{f.tol}),
                             f.tol);
    return rep.dump();
}

std::string discretize_json(const std::string& spec_json, int level, bool exact) {
    KernelSpec spec = spec_from_json(parse_json(spec_json));
    KernelFile out;
    out.exact = exact;
    if (exact)
        out.exact_matrix = discretize<Rational>(spec, level).matrix();
    else
        out.float_matrix = discretize<double>(spec, level).matrix();
    return out.to_json().dump();
}

std::string refinement_csv(const std::string& kernel_json, const std::vector<int>& levels,
                           bool dual) {
    KernelFile f = KernelFile::from_json(parse_json(kernel_json));
    if (!f.spec) throw InputError("refinement needs a spec kernel file, not a matrix");
    std::ostringstream os;
    if (f.exact) {
        auto study = dual ? dual_study<Rational>(*f.spec, levels)
                          : refinement_study<Rational>(*f.spec, levels);
        write_refinement_csv(os, study);
    } else {
        Comparator<double> cmp{f.tol};
        auto study = dual ? dual_study<double>(*f.spec, levels, cmp)
                          : refinement_study<double>(*f.spec, levels, cmp);
        write_refinement_csv(os, study);
    }
    return os.str();
}

py::tuple sweep(const std::string& kernel_json, int level) {
    KernelFile f = KernelFile::from_json(parse_json(kernel_json));
    SweepResult r = complex_sweep_max(complexify(operator_as_float(f, level)));
    return py::make_tuple(r.max_norm, r.expected, r.arg_max.real(), r.arg_max.imag());
}

std::string escalate_json(const std::string& mock, double beta, double bound, int max_level,
                          const std::string& mode) {
    auto oracle = make_mock_oracle(mock, bound, max_level);
    EscalationOutcome o =
        escalate(*oracle, beta, mode == "norm" ? ContinuityMode::norm : ContinuityMode::atom);
    nlohmann::json j;
    switch (o.kind) {
    case EscalationOutcome::Kind::bound_violated: j["kind"] = "bound_violated"; break;
    case EscalationOutcome::Kind::stalled: j["kind"] = "stalled"; break;
    default: j["kind"] = "no_negative_patch"; break;
    }
    j["certified_mass"] = o.chain.certified_mass;
    j["points"] = o.chain.points;
    j["point_levels"] = o.chain.point_levels;
    j["patch"] = {o.chain.patch_lo, o.chain.patch_hi};
    if (o.kind == EscalationOutcome::Kind::stalled) {
        j["stalled_step"] = o.stalled_step;
        j["stall_reason"] = to_string(o.stall_reason);
    }
    if (o.kind == EscalationOutcome::Kind::bound_violated)
        j["verified"] = verify_chain(*oracle, o.chain);
    return j.dump();
}

template <RealScalar S>
nlohmann::json findings_to_json(const std::vector<Finding<S>>& findings) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& f : findings) {
        KernelFile kf;
        kf.exact = scalar_traits<S>::is_exact;
        if constexpr (scalar_traits<S>::is_exact)
            kf.exact_matrix = f.kernel.matrix();
        else
            kf.float_matrix = f.kernel.matrix();
        nlohmann::json item{{"trial", f.trial}, {"kernel", kf.to_json()}};
        if constexpr (scalar_traits<S>::is_exact)
            item["report"] = report_to_json(f.report);
        else
            item["report"] = report_to_json(f.report, Comparator<S>{}.tol);
        arr.push_back(std::move(item));
    }
    return arr;
}

std::string search_json(const std::string& kernel_class, int n, int trials, std::uint64_t seed,
                        const std::string& predicate) {
    SearchConfig cfg{kernel_class, n, trials, seed, predicate};
    nlohmann::json findings;
    if (kernel_class == "rational-signed")
        findings = findings_to_json(search_counterexamples<Rational>(cfg));
    else
        findings = findings_to_json(search_counterexamples<double>(cfg));
    nlohmann::json j{{"predicate", predicate},
                     {"trials", trials},
                     {"theorem", is_theorem_predicate(predicate)},
                     {"count", findings.size()},
                     {"findings", std::move(findings)}};
    return j.dump();
}

std::string scan_json(const std::vector<std::string>& entries, int n) {
    std::vector<Rational> es;
    for (const auto& e : entries) es.push_back(Rational::parse(e));
    ScanSummary s = exhaustive_scan(es, n);
    nlohmann::json j{{"total", s.total},
                     {"defect_zero", s.defect_zero},
                     {"star", s.star},
                     {"double_star", s.double_star},
                     {"prop1_violations", s.prop1_violations},
                     {"biconditional_violations", s.biconditional_violations}};
    return j.dump();
}

std::vector<int> zero_atoms(const std::string& kernel_json, int level) {
    KernelFile f = KernelFile::from_json(parse_json(kernel_json));
    if (f.exact) return zero_atom_points(exact_operator(f, level));
    return zero_atom_points(float_operator(f, level), Comparator<double>{f.tol});
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Daugavet equation toolkit for stochastic kernels on C(S)";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    m.def("version", [] { return std::string(kToolVersion); });

    m.def("report_json", &report_json, py::arg("kernel_json"), py::arg("level") = 0,
          "Daugavet report (JSON string) for a kernel file given as a JSON string.");

    m.def(
        "sup_norm",
        [](std::vector<std::vector<double>> matrix) {
            return KernelOperator<double>::from_matrix(std::move(matrix)).sup_operator_norm();
        },
        py::arg("matrix"));

    m.def(
        "brute_norm",
        [](std::vector<std::vector<double>> matrix) {
            return brute_force_norm(KernelOperator<double>::from_matrix(std::move(matrix)));
        },
        py::arg("matrix"));

    m.def(
        "defect",
        [](std::vector<std::vector<double>> matrix, double tol) {
            auto T = KernelOperator<double>::from_matrix(std::move(matrix));
            return daugavet_report(T, Comparator<double>{tol}).defect;
        },
        py::arg("matrix"), py::arg("tol") = 1e-9);

    m.def(
        "eval_expression",
        [](const std::string& expr, double s, double t) {
            return Expression::parse(expr).eval<double>(s, t);
        },
        py::arg("expr"), py::arg("s"), py::arg("t") = 0.0);

    m.def(
        "print_expression",
        [](const std::string& expr) { return Expression::parse(expr).print(); },
        py::arg("expr"));

    m.def("discretize_json", &discretize_json, py::arg("spec_json"), py::arg("level"),
          py::arg("exact") = false);

    m.def("refinement_csv", &refinement_csv, py::arg("kernel_json"), py::arg("levels"),
          py::arg("dual") = false);

    m.def("sweep", &sweep, py::arg("kernel_json"), py::arg("level") = 0,
          "(max_norm, expected, lambda_re, lambda_im) over the unit circle.");

    m.def("escalate_mock", &escalate_json, py::arg("mock"), py::arg("beta"), py::arg("bound"),
          py::arg("max_level") = 12, py::arg("mode") = "atom");

    m.def("search_json", &search_json, py::arg("kernel_class"), py::arg("n"), py::arg("trials"),
          py::arg("seed") = 0, py::arg("predicate") = "prop1-identity");

    m.def("exhaustive_scan_json", &scan_json, py::arg("entries"), py::arg("n"));

    m.def(
        "splitmix_stream",
        [](std::uint64_t seed, int count) {
            if (count < 0 || count > 1'000'000) throw InputError("count must lie in [0, 10^6]");
            SplitMix64 rng{seed};
            std::vector<std::uint64_t> out;
            out.reserve(static_cast<std::size_t>(count));
            for (int i = 0; i < count; ++i) out.push_back(rng.next());
            return out;
        },
        py::arg("seed"), py::arg("count"));

    m.def("zero_atom_points", &zero_atoms, py::arg("kernel_json"), py::arg("level") = 0);

#ifdef DAUGAVET_VERSION
    m.attr("__version__") = DAUGAVET_VERSION;
#else
    m.attr("__version__") = kToolVersion;
#endif
}
