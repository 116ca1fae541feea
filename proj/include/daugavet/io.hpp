#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "daugavet/asymptotic.hpp"
#include "daugavet/models.hpp"

namespace dgv {

inline constexpr const char* kToolVersion = "0.1.0";

/// On-disk kernel description: scalar mode plus either an explicit matrix
/// or a resolution-independent spec. Exact matrices serialize rationals as
/// "p/q" strings in lowest terms so round-trips are bit-faithful; float
/// matrices hold plain numbers only. Spec atom locations and weights must
/// be strings ("3/10", "0.3") or integers in both modes, since an atom's
/// exact location decides its cell.
struct KernelFile {
    bool exact = false;
    double tol = 1e-9;
    std::optional<std::vector<std::vector<Rational>>> exact_matrix;
    std::optional<std::vector<std::vector<double>>> float_matrix;
    std::optional<KernelSpec> spec;

    static KernelFile load(const std::string& path);
    static KernelFile from_json(const nlohmann::json& j);
    [[nodiscard]] nlohmann::json to_json() const;
};

nlohmann::json spec_to_json(const KernelSpec& spec);
KernelSpec spec_from_json(const nlohmann::json& j);

/// Turn a loaded file into an operator. Matrix files must not carry a
/// level; spec files need one. The float variant converts exact matrices
/// entrywise for tasks that live in float land regardless of input mode.
KernelOperator<Rational> exact_operator(const KernelFile& f, int level = 0);
KernelOperator<double> float_operator(const KernelFile& f, int level = 0);
KernelOperator<double> operator_as_float(const KernelFile& f, int level = 0);

nlohmann::json report_to_json(const DaugavetReport<double>& rep, double tol);
nlohmann::json report_to_json(const DaugavetReport<Rational>& rep);
DaugavetReport<Rational> exact_report_from_json(const nlohmann::json& j);

/// Shortest round-trip decimal, "." separator, locale-free.
std::string format_double(double v);

/// header: level,opnorm,defect,defect_bound,max_abs_diag ; "\n" endings.
/// Values are written as decimals in both scalar modes (the CSV feeds
/// plots; exactness lives in the JSON reports).
void write_refinement_csv(std::ostream& os, const RefinementStudy<double>& study);
void write_refinement_csv(std::ostream& os, const RefinementStudy<Rational>& study);

}  // namespace dgv
