#include "daugavet/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

namespace dgv {
namespace {

using nlohmann::json;

Rational rational_from_json(const json& j, const char* what) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number())
        throw InputError(std::string(what) +
                         ": non-integral numbers are ambiguous here; write a string like "
                         "\"3/10\" or \"0.3\"");
    throw InputError(std::string(what) + ": expected a number or a \"p/q\" string");
}

Rational exact_entry_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number())
        throw InputError("exact-mode matrix entries must be integers or \"p/q\" strings");
    throw InputError("matrix entries must be numbers or strings");
}

double float_entry_from_json(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) throw InputError("rational entries need exact mode");
    throw InputError("matrix entries must be numbers");
}

MeasureSpec measure_from_json(const json& j) {
    if (!j.is_object()) throw InputError("measure must be an object");
    bool has_density = j.contains("density");
    bool has_atoms = j.contains("atoms");
    if (has_density == has_atoms)
        throw InputError("measure needs exactly one of \"density\" or \"atoms\"");
    if (has_density) {
        if (!j["density"].is_string()) throw InputError("measure density must be an expression string");
        return MeasureSpec::from_density(Expression::parse(j["density"].get<std::string>()));
    }
    std::vector<std::pair<Rational, Rational>> atoms;
    for (const auto& a : j["atoms"]) {
        if (!a.is_object() || !a.contains("location") || !a.contains("weight"))
            throw InputError("each atom needs \"location\" and \"weight\"");
        atoms.emplace_back(rational_from_json(a["location"], "atom location"),
                           rational_from_json(a["weight"], "atom weight"));
    }
    return MeasureSpec::from_atoms(std::move(atoms));
}

json measure_to_json(const MeasureSpec& m) {
    json j = json::object();
    if (m.density) {
        j["density"] = m.density->print();
    } else {
        json atoms = json::array();
        for (const auto& [loc, w] : m.atoms)
            atoms.push_back({{"location", loc.to_fraction_string()},
                             {"weight", w.to_fraction_string()}});
        j["atoms"] = std::move(atoms);
    }
    return j;
}

std::string expr_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw InputError(std::string("spec needs an expression string \"") + key + "\"");
    return j[key].get<std::string>();
}

}  // namespace

KernelSpec spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw InputError("spec needs a \"type\" string");
    std::string type = j["type"].get<std::string>();
    if (type == "density") return DensitySpec{Expression::parse(expr_field(j, "expr"))};
    if (type == "rank_one") {
        if (!j.contains("measure")) throw InputError("rank_one spec needs a \"measure\"");
        return RankOneSpec{Expression::parse(expr_field(j, "shape")),
                           measure_from_json(j["measure"])};
    }
    if (type == "c0_factored") {
        if (!j.contains("terms") || !j["terms"].is_array() || j["terms"].empty())
            throw InputError("c0_factored spec needs a nonempty \"terms\" array");
        C0FactoredSpec spec;
        for (const auto& t : j["terms"]) {
            if (!t.contains("measure")) throw InputError("each term needs a \"measure\"");
            spec.terms.emplace_back(Expression::parse(expr_field(t, "coef")),
                                    measure_from_json(t["measure"]));
        }
        return spec;
    }
    if (type == "atomic") {
        if (!j.contains("points") || !j["points"].is_array() || j["points"].empty())
            throw InputError("atomic spec needs a nonempty \"points\" array");
        AtomicSpec spec;
        for (const auto& p : j["points"]) {
            if (!p.is_object() || !p.contains("location"))
                throw InputError("each point needs a \"location\"");
            spec.points.emplace_back(rational_from_json(p["location"], "point location"),
                                     Expression::parse(expr_field(p, "weight")));
        }
        return spec;
    }
    throw InputError("unknown spec type '" + type + "'");
}

json spec_to_json(const KernelSpec& spec) {
    json j = json::object();
    if (const auto* d = std::get_if<DensitySpec>(&spec)) {
        j["type"] = "density";
        j["expr"] = d->expr.print();
    } else if (const auto* r = std::get_if<RankOneSpec>(&spec)) {
        j["type"] = "rank_one";
        j["shape"] = r->shape.print();
        j["measure"] = measure_to_json(r->meas);
    } else if (const auto* f = std::get_if<C0FactoredSpec>(&spec)) {
        j["type"] = "c0_factored";
        json terms = json::array();
        for (const auto& [coef, meas] : f->terms)
            terms.push_back({{"coef", coef.print()}, {"measure", measure_to_json(meas)}});
        j["terms"] = std::move(terms);
    } else if (const auto* a = std::get_if<AtomicSpec>(&spec)) {
        j["type"] = "atomic";
        json points = json::array();
        for (const auto& [loc, wexpr] : a->points)
            points.push_back({{"location", loc.to_fraction_string()}, {"weight", wexpr.print()}});
        j["points"] = std::move(points);
    }
    return j;
}

KernelFile KernelFile::from_json(const json& j) {
    if (!j.is_object()) throw InputError("kernel file must be a JSON object");
    if (!j.contains("scalar") || !j["scalar"].is_string())
        throw InputError("kernel file needs \"scalar\": \"exact\" or \"float\"");
    KernelFile f;
    std::string scalar = j["scalar"].get<std::string>();
    if (scalar == "exact")
        f.exact = true;
    else if (scalar == "float")
        f.exact = false;
    else
        throw InputError("scalar must be \"exact\" or \"float\", got '" + scalar + "'");

    if (j.contains("tol")) {
        if (f.exact) throw InputError("tol applies to float mode only");
        if (!j["tol"].is_number() || !(j["tol"].get<double>() >= 0))
            throw InputError("tol must be a nonnegative number");
        f.tol = j["tol"].get<double>();
    }

    bool has_matrix = j.contains("matrix");
    bool has_spec = j.contains("spec");
    if (has_matrix == has_spec)
        throw InputError("kernel file needs exactly one of \"matrix\" or \"spec\"");

    if (has_matrix) {
        const json& m = j["matrix"];
        if (!m.is_array() || m.empty()) throw InputError("matrix must be a nonempty array of rows");
        const std::size_t n = m.size();
        if (f.exact) {
            std::vector<std::vector<Rational>> rows;
            for (const auto& row : m) {
                if (!row.is_array() || row.size() != n) throw InputError("matrix must be square");
                std::vector<Rational> r;
                for (const auto& e : row) r.push_back(exact_entry_from_json(e));
                rows.push_back(std::move(r));
            }
            f.exact_matrix = std::move(rows);
        } else {
            std::vector<std::vector<double>> rows;
            for (const auto& row : m) {
                if (!row.is_array() || row.size() != n) throw InputError("matrix must be square");
                std::vector<double> r;
                for (const auto& e : row) r.push_back(float_entry_from_json(e));
                rows.push_back(std::move(r));
            }
            f.float_matrix = std::move(rows);
        }
    } else {
        f.spec = spec_from_json(j["spec"]);
    }
    return f;
}

json KernelFile::to_json() const {
    json j = json::object();
    j["scalar"] = exact ? "exact" : "float";
    if (!exact) j["tol"] = tol;
    if (exact_matrix) {
        json m = json::array();
        for (const auto& row : *exact_matrix) {
            json r = json::array();
            for (const auto& e : row) r.push_back(e.to_fraction_string());
            m.push_back(std::move(r));
        }
        j["matrix"] = std::move(m);
    } else if (float_matrix) {
        j["matrix"] = *float_matrix;
    } else if (spec) {
        j["spec"] = spec_to_json(*spec);
    }
    return j;
}

KernelFile KernelFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("input JSON: " + std::string(e.what()));
    }
    return from_json(j);
}

KernelOperator<Rational> exact_operator(const KernelFile& f, int level) {
    if (f.spec) {
        if (level == 0) throw InputError("spec inputs need --level");
        return discretize<Rational>(*f.spec, level);
    }
    if (level != 0) throw InputError("--level applies to spec inputs only");
    return KernelOperator<Rational>::from_matrix(*f.exact_matrix);
}

KernelOperator<double> float_operator(const KernelFile& f, int level) {
    if (f.spec) {
        if (level == 0) throw InputError("spec inputs need --level");
        return discretize<double>(*f.spec, level);
    }
    if (level != 0) throw InputError("--level applies to spec inputs only");
    return KernelOperator<double>::from_matrix(*f.float_matrix);
}

KernelOperator<double> operator_as_float(const KernelFile& f, int level) {
    if (f.spec || !f.exact) return float_operator(f, level);
    if (level != 0) throw InputError("--level applies to spec inputs only");
    std::vector<std::vector<double>> m;
    for (const auto& row : *f.exact_matrix) {
        std::vector<double> r;
        for (const auto& e : row) r.push_back(e.to_double());
        m.push_back(std::move(r));
    }
    return KernelOperator<double>::from_matrix(std::move(m));
}

json report_to_json(const DaugavetReport<double>& rep, double tol) {
    return {{"scalar", "float"},
            {"tol", tol},
            {"op_norm", rep.op_norm},
            {"norm_id_plus", rep.norm_id_plus},
            {"norm_id_minus", rep.norm_id_minus},
            {"defect", rep.defect},
            {"defect_bound", rep.defect_bound},
            {"max_abs_diagonal", rep.max_abs_diagonal},
            {"holds", rep.holds},
            {"star", rep.star},
            {"double_star", rep.double_star}};
}

json report_to_json(const DaugavetReport<Rational>& rep) {
    return {{"scalar", "exact"},
            {"op_norm", rep.op_norm.to_fraction_string()},
            {"norm_id_plus", rep.norm_id_plus.to_fraction_string()},
            {"norm_id_minus", rep.norm_id_minus.to_fraction_string()},
            {"defect", rep.defect.to_fraction_string()},
            {"defect_bound", rep.defect_bound.to_fraction_string()},
            {"max_abs_diagonal", rep.max_abs_diagonal.to_fraction_string()},
            {"holds", rep.holds},
            {"star", rep.star},
            {"double_star", rep.double_star}};
}

DaugavetReport<Rational> exact_report_from_json(const json& j) {
    if (!j.is_object() || j.value("scalar", "") != "exact")
        throw InputError("not an exact report");
    DaugavetReport<Rational> rep{};
    auto field = [&](const char* key) {
        if (!j.contains(key) || !j[key].is_string())
            throw InputError(std::string("report needs string field \"") + key + "\"");
        return Rational::parse(j[key].get<std::string>());
    };
    rep.op_norm = field("op_norm");
    rep.norm_id_plus = field("norm_id_plus");
    rep.norm_id_minus = field("norm_id_minus");
    rep.defect = field("defect");
    rep.defect_bound = field("defect_bound");
    rep.max_abs_diagonal = field("max_abs_diagonal");
    rep.holds = j.value("holds", false);
    rep.star = j.value("star", false);
    rep.double_star = j.value("double_star", false);
    return rep;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

namespace {

template <RealScalar S>
void write_csv_impl(std::ostream& os, const RefinementStudy<S>& study) {
    os << "level,opnorm,defect,defect_bound,max_abs_diag\n";
    for (const auto& lv : study.levels) {
        const auto& r = lv.report;
        os << lv.level << ',' << format_double(scalar_traits<S>::to_double(r.op_norm)) << ','
           << format_double(scalar_traits<S>::to_double(r.defect)) << ','
           << format_double(scalar_traits<S>::to_double(r.defect_bound)) << ','
           << format_double(scalar_traits<S>::to_double(r.max_abs_diagonal)) << '\n';
    }
}

}  // namespace

void write_refinement_csv(std::ostream& os, const RefinementStudy<double>& study) {
    write_csv_impl(os, study);
}

void write_refinement_csv(std::ostream& os, const RefinementStudy<Rational>& study) {
    write_csv_impl(os, study);
}

}  // namespace dgv
