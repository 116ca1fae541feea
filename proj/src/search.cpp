#include "daugavet/search.hpp"

namespace dgv {

bool is_theorem_predicate(const std::string& predicate) {
    return predicate == "prop1-identity" || predicate == "lemma5-biconditional" ||
           predicate == "positive-defect-zero" || predicate == "star-implies-defect-zero";
}

bool is_known_predicate(const std::string& predicate) {
    return is_theorem_predicate(predicate) || predicate == "defect-zero";
}

ScanSummary exhaustive_scan(const std::vector<Rational>& entries, int n) {
    if (entries.empty()) throw InputError("entry set must be nonempty");
    if (n < 1) throw InputError("matrix size must be positive");
    const long long base = static_cast<long long>(entries.size());
    const int digits = n * n;
    long long total = 1;
    for (int i = 0; i < digits; ++i) {
        if (total > 10'000'000 / base) throw InputError("scan refused: more than 10^7 matrices");
        total *= base;
    }

    ScanSummary sum;
    sum.total = total;
    std::vector<int> odo(digits, 0);
    Comparator<Rational> cmp{};
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (long long idx = 0; idx < total; ++idx) {
        for (int d = 0; d < digits; ++d) m[d / n][d % n] = entries[odo[d]];
        auto T = KernelOperator<Rational>::from_matrix(m);
        auto rep = daugavet_report(T, cmp);
        bool dz = rep.defect == Rational(0);
        if (dz) ++sum.defect_zero;
        if (rep.star) ++sum.star;
        if (rep.double_star) ++sum.double_star;
        Rational lhs = rep.norm_id_plus < rep.norm_id_minus ? rep.norm_id_minus : rep.norm_id_plus;
        if (!(lhs == Rational(1) + rep.op_norm)) ++sum.prop1_violations;
        if (dz != rep.double_star) ++sum.biconditional_violations;
        for (int d = digits - 1; d >= 0; --d) {
            if (++odo[d] < base) break;
            odo[d] = 0;
        }
    }
    return sum;
}

}  // namespace dgv
