#pragma once

#include <utility>
#include <vector>

#include "daugavet/measure.hpp"

namespace dgv {

/// Kernel-represented operator on the finite model of C(S): one signed
/// measure per point, row s = mu_s, so that (Tf)(s) = sum_t mu_s({t}) f(t).
/// Entry (s,t) of the matrix view is mu_s({t}).
template <Scalar S>
class KernelOperator {
public:
    using magnitude_type = magnitude_t<S>;

    KernelOperator(DiscreteSpace space, std::vector<SignedMeasure<S>> rows)
        : space_(std::move(space)), rows_(std::move(rows)) {
        if (static_cast<int>(rows_.size()) != space_.size())
            throw InputError("row count does not match the space");
        for (const auto& r : rows_)
            if (!(r.space() == space_)) throw InputError("kernel row lives on a different space");
    }

    static KernelOperator from_matrix(const DiscreteSpace& space,
                                      std::vector<std::vector<S>> matrix) {
        if (static_cast<int>(matrix.size()) != space.size())
            throw InputError("matrix row count does not match the space");
        std::vector<SignedMeasure<S>> rows;
        rows.reserve(matrix.size());
        for (auto& row : matrix) rows.emplace_back(space, std::move(row));
        return KernelOperator(space, std::move(rows));
    }

    static KernelOperator from_matrix(std::vector<std::vector<S>> matrix) {
        const int n = static_cast<int>(matrix.size());
        return from_matrix(DiscreteSpace(n), std::move(matrix));
    }

    static KernelOperator identity(const DiscreteSpace& space) {
        std::vector<SignedMeasure<S>> rows;
        rows.reserve(space.size());
        for (int s = 0; s < space.size(); ++s) rows.push_back(SignedMeasure<S>::dirac(space, s));
        return KernelOperator(space, std::move(rows));
    }

    static KernelOperator zero(const DiscreteSpace& space) {
        std::vector<SignedMeasure<S>> rows(space.size(), SignedMeasure<S>::zero(space));
        return KernelOperator(space, std::move(rows));
    }

    [[nodiscard]] const DiscreteSpace& space() const { return space_; }
    [[nodiscard]] int size() const { return space_.size(); }
    [[nodiscard]] const SignedMeasure<S>& row(int s) const { return rows_[s]; }
    [[nodiscard]] const S& entry(int s, int t) const { return rows_[s].atom(t); }

    [[nodiscard]] std::vector<std::vector<S>> matrix() const {
        std::vector<std::vector<S>> m;
        m.reserve(rows_.size());
        for (const auto& r : rows_) m.push_back(r.weights());
        return m;
    }

    /// (Tf)(s) = sum_t mu_s({t}) f(t)
    [[nodiscard]] std::vector<S> apply(const std::vector<S>& f) const {
        if (static_cast<int>(f.size()) != size())
            throw InputError("function length does not match the space");
        std::vector<S> out(size(), S{});
        for (int s = 0; s < size(); ++s) {
            S acc{};
            for (int t = 0; t < size(); ++t) acc = acc + rows_[s].atom(t) * f[t];
            out[s] = acc;
        }
        return out;
    }

    /// ||T|| on the sup-normed function space: max over rows of ||mu_s||.
    [[nodiscard]] magnitude_type sup_operator_norm() const {
        magnitude_type best{};
        for (const auto& r : rows_) {
            magnitude_type tv = r.total_variation();
            if (tv > best) best = tv;
        }
        return best;
    }

    [[nodiscard]] KernelOperator transpose() const {
        std::vector<std::vector<S>> m(size(), std::vector<S>(size(), S{}));
        for (int s = 0; s < size(); ++s)
            for (int t = 0; t < size(); ++t) m[t][s] = rows_[s].atom(t);
        return from_matrix(space_, std::move(m));
    }

    /// Matrix product this * B in the entry view.
    [[nodiscard]] KernelOperator compose(const KernelOperator& B) const {
        if (!(space_ == B.space_)) throw InputError("composition needs a shared space");
        std::vector<std::vector<S>> m(size(), std::vector<S>(size(), S{}));
        for (int s = 0; s < size(); ++s)
            for (int t = 0; t < size(); ++t) {
                S acc{};
                for (int u = 0; u < size(); ++u) acc = acc + rows_[s].atom(u) * B.entry(u, t);
                m[s][t] = acc;
            }
        return from_matrix(space_, std::move(m));
    }

    friend bool operator==(const KernelOperator& a, const KernelOperator& b) {
        if (!(a.space_ == b.space_)) return false;
        for (int s = 0; s < a.size(); ++s)
            if (a.rows_[s].weights() != b.rows_[s].weights()) return false;
        return true;
    }

private:
    DiscreteSpace space_;
    std::vector<SignedMeasure<S>> rows_;
};

/// Max column absolute sum, the operator norm of the l1 (transpose) model.
template <Scalar S>
magnitude_t<S> l1_operator_norm(const KernelOperator<S>& T) {
    magnitude_t<S> best{};
    for (int t = 0; t < T.size(); ++t) {
        magnitude_t<S> col{};
        for (int s = 0; s < T.size(); ++s) col = col + scalar_traits<S>::magnitude(T.entry(s, t));
        if (col > best) best = col;
    }
    return best;
}

}  // namespace dgv
