#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "daugavet/scalar.hpp"

namespace dgv {

/// Finite point set {0, .., n-1}, optionally carrying strictly increasing
/// coordinates in [0,1] (grid discretizations attach cell midpoints).
class DiscreteSpace {
public:
    explicit DiscreteSpace(int n) : n_(n) { validate(); }
    DiscreteSpace(int n, std::vector<double> coords)
        : n_(n), coords_(std::make_shared<const std::vector<double>>(std::move(coords))) {
        validate();
        if (static_cast<int>(coords_->size()) != n_)
            throw InputError("coordinate count does not match point count");
        for (int i = 0; i < n_; ++i) {
            double c = (*coords_)[i];
            if (c < 0.0 || c > 1.0) throw InputError("coordinates must lie in [0,1]");
            if (i > 0 && c <= (*coords_)[i - 1])
                throw InputError("coordinates must be strictly increasing");
        }
    }

    [[nodiscard]] int size() const { return n_; }
    [[nodiscard]] bool has_coords() const { return coords_ != nullptr; }
    [[nodiscard]] double coord(int i) const { return (*coords_)[i]; }

    friend bool operator==(const DiscreteSpace& a, const DiscreteSpace& b) {
        if (a.n_ != b.n_) return false;
        if (a.coords_ == b.coords_) return true;
        if (!a.coords_ || !b.coords_) return false;
        return *a.coords_ == *b.coords_;
    }

private:
    void validate() const {
        if (n_ <= 0) throw InputError("a discrete space needs at least one point");
    }

    int n_;
    std::shared_ptr<const std::vector<double>> coords_;
};

/// Atomic signed (or complex) measure on a DiscreteSpace: weight at index t
/// is mu({t}). One kernel row.
template <Scalar S>
class SignedMeasure {
public:
    using magnitude_type = magnitude_t<S>;

    SignedMeasure(DiscreteSpace space, std::vector<S> weights)
        : space_(std::move(space)), weights_(std::move(weights)) {
        if (static_cast<int>(weights_.size()) != space_.size())
            throw InputError("weight count does not match the space");
    }

    static SignedMeasure zero(const DiscreteSpace& space) {
        return SignedMeasure(space, std::vector<S>(space.size(), S{}));
    }

    /// The Dirac measure delta_s: unit mass at s.
    static SignedMeasure dirac(const DiscreteSpace& space, int s) {
        if (s < 0 || s >= space.size()) throw InputError("dirac point out of range");
        std::vector<S> w(space.size(), S{});
        w[s] = scalar_traits<S>::from_int(1);
        return SignedMeasure(space, std::move(w));
    }

    [[nodiscard]] const DiscreteSpace& space() const { return space_; }
    [[nodiscard]] int size() const { return space_.size(); }
    [[nodiscard]] const std::vector<S>& weights() const { return weights_; }

    /// mu({t})
    [[nodiscard]] const S& atom(int t) const {
        check_point(t);
        return weights_[t];
    }

    /// Total variation ||mu|| = sum of |mu({t})|.
    [[nodiscard]] magnitude_type total_variation() const {
        magnitude_type tv{};
        for (const S& w : weights_) tv = tv + scalar_traits<S>::magnitude(w);
        return tv;
    }

    /// |mu|(S \ {t})
    [[nodiscard]] magnitude_type tv_excluding(int t) const {
        check_point(t);
        return total_variation() - scalar_traits<S>::magnitude(weights_[t]);
    }

    /// this + c * b, pointwise.
    [[nodiscard]] SignedMeasure add_scaled(const S& c, const SignedMeasure& b) const {
        if (!(space_ == b.space_)) throw InputError("measures live on different spaces");
        std::vector<S> w(weights_);
        for (int t = 0; t < size(); ++t) w[t] = w[t] + c * b.weights_[t];
        return SignedMeasure(space_, std::move(w));
    }

private:
    void check_point(int t) const {
        if (t < 0 || t >= size()) throw InputError("point out of range");
    }

    DiscreteSpace space_;
    std::vector<S> weights_;
};

}  // namespace dgv
