#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "gcplane/error.hpp"

namespace gcp {

/// Dense real polynomial, coefficients in ascending degree order.
class Poly {
public:
    Poly() : coeffs_{0.0} {}

    explicit Poly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw Error(ErrorCode::InvalidMotion, "empty coefficient list");
        for (double c : coeffs_)
            if (!std::isfinite(c))
                throw Error(ErrorCode::InvalidMotion, "non-finite polynomial coefficient");
    }

    double operator()(double t) const {
        double acc = 0.0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
        return acc;
    }

    Poly derivative() const {
        if (coeffs_.size() == 1) return Poly({0.0});
        std::vector<double> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            d[i - 1] = static_cast<double>(i) * coeffs_[i];
        return Poly(std::move(d));
    }

    /// Degree ignoring trailing zero coefficients.
    int effective_degree() const {
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            if (coeffs_[i] != 0.0) return static_cast<int>(i);
        return 0;
    }

    const std::vector<double>& coeffs() const { return coeffs_; }

private:
    std::vector<double> coeffs_;
};

} // namespace gcp
