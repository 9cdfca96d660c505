#pragma once

// Bjontegaard delta metrics between two rate-distortion curves.
//
// Rates enter as log2(bpp). BD-metric averages (test - anchor) metric over the
// overlapping log-rate range; BD-rate averages (test - anchor) log2-rate over
// the overlapping metric range and reports 100 * (2^delta - 1). Negative BD-rate
// means the test curve needs fewer bits for the same quality.

#include <string>
#include <utility>
#include <vector>

#include "modec/errors.h"

namespace modec {

struct RDPoint {
    double bpp = 0.0;
    double metric = 0.0;
};

struct RDCurve {
    std::vector<RDPoint> points;
    std::string metric_name;
    bool higher_is_better = true;
};

// Throws ContractError unless the curve has >= 3 points, positive finite bpp,
// finite metrics and no duplicate bpp.
void validate_curve(const RDCurve& c);

struct BDResult {
    double bd_rate_percent = 0.0;
    double bd_metric = 0.0;
    std::pair<double, double> rate_overlap{0.0, 0.0};    // log2(bpp) interval used by bd_metric
    std::pair<double, double> metric_overlap{0.0, 0.0};  // metric interval used by bd_rate
};

class NoOverlapError : public ContractError {
public:
    using ContractError::ContractError;
};

enum class Interpolation { kPchip, kCubicPolynomial };

// Interpolant through (x, y) samples; x must be strictly increasing.
class Interpolant {
public:
    Interpolant(std::vector<double> x, std::vector<double> y, Interpolation kind);
    double operator()(double x) const;
    // Exact integral over [a, b] (within the sample range).
    double integral(double a, double b) const;
    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

private:
    double antiderivative(double x) const;

    Interpolation kind_;
    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> slopes_;  // pchip
    std::vector<double> poly_;    // cubic polynomial coefficients in (x - center) / scale
    double center_ = 0.0;
    double scale_ = 1.0;
};

// Fritsch-Carlson / scipy-style monotone slopes.
std::vector<double> pchip_slopes(const std::vector<double>& x, const std::vector<double>& y);

BDResult bd_rate(const RDCurve& anchor, const RDCurve& test, Interpolation kind = Interpolation::kPchip);
BDResult bd_metric(const RDCurve& anchor, const RDCurve& test, Interpolation kind = Interpolation::kPchip);

// The curve as (log2 bpp -> metric) and (metric -> log2 bpp) samples, sorted.
std::pair<std::vector<double>, std::vector<double>> rate_major(const RDCurve& c);
std::pair<std::vector<double>, std::vector<double>> metric_major(const RDCurve& c);

}  // namespace modec
