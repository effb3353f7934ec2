#include "cremona/degree_growth.hpp"

#include <algorithm>
#include <cmath>

namespace cremona {

const char* to_string(GrowthClass c) {
    switch (c) {
        case GrowthClass::Bounded: return "Bounded";
        case GrowthClass::Linear: return "Linear";
        case GrowthClass::Quadratic: return "Quadratic";
        case GrowthClass::Exponential: return "Exponential";
        case GrowthClass::Inconclusive: return "Inconclusive";
    }
    return "?";
}

const char* to_string(DistortionConsequence c) {
    switch (c) {
        case DistortionConsequence::Undistorted: return "Undistorted";
        case DistortionConsequence::AtMostExponential: return "AtMostExponential";
        case DistortionConsequence::NoVerdict: return "NoVerdict";
    }
    return "?";
}

GrowthVerdict classify_growth(const DegreeSequence& seq) {
    GrowthVerdict v;
    const auto& d = seq.degrees;
    const size_t n = d.size();
    if (n < 8) {
        v.note = "sequence too short";
        return v;
    }

    // bounded: the maximum is attained at least twice
    Integer mx = d[0];
    for (const auto& x : d) mx = std::max(mx, x);
    size_t hits = 0;
    for (const auto& x : d)
        if (x == mx) ++hits;
    if (hits >= 2) {
        v.growth = GrowthClass::Bounded;
        v.consequence = DistortionConsequence::NoVerdict;
        v.note = "max degree " + mx.get_str() + " attained " + std::to_string(hits) + " times";
        return v;
    }

    // exponential: tail ratios bounded away from 1 (d_{k+1} >= (5/4) d_k)
    const size_t tail = n / 2;
    bool expo = true;
    for (size_t k = tail; k + 1 < n; ++k)
        if (4 * d[k + 1] < 5 * d[k]) {
            expo = false;
            break;
        }
    if (expo) {
        v.growth = GrowthClass::Exponential;
        v.consequence = DistortionConsequence::Undistorted;
        v.ratio = mpq_class(Rational(d[n - 1]) / Rational(d[n - 2])).get_d();
        v.note = "degree grows exponentially; undistorted";
        return v;
    }

    // second differences on the tail decide linear vs quadratic
    std::vector<Integer> dd2;
    for (size_t k = tail; k + 2 < n; ++k) dd2.push_back(d[k + 2] - 2 * d[k + 1] + d[k]);
    bool all_zero = true, constant_positive = !dd2.empty();
    for (size_t k = 0; k < dd2.size(); ++k) {
        if (dd2[k] != 0) all_zero = false;
        if (dd2[k] <= 0 || dd2[k] != dd2[0]) constant_positive = false;
    }
    if (all_zero && d[n - 1] > d[tail]) {
        v.growth = GrowthClass::Linear;
        v.consequence = DistortionConsequence::Undistorted;
        v.slope = mpq_class(Rational(d[n - 1] - d[tail]) / Rational(static_cast<long>(n - 1 - tail))).get_d();
        v.note = "degree grows linearly; undistorted";
        return v;
    }
    if (constant_positive) {
        v.growth = GrowthClass::Quadratic;
        v.consequence = DistortionConsequence::Undistorted;
        v.quad_coeff = dd2[0].get_d() / 2.0;
        v.note = "degree grows quadratically; undistorted";
        return v;
    }
    v.note = "no exact model matched";
    return v;
}

DynamicalDegreeEstimate dynamical_degree_estimate(const DegreeSequence& seq) {
    const auto& d = seq.degrees;
    if (d.size() < 4) throw std::invalid_argument("dynamical_degree_estimate: sequence too short");
    DynamicalDegreeEstimate e;
    const size_t n = d.size();
    e.nth_root = std::exp(log_integer(d[n - 1]) / static_cast<double>(n));
    e.last_ratio = std::exp(log_integer(d[n - 1]) - log_integer(d[n - 2]));
    e.estimate = std::sqrt(e.nth_root * e.last_ratio);
    e.spread = std::abs(e.nth_root - e.last_ratio);
    return e;
}

}  // namespace cremona
