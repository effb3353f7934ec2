#pragma once

// Growth classification of iterate-degree sequences and the resulting
// distortion verdict: exponential, linear or quadratic growth all certify
// non-distortion, bounded growth certifies nothing.

#include "cremona/birmap.hpp"

#include <string>

namespace cremona {

enum class GrowthClass { Bounded, Linear, Quadratic, Exponential, Inconclusive };
enum class DistortionConsequence { Undistorted, AtMostExponential, NoVerdict };

struct GrowthVerdict {
    GrowthClass growth = GrowthClass::Inconclusive;
    DistortionConsequence consequence = DistortionConsequence::NoVerdict;
    double slope = 0.0;        // linear fit, reporting only
    double quad_coeff = 0.0;   // quadratic fit, reporting only
    double ratio = 0.0;        // exponential last-ratio, reporting only
    std::string note;
};

// Exact integer comparisons decide the class; floats appear only in the
// fitted parameters. Sequences shorter than 8 are Inconclusive.
GrowthVerdict classify_growth(const DegreeSequence& seq);

struct DynamicalDegreeEstimate {
    double nth_root = 0.0;    // d_N^(1/N)
    double last_ratio = 0.0;  // d_N / d_(N-1)
    double estimate = 0.0;    // geometric mean of the two
    double spread = 0.0;      // |nth_root - last_ratio|
};

// requires at least 4 terms
DynamicalDegreeEstimate dynamical_degree_estimate(const DegreeSequence& seq);

const char* to_string(GrowthClass c);
const char* to_string(DistortionConsequence c);

}  // namespace cremona
