#pragma once

// Weil heights over Q: heights of polynomials and of rational self-maps of
// P^m, Gelfond's product inequality, word-height growth bounds along words in
// a symmetric generator set, and the distortion class of a linear map.

#include "cremona/birmap.hpp"
#include "cremona/polynomial.hpp"

#include <string>
#include <vector>

namespace cremona {

struct PlaceValue {
    bool archimedean = false;
    Integer p = 0;      // prime for finite places
    double logval = 0;  // log max_I |a_I|_v
    long valuation = 0; // finite places: -min_I v_p(a_I)
};

struct HeightReport {
    Integer H = 1;  // max |coefficient| of the joint primitive integer vector
    double h = 0;   // log H
    std::vector<PlaceValue> places;  // nonzero contributions of the input as given
};

// prime factorization (Miller-Rabin + Pollard-Brent rho); input > 0
std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n);

// all places with |x|_v != 1, plus the archimedean value; exact valuations
std::vector<PlaceValue> places_of_rational(const Rational& x);

HeightReport poly_height(const HomoPoly& f);

// joint projective height of the full coefficient vector of all components
HeightReport map_height(const BirMap& f);

struct GelfondCheck {
    double gap = 0;       // h(prod) - sum h(f_i)
    Integer delta = 0;    // Delta(prod)
    double bound = 0;     // delta * log 2
    bool holds = false;
};

GelfondCheck gelfond_check(const std::vector<HomoPoly>& factors);

// A symmetric set of maps with explicit inverse pairing; generators[inverse[i]]
// is the inverse of generators[i].
struct MapGeneratorSet {
    std::vector<BirMap> generators;
    std::vector<int> inverse;
    std::vector<std::string> names;

    void validate() const;
    int dim() const { return generators.front().dim(); }
};

struct WordHeightBound {
    double bound = 0;
    double constant = 0;       // ((m+1)log2 + sum_active log M(v) + log(m d^m))
    long d_s = 2;              // max(2, max generator degree)
    double log_m_arch = 0;     // archimedean log M
    std::vector<PlaceValue> active_places;
};

WordHeightBound word_height_bound(const MapGeneratorSet& s, long word_length);

struct WordHeightTrialReport {
    unsigned long trials = 0;
    unsigned long violations = 0;
    unsigned long degenerate_skipped = 0;
    double worst_ratio = 0;  // max h(w) / bound(|w|)
    unsigned long seed = 0;
};

WordHeightTrialReport verify_word_height(const MapGeneratorSet& s, unsigned long trials,
                                         int max_len, unsigned long seed = 20170605,
                                         const ComposeCaps& caps = {});

enum class LinearDistortionClass { FiniteOrder, ExpDistorted, DoublyExpDistorted };

const char* to_string(LinearDistortionClass c);

// FiniteOrder when some power is scalar (finite projective order);
// DoublyExpDistorted for virtually unipotent matrices of infinite order
// (characteristic polynomial a product of cyclotomics); ExpDistorted else.
LinearDistortionClass distortion_class_of_linear(const std::vector<std::vector<Rational>>& a);

// characteristic polynomial, monic, constant term first
std::vector<Rational> characteristic_polynomial(const std::vector<std::vector<Rational>>& a);

// true when every irreducible factor is cyclotomic (all roots on unit circle)
bool all_factors_cyclotomic(const std::vector<Rational>& monic_poly);

}  // namespace cremona
