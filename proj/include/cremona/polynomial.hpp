#pragma once

// Homogeneous multivariate polynomials with exact rational coefficients.
//
// Terms are keyed by exponent vectors and kept in graded-lexicographic order,
// leading term first; that order fixes the sign convention of primitive forms
// and the canonical text serialization. The zero polynomial keeps an explicit
// degree tag so that addition stays total in composition pipelines.

#include "cremona/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cremona {

using Exponents = std::vector<int>;

// graded lexicographic, larger first (x^2 before x*y before y^2)
struct GrlexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class HomoPoly {
public:
    using TermMap = std::map<Exponents, Rational, GrlexDescending>;

    HomoPoly() : num_vars_(1), degree_(0) {}
    HomoPoly(int num_vars, int degree);  // zero polynomial of declared degree

    static HomoPoly monomial(int num_vars, const Exponents& exps, const Rational& coeff);
    static HomoPoly variable(int num_vars, int index);
    static HomoPoly constant(int num_vars, const Rational& value);

    int num_vars() const { return num_vars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // zero for absent exponent vectors
    Rational coeff(const Exponents& exps) const;

    void add_term(const Exponents& exps, const Rational& coeff);

    HomoPoly operator+(const HomoPoly& other) const;
    HomoPoly operator-(const HomoPoly& other) const;
    HomoPoly operator*(const HomoPoly& other) const;
    HomoPoly operator-() const;
    HomoPoly operator*(const Rational& scalar) const;
    bool operator==(const HomoPoly& other) const;

    // max exponent of variable i over all terms (0 for the zero polynomial)
    int partial_degree(int var) const;

    // Sum of the partial degrees over all variables.
    Integer delta_degree_sum() const;

    // f = scale * F with F primitive integer (coefficient gcd 1) and the
    // grlex-leading coefficient of F positive. Throws on the zero polynomial.
    struct Primitive;
    Primitive normalize_primitive() const;

    bool has_integer_coefficients() const;
    Integer max_abs_integer_coefficient() const;  // requires integer coefficients

    // Substitutes values[i] for variable i; all values must share num_vars and
    // degree. Returns a homogeneous polynomial of degree deg(f) * deg(values).
    HomoPoly compose(const std::vector<HomoPoly>& values) const;

    // Exact quotient this / divisor, or nullopt when the division is inexact.
    std::optional<HomoPoly> divide_exact(const HomoPoly& divisor) const;

    std::string str() const;

private:
    int num_vars_;
    int degree_;
    TermMap terms_;

    void check_same_shape_add(const HomoPoly& other) const;
};

struct HomoPoly::Primitive {
    Rational scale;
    HomoPoly polynomial;
};

enum class PolyOp { Add, Mul };
HomoPoly poly_arith(const HomoPoly& f, const HomoPoly& g, PolyOp op);

// Primitive greatest common divisor of two nonzero homogeneous polynomials,
// grlex-leading coefficient positive.
HomoPoly gcd_homogeneous(const HomoPoly& f, const HomoPoly& g);

// Certifies gcd(polys) == const via a random-line restriction mod p (sound in
// the "coprime" direction only; callers fall back to the exact gcd otherwise).
bool certify_jointly_coprime(const std::vector<HomoPoly>& polys, unsigned attempts = 2);

HomoPoly joint_gcd(const std::vector<HomoPoly>& polys);

// Text syntax: "3*x^2*y - 1/2*z^3" with variables x,y,z for num_vars <= 3,
// x0..xm otherwise (both spellings accepted on input). Round-trips exactly.
std::string variable_name(int num_vars, int index);
HomoPoly parse_poly(const std::string& text, int num_vars);

}  // namespace cremona
