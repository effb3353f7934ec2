#pragma once

// Rational self-maps of P^m in homogeneous coordinates, kept in canonical
// form: equal-degree components, jointly coprime with primitive integer
// coefficients, and the first nonzero coefficient of the concatenated
// graded-lex coefficient stream positive.
//
// Results are meaningful for birational maps; birationality itself is not
// verified (no inverse computation).

#include "cremona/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cremona {

// composition produced [0 : ... : 0]; the map was not dominant as represented
struct DegenerateComposition : std::runtime_error {
    DegenerateComposition() : std::runtime_error("composition is identically [0:...:0]") {}
};

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ComposeCaps {
    int max_degree = 1 << 20;
    size_t max_terms = 4u << 20;
};

class BirMap {
public:
    // components are normalized on construction; throws DegenerateComposition
    // if all components are zero, std::invalid_argument on shape errors
    explicit BirMap(std::vector<HomoPoly> components);

    static BirMap identity(int dim);
    static BirMap parse(const std::string& text);  // "[y*z : x*z : x*y]"

    int dim() const { return static_cast<int>(components_.size()) - 1; }
    int degree() const { return components_.front().degree(); }
    const std::vector<HomoPoly>& components() const { return components_; }

    bool operator==(const BirMap& other) const { return components_ == other.components_; }
    bool is_identity() const;

    std::string str() const;

    size_t max_coefficient_bits() const;

private:
    std::vector<HomoPoly> components_;
};

BirMap compose(const BirMap& f, const BirMap& g, const ComposeCaps& caps = {});

struct DegreeSequence {
    std::vector<Integer> degrees;  // deg f, deg f^2, ...
    bool truncated = false;
    std::string source;
};

DegreeSequence iterate_degrees(const BirMap& f, int n, const Integer& degree_cap,
                               const ComposeCaps& caps = {});

// --- built-in families ----------------------------------------------------

// linear map from a nonsingular rational (m+1) x (m+1) matrix, row convention:
// component i = sum_j A[i][j] * x_j
BirMap linear_map(const std::vector<std::vector<Rational>>& matrix);

BirMap diagonal_map(const std::vector<Rational>& diag);

// the standard quadratic involution [y*z : x*z : x*y] on P^2
BirMap sigma_involution();

// (x, y) -> (x, Q(x) y) on P^2 with Q = num/den a univariate rational function;
// num and den are coefficient lists, constant term first
BirMap jonquieres_map(const std::vector<Rational>& num, const std::vector<Rational>& den = {Rational(1)});

// Henon-type quadratic map [y*z : y^2 - x*z : z^2] on P^2
BirMap henon_map();

// monomial map of a unimodular integer matrix, row convention:
// affine image coordinate j = prod_i x_i^(M[j][i])
BirMap monomial_map(const std::vector<std::vector<long>>& matrix);

struct BuiltinParams {
    std::vector<std::vector<Rational>> matrix;          // linear
    std::vector<Rational> diag;                         // diagonal
    std::vector<Rational> q_num{Rational(1)}, q_den{Rational(1)};  // jonquieres
    std::vector<std::vector<long>> imatrix;             // monomial
};

BirMap builtin_family(const std::string& name, const BuiltinParams& params);

}  // namespace cremona
