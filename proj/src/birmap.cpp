#include "cremona/birmap.hpp"

#include <algorithm>
#include <sstream>

namespace cremona {

namespace {

// joint monomial factor, joint rational content and the global sign rule
std::vector<HomoPoly> normalize_components(std::vector<HomoPoly> comps) {
    if (comps.size() < 2) throw std::invalid_argument("BirMap: need at least two components");
    const int nv = static_cast<int>(comps.size());
    bool all_zero = true;
    int deg = -1;
    for (const auto& c : comps) {
        if (c.num_vars() != nv)
            throw std::invalid_argument("BirMap: components must have dim+1 variables");
        if (!c.is_zero()) {
            if (deg >= 0 && c.degree() != deg)
                throw std::invalid_argument("BirMap: components must share a common degree");
            deg = c.degree();
            all_zero = false;
        }
    }
    if (all_zero) throw DegenerateComposition();

    // strip the joint monomial factor
    Exponents common(nv, 1 << 28);
    for (const auto& c : comps) {
        if (c.is_zero()) continue;
        Exponents m(nv, 1 << 28);
        for (const auto& [e, q] : c.terms())
            for (int i = 0; i < nv; ++i) m[i] = std::min(m[i], e[i]);
        for (int i = 0; i < nv; ++i) common[i] = std::min(common[i], m[i]);
    }
    bool strip = false;
    for (int i = 0; i < nv; ++i)
        if (common[i] > 0) strip = true;
    if (strip) {
        HomoPoly mono = HomoPoly::monomial(nv, common, 1);
        for (auto& c : comps) {
            if (c.is_zero()) {
                c = HomoPoly(nv, c.degree() - mono.degree());
            } else {
                auto q = c.divide_exact(mono);
                c = *q;
            }
        }
        deg -= mono.degree();
    }

    // remaining non-monomial common factor
    if (deg > 0 && !certify_jointly_coprime(comps)) {
        HomoPoly g = joint_gcd(comps);
        if (g.degree() > 0) {
            for (auto& c : comps) {
                auto q = c.divide_exact(g);
                if (!q) throw std::logic_error("BirMap: joint gcd does not divide a component");
                c = *q;
            }
            deg -= g.degree();
        }
    }

    // joint primitive integer content
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& c : comps)
        for (const auto& [e, q] : c.terms()) {
            num_gcd = gcd(num_gcd, q.get_num());
            den_lcm = lcm(den_lcm, q.get_den());
        }
    Rational scale(num_gcd, den_lcm);
    scale.canonicalize();
    // sign of the first nonzero coefficient in the concatenated grlex stream
    for (const auto& c : comps) {
        if (c.is_zero()) continue;
        if (sign(c.terms().begin()->second) < 0) scale = -scale;
        break;
    }
    for (auto& c : comps) {
        HomoPoly scaled(nv, c.degree());
        for (const auto& [e, q] : c.terms()) scaled.add_term(e, q / scale);
        c = scaled;
    }
    // zero components keep the common degree tag
    for (auto& c : comps)
        if (c.is_zero()) c = HomoPoly(nv, deg);
    return comps;
}

}  // namespace

BirMap::BirMap(std::vector<HomoPoly> components)
    : components_(normalize_components(std::move(components))) {}

BirMap BirMap::identity(int dim) {
    std::vector<HomoPoly> comps;
    for (int i = 0; i <= dim; ++i) comps.push_back(HomoPoly::variable(dim + 1, i));
    return BirMap(std::move(comps));
}

bool BirMap::is_identity() const {
    if (degree() != 1) return false;
    return *this == identity(dim());
}

BirMap BirMap::parse(const std::string& text) {
    std::string body = text;
    auto l = body.find('[');
    auto r = body.rfind(']');
    if (l == std::string::npos || r == std::string::npos || r <= l)
        throw std::invalid_argument("BirMap::parse: expected [p0 : p1 : ...]");
    body = body.substr(l + 1, r - l - 1);
    std::vector<std::string> parts;
    std::string cur;
    for (char c : body) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() < 2) throw std::invalid_argument("BirMap::parse: need at least two components");
    const int nv = static_cast<int>(parts.size());
    std::vector<HomoPoly> comps;
    for (const auto& p : parts) comps.push_back(parse_poly(p, nv));
    return BirMap(std::move(comps));
}

std::string BirMap::str() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < components_.size(); ++i) {
        if (i) out << " : ";
        out << components_[i].str();
    }
    out << "]";
    return out.str();
}

size_t BirMap::max_coefficient_bits() const {
    size_t bits = 0;
    for (const auto& c : components_)
        for (const auto& [e, q] : c.terms()) bits = std::max(bits, bit_size(q.get_num()));
    return bits;
}

BirMap compose(const BirMap& f, const BirMap& g, const ComposeCaps& caps) {
    if (f.dim() != g.dim()) throw std::invalid_argument("compose: dimension mismatch");
    long raw_degree = static_cast<long>(f.degree()) * g.degree();
    if (raw_degree > caps.max_degree)
        throw CapExceeded("compose: raw degree " + std::to_string(raw_degree) + " exceeds cap");

    // shared power cache across components
    const auto& gs = g.components();
    const int nv = f.dim() + 1;
    std::vector<std::vector<HomoPoly>> powers(nv);
    for (int i = 0; i < nv; ++i) powers[i].push_back(HomoPoly::constant(nv, 1));
    size_t total_terms = 0;
    auto power = [&](int i, int k) -> const HomoPoly& {
        auto& ps = powers[i];
        while (static_cast<int>(ps.size()) <= k) {
            ps.push_back(ps.back() * gs[i]);
            total_terms += ps.back().term_count();
            if (total_terms > caps.max_terms) throw CapExceeded("compose: term cap exceeded");
        }
        return ps[k];
    };
    std::vector<HomoPoly> comps;
    for (const auto& fc : f.components()) {
        HomoPoly acc(nv, fc.degree() * g.degree());
        for (const auto& [e, c] : fc.terms()) {
            HomoPoly term = HomoPoly::constant(nv, c);
            for (int i = 0; i < nv; ++i)
                if (e[i] > 0) term = term * power(i, e[i]);
            acc = acc + term;
            if (acc.term_count() > caps.max_terms) throw CapExceeded("compose: term cap exceeded");
        }
        comps.push_back(std::move(acc));
    }
    return BirMap(std::move(comps));  // throws DegenerateComposition when [0:...:0]
}

DegreeSequence iterate_degrees(const BirMap& f, int n, const Integer& degree_cap,
                               const ComposeCaps& caps) {
    if (n < 1) throw std::invalid_argument("iterate_degrees: need n >= 1");
    DegreeSequence seq;
    seq.source = f.str();
    BirMap g = f;
    seq.degrees.push_back(g.degree());
    if (Integer(g.degree()) > degree_cap) {
        seq.truncated = true;
        return seq;
    }
    for (int k = 2; k <= n; ++k) {
        try {
            g = compose(f, g, caps);
        } catch (const CapExceeded&) {
            seq.truncated = true;
            break;
        }
        if (Integer(g.degree()) > degree_cap) {
            seq.truncated = true;
            break;
        }
        seq.degrees.push_back(g.degree());
    }
    return seq;
}

BirMap linear_map(const std::vector<std::vector<Rational>>& matrix) {
    const int nv = static_cast<int>(matrix.size());
    if (nv < 2) throw std::invalid_argument("linear_map: need size >= 2");
    for (const auto& row : matrix)
        if (static_cast<int>(row.size()) != nv) throw std::invalid_argument("linear_map: non-square matrix");
    // determinant by fraction-free elimination
    std::vector<std::vector<Rational>> a = matrix;
    Rational det = 1;
    for (int col = 0; col < nv; ++col) {
        int piv = -1;
        for (int r = col; r < nv; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::invalid_argument("linear_map: singular matrix");
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < nv; ++r) {
            Rational factor = a[r][col] / a[col][col];
            for (int c2 = col; c2 < nv; ++c2) a[r][c2] -= factor * a[col][c2];
        }
    }
    std::vector<HomoPoly> comps;
    for (int i = 0; i < nv; ++i) {
        HomoPoly p(nv, 1);
        for (int j = 0; j < nv; ++j) {
            if (matrix[i][j] == 0) continue;
            Exponents e(nv, 0);
            e[j] = 1;
            p.add_term(e, matrix[i][j]);
        }
        comps.push_back(std::move(p));
    }
    return BirMap(std::move(comps));
}

BirMap diagonal_map(const std::vector<Rational>& diag) {
    const int nv = static_cast<int>(diag.size());
    std::vector<std::vector<Rational>> m(nv, std::vector<Rational>(nv, 0));
    for (int i = 0; i < nv; ++i) m[i][i] = diag[i];
    return linear_map(m);
}

BirMap sigma_involution() {
    return BirMap::parse("[y*z : x*z : x*y]");
}

BirMap henon_map() {
    return BirMap::parse("[y*z : y^2 - x*z : z^2]");
}

BirMap jonquieres_map(const std::vector<Rational>& num, const std::vector<Rational>& den) {
    auto is_zero_list = [](const std::vector<Rational>& v) {
        for (const auto& q : v)
            if (q != 0) return false;
        return true;
    };
    if (num.empty() || den.empty() || is_zero_list(num) || is_zero_list(den))
        throw std::invalid_argument("jonquieres_map: Q must be a nonzero rational function");
    // homogenize Q = P(x)/R(x) with z: P_h(x, z) of degree dp, R_h of degree dr
    const int nv = 3;
    auto homogenize = [&](const std::vector<Rational>& cs) {
        int d = 0;
        for (int i = 0; i < static_cast<int>(cs.size()); ++i)
            if (cs[i] != 0) d = i;
        HomoPoly p(nv, d);
        for (int i = 0; i <= d; ++i) {
            if (cs[i] == 0) continue;
            Exponents e(nv, 0);
            e[0] = i;
            e[2] = d - i;
            p.add_term(e, cs[i]);
        }
        return p;
    };
    HomoPoly ph = homogenize(num), rh = homogenize(den);
    int dp = ph.degree(), dr = rh.degree();
    // (x, y) -> (x, (P/R) y): clear denominators with z powers
    HomoPoly x = HomoPoly::variable(nv, 0), y = HomoPoly::variable(nv, 1), z = HomoPoly::variable(nv, 2);
    auto zpow = [&](int k) {
        Exponents e(nv, 0);
        e[2] = k;
        return HomoPoly::monomial(nv, e, 1);
    };
    int dmax = std::max(dp, dr);
    HomoPoly f0 = x * rh * zpow(dmax - dr + 1);
    HomoPoly f1 = y * ph * zpow(dmax - dp + 1);
    HomoPoly f2 = z * rh * zpow(dmax - dr + 1);
    return BirMap({f0, f1, f2});
}

BirMap monomial_map(const std::vector<std::vector<long>>& matrix) {
    const int m = static_cast<int>(matrix.size());
    if (m < 1) throw std::invalid_argument("monomial_map: empty matrix");
    for (const auto& row : matrix)
        if (static_cast<int>(row.size()) != m)
            throw std::invalid_argument("monomial_map: non-square matrix");
    // unimodularity via integer determinant (Bareiss)
    {
        std::vector<std::vector<Integer>> a(m, std::vector<Integer>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) a[i][j] = matrix[i][j];
        Integer det = 1, prev = 1;
        int sign_flip = 1;
        for (int col = 0; col < m; ++col) {
            int piv = -1;
            for (int r = col; r < m; ++r)
                if (a[r][col] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) {
                det = 0;
                break;
            }
            if (piv != col) {
                std::swap(a[piv], a[col]);
                sign_flip = -sign_flip;
            }
            for (int r = col + 1; r < m; ++r)
                for (int c2 = col + 1; c2 < m; ++c2)
                    a[r][c2] = (a[col][col] * a[r][c2] - a[r][col] * a[col][c2]) / prev;
            prev = a[col][col];
            det = a[col][col];
        }
        det *= sign_flip;
        if (det != 1 && det != -1)
            throw std::invalid_argument("monomial_map: matrix is not unimodular");
    }
    // affine coordinates x_1..x_m on the chart where the last projective
    // coordinate is 1; image coordinate j is the Laurent monomial with
    // exponents matrix[j][i] on x_i and the balancing power on the last one
    const int nv = m + 1;
    std::vector<std::vector<long>> exps(nv, std::vector<long>(nv, 0));
    for (int j = 0; j < m; ++j) {
        long colsum = 0;
        for (int i = 0; i < m; ++i) {
            exps[j][i] = matrix[j][i];
            colsum += matrix[j][i];
        }
        exps[j][m] = -colsum;
    }
    // exps[m] stays zero: the homogenizing coordinate maps to 1
    std::vector<long> clear(nv, 0);
    for (int i = 0; i < nv; ++i) {
        long mn = 0;
        for (int j = 0; j < nv; ++j) mn = std::min(mn, exps[j][i]);
        clear[i] = -mn;
    }
    std::vector<HomoPoly> comps;
    for (int j = 0; j < nv; ++j) {
        Exponents e(nv);
        for (int i = 0; i < nv; ++i) e[i] = static_cast<int>(exps[j][i] + clear[i]);
        comps.push_back(HomoPoly::monomial(nv, e, 1));
    }
    return BirMap(std::move(comps));
}

BirMap builtin_family(const std::string& name, const BuiltinParams& params) {
    if (name == "linear") return linear_map(params.matrix);
    if (name == "diagonal") return diagonal_map(params.diag);
    if (name == "sigma") return sigma_involution();
    if (name == "henon") return henon_map();
    if (name == "jonquieres") return jonquieres_map(params.q_num, params.q_den);
    if (name == "monomial") return monomial_map(params.imatrix);
    throw std::invalid_argument("builtin_family: unknown family '" + name + "'");
}

}  // namespace cremona
