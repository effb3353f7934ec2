#include "cremona/heights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>

namespace cremona {

// ---------------------------------------------------------------------------
// Integer factorization

namespace {

Integer pollard_brent(const Integer& n, unsigned long seed) {
    // Brent's cycle variant of Pollard rho
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(seed);
    for (;;) {
        Integer y = rng.get_z_range(n - 3) + 2;
        Integer c = rng.get_z_range(n - 3) + 1;
        Integer m = 128, g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (Integer i = 0; i < r; ++i) y = (y * y + c) % n;
            Integer k = 0;
            while (k < r && g == 1) {
                ys = y;
                Integer lim = std::min(m, Integer(r - k));
                for (Integer i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            }
        }
        if (g != n) return g;
        ++seed;
    }
}

void factor_rec(const Integer& n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        ++out[n];
        return;
    }
    Integer d = pollard_brent(n, 0xC0FFEE);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n) {
    if (n <= 0) throw std::domain_error("factor_integer: need a positive integer");
    std::map<Integer, unsigned> out;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (n % p == 0) {
            ++out[Integer(p)];
            n /= p;
        }
    }
    for (long p = 41; p < 100000 && n > 1; p += 2) {
        if (Integer(p) * p > n) break;
        while (n % p == 0) {
            ++out[Integer(p)];
            n /= p;
        }
    }
    if (n > 1) factor_rec(n, out);
    return {out.begin(), out.end()};
}

std::vector<PlaceValue> places_of_rational(const Rational& x) {
    if (x == 0) throw std::domain_error("places_of_rational: zero argument");
    std::vector<PlaceValue> places;
    std::map<Integer, long> vals;
    for (const auto& [p, e] : factor_integer(abs(x.get_num()))) vals[p] += e;
    for (const auto& [p, e] : factor_integer(x.get_den())) vals[p] -= e;
    for (const auto& [p, v] : vals) {
        if (v == 0) continue;
        PlaceValue pv;
        pv.p = p;
        pv.valuation = v;  // v_p(x); |x|_p = p^(-v)
        pv.logval = -static_cast<double>(v) * log_integer(p);
        places.push_back(pv);
    }
    PlaceValue arch;
    arch.archimedean = true;
    arch.logval = log_rational_abs(x);
    places.push_back(arch);
    return places;
}

// ---------------------------------------------------------------------------
// Heights

namespace {

// per-place breakdown of log max_I |a_I|_v for a coefficient vector
std::vector<PlaceValue> joint_places(const std::vector<Rational>& coeffs) {
    std::vector<std::map<Integer, long>> per(coeffs.size());
    std::set<Integer> primes;
    Rational max_abs = 0;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        for (const auto& [p, e] : factor_integer(abs(coeffs[i].get_num()))) per[i][p] += e;
        for (const auto& [p, e] : factor_integer(coeffs[i].get_den())) per[i][p] -= e;
        for (const auto& [p, v] : per[i]) primes.insert(p);
        if (abs(coeffs[i]) > max_abs) max_abs = abs(coeffs[i]);
    }
    std::vector<PlaceValue> places;
    for (const auto& p : primes) {
        // min_I v_p(a_I); a coefficient without the prime contributes 0
        long mn = std::numeric_limits<long>::max();
        for (const auto& m : per) {
            auto it = m.find(p);
            mn = std::min(mn, it == m.end() ? 0L : it->second);
        }
        if (mn == 0) continue;
        PlaceValue pv;
        pv.p = p;
        pv.valuation = -mn;
        pv.logval = -static_cast<double>(mn) * log_integer(p);
        places.push_back(pv);
    }
    PlaceValue arch;
    arch.archimedean = true;
    arch.logval = log_rational_abs(max_abs);
    if (arch.logval != 0) places.push_back(arch);
    return places;
}

HeightReport height_of_coeff_vector(const std::vector<Rational>& coeffs) {
    // primitive integer form of the joint vector
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& c : coeffs) {
        if (c == 0) continue;
        num_gcd = gcd(num_gcd, c.get_num());
        den_lcm = lcm(den_lcm, c.get_den());
    }
    if (num_gcd == 0) throw std::domain_error("height: zero coefficient vector");
    Rational scale(num_gcd, den_lcm);
    scale.canonicalize();
    HeightReport rep;
    rep.H = 0;
    for (const auto& c : coeffs) {
        Rational q = c / scale;
        Integer a = abs(q.get_num());
        if (a > rep.H) rep.H = a;
    }
    rep.h = log_integer(rep.H);
    rep.places = joint_places(coeffs);
    return rep;
}

std::vector<Rational> collect_coeffs(const HomoPoly& f) {
    std::vector<Rational> coeffs;
    for (const auto& [e, c] : f.terms()) coeffs.push_back(c);
    return coeffs;
}

}  // namespace

HeightReport poly_height(const HomoPoly& f) {
    if (f.is_zero()) throw std::domain_error("poly_height: zero polynomial");
    return height_of_coeff_vector(collect_coeffs(f));
}

HeightReport map_height(const BirMap& f) {
    std::vector<Rational> coeffs;
    for (const auto& c : f.components())
        for (const auto& [e, q] : c.terms()) coeffs.push_back(q);
    return height_of_coeff_vector(coeffs);
}

GelfondCheck gelfond_check(const std::vector<HomoPoly>& factors) {
    if (factors.size() < 2) throw std::invalid_argument("gelfond_check: need at least two factors");
    HomoPoly prod = HomoPoly::constant(factors.front().num_vars(), 1);
    double sum_h = 0;
    for (const auto& f : factors) {
        if (f.is_zero()) throw std::domain_error("gelfond_check: zero factor");
        sum_h += poly_height(f).h;
        prod = prod * f;
    }
    GelfondCheck gc;
    gc.gap = poly_height(prod).h - sum_h;
    gc.delta = prod.delta_degree_sum();
    gc.bound = gc.delta.get_d() * std::log(2.0);
    gc.holds = std::abs(gc.gap) <= gc.bound + 1e-9;
    return gc;
}

// ---------------------------------------------------------------------------
// Word-height bounds

void MapGeneratorSet::validate() const {
    if (generators.empty()) throw std::invalid_argument("generator set is empty");
    if (inverse.size() != generators.size() || names.size() != generators.size())
        throw std::invalid_argument("generator set: parallel arrays differ in length");
    for (size_t i = 0; i < generators.size(); ++i) {
        int j = inverse[i];
        if (j < 0 || j >= static_cast<int>(generators.size()) || inverse[j] != static_cast<int>(i))
            throw std::invalid_argument("generator set: inverse pairing is not an involution");
        if (generators[i].dim() != generators.front().dim())
            throw std::invalid_argument("generator set: mixed dimensions");
    }
}

WordHeightBound word_height_bound(const MapGeneratorSet& s, long word_length) {
    s.validate();
    const int m = s.dim();
    WordHeightBound wb;
    long dmax = 2;
    Integer m_arch = 1;
    for (const auto& g : s.generators) {
        dmax = std::max(dmax, static_cast<long>(g.degree()));
        // canonical coefficient systems are primitive integer vectors, so
        // only the archimedean place can be active
        m_arch = std::max(m_arch, map_height(g).H);
    }
    wb.d_s = dmax;
    wb.log_m_arch = log_integer(m_arch);
    if (m_arch > 1) {
        PlaceValue pv;
        pv.archimedean = true;
        pv.logval = wb.log_m_arch;
        wb.active_places.push_back(pv);
    }
    wb.constant = (m + 1) * std::log(2.0) + wb.log_m_arch +
                  std::log(static_cast<double>(m)) + m * std::log(static_cast<double>(dmax));
    wb.bound = wb.constant * std::pow(static_cast<double>(dmax), 2.0 * static_cast<double>(word_length));
    return wb;
}

WordHeightTrialReport verify_word_height(const MapGeneratorSet& s, unsigned long trials,
                                         int max_len, unsigned long seed,
                                         const ComposeCaps& caps) {
    s.validate();
    WordHeightTrialReport rep;
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    const int k = static_cast<int>(s.generators.size());
    for (unsigned long t = 0; t < trials; ++t) {
        int len = 1 + static_cast<int>(rng() % static_cast<unsigned long>(max_len));
        // random reduced word: never follow a letter by its inverse
        std::vector<int> letters;
        for (int i = 0; i < len; ++i) {
            int g;
            do {
                g = static_cast<int>(rng() % static_cast<unsigned long>(k));
            } while (!letters.empty() && g == s.inverse[letters.back()]);
            letters.push_back(g);
        }
        try {
            BirMap w = s.generators[letters[0]];
            for (int i = 1; i < len; ++i) w = compose(w, s.generators[letters[i]], caps);
            double h = map_height(w).h;
            double bound = word_height_bound(s, len).bound;
            ++rep.trials;
            double ratio = bound > 0 ? h / bound : (h > 0 ? 1e30 : 0.0);
            rep.worst_ratio = std::max(rep.worst_ratio, ratio);
            if (h > bound + 1e-9) ++rep.violations;
        } catch (const DegenerateComposition&) {
            ++rep.degenerate_skipped;
        } catch (const CapExceeded&) {
            ++rep.degenerate_skipped;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Linear distortion classes

const char* to_string(LinearDistortionClass c) {
    switch (c) {
        case LinearDistortionClass::FiniteOrder: return "FiniteOrder";
        case LinearDistortionClass::ExpDistorted: return "ExpDistorted";
        case LinearDistortionClass::DoublyExpDistorted: return "DoublyExpDistorted";
    }
    return "?";
}

namespace {

using QMat = std::vector<std::vector<Rational>>;

QMat mat_mul(const QMat& a, const QMat& b) {
    const size_t n = a.size();
    QMat r(n, std::vector<Rational>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

QMat mat_identity(size_t n) {
    QMat r(n, std::vector<Rational>(n, 0));
    for (size_t i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

bool mat_is_scalar(const QMat& a) {
    const size_t n = a.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i != j && a[i][j] != 0) return false;
            if (i == j && a[i][j] != a[0][0]) return false;
        }
    return a[0][0] != 0;
}

Rational mat_det(QMat a) {
    const size_t n = a.size();
    Rational det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            Rational f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

// euler phi by trial division, small inputs
long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    if (n > 1) r -= r / n;
    return r;
}

// least common multiple of all j with phi(j) <= bound
Integer order_lcm_bound(long bound) {
    Integer l = 1;
    for (long j = 1; j <= 2 * bound * bound + 2; ++j)
        if (euler_phi(j) <= bound) l = lcm(l, Integer(j));
    return l;
}

// polynomials as coefficient vectors, constant term first
std::vector<Rational> poly_div_exact(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                     bool* exact) {
    std::vector<Rational> rem = a, quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    *exact = false;
    if (b.empty() || b.back() == 0) return {};
    while (rem.size() >= b.size()) {
        Rational q = rem.back() / b.back();
        size_t off = rem.size() - b.size();
        if (off >= quot.size()) return {};
        quot[off] = q;
        for (size_t i = 0; i < b.size(); ++i) rem[off + i] -= q * b[i];
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (rem.empty()) break;
        if (rem.size() < b.size()) return {};
    }
    *exact = rem.empty();
    return quot;
}

// cyclotomic polynomial Phi_n, constant term first
std::vector<Rational> cyclotomic(long n, std::map<long, std::vector<Rational>>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1
    std::vector<Rational> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto phi_d = cyclotomic(d, cache);
        bool exact = false;
        p = poly_div_exact(p, phi_d, &exact);
        if (!exact) throw std::logic_error("cyclotomic: division failure");
    }
    cache[n] = p;
    return p;
}

}  // namespace

std::vector<Rational> characteristic_polynomial(const QMat& a) {
    // Faddeev-LeVerrier
    const size_t n = a.size();
    QMat m = mat_identity(n);
    std::vector<Rational> c(n + 1, 0);
    c[n] = 1;
    QMat am = a;
    for (size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            // m = a * (m_prev + c_{n-k+1} I)
            QMat t = m;
            for (size_t i = 0; i < n; ++i) t[i][i] += c[n - k + 1];
            m = mat_mul(a, t);
        } else {
            m = a;
        }
        Rational tr = 0;
        for (size_t i = 0; i < n; ++i) tr += m[i][i];
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return c;  // constant term first, monic
}

bool all_factors_cyclotomic(const std::vector<Rational>& monic_poly) {
    std::vector<Rational> p = monic_poly;
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.empty()) return false;
    long deg = static_cast<long>(p.size()) - 1;
    std::map<long, std::vector<Rational>> cache;
    // candidate orders: phi(j) <= deg implies j <= 2 deg^2 + 2
    for (long j = 1; j <= 2 * deg * deg + 2 && static_cast<long>(p.size()) > 1; ++j) {
        if (euler_phi(j) > deg) continue;
        auto phi_j = cyclotomic(j, cache);
        for (;;) {
            bool exact = false;
            auto q = poly_div_exact(p, phi_j, &exact);
            if (!exact) break;
            p = q;
            while (!p.empty() && p.back() == 0) p.pop_back();
            if (p.size() <= 1) break;
        }
    }
    return p.size() == 1;  // fully stripped down to a constant
}

LinearDistortionClass distortion_class_of_linear(const QMat& a) {
    const size_t n = a.size();
    if (n < 1) throw std::invalid_argument("distortion_class_of_linear: empty matrix");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("distortion_class_of_linear: non-square matrix");
    if (mat_det(a) == 0) throw std::invalid_argument("distortion_class_of_linear: singular matrix");

    // finite projective order: some power is scalar; eigenvalue ratios are
    // roots of unity living in a degree <= n^2 extension
    Integer k_bound = order_lcm_bound(static_cast<long>(n) * static_cast<long>(n));
    {
        QMat p = mat_identity(n);
        QMat base = a;
        Integer e = k_bound;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) p = mat_mul(p, base);
            e >>= 1;
            if (e > 0) base = mat_mul(base, base);
        }
        if (mat_is_scalar(p)) return LinearDistortionClass::FiniteOrder;
    }
    auto chi = characteristic_polynomial(a);
    if (all_factors_cyclotomic(chi)) return LinearDistortionClass::DoublyExpDistorted;
    return LinearDistortionClass::ExpDistorted;
}

}  // namespace cremona
