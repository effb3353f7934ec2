#include "cremona/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <random>
#include <sstream>
#include <unordered_map>

namespace cremona {

bool GrlexDescending::operator()(const Exponents& a, const Exponents& b) const {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("parse_rational: bad literal '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

HomoPoly::HomoPoly(int num_vars, int degree) : num_vars_(num_vars), degree_(degree) {
    if (num_vars < 1) throw std::invalid_argument("HomoPoly: need at least one variable");
    if (degree < 0) throw std::invalid_argument("HomoPoly: negative degree");
}

HomoPoly HomoPoly::monomial(int num_vars, const Exponents& exps, const Rational& coeff) {
    int deg = 0;
    for (int e : exps) deg += e;
    HomoPoly p(num_vars, deg);
    p.add_term(exps, coeff);
    return p;
}

HomoPoly HomoPoly::variable(int num_vars, int index) {
    Exponents e(num_vars, 0);
    e.at(index) = 1;
    return monomial(num_vars, e, 1);
}

HomoPoly HomoPoly::constant(int num_vars, const Rational& value) {
    return monomial(num_vars, Exponents(num_vars, 0), value);
}

Rational HomoPoly::coeff(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

void HomoPoly::add_term(const Exponents& exps, const Rational& coeff) {
    if (static_cast<int>(exps.size()) != num_vars_)
        throw std::invalid_argument("add_term: exponent vector length mismatch");
    int deg = 0;
    for (int e : exps) {
        if (e < 0) throw std::invalid_argument("add_term: negative exponent");
        deg += e;
    }
    if (coeff == 0) return;
    if (deg != degree_) {
        if (terms_.empty()) {
            degree_ = deg;  // a zero polynomial adopts the degree of its first term
        } else {
            throw std::invalid_argument("add_term: inhomogeneous term");
        }
    }
    auto [it, inserted] = terms_.try_emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void HomoPoly::check_same_shape_add(const HomoPoly& other) const {
    if (num_vars_ != other.num_vars_)
        throw std::invalid_argument("poly add: variable-count mismatch");
    if (degree_ != other.degree_)
        throw std::invalid_argument("poly add: degree mismatch");
}

HomoPoly HomoPoly::operator+(const HomoPoly& other) const {
    check_same_shape_add(other);
    HomoPoly r(*this);
    for (const auto& [e, c] : other.terms_) {
        auto [it, inserted] = r.terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

HomoPoly HomoPoly::operator-() const {
    HomoPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

HomoPoly HomoPoly::operator-(const HomoPoly& other) const { return *this + (-other); }

HomoPoly HomoPoly::operator*(const Rational& scalar) const {
    if (scalar == 0) return HomoPoly(num_vars_, degree_);
    HomoPoly r(*this);
    for (auto& [e, c] : r.terms_) c *= scalar;
    return r;
}

namespace {

constexpr int kPackBits = 16;

bool packable(const HomoPoly& a, const HomoPoly& b) {
    return a.num_vars() <= 4 && a.degree() + b.degree() < (1 << (kPackBits - 1));
}

uint64_t pack_exps(const Exponents& e) {
    uint64_t k = 0;
    for (size_t i = 0; i < e.size(); ++i) k |= static_cast<uint64_t>(e[i]) << (kPackBits * i);
    return k;
}

Exponents unpack_exps(uint64_t k, int num_vars) {
    Exponents e(num_vars);
    for (int i = 0; i < num_vars; ++i)
        e[i] = static_cast<int>((k >> (kPackBits * i)) & 0xffff);
    return e;
}

}  // namespace

HomoPoly HomoPoly::operator*(const HomoPoly& other) const {
    if (num_vars_ != other.num_vars_)
        throw std::invalid_argument("poly mul: variable-count mismatch");
    HomoPoly r(num_vars_, degree_ + other.degree_);
    if (is_zero() || other.is_zero()) return r;

    if (packable(*this, other)) {
        std::vector<std::pair<uint64_t, const Rational*>> fa, fb;
        fa.reserve(terms_.size());
        fb.reserve(other.terms_.size());
        for (const auto& [e, c] : terms_) fa.emplace_back(pack_exps(e), &c);
        for (const auto& [e, c] : other.terms_) fb.emplace_back(pack_exps(e), &c);
        std::unordered_map<uint64_t, Rational> acc;
        acc.reserve(fa.size() + fb.size());
        Rational prod;
        for (const auto& [ka, ca] : fa)
            for (const auto& [kb, cb] : fb) {
                prod = *ca * *cb;
                auto [it, inserted] = acc.try_emplace(ka + kb, prod);
                if (!inserted) it->second += prod;
            }
        for (auto& [k, c] : acc)
            if (c != 0) r.terms_.emplace(unpack_exps(k, num_vars_), std::move(c));
        return r;
    }

    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) {
            Exponents e(num_vars_);
            for (int i = 0; i < num_vars_; ++i) e[i] = ea[i] + eb[i];
            Rational prod = ca * cb;
            auto [it, inserted] = r.terms_.try_emplace(std::move(e), prod);
            if (!inserted) {
                it->second += prod;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

bool HomoPoly::operator==(const HomoPoly& other) const {
    if (num_vars_ != other.num_vars_) return false;
    if (is_zero() && other.is_zero()) return true;  // degree tags may differ
    return degree_ == other.degree_ && terms_ == other.terms_;
}

int HomoPoly::partial_degree(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
    return d;
}

Integer HomoPoly::delta_degree_sum() const {
    if (is_zero()) throw std::domain_error("delta_degree_sum: zero polynomial");
    Integer total = 0;
    for (int i = 0; i < num_vars_; ++i) total += partial_degree(i);
    return total;
}

HomoPoly::Primitive HomoPoly::normalize_primitive() const {
    if (is_zero()) throw std::domain_error("normalize_primitive: zero polynomial");
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        num_gcd = gcd(num_gcd, c.get_num());
        den_lcm = lcm(den_lcm, c.get_den());
    }
    Rational scale(num_gcd, den_lcm);
    scale.canonicalize();
    if (sign(terms_.begin()->second) < 0) scale = -scale;
    HomoPoly f(num_vars_, degree_);
    for (const auto& [e, c] : terms_) {
        Rational q = c / scale;
        f.terms_.emplace(e, q);
    }
    return {scale, f};
}

bool HomoPoly::has_integer_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

Integer HomoPoly::max_abs_integer_coefficient() const {
    Integer m = 0;
    for (const auto& [e, c] : terms_) {
        if (c.get_den() != 1) throw std::domain_error("max_abs_integer_coefficient: non-integer coefficient");
        Integer a = abs(c.get_num());
        if (a > m) m = a;
    }
    return m;
}

HomoPoly HomoPoly::compose(const std::vector<HomoPoly>& values) const {
    if (static_cast<int>(values.size()) != num_vars_)
        throw std::invalid_argument("compose: wrong number of substitution values");
    int inner_vars = values.front().num_vars();
    int inner_deg = values.front().degree();
    for (const auto& v : values) {
        if (v.num_vars() != inner_vars || v.degree() != inner_deg)
            throw std::invalid_argument("compose: substitution values must share shape");
    }
    // cached powers values[i]^k
    std::vector<std::vector<HomoPoly>> powers(num_vars_);
    for (int i = 0; i < num_vars_; ++i)
        powers[i].push_back(HomoPoly::constant(inner_vars, 1));
    auto power = [&](int i, int k) -> const HomoPoly& {
        auto& ps = powers[i];
        while (static_cast<int>(ps.size()) <= k) ps.push_back(ps.back() * values[i]);
        return ps[k];
    };
    HomoPoly acc(inner_vars, degree_ * inner_deg);
    for (const auto& [e, c] : terms_) {
        HomoPoly term = HomoPoly::constant(inner_vars, c);
        for (int i = 0; i < num_vars_; ++i)
            if (e[i] > 0) term = term * power(i, e[i]);
        acc = acc + term;
    }
    return acc;
}

std::optional<HomoPoly> HomoPoly::divide_exact(const HomoPoly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    if (is_zero()) {
        int qd = degree_ - divisor.degree_;
        return HomoPoly(num_vars_, qd >= 0 ? qd : 0);
    }
    if (divisor.num_vars_ != num_vars_ || divisor.degree_ > degree_) return std::nullopt;
    HomoPoly rem(*this);
    HomoPoly quot(num_vars_, degree_ - divisor.degree_);
    const auto& [lead_e, lead_c] = *divisor.terms_.begin();
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.begin();
        Exponents qe(num_vars_);
        for (int i = 0; i < num_vars_; ++i) {
            qe[i] = re[i] - lead_e[i];
            if (qe[i] < 0) return std::nullopt;
        }
        Rational qc = rc / lead_c;
        HomoPoly qterm = HomoPoly::monomial(num_vars_, qe, qc);
        quot = quot + qterm;
        rem = rem - qterm * divisor;
    }
    return quot;
}

HomoPoly poly_arith(const HomoPoly& f, const HomoPoly& g, PolyOp op) {
    return op == PolyOp::Add ? f + g : f * g;
}

// ---------------------------------------------------------------------------
// Exact multivariate gcd over Z (content / primitive-part recursion with
// pseudo-remainders), applied to dehomogenized inputs.

namespace {

// sparse integer polynomial, not necessarily homogeneous
struct MPoly {
    int nv = 0;
    std::map<Exponents, Integer, GrlexDescending> t;

    bool zero() const { return t.empty(); }
    bool constant() const {
        if (t.empty()) return true;
        if (t.size() != 1) return false;
        for (int e : t.begin()->first)
            if (e != 0) return false;
        return true;
    }
    int deg(int var) const {
        int d = 0;
        for (const auto& [e, c] : t) d = std::max(d, e[var]);
        return d;
    }
    void add(const Exponents& e, const Integer& c) {
        if (c == 0) return;
        auto [it, inserted] = t.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) t.erase(it);
        }
    }
};

MPoly mp_mul(const MPoly& a, const MPoly& b) {
    MPoly r{a.nv, {}};
    for (const auto& [ea, ca] : a.t)
        for (const auto& [eb, cb] : b.t) {
            Exponents e(a.nv);
            for (int i = 0; i < a.nv; ++i) e[i] = ea[i] + eb[i];
            r.add(e, ca * cb);
        }
    return r;
}

MPoly mp_sub(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [e, c] : b.t) r.add(e, -c);
    return r;
}

MPoly mp_scale(const MPoly& a, const Integer& k) {
    MPoly r{a.nv, {}};
    if (k == 0) return r;
    for (const auto& [e, c] : a.t) r.t.emplace(e, c * k);
    return r;
}

// coefficient of var^k, with var's exponent zeroed in the keys
MPoly mp_coeff_of(const MPoly& a, int var, int k) {
    MPoly r{a.nv, {}};
    for (const auto& [e, c] : a.t)
        if (e[var] == k) {
            Exponents e2 = e;
            e2[var] = 0;
            r.t.emplace(std::move(e2), c);
        }
    return r;
}

MPoly mp_shift(const MPoly& a, int var, int k) {
    MPoly r{a.nv, {}};
    for (const auto& [e, c] : a.t) {
        Exponents e2 = e;
        e2[var] += k;
        r.t.emplace(std::move(e2), c);
    }
    return r;
}

std::optional<MPoly> mp_divide_exact(const MPoly& a, const MPoly& b);

MPoly mp_gcd(const MPoly& a, const MPoly& b);

Integer mp_int_content(const MPoly& a) {
    Integer g = 0;
    for (const auto& [e, c] : a.t) g = gcd(g, c);
    return g;
}

void mp_normalize_sign(MPoly& a) {
    if (!a.t.empty() && sign(a.t.begin()->second) < 0)
        for (auto& [e, c] : a.t) c = -c;
}

bool mp_is_monomial(const MPoly& a) { return a.t.size() == 1; }

MPoly mp_monomial_gcd(const MPoly& a, const MPoly& b) {
    Exponents e(a.nv, 1 << 28);
    Integer g = 0;
    for (const auto* p : {&a, &b})
        for (const auto& [pe, pc] : p->t) {
            for (int i = 0; i < a.nv; ++i) e[i] = std::min(e[i], pe[i]);
            g = gcd(g, pc);
        }
    MPoly r{a.nv, {}};
    r.t.emplace(e, g);
    return r;
}

// content of a w.r.t. var: gcd of the var-coefficients
MPoly mp_content_wrt(const MPoly& a, int var) {
    MPoly g{a.nv, {}};
    for (int k = a.deg(var); k >= 0; --k) {
        MPoly c = mp_coeff_of(a, var, k);
        if (c.zero()) continue;
        g = g.zero() ? c : mp_gcd(g, c);
        if (g.constant() && !g.zero() && abs(g.t.begin()->second) == 1) break;
    }
    return g;
}

// pseudo-remainder of a by b w.r.t. var (deg_var b >= 1)
MPoly mp_prem(MPoly r, const MPoly& b, int var) {
    int db = b.deg(var);
    MPoly lcb = mp_coeff_of(b, var, db);
    while (!r.zero() && r.deg(var) >= db) {
        int dr = r.deg(var);
        MPoly lcr = mp_coeff_of(r, var, dr);
        // r <- lcb * r - lcr * var^(dr-db) * b
        r = mp_sub(mp_mul(lcb, r), mp_shift(mp_mul(lcr, b), var, dr - db));
    }
    return r;
}

std::optional<MPoly> mp_divide_exact(const MPoly& a, const MPoly& b) {
    if (b.zero()) return std::nullopt;
    MPoly rem = a;
    MPoly quot{a.nv, {}};
    const auto& [lead_e, lead_c] = *b.t.begin();
    while (!rem.zero()) {
        const auto& [re, rc] = *rem.t.begin();
        Exponents qe(a.nv);
        for (int i = 0; i < a.nv; ++i) {
            qe[i] = re[i] - lead_e[i];
            if (qe[i] < 0) return std::nullopt;
        }
        Integer qc, qr;
        mpz_tdiv_qr(qc.get_mpz_t(), qr.get_mpz_t(), rc.get_mpz_t(), lead_c.get_mpz_t());
        if (qr != 0) return std::nullopt;
        MPoly qterm{a.nv, {}};
        qterm.t.emplace(qe, qc);
        quot.add(qe, qc);
        rem = mp_sub(rem, mp_mul(qterm, b));
    }
    return quot;
}

int mp_first_var(const MPoly& a, const MPoly& b) {
    for (int i = 0; i < a.nv; ++i)
        if (a.deg(i) > 0 || b.deg(i) > 0) return i;
    return -1;
}

MPoly mp_gcd(const MPoly& a, const MPoly& b) {
    if (a.zero()) {
        MPoly r = b;
        mp_normalize_sign(r);
        return r;
    }
    if (b.zero()) {
        MPoly r = a;
        mp_normalize_sign(r);
        return r;
    }
    if (mp_is_monomial(a) || mp_is_monomial(b)) {
        MPoly r = mp_monomial_gcd(a, b);
        mp_normalize_sign(r);
        return r;
    }
    int var = mp_first_var(a, b);
    if (var < 0) {  // both constants
        MPoly r{a.nv, {}};
        r.t.emplace(Exponents(a.nv, 0), gcd(a.t.begin()->second, b.t.begin()->second));
        return r;
    }
    MPoly ca = mp_content_wrt(a, var);
    MPoly cb = mp_content_wrt(b, var);
    MPoly pa = *mp_divide_exact(a, ca);
    MPoly pb = *mp_divide_exact(b, cb);
    MPoly cont = mp_gcd(ca, cb);

    // primitive PRS in var
    MPoly f = pa, g = pb;
    if (f.deg(var) < g.deg(var)) std::swap(f, g);
    while (!g.zero() && g.deg(var) > 0) {
        MPoly r = mp_prem(f, g, var);
        f = g;
        if (r.zero()) {
            g = MPoly{a.nv, {}};
            break;
        }
        MPoly rc = mp_content_wrt(r, var);
        g = *mp_divide_exact(r, rc);
    }
    MPoly part;
    if (g.zero()) {
        part = f;  // f divides both primitive parts
        MPoly pc = mp_content_wrt(part, var);
        part = *mp_divide_exact(part, pc);
    } else {
        part = MPoly{a.nv, {}};  // coprime primitive parts
        part.t.emplace(Exponents(a.nv, 0), Integer(1));
    }
    MPoly result = mp_mul(cont, part);
    Integer ic = mp_int_content(result);
    if (ic > 1) result = *mp_divide_exact(result, [&] {
        MPoly c{a.nv, {}};
        c.t.emplace(Exponents(a.nv, 0), ic);
        return c;
    }());
    mp_normalize_sign(result);
    return result;
}

MPoly mp_from_homo_dropping_last(const HomoPoly& f) {
    // substitute last variable = 1 on a primitive integer polynomial
    MPoly r{f.num_vars() - 1, {}};
    for (const auto& [e, c] : f.terms()) {
        Exponents e2(e.begin(), e.end() - 1);
        r.add(e2, c.get_num());
    }
    return r;
}

HomoPoly homo_from_mp(const MPoly& p, int num_vars) {
    int deg = 0;
    for (const auto& [e, c] : p.t) {
        int d = 0;
        for (int x : e) d += x;
        deg = std::max(deg, d);
    }
    HomoPoly r(num_vars, deg);
    for (const auto& [e, c] : p.t) {
        Exponents e2(e);
        int d = 0;
        for (int x : e) d += x;
        e2.push_back(deg - d);
        r.add_term(e2, Rational(c));
    }
    return r;
}

Exponents min_exponents(const HomoPoly& f) {
    Exponents m(f.num_vars(), 1 << 28);
    for (const auto& [e, c] : f.terms())
        for (int i = 0; i < f.num_vars(); ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

HomoPoly divide_by_monomial(const HomoPoly& f, const Exponents& m) {
    HomoPoly r(f.num_vars(), f.degree() - [&] {
        int d = 0;
        for (int e : m) d += e;
        return d;
    }());
    for (const auto& [e, c] : f.terms()) {
        Exponents e2(e);
        for (size_t i = 0; i < e2.size(); ++i) e2[i] -= m[i];
        r.add_term(e2, c);
    }
    return r;
}

}  // namespace

HomoPoly gcd_homogeneous(const HomoPoly& f, const HomoPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("gcd_homogeneous: zero input");
    if (f.num_vars() != g.num_vars())
        throw std::invalid_argument("gcd_homogeneous: variable-count mismatch");
    const int nv = f.num_vars();
    HomoPoly F = f.normalize_primitive().polynomial;
    HomoPoly G = g.normalize_primitive().polynomial;

    Exponents mf = min_exponents(F), mg = min_exponents(G);
    Exponents common(nv);
    for (int i = 0; i < nv; ++i) common[i] = std::min(mf[i], mg[i]);
    HomoPoly Fr = divide_by_monomial(F, mf);
    HomoPoly Gr = divide_by_monomial(G, mg);

    HomoPoly residual = HomoPoly::constant(nv, 1);
    if (Fr.degree() > 0 && Gr.degree() > 0) {
        if (nv == 1) {
            residual = HomoPoly::constant(nv, 1);  // monomials already stripped
        } else {
            MPoly a = mp_from_homo_dropping_last(Fr);
            MPoly b = mp_from_homo_dropping_last(Gr);
            MPoly h = mp_gcd(a, b);
            residual = homo_from_mp(h, nv);
        }
    }
    HomoPoly result = HomoPoly::monomial(nv, common, 1) * residual;
    return result.normalize_primitive().polynomial;
}

HomoPoly joint_gcd(const std::vector<HomoPoly>& polys) {
    HomoPoly acc;
    bool first = true;
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        if (first) {
            acc = p.normalize_primitive().polynomial;
            first = false;
        } else {
            acc = gcd_homogeneous(acc, p);
        }
        if (acc.degree() == 0) break;
    }
    if (first) throw std::domain_error("joint_gcd: all inputs zero");
    return acc;
}

// ---------------------------------------------------------------------------
// Random-line coprimality certificate (mod p)

namespace {

constexpr uint64_t kPrimes[] = {2147483647ull, 2147483629ull, 2147483587ull};

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) { return a * b % p; }

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a, p - 2, p); }

uint64_t coeff_mod(const Rational& q, uint64_t p) {
    Integer num = q.get_num() % Integer(static_cast<unsigned long>(p));
    Integer den = q.get_den() % Integer(static_cast<unsigned long>(p));
    uint64_t n = num.get_si() < 0 ? p - static_cast<uint64_t>(-num.get_si()) : static_cast<uint64_t>(num.get_si());
    uint64_t d = static_cast<uint64_t>(den.get_ui());
    if (d == 0) return 0;  // caller treats degenerate reductions conservatively
    return mulmod(n % p, invmod(d, p), p);
}

// evaluates f at the point xs (mod p)
uint64_t eval_mod(const HomoPoly& f, const std::vector<uint64_t>& xs, uint64_t p,
                  std::vector<std::vector<uint64_t>>& pow_table) {
    const int nv = f.num_vars();
    for (int i = 0; i < nv; ++i) {
        auto& t = pow_table[i];
        t.assign(1, 1);
        while (static_cast<int>(t.size()) <= f.degree()) t.push_back(mulmod(t.back(), xs[i], p));
    }
    uint64_t acc = 0;
    for (const auto& [e, c] : f.terms()) {
        uint64_t v = coeff_mod(c, p);
        for (int i = 0; i < nv; ++i)
            if (e[i]) v = mulmod(v, pow_table[i][e[i]], p);
        acc = (acc + v) % p;
    }
    return acc;
}

// coefficients of the univariate polynomial through points (i, ys[i]), i = 0..d
std::vector<uint64_t> interpolate_mod(const std::vector<uint64_t>& ys, uint64_t p) {
    const size_t n = ys.size();
    std::vector<uint64_t> coeffs(n, 0), basis{1};  // Newton form accumulation
    // divided differences
    std::vector<std::vector<uint64_t>> dd(n);
    dd[0] = ys;
    for (size_t k = 1; k < n; ++k) {
        dd[k].resize(n - k);
        uint64_t inv_k = invmod(k % p, p);
        for (size_t i = 0; i + k < n; ++i) {
            uint64_t diff = (dd[k - 1][i + 1] + p - dd[k - 1][i]) % p;
            dd[k][i] = mulmod(diff, inv_k, p);
        }
    }
    // expand Newton form: sum_k dd[k][0] * prod_{j<k} (x - j)
    for (size_t k = 0; k < n; ++k) {
        for (size_t j = 0; j < basis.size(); ++j)
            coeffs[j] = (coeffs[j] + mulmod(dd[k][0], basis[j], p)) % p;
        if (k + 1 < n) {
            // basis *= (x - k)
            basis.push_back(0);
            for (size_t j = basis.size() - 1; j > 0; --j)
                basis[j] = (basis[j - 1] + mulmod(basis[j], p - k % p, p)) % p;
            basis[0] = mulmod(basis[0], p - k % p, p);
        }
    }
    return coeffs;
}

std::vector<uint64_t> trim(std::vector<uint64_t> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

std::vector<uint64_t> gcd_mod(std::vector<uint64_t> a, std::vector<uint64_t> b, uint64_t p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        // a mod b
        uint64_t lead_inv = invmod(b.back(), p);
        while (a.size() >= b.size()) {
            uint64_t q = mulmod(a.back(), lead_inv, p);
            size_t off = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i)
                a[off + i] = (a[off + i] + p - mulmod(q, b[i], p)) % p;
            a = trim(std::move(a));
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

}  // namespace

bool certify_jointly_coprime(const std::vector<HomoPoly>& polys, unsigned attempts) {
    std::vector<HomoPoly> live;  // primitive integer copies so coefficients reduce mod p cleanly
    for (const auto& f : polys)
        if (!f.is_zero())
            live.push_back(f.has_integer_coefficients() ? f : f.normalize_primitive().polynomial);
    if (live.empty()) return false;
    for (const auto& f : live)
        if (f.degree() == 0) return true;
    const int nv = live.front().num_vars();
    int d = 0;
    for (const auto& f : live) d = std::max(d, f.degree());

    std::mt19937_64 rng(0x5deece66dull);
    for (unsigned attempt = 0; attempt < attempts; ++attempt) {
        uint64_t p = kPrimes[attempt % 3];
        std::vector<uint64_t> a(nv), b(nv);
        for (int i = 0; i < nv; ++i) {
            a[i] = rng() % p;
            b[i] = rng() % p;
        }
        std::vector<std::vector<uint64_t>> pow_table(nv);
        // restrictions to the line a*s + b*t, dehomogenized both ways
        bool ok = true;
        for (int side = 0; side < 2 && ok; ++side) {
            std::vector<uint64_t> acc;  // running gcd
            bool have = false;
            for (const auto& f : live) {
                std::vector<uint64_t> ys(d + 1);
                std::vector<uint64_t> xs(nv);
                for (int t = 0; t <= d; ++t) {
                    for (int i = 0; i < nv; ++i)
                        xs[i] = side == 0 ? (a[i] + mulmod(b[i], t, p)) % p
                                          : (mulmod(a[i], t, p) + b[i]) % p;
                    ys[t] = eval_mod(f, xs, p, pow_table);
                }
                auto coeffs = trim(interpolate_mod(ys, p));
                if (!have) {
                    acc = coeffs;
                    have = true;
                } else {
                    acc = gcd_mod(acc, coeffs, p);
                }
                if (acc.size() == 1) break;  // constant gcd already
            }
            ok = have && acc.size() == 1;
        }
        if (ok) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Parsing and printing

std::string variable_name(int num_vars, int index) {
    static const char* xyz[] = {"x", "y", "z"};
    if (num_vars <= 3) return xyz[index];
    return "x" + std::to_string(index);
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    int num_vars;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("parse_poly: " + msg + " at position " + std::to_string(pos) +
                                    " in '" + s + "'");
    }

    int parse_var() {  // returns variable index or -1
        skip_ws();
        if (pos >= s.size()) return -1;
        char c = s[pos];
        if (num_vars <= 3) {
            if (c == 'x' && pos + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
                // fall through to indexed form below
            } else if (c == 'x' || c == 'y' || c == 'z') {
                int idx = c - 'x';
                if (idx >= num_vars) fail("variable out of range");
                ++pos;
                return idx;
            }
        }
        if (c == 'x') {
            size_t q = pos + 1;
            if (q >= s.size() || !std::isdigit(static_cast<unsigned char>(s[q]))) return -1;
            int idx = 0;
            while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) {
                idx = idx * 10 + (s[q] - '0');
                ++q;
            }
            if (idx >= num_vars) fail("variable index out of range");
            pos = q;
            return idx;
        }
        return -1;
    }

    Integer parse_integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return Integer(s.substr(start, pos - start));
    }

    // [integer [/ integer]]
    std::optional<Rational> parse_coeff() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) return std::nullopt;
        Integer num = parse_integer();
        skip_ws();
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            Integer den = parse_integer();
            if (den == 0) fail("zero denominator");
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }

    // term := coeff? ('*'? factor)*  with factor := var ('^' int)?
    void parse_term(HomoPoly& acc, int term_sign) {
        Rational coeff = 1;
        Exponents exps(num_vars, 0);
        bool any = false;
        if (auto c = parse_coeff()) {
            coeff = *c;
            any = true;
        }
        for (;;) {
            skip_ws();
            bool star = eat('*');
            int var = parse_var();
            if (var < 0) {
                if (star) fail("expected variable after '*'");
                break;
            }
            int e = 1;
            skip_ws();
            if (eat('^')) {
                Integer ei = parse_integer();
                if (ei < 0 || ei > 1 << 20) fail("exponent out of range");
                e = static_cast<int>(ei.get_si());
            }
            exps[var] += e;
            any = true;
        }
        if (!any) fail("expected term");
        if (term_sign < 0) coeff = -coeff;
        acc.add_term(exps, coeff);
    }
};

}  // namespace

HomoPoly parse_poly(const std::string& text, int num_vars) {
    Parser p{text, 0, num_vars};
    p.skip_ws();
    HomoPoly acc(num_vars, 0);
    bool first = true;
    bool saw_any = false;
    for (;;) {
        p.skip_ws();
        if (p.pos >= p.s.size()) break;
        int term_sign = 1;
        if (p.eat('+')) {
            term_sign = 1;
        } else if (p.eat('-')) {
            term_sign = -1;
        } else if (!first) {
            p.fail("expected '+' or '-'");
        }
        p.skip_ws();
        // allow a literal "0"
        if (p.pos < p.s.size() && p.s[p.pos] == '0') {
            size_t q = p.pos + 1;
            bool lone_zero = true;
            while (q < p.s.size() && !std::isspace(static_cast<unsigned char>(p.s[q]))) {
                if (p.s[q] == '+' || p.s[q] == '-') break;
                lone_zero = false;
                break;
            }
            if (lone_zero) {
                p.pos = q;
                first = false;
                saw_any = true;
                continue;
            }
        }
        p.parse_term(acc, term_sign);
        first = false;
        saw_any = true;
    }
    if (!saw_any) throw std::invalid_argument("parse_poly: empty input");
    return acc;
}

std::string HomoPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (sign(a) < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (sign(a) < 0 ? " - " : " + ");
            a = abs(a);
        }
        bool has_vars = false;
        for (int x : e)
            if (x > 0) has_vars = true;
        bool coeff_shown = false;
        if (!has_vars || a != 1) {
            out << to_string(a);
            coeff_shown = true;
        }
        bool printed = false;
        for (int i = 0; i < num_vars_; ++i) {
            if (e[i] == 0) continue;
            if (coeff_shown || printed) out << "*";
            out << variable_name(num_vars_, i);
            if (e[i] > 1) out << "^" << e[i];
            printed = true;
        }
        first = false;
    }
    return out.str();
}

}  // namespace cremona
