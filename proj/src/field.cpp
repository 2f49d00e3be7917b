#include "lpa/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

namespace lpa {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

std::int64_t norm_mod(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    // extended Euclid; a nonzero mod p
    std::int64_t t = 0, new_t = 1, r = p, new_r = norm_mod(a, p);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) fail(ErrorCode::DivisionByZero, "element not invertible mod p");
    return norm_mod(t, p);
}

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic Miller-Rabin bases for 64-bit inputs
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Scalar FieldCtx::zero() const { return Scalar{}; }

Scalar FieldCtx::one() const { return from_int(1); }

Scalar FieldCtx::from_int(std::int64_t v) const {
    Scalar s;
    if (kind_ == FieldKind::Rationals)
        s.q = mpq_class(static_cast<long>(v));
    else
        s.r = norm_mod(v, p_);
    return s;
}

Scalar FieldCtx::from_mpq(const mpq_class& v) const {
    Scalar s;
    if (kind_ == FieldKind::Rationals) {
        s.q = v;
        s.q.canonicalize();
    } else {
        mpz_class num = v.get_num(), den = v.get_den();
        mpz_class pz(static_cast<long>(p_));
        mpz_class nr = num % pz, dr = den % pz;
        std::int64_t n = norm_mod(nr.get_si(), p_);
        std::int64_t d = norm_mod(dr.get_si(), p_);
        if (d == 0) fail(ErrorCode::DivisionByZero, "denominator divisible by p");
        s.r = norm_mod(n * inv_mod(d, p_) % p_, p_);
    }
    return s;
}

Scalar FieldCtx::add(const Scalar& a, const Scalar& b) const {
    Scalar s;
    if (kind_ == FieldKind::Rationals)
        s.q = a.q + b.q;
    else
        s.r = (a.r + b.r) % p_;
    return s;
}

Scalar FieldCtx::sub(const Scalar& a, const Scalar& b) const {
    Scalar s;
    if (kind_ == FieldKind::Rationals)
        s.q = a.q - b.q;
    else
        s.r = norm_mod(a.r - b.r, p_);
    return s;
}

Scalar FieldCtx::mul(const Scalar& a, const Scalar& b) const {
    Scalar s;
    if (kind_ == FieldKind::Rationals)
        s.q = a.q * b.q;
    else
        s.r = static_cast<std::int64_t>(mulmod_u64(static_cast<u64>(a.r), static_cast<u64>(b.r),
                                                   static_cast<u64>(p_)));
    return s;
}

Scalar FieldCtx::div(const Scalar& a, const Scalar& b) const {
    if (is_zero(b)) fail(ErrorCode::DivisionByZero, "division by zero");
    Scalar s;
    if (kind_ == FieldKind::Rationals)
        s.q = a.q / b.q;
    else
        s.r = static_cast<std::int64_t>(
            mulmod_u64(static_cast<u64>(a.r), static_cast<u64>(inv_mod(b.r, p_)), static_cast<u64>(p_)));
    return s;
}

Scalar FieldCtx::neg(const Scalar& a) const {
    Scalar s;
    if (kind_ == FieldKind::Rationals)
        s.q = -a.q;
    else
        s.r = a.r == 0 ? 0 : p_ - a.r;
    return s;
}

Scalar FieldCtx::inv(const Scalar& a) const { return div(one(), a); }

bool FieldCtx::is_zero(const Scalar& a) const {
    return kind_ == FieldKind::Rationals ? a.q == 0 : a.r == 0;
}

bool FieldCtx::is_one(const Scalar& a) const {
    return kind_ == FieldKind::Rationals ? a.q == 1 : a.r == 1 % p_;
}

bool FieldCtx::eq(const Scalar& a, const Scalar& b) const {
    return kind_ == FieldKind::Rationals ? a.q == b.q : a.r == b.r;
}

Scalar FieldCtx::pow(const Scalar& a, std::uint64_t e) const {
    Scalar r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::string FieldCtx::to_string(const Scalar& a) const {
    if (kind_ == FieldKind::PrimeField) return std::to_string(a.r);
    if (a.q.get_den() == 1) return a.q.get_num().get_str();
    return a.q.get_num().get_str() + "/" + a.q.get_den().get_str();
}

Scalar FieldCtx::parse(const std::string& s) const {
    if (s.empty()) fail(ErrorCode::ParseError, "empty scalar literal");
    auto check_digits = [&](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!check_digits(num) || !check_digits(den))
        fail(ErrorCode::ParseError, "bad scalar literal '" + s + "'");
    mpq_class v{mpz_class(num), mpz_class(den)};
    if (v.get_den() == 0) fail(ErrorCode::ParseError, "zero denominator in '" + s + "'");
    v.canonicalize();
    return from_mpq(v);
}

Scalar FieldCtx::sample(std::mt19937_64& rng) const {
    // plain modulo draws: deterministic across standard libraries
    if (kind_ == FieldKind::PrimeField)
        return from_int(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p_)));
    long num = static_cast<long>(rng() % 9) - 4;
    long den = static_cast<long>(rng() % 3) + 1;
    return from_mpq(mpq_class(num, den));
}

std::string FieldCtx::describe() const {
    return kind_ == FieldKind::Rationals ? "Q" : "F" + std::to_string(p_);
}

// ---------------------------------------------------------------------------
// polynomials

Poly poly_from_coeffs(const FieldCtx& f, std::vector<Scalar> coeffs) {
    while (!coeffs.empty() && f.is_zero(coeffs.back())) coeffs.pop_back();
    return Poly{std::move(coeffs)};
}

Poly poly_zero() { return Poly{}; }

Poly poly_one(const FieldCtx& f) { return Poly{{f.one()}}; }

Poly poly_x(const FieldCtx& f) { return Poly{{f.zero(), f.one()}}; }

Poly poly_scalar(const FieldCtx& f, const Scalar& a) {
    return poly_from_coeffs(f, {a});
}

bool poly_eq(const FieldCtx& f, const Poly& a, const Poly& b) {
    if (a.c.size() != b.c.size()) return false;
    for (size_t i = 0; i < a.c.size(); ++i)
        if (!f.eq(a.c[i], b.c[i])) return false;
    return true;
}

bool poly_is_monic(const FieldCtx& f, const Poly& a) {
    return !a.is_zero() && f.is_one(a.c.back());
}

Poly poly_add(const FieldCtx& f, const Poly& a, const Poly& b) {
    std::vector<Scalar> c(std::max(a.c.size(), b.c.size()), f.zero());
    for (size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] = f.add(c[i], b.c[i]);
    return poly_from_coeffs(f, std::move(c));
}

Poly poly_sub(const FieldCtx& f, const Poly& a, const Poly& b) {
    std::vector<Scalar> c(std::max(a.c.size(), b.c.size()), f.zero());
    for (size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] = f.sub(c[i], b.c[i]);
    return poly_from_coeffs(f, std::move(c));
}

Poly poly_mul(const FieldCtx& f, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return poly_zero();
    std::vector<Scalar> c(a.c.size() + b.c.size() - 1, f.zero());
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = f.add(c[i + j], f.mul(a.c[i], b.c[j]));
    return poly_from_coeffs(f, std::move(c));
}

Poly poly_scale(const FieldCtx& f, const Scalar& s, const Poly& a) {
    std::vector<Scalar> c(a.c.size(), f.zero());
    for (size_t i = 0; i < a.c.size(); ++i) c[i] = f.mul(s, a.c[i]);
    return poly_from_coeffs(f, std::move(c));
}

void poly_divmod(const FieldCtx& f, const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    std::vector<Scalar> r = a.c;
    int db = b.degree();
    Scalar lead_inv = f.inv(b.c.back());
    std::vector<Scalar> q(a.c.size() > b.c.size() ? a.c.size() - b.c.size() + 1 : 1, f.zero());
    for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
        if (f.is_zero(r[i])) continue;
        Scalar coef = f.mul(r[i], lead_inv);
        q[i - db] = coef;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] = f.sub(r[i - db + j], f.mul(coef, b.c[j]));
    }
    quo = poly_from_coeffs(f, std::move(q));
    rem = poly_from_coeffs(f, std::move(r));
}

Poly poly_mod(const FieldCtx& f, const Poly& a, const Poly& b) {
    Poly q, r;
    poly_divmod(f, a, b, q, r);
    return r;
}

Poly poly_monic(const FieldCtx& f, const Poly& a) {
    if (a.is_zero()) return a;
    return poly_scale(f, f.inv(a.c.back()), a);
}

Poly poly_gcd(const FieldCtx& f, const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_mod(f, x, y);
        x = y;
        y = r;
    }
    return poly_monic(f, x);
}

Poly poly_derivative(const FieldCtx& f, const Poly& a) {
    if (a.c.size() <= 1) return poly_zero();
    std::vector<Scalar> c(a.c.size() - 1, f.zero());
    for (size_t i = 1; i < a.c.size(); ++i)
        c[i - 1] = f.mul(f.from_int(static_cast<std::int64_t>(i)), a.c[i]);
    return poly_from_coeffs(f, std::move(c));
}

Scalar poly_eval(const FieldCtx& f, const Poly& a, const Scalar& x) {
    Scalar acc = f.zero();
    for (size_t i = a.c.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a.c[i]);
    return acc;
}

Poly poly_powmod(const FieldCtx& f, const Poly& base, const mpz_class& e, const Poly& mod) {
    Poly result = poly_mod(f, poly_one(f), mod);
    Poly b = poly_mod(f, base, mod);
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t()))
            result = poly_mod(f, poly_mul(f, result, b), mod);
        k >>= 1;
        if (k > 0) b = poly_mod(f, poly_mul(f, b, b), mod);
    }
    return result;
}

std::string poly_to_string(const FieldCtx& f, const Poly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = a.c.size(); i-- > 0;) {
        if (f.is_zero(a.c[i])) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || !f.is_one(a.c[i])) os << f.to_string(a.c[i]);
        if (i >= 1) {
            if (!f.is_one(a.c[i])) os << "*";
            os << "x";
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// irreducibility and factorization over F_p

namespace {

// x^(p^k) mod f
Poly frobenius_power(const FieldCtx& f, int k, const Poly& mod) {
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(f.p()), static_cast<unsigned long>(k));
    return poly_powmod(f, poly_x(f), e, mod);
}

bool fp_is_irreducible(const FieldCtx& f, const Poly& a) {
    int n = a.degree();
    if (n == 1) return true;
    // Rabin: x^(p^n) = x mod a, and gcd(x^(p^(n/l)) - x, a) = 1 for prime l | n
    Poly xn = frobenius_power(f, n, a);
    if (!poly_eq(f, xn, poly_mod(f, poly_x(f), a))) return false;
    for (int l = 2; l <= n; ++l) {
        if (n % l != 0) continue;
        bool lp = true;
        for (int d = 2; d * d <= l; ++d)
            if (l % d == 0) { lp = false; break; }
        if (!lp) continue;
        Poly xk = frobenius_power(f, n / l, a);
        Poly diff = poly_sub(f, xk, poly_mod(f, poly_x(f), a));
        if (poly_gcd(f, diff, a).degree() != 0) return false;
    }
    return true;
}

// Distinct-degree decomposition of a squarefree monic polynomial.
std::vector<std::pair<Poly, int>> fp_ddf(const FieldCtx& f, Poly a) {
    std::vector<std::pair<Poly, int>> parts;
    Poly h = poly_mod(f, poly_x(f), a);
    int d = 0;
    while (a.degree() >= 2 * (d + 1)) {
        ++d;
        mpz_class p(static_cast<long>(f.p()));
        h = poly_powmod(f, h, p, a);
        Poly g = poly_gcd(f, poly_sub(f, h, poly_mod(f, poly_x(f), a)), a);
        if (g.degree() > 0) {
            parts.push_back({g, d});
            Poly q, r;
            poly_divmod(f, a, g, q, r);
            a = q;
            h = poly_mod(f, h, a);
        }
    }
    if (a.degree() > 0) parts.push_back({a, a.degree()});
    return parts;
}

// Equal-degree splitting (Cantor-Zassenhaus; trace map for p = 2). The rng is
// seeded deterministically by the caller, so results are reproducible.
void fp_edf(const FieldCtx& f, const Poly& a, int d, std::mt19937_64& rng,
            std::vector<Poly>& out) {
    if (a.degree() == d) {
        out.push_back(poly_monic(f, a));
        return;
    }
    Poly g;
    while (true) {
        std::vector<Scalar> rc(static_cast<size_t>(a.degree()), f.zero());
        for (auto& s : rc) s = f.sample(rng);
        Poly r = poly_from_coeffs(f, rc);
        if (r.degree() < 1) continue;
        if (f.p() == 2) {
            // trace map r + r^2 + r^4 + ... (d*[F_2^d : F_2] steps)
            Poly t = poly_mod(f, r, a);
            Poly acc = t;
            for (int i = 1; i < d; ++i) {
                t = poly_mod(f, poly_mul(f, t, t), a);
                acc = poly_add(f, acc, t);
            }
            g = poly_gcd(f, acc, a);
        } else {
            mpz_class e;
            mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(f.p()),
                          static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            Poly pw = poly_powmod(f, r, e, a);
            g = poly_gcd(f, poly_sub(f, pw, poly_one(f)), a);
        }
        if (g.degree() > 0 && g.degree() < a.degree()) break;
    }
    Poly q, rem;
    poly_divmod(f, a, g, q, rem);
    fp_edf(f, g, d, rng, out);
    fp_edf(f, q, d, rng, out);
}

std::vector<Poly> fp_factor_squarefree(const FieldCtx& f, const Poly& a, std::mt19937_64& rng) {
    std::vector<Poly> out;
    for (auto& [part, d] : fp_ddf(f, a)) fp_edf(f, part, d, rng, out);
    return out;
}

std::vector<PolyFactor> fp_factor(const FieldCtx& f, Poly a) {
    std::vector<PolyFactor> result;
    // deterministic seed derived from the input so outputs are reproducible
    std::uint64_t seed = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(f.p());
    for (auto& s : a.c) seed = seed * 1099511628211ull + static_cast<std::uint64_t>(s.r + 7);
    std::mt19937_64 rng(seed);

    a = poly_monic(f, a);
    // peel off squarefree layers: gcd with derivative, recurse on p-th powers
    while (a.degree() > 0) {
        Poly da = poly_derivative(f, a);
        if (da.is_zero()) {
            // a(x) = b(x^p); take p-th root of coefficients (identity on F_p)
            std::vector<Scalar> bc;
            for (size_t i = 0; i < a.c.size(); i += static_cast<size_t>(f.p()))
                bc.push_back(a.c[i]);
            Poly b = poly_from_coeffs(f, bc);
            for (auto& pf : fp_factor(f, b)) {
                bool merged = false;
                for (auto& r : result)
                    if (poly_eq(f, r.factor, pf.factor)) {
                        r.multiplicity += pf.multiplicity * static_cast<int>(f.p());
                        merged = true;
                    }
                if (!merged)
                    result.push_back({pf.factor, pf.multiplicity * static_cast<int>(f.p())});
            }
            return result;
        }
        Poly g = poly_gcd(f, a, da);
        Poly sqfree;
        {
            Poly q, r;
            poly_divmod(f, a, g, q, r);
            sqfree = q;
        }
        for (auto& irr : fp_factor_squarefree(f, sqfree, rng)) {
            int mult = 0;
            Poly q, r;
            while (true) {
                poly_divmod(f, a, irr, q, r);
                if (!r.is_zero()) break;
                a = q;
                ++mult;
            }
            bool merged = false;
            for (auto& res : result)
                if (poly_eq(f, res.factor, irr)) {
                    res.multiplicity += mult;
                    merged = true;
                }
            if (!merged) result.push_back({irr, mult});
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// factorization over Q (primitive integer polynomials, Kronecker's method)

constexpr int kQDegreeCap = 8;

std::vector<mpz_class> all_divisors(const mpz_class& n) {
    // positive and negative divisors of n != 0
    std::vector<mpz_class> divs;
    mpz_class a = abs(n);
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            divs.push_back(d);
            if (d * d != a) divs.push_back(a / d);
        }
    }
    size_t m = divs.size();
    for (size_t i = 0; i < m; ++i) divs.push_back(-divs[i]);
    return divs;
}

// integer polynomial as mpz coefficient vector, ascending
using ZPoly = std::vector<mpz_class>;

ZPoly zpoly_trim(ZPoly v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

mpz_class zpoly_eval(const ZPoly& a, const mpz_class& x) {
    mpz_class acc = 0;
    for (size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
    return acc;
}

bool zpoly_divides(const ZPoly& a, const ZPoly& b, ZPoly& quo) {
    // does b divide a exactly over Z?
    ZPoly r = a;
    if (b.empty()) return false;
    int db = static_cast<int>(b.size()) - 1;
    quo.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, mpz_class(0));
    for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
        if (r[i] == 0) continue;
        if (r[i] % b[db] != 0) return false;
        mpz_class c = r[i] / b[db];
        quo[i - db] = c;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
    }
    r = zpoly_trim(r);
    return r.empty();
}

// Lagrange interpolation through (x_i, y_i); returns false unless the result
// has integer coefficients.
bool interpolate_zpoly(const std::vector<mpz_class>& xs, const std::vector<mpz_class>& ys,
                       ZPoly& out) {
    size_t n = xs.size();
    std::vector<mpq_class> coef(n, 0);
    for (size_t i = 0; i < n; ++i) {
        // basis polynomial for node i, built incrementally
        std::vector<mpq_class> basis(n, 0);
        basis[0] = 1;
        size_t deg = 0;
        mpq_class denom = 1;
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            for (size_t k = deg + 1; k-- > 1;)
                basis[k] = basis[k - 1] - mpq_class(xs[j]) * basis[k];
            basis[0] = -mpq_class(xs[j]) * basis[0];
            ++deg;
            denom *= mpq_class(xs[i]) - mpq_class(xs[j]);
        }
        mpq_class w = mpq_class(ys[i]) / denom;
        for (size_t k = 0; k < n; ++k) coef[k] += w * basis[k];
    }
    out.clear();
    for (auto& c : coef) {
        c.canonicalize();
        if (c.get_den() != 1) return false;
        out.push_back(c.get_num());
    }
    out = zpoly_trim(out);
    return true;
}

ZPoly zpoly_primitive(ZPoly a) {
    mpz_class g = 0;
    for (auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : a) c /= g;
    if (!a.empty() && a.back() < 0)
        for (auto& c : a) c = -c;
    return a;
}

// one nontrivial factor of a primitive squarish integer polynomial, or empty
bool kronecker_find_factor(const ZPoly& a, ZPoly& factor) {
    int n = static_cast<int>(a.size()) - 1;
    // linear factors via rational roots of the primitive polynomial
    {
        std::vector<mpz_class> p_divs = all_divisors(a[0] == 0 ? mpz_class(1) : a[0]);
        std::vector<mpz_class> q_divs = all_divisors(a[n]);
        if (a[0] == 0) {
            factor = {0, 1}; // x divides
            return true;
        }
        for (auto& p : p_divs)
            for (auto& q : q_divs) {
                if (q < 0) continue;
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
                if (g != 1) continue;
                // candidate root p/q -> candidate factor qx - p
                ZPoly cand = {-p, q};
                ZPoly quo;
                if (zpoly_divides(a, cand, quo)) {
                    factor = cand;
                    return true;
                }
            }
    }
    // Kronecker search for factors of degree 2..n/2
    for (int m = 2; m <= n / 2; ++m) {
        std::vector<mpz_class> xs;
        std::vector<mpz_class> vals;
        for (long t = 0; static_cast<int>(xs.size()) < m + 1; ++t) {
            mpz_class x = (t % 2 == 0) ? mpz_class(t / 2) : mpz_class(-(t / 2 + 1));
            mpz_class v = zpoly_eval(a, x);
            if (v == 0) continue; // roots were already extracted above
            xs.push_back(x);
            vals.push_back(v);
        }
        std::vector<std::vector<mpz_class>> divs;
        for (auto& v : vals) divs.push_back(all_divisors(v));
        std::vector<size_t> idx(static_cast<size_t>(m + 1), 0);
        while (true) {
            std::vector<mpz_class> ys;
            for (int i = 0; i <= m; ++i) ys.push_back(divs[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]]);
            ZPoly cand;
            if (interpolate_zpoly(xs, ys, cand) && static_cast<int>(cand.size()) - 1 == m) {
                ZPoly quo;
                if (zpoly_divides(a, cand, quo)) {
                    factor = cand;
                    return true;
                }
            }
            // odometer
            int pos = 0;
            while (pos <= m) {
                if (++idx[static_cast<size_t>(pos)] < divs[static_cast<size_t>(pos)].size()) break;
                idx[static_cast<size_t>(pos)] = 0;
                ++pos;
            }
            if (pos > m) break;
        }
    }
    return false;
}

void q_factor_rec(const ZPoly& a, std::vector<ZPoly>& out) {
    int n = static_cast<int>(a.size()) - 1;
    if (n <= 0) return;
    if (n == 1) {
        out.push_back(a);
        return;
    }
    ZPoly f;
    if (!kronecker_find_factor(a, f)) {
        out.push_back(a);
        return;
    }
    ZPoly quo;
    if (!zpoly_divides(a, f, quo))
        fail(ErrorCode::Internal, "kronecker factor does not divide");
    q_factor_rec(zpoly_primitive(f), out);
    q_factor_rec(zpoly_primitive(zpoly_trim(quo)), out);
}

std::vector<PolyFactor> q_factor(const FieldCtx& f, const Poly& a) {
    if (a.degree() > kQDegreeCap)
        fail(ErrorCode::Unsupported,
             "rational factorization capped at degree " + std::to_string(kQDegreeCap) +
                 ", got " + std::to_string(a.degree()));
    // clear denominators -> primitive integer polynomial
    mpz_class lcm = 1;
    for (auto& c : a.c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.q.get_den().get_mpz_t());
    ZPoly z;
    for (auto& c : a.c) {
        mpq_class v = c.q * mpq_class(lcm);
        v.canonicalize();
        z.push_back(v.get_num());
    }
    z = zpoly_primitive(zpoly_trim(z));
    std::vector<ZPoly> irred;
    q_factor_rec(z, irred);

    std::vector<PolyFactor> result;
    Poly rest = a;
    for (auto& zf : irred) {
        std::vector<Scalar> fc;
        for (auto& c : zf) fc.push_back(f.from_mpq(mpq_class(c)));
        Poly qf = poly_monic(f, poly_from_coeffs(f, fc));
        bool seen = false;
        for (auto& r : result)
            if (poly_eq(f, r.factor, qf)) seen = true;
        if (seen) continue;
        int mult = 0;
        Poly quo, rem;
        while (!rest.is_zero() && rest.degree() >= qf.degree()) {
            poly_divmod(f, rest, qf, quo, rem);
            if (!rem.is_zero()) break;
            rest = quo;
            ++mult;
        }
        result.push_back({qf, mult});
    }
    return result;
}

} // namespace

bool poly_is_irreducible(const FieldCtx& f, const Poly& a) {
    if (!poly_is_monic(f, a)) fail(ErrorCode::NotMonic, "irreducibility requires a monic polynomial");
    if (a.degree() < 1) fail(ErrorCode::NotMonic, "irreducibility requires degree >= 1");
    if (f.kind() == FieldKind::PrimeField) return fp_is_irreducible(f, a);
    if (a.degree() > kQDegreeCap)
        fail(ErrorCode::Unsupported,
             "rational irreducibility capped at degree " + std::to_string(kQDegreeCap));
    auto fac = q_factor(f, a);
    return fac.size() == 1 && fac[0].multiplicity == 1;
}

std::vector<PolyFactor> poly_factor(const FieldCtx& f, const Poly& a) {
    if (a.degree() < 1)
        fail(ErrorCode::ParseError, "factorization requires degree >= 1");
    if (f.kind() == FieldKind::PrimeField) return fp_factor(f, a);
    return q_factor(f, a);
}

} // namespace lpa
