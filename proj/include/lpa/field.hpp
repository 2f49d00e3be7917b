#ifndef LPA_FIELD_HPP
#define LPA_FIELD_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lpa/errors.hpp"

namespace lpa {

enum class FieldKind { Rationals, PrimeField };

// Exact field element. For the rationals the payload is `q` (kept in lowest
// terms with positive denominator by mpq); for a prime field it is the
// canonical residue `r` in 0..p-1. Which member is active is decided by the
// FieldCtx every value travels with; elements never carry their own context.
struct Scalar {
    mpq_class q;
    std::int64_t r = 0;
};

bool is_prime_u64(std::uint64_t n);

// Arithmetic context: the rationals or F_p with p prime (checked).
// All operations are pure; contexts are small values and freely copyable.
class FieldCtx {
public:
    FieldCtx() : kind_(FieldKind::Rationals), p_(0) {}

    static FieldCtx rationals() { return FieldCtx(); }

    static FieldCtx prime_field(std::int64_t p) {
        if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
            fail(ErrorCode::ParseError, "prime field modulus must be prime, got " + std::to_string(p));
        FieldCtx f;
        f.kind_ = FieldKind::PrimeField;
        f.p_ = p;
        return f;
    }

    FieldKind kind() const { return kind_; }
    std::int64_t p() const { return p_; }
    bool is_rationals() const { return kind_ == FieldKind::Rationals; }

    bool operator==(const FieldCtx& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const FieldCtx& o) const { return !(*this == o); }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t v) const;
    Scalar from_mpq(const mpq_class& v) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar div(const Scalar& a, const Scalar& b) const; // DivisionByZero on b = 0
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;

    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    bool eq(const Scalar& a, const Scalar& b) const;

    Scalar pow(const Scalar& a, std::uint64_t e) const;

    // Text form used verbatim in all JSON formats: "a/b" or "a" over Q,
    // the canonical residue over F_p.
    std::string to_string(const Scalar& a) const;
    Scalar parse(const std::string& s) const;

    // Uniform residue over F_p; over Q a small fraction (numerator in
    // -4..4, denominator in 1..3). Used by seeded test harnesses.
    Scalar sample(std::mt19937_64& rng) const;

    std::string describe() const;

private:
    FieldKind kind_;
    std::int64_t p_;
};

// Dense univariate polynomial, coefficients in ascending degree order with a
// nonzero leading coefficient (empty vector = zero polynomial).
struct Poly {
    std::vector<Scalar> c;

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
};

Poly poly_from_coeffs(const FieldCtx& f, std::vector<Scalar> coeffs);
Poly poly_zero();
Poly poly_one(const FieldCtx& f);
Poly poly_x(const FieldCtx& f);
Poly poly_scalar(const FieldCtx& f, const Scalar& a);

bool poly_eq(const FieldCtx& f, const Poly& a, const Poly& b);
bool poly_is_monic(const FieldCtx& f, const Poly& a);

Poly poly_add(const FieldCtx& f, const Poly& a, const Poly& b);
Poly poly_sub(const FieldCtx& f, const Poly& a, const Poly& b);
Poly poly_mul(const FieldCtx& f, const Poly& a, const Poly& b);
Poly poly_scale(const FieldCtx& f, const Scalar& s, const Poly& a);
void poly_divmod(const FieldCtx& f, const Poly& a, const Poly& b, Poly& quo, Poly& rem);
Poly poly_mod(const FieldCtx& f, const Poly& a, const Poly& b);
Poly poly_gcd(const FieldCtx& f, const Poly& a, const Poly& b); // monic gcd
Poly poly_derivative(const FieldCtx& f, const Poly& a);
Poly poly_monic(const FieldCtx& f, const Poly& a);
Scalar poly_eval(const FieldCtx& f, const Poly& a, const Scalar& x);
Poly poly_powmod(const FieldCtx& f, const Poly& base, const mpz_class& e, const Poly& mod);

std::string poly_to_string(const FieldCtx& f, const Poly& a);

// Complete irreducibility decision. Over F_p: Rabin's test. Over Q: full
// integer factorization (Kronecker) up to degree 8; beyond the cap the
// operation reports Unsupported rather than guessing.
bool poly_is_irreducible(const FieldCtx& f, const Poly& a);

// Full factorization into monic irreducibles with multiplicities, plus the
// leading unit. Same completeness/caps as poly_is_irreducible.
struct PolyFactor {
    Poly factor;
    int multiplicity;
};
std::vector<PolyFactor> poly_factor(const FieldCtx& f, const Poly& a);

} // namespace lpa

#endif
