#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quasigap/errors.hpp"

namespace quasigap {

enum class Ordering { less, equal, greater };

/**
 * Exact real scalar: a canonical Q-linear combination of square roots of
 * distinct squarefree integers,
 *
 *     x = sum_i  q_i * sqrt(D_i),   q_i in Q \ {0},  D_i squarefree, D_1 = 1.
 *
 * The single-radical case is the familiar (a + b*sqrt(D))/c.  Because the
 * sqrt(D) are linearly independent over Q, the representation is unique, so
 * value equality is representation equality and surds are usable as exact
 * map/set keys.  Signs of nonzero values are decided by directed-rounding
 * interval refinement (never by floating point alone); zero is decided
 * structurally.
 */
class Surd {
public:
    struct Term {
        unsigned long d;  // squarefree radicand; 1 = rational part
        mpq_class q;      // nonzero coefficient
    };

    Surd() = default;
    Surd(long v) : Surd(mpq_class(v)) {}           // NOLINT(google-explicit-constructor)
    Surd(const mpz_class& v) : Surd(mpq_class(v)) {}  // NOLINT
    Surd(const mpq_class& v);                      // NOLINT

    // sqrt(d) for d >= 0 (square parts are pulled out, so d need not be
    // squarefree on input).
    static Surd root(unsigned long d);
    // (a + b*sqrt(d))/c with c > 0; the documented quadratic form.
    static Surd quad(const mpz_class& a, const mpz_class& b, const mpz_class& c,
                     unsigned long d);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].d == 1);
    }
    // Rational value (requires is_rational()).
    mpq_class rational() const;
    const std::vector<Term>& terms() const { return terms_; }
    // Distinct radicands > 1 appearing in the representation.
    std::vector<unsigned long> radicals() const;

    Surd operator-() const;
    Surd operator+(const Surd& o) const;
    Surd operator-(const Surd& o) const;
    Surd operator*(const Surd& o) const;
    Surd operator/(const Surd& o) const;
    Surd& operator+=(const Surd& o) { return *this = *this + o; }
    Surd& operator-=(const Surd& o) { return *this = *this - o; }
    Surd& operator*=(const Surd& o) { return *this = *this * o; }
    Surd& operator/=(const Surd& o) { return *this = *this / o; }

    bool operator==(const Surd& o) const;
    bool operator!=(const Surd& o) const { return !(*this == o); }

    // Exact sign of the value: -1, 0, +1.
    int sign() const;

    // Exact value comparison, defined for any two surds (compositum-wide).
    static Ordering compare(const Surd& x, const Surd& y);

    // The exactnum operation: total order on a common quadratic field.
    // Raises MixedFields when x - y involves two or more distinct radicals.
    static Ordering cmp(const Surd& x, const Surd& y);

    mpz_class floor() const;
    mpz_class ceil() const;
    Surd frac() const;  // x - floor(x), in [0,1)
    // x - m*floor(x/m), in [0,m); m > 0.
    static Surd frac_mod(const Surd& x, const mpq_class& m);

    Surd abs() const;
    Surd pow(unsigned e) const;

    // The documented quadratic view (a+b*sqrt(D))/c with gcd(a,b,c)=1, c>0;
    // empty when more than one radical is present.
    struct QuadView {
        mpz_class a, b, c;
        unsigned long d;
    };
    std::optional<QuadView> quad_view() const;

    // Canonical literal: "n", "p/q", "(a+b*sqrt(D))/c", or a "+"-joined sum
    // of those for compositum values.  parse(to_literal(x)) == x, and
    // to_literal(parse(s)) is idempotent.
    std::string to_literal() const;
    // Parse the config literal syntax; errors carry the offending position.
    static Surd parse(std::string_view text);

    // Fixed-point decimal rendering (round-to-nearest at the last digit).
    std::string to_decimal(int digits) const;
    double to_double() const;

    // Certified enclosure lo <= x <= hi at the given binary precision.
    void interval(long prec_bits, mpq_class& lo, mpq_class& hi) const;

    // Value order (for ordered containers of frequencies etc.).
    bool operator<(const Surd& o) const { return compare(*this, o) == Ordering::less; }
    bool operator>(const Surd& o) const { return compare(*this, o) == Ordering::greater; }
    bool operator<=(const Surd& o) const { return compare(*this, o) != Ordering::greater; }
    bool operator>=(const Surd& o) const { return compare(*this, o) != Ordering::less; }

private:
    std::vector<Term> terms_;  // sorted by d, coefficients nonzero
    void normalize();
    static int sign_of_terms(const std::vector<Term>& t);
};

Surd operator+(long a, const Surd& b);
Surd operator-(long a, const Surd& b);
Surd operator*(long a, const Surd& b);
std::ostream& operator<<(std::ostream& os, const Surd& s);

/**
 * Scalar comparison context.  Exact-quadratic mode decides everything
 * exactly.  Rational-surrogate mode models irrational data by dyadic
 * rationals of precision_bits bits: any comparison whose sides differ by a
 * nonzero amount below 2^-precision_bits raises AmbiguousComparison instead
 * of deciding silently.
 */
struct ScalarMode {
    enum class Kind { exact_quadratic, rational_surrogate };
    Kind kind = Kind::exact_quadratic;
    unsigned precision_bits = 0;     // surrogate only
    mpq_class validity_radius = 0;   // surrogate only

    static ScalarMode exact() { return {}; }
    static ScalarMode surrogate(unsigned bits, const mpq_class& radius);
    bool is_surrogate() const { return kind == Kind::rational_surrogate; }
    // 2^-precision_bits as an exact rational.
    mpq_class epsilon() const;
};

// compare() with the surrogate ambiguity guard applied.
Ordering guarded_cmp(const Surd& x, const Surd& y, const ScalarMode& mode);

}  // namespace quasigap
