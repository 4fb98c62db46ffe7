#include "quasigap/surd.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cctype>
#include <ostream>
#include <sstream>

namespace quasigap {

namespace {

// Splits d = s^2 * f with f squarefree (trial division; config-scale inputs).
void extract_square(unsigned long d, unsigned long& square_root, unsigned long& free_part) {
    square_root = 1;
    free_part = 1;
    for (unsigned long p = 2; p * p <= d; ++p) {
        unsigned e = 0;
        while (d % p == 0) {
            d /= p;
            ++e;
        }
        for (unsigned i = 0; i + 1 < e; i += 2) square_root *= p;
        if (e % 2 == 1) free_part *= p;
    }
    free_part *= d;
}

struct MpfrReal {
    mpfr_t v;
    explicit MpfrReal(long prec) { mpfr_init2(v, prec); }
    ~MpfrReal() { mpfr_clear(v); }
    MpfrReal(const MpfrReal&) = delete;
    MpfrReal& operator=(const MpfrReal&) = delete;
};

// Adds q*sqrt(d) into acc with the requested rounding direction.
void accumulate_term(mpfr_t acc, const mpq_class& q, unsigned long d, mpfr_rnd_t rnd, long prec) {
    MpfrReal term(prec);
    if (d == 1) {
        mpfr_set_q(term.v, q.get_mpq_t(), rnd);
    } else {
        // sqrt(d) > 0, so the rounding of the sqrt follows the sign of q.
        mpfr_rnd_t inner = rnd;
        if (sgn(q) < 0) inner = (rnd == MPFR_RNDD) ? MPFR_RNDU : MPFR_RNDD;
        mpfr_set_ui(term.v, d, inner);
        mpfr_sqrt(term.v, term.v, inner);
        mpfr_mul_q(term.v, term.v, q.get_mpq_t(), rnd);
    }
    mpfr_add(acc, acc, term.v, rnd);
}

void eval_interval(const std::vector<Surd::Term>& terms, long prec, mpfr_t lo, mpfr_t hi) {
    mpfr_set_zero(lo, 1);
    mpfr_set_zero(hi, 1);
    for (const auto& t : terms) {
        accumulate_term(lo, t.q, t.d, MPFR_RNDD, prec);
        accumulate_term(hi, t.q, t.d, MPFR_RNDU, prec);
    }
}

constexpr long kStartPrec = 128;
constexpr long kMaxPrec = 1 << 22;

}  // namespace

Surd::Surd(const mpq_class& v) {
    if (sgn(v) != 0) terms_.push_back(Term{1, v});
}

Surd Surd::root(unsigned long d) {
    if (d == 0) return Surd();
    unsigned long s, f;
    extract_square(d, s, f);
    Surd out;
    if (f == 1) {
        out.terms_.push_back(Term{1, mpq_class(s)});
    } else {
        out.terms_.push_back(Term{f, mpq_class(s)});
    }
    return out;
}

Surd Surd::quad(const mpz_class& a, const mpz_class& b, const mpz_class& c, unsigned long d) {
    if (c == 0) throw ConfigError("surd denominator c must be positive");
    mpq_class ra(a, c);
    ra.canonicalize();
    mpq_class rb(b, c);
    rb.canonicalize();
    return Surd(ra) + Surd(rb) * root(d);
}

mpq_class Surd::rational() const {
    if (terms_.empty()) return mpq_class(0);
    if (terms_.size() == 1 && terms_[0].d == 1) return terms_[0].q;
    throw Error("surd is not rational: " + to_literal());
}

std::vector<unsigned long> Surd::radicals() const {
    std::vector<unsigned long> out;
    for (const auto& t : terms_)
        if (t.d > 1) out.push_back(t.d);
    return out;
}

void Surd::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return x.d < y.d; });
    std::vector<Term> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().d == t.d) {
            merged.back().q += t.q;
            if (sgn(merged.back().q) == 0) merged.pop_back();
        } else if (sgn(t.q) != 0) {
            merged.push_back(std::move(t));
        }
    }
    terms_ = std::move(merged);
}

Surd Surd::operator-() const {
    Surd out = *this;
    for (auto& t : out.terms_) t.q = -t.q;
    return out;
}

Surd Surd::operator+(const Surd& o) const {
    Surd out;
    out.terms_.reserve(terms_.size() + o.terms_.size());
    out.terms_.insert(out.terms_.end(), terms_.begin(), terms_.end());
    out.terms_.insert(out.terms_.end(), o.terms_.begin(), o.terms_.end());
    out.normalize();
    return out;
}

Surd Surd::operator-(const Surd& o) const { return *this + (-o); }

Surd Surd::operator*(const Surd& o) const {
    Surd out;
    out.terms_.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            // sqrt(d1)*sqrt(d2) = g*sqrt(d1*d2/g^2) with g = gcd(d1,d2);
            // both inputs squarefree keeps the product squarefree.
            unsigned long g = mpz_class(gcd(mpz_class(a.d), mpz_class(b.d))).get_ui();
            unsigned long d = (a.d / g) * (b.d / g);
            out.terms_.push_back(Term{d, a.q * b.q * g});
        }
    }
    out.normalize();
    return out;
}

Surd Surd::operator/(const Surd& o) const {
    if (o.is_zero()) throw Error("surd division by zero");
    if (o.is_rational()) {
        Surd out = *this;
        for (auto& t : out.terms_) t.q /= o.terms_[0].q;
        return out;
    }
    // Conjugate away the largest prime of the divisor's radical support:
    // write o = u + sqrt(p)*v with u, v free of p, then
    // 1/o = (u - sqrt(p)*v) / (u^2 - p*v^2), and the denominator lives in
    // the smaller tower, so the recursion terminates.
    unsigned long p = 2;
    for (const auto& t : o.terms_) {
        if (t.d > 1) {
            unsigned long d = t.d;
            for (unsigned long f = 2; f <= d; ++f) {
                while (d % f == 0) {
                    p = std::max(p, f);
                    d /= f;
                }
            }
        }
    }
    Surd u, v;
    for (const auto& t : o.terms_) {
        if (t.d % p == 0) {
            v.terms_.push_back(Term{t.d / p, t.q});
        } else {
            u.terms_.push_back(Term{t.d, t.q});
        }
    }
    u.normalize();
    v.normalize();
    Surd conj = u - root(p) * v;
    Surd denom = u * u - Surd(mpq_class(p)) * (v * v);
    return (*this * conj) / denom;
}

bool Surd::operator==(const Surd& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].d != o.terms_[i].d || terms_[i].q != o.terms_[i].q) return false;
    }
    return true;
}

namespace {

std::vector<Surd::Term> square_terms(const std::vector<Surd::Term>& t) {
    Surd acc;
    Surd x;
    // rebuild through Surd multiplication to stay canonical
    for (const auto& term : t) {
        Surd piece = Surd::root(term.d);
        piece = piece * Surd(term.q);
        x += piece;
    }
    acc = x * x;
    return acc.terms();
}

}  // namespace

int Surd::sign_of_terms(const std::vector<Term>& terms) {
    if (terms.empty()) return 0;
    if (terms.size() == 1) return sgn(terms[0].q);
    if (terms.size() == 2 && terms[0].d == 1) {
        // a + b*sqrt(D): compare a^2 against b^2*D.
        const mpq_class& a = terms[0].q;
        const mpq_class& b = terms[1].q;
        if (sgn(a) > 0 && sgn(b) > 0) return 1;
        if (sgn(a) < 0 && sgn(b) < 0) return -1;
        int c = ::cmp(mpq_class(a * a), mpq_class(b * b * (long)terms[1].d));
        if (c == 0) return 0;
        return (c > 0) ? sgn(a) : sgn(b);
    }
    if (terms.size() <= 8) {
        // Split off one prime p of the radical support: x = u + sqrt(p)*v
        // with u, v in the subtower; opposite signs fall back to the sign of
        // u^2 - p*v^2, which is nonzero whenever x is (canonical
        // independence of the radicals).
        unsigned long p = 0;
        for (const auto& t : terms) {
            if (t.d > 1) {
                unsigned long d = t.d;
                for (unsigned long f = 2; f <= d; ++f) {
                    while (d % f == 0) {
                        p = f;
                        d /= f;
                    }
                }
                if (p) break;
            }
        }
        std::vector<Term> u, v;
        for (const auto& t : terms) {
            if (t.d % p == 0) {
                v.push_back(Term{t.d / p, t.q});
            } else {
                u.push_back(t);
            }
        }
        int su = sign_of_terms(u);
        int sv = sign_of_terms(v);
        if (su == 0) return sv;
        if (sv == 0 || su == sv) return su;
        // u and sqrt(p)*v pull in opposite directions
        std::vector<Term> u2 = square_terms(u);
        std::vector<Term> pv2 = square_terms(v);
        for (auto& t : pv2) t.q *= (long)p;
        Surd diff;
        for (const auto& t : u2) diff += Surd(t.q) * Surd::root(t.d);
        for (const auto& t : pv2) diff -= Surd(t.q) * Surd::root(t.d);
        int sd = sign_of_terms(diff.terms());
        return sd > 0 ? su : sv;
    }
    // Deep towers: nonzero by canonicity, so interval refinement decides.
    for (long prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
        MpfrReal lo(prec), hi(prec);
        eval_interval(terms, prec, lo.v, hi.v);
        if (mpfr_sgn(lo.v) > 0) return 1;
        if (mpfr_sgn(hi.v) < 0) return -1;
    }
    throw Error("surd sign refinement exceeded precision cap");
}

int Surd::sign() const { return sign_of_terms(terms_); }

Ordering Surd::compare(const Surd& x, const Surd& y) {
    if (x == y) return Ordering::equal;
    switch ((x - y).sign()) {
        case -1: return Ordering::less;
        case 1: return Ordering::greater;
        default: return Ordering::equal;
    }
}

Ordering Surd::cmp(const Surd& x, const Surd& y) {
    if (x == y) return Ordering::equal;
    Surd diff = x - y;
    if (diff.radicals().size() >= 2) {
        throw MixedFields("cannot compare surds from distinct quadratic fields: " +
                          x.to_literal() + " vs " + y.to_literal());
    }
    return (diff.sign() < 0) ? Ordering::less : Ordering::greater;
}

mpz_class Surd::floor() const {
    if (is_rational()) {
        mpq_class q = rational();
        mpz_class out;
        mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        return out;
    }
    if (auto qv = quad_view()) {
        // floor((a + b*sqrt(D))/c) = fdiv(a + floor(b*sqrt(D)), c): the
        // fractional part of b*sqrt(D) never pushes past the next multiple
        // of c, and b^2 D is not a perfect square (D squarefree, b != 0).
        mpz_class rad = qv->b * qv->b * (long)qv->d;
        mpz_class root = sqrt(rad);
        mpz_class fb = (sgn(qv->b) >= 0) ? root : -root - 1;
        mpz_class out;
        mpz_class num = qv->a + fb;
        mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), qv->c.get_mpz_t());
        return out;
    }
    {
        // Multi-radical: start from a double estimate and settle exactly
        // with integer-only sign tests (the value is irrational, so the
        // comparisons always decide).
        double est = 0;
        bool est_ok = true;
        for (const auto& t : terms_) {
            double q = t.q.get_d();
            est += q * std::sqrt((double)t.d);
            if (!std::isfinite(est)) est_ok = false;
        }
        if (est_ok) {
            mpz_class t((long)std::floor(est));
            int guard = 0;
            while (guard++ < 64 && (*this - Surd(mpz_class(t + 1))).sign() >= 0) t += 1;
            while (guard++ < 128 && (*this - Surd(t)).sign() < 0) t -= 1;
            if (guard < 128) return t;
        }
    }
    // Irrational, so the value is never an integer and the enclosure
    // eventually separates from every integer.
    for (long prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
        MpfrReal lo(prec), hi(prec);
        eval_interval(terms_, prec, lo.v, hi.v);
        MpfrReal flo(prec), fhi(prec);
        mpfr_floor(flo.v, lo.v);
        mpfr_floor(fhi.v, hi.v);
        if (mpfr_equal_p(flo.v, fhi.v)) {
            mpz_class out;
            mpfr_get_z(out.get_mpz_t(), flo.v, MPFR_RNDN);
            return out;
        }
    }
    throw Error("surd floor refinement exceeded precision cap");
}

mpz_class Surd::ceil() const { return -((-*this).floor()); }

Surd Surd::frac() const { return *this - Surd(floor()); }

Surd Surd::frac_mod(const Surd& x, const mpq_class& m) {
    if (sgn(m) <= 0) throw ConfigError("frac_mod modulus must be positive");
    mpz_class q = (x / Surd(m)).floor();
    return x - Surd(mpq_class(q) * m);
}

Surd Surd::abs() const { return sign() < 0 ? -*this : *this; }

Surd Surd::pow(unsigned e) const {
    Surd out(1L);
    Surd base = *this;
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

std::optional<Surd::QuadView> Surd::quad_view() const {
    mpq_class ra(0), rb(0);
    unsigned long d = 0;
    for (const auto& t : terms_) {
        if (t.d == 1) {
            ra = t.q;
        } else if (d == 0) {
            d = t.d;
            rb = t.q;
        } else {
            return std::nullopt;
        }
    }
    QuadView v;
    v.d = d;
    mpz_class c = lcm(ra.get_den(), rb.get_den());
    v.c = c;
    v.a = ra.get_num() * (c / ra.get_den());
    v.b = rb.get_num() * (c / rb.get_den());
    return v;
}

std::string Surd::to_literal() const {
    if (is_rational()) {
        mpq_class q = terms_.empty() ? mpq_class(0) : terms_[0].q;
        if (q.get_den() == 1) return q.get_num().get_str();
        return q.get_num().get_str() + "/" + q.get_den().get_str();
    }
    if (auto v = quad_view()) {
        std::string out = "(" + v->a.get_str();
        out += (sgn(v->b) < 0) ? "-" : "+";
        out += mpz_class(::abs(v->b)).get_str();
        out += "*sqrt(" + std::to_string(v->d) + "))/" + v->c.get_str();
        return out;
    }
    // Compositum value: a "+"-joined sum of single-radical literals.
    std::string out;
    for (const auto& t : terms_) {
        Surd piece;
        piece.terms_.push_back(t);
        if (!out.empty()) out += "+";
        out += piece.to_literal();
    }
    return out;
}

namespace {

struct Parser {
    std::string_view text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ConfigError("surd literal error at position " + std::to_string(pos) + ": " +
                          what + " in \"" + std::string(text) + "\"");
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    bool try_keyword(std::string_view kw) {
        skip_ws();
        if (text.substr(pos, kw.size()) == kw) {
            pos += kw.size();
            return true;
        }
        return false;
    }
    mpz_class integer() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        if (pos == digits) fail("expected integer");
        return mpz_class(std::string(text.substr(start, pos - start)));
    }
    mpz_class positive_integer() {
        mpz_class v = integer();
        if (v <= 0) fail("expected positive integer");
        return v;
    }

    // term := integer | integer '*' 'sqrt' '(' posint ')' | 'sqrt' '(' posint ')'
    Surd term() {
        skip_ws();
        if (try_keyword("sqrt")) {
            expect('(');
            mpz_class d = positive_integer();
            expect(')');
            return Surd::root(d.get_ui());
        }
        mpz_class coef = integer();
        size_t save = pos;
        if (eat('*')) {
            if (try_keyword("sqrt")) {
                expect('(');
                mpz_class d = positive_integer();
                expect(')');
                return Surd(coef) * Surd::root(d.get_ui());
            }
            pos = save;
        }
        return Surd(coef);
    }

    // paren := '(' term (('+'|'-') term)* ')' ('/' posint)?
    Surd paren() {
        expect('(');
        Surd acc = term();
        while (true) {
            skip_ws();
            if (eat('+')) {
                acc += term();
            } else if (pos < text.size() && text[pos] == '-') {
                // leave the '-' for the signed integer of the next term
                acc += term();
            } else {
                break;
            }
        }
        expect(')');
        if (eat('/')) acc /= Surd(positive_integer());
        return acc;
    }

    Surd top() {
        skip_ws();
        Surd acc;
        bool first = true;
        while (true) {
            skip_ws();
            if (pos >= text.size()) break;
            if (!first && !eat('+')) break;
            if (pos < text.size() && text[pos] == '(') {
                acc += paren();
            } else {
                mpz_class num = integer();
                if (eat('/')) {
                    mpq_class q(num, positive_integer());
                    q.canonicalize();
                    acc += Surd(q);
                } else {
                    acc += Surd(num);
                }
            }
            first = false;
        }
        skip_ws();
        if (pos != text.size()) fail("trailing characters");
        if (first) fail("empty literal");
        return acc;
    }
};

}  // namespace

Surd Surd::parse(std::string_view text) {
    Parser p{text};
    return p.top();
}

std::string Surd::to_decimal(int digits) const {
    long prec = std::max<long>(128, digits * 4 + 32);
    MpfrReal v(prec);
    mpfr_set_zero(v.v, 1);
    for (const auto& t : terms_) accumulate_term(v.v, t.q, t.d, MPFR_RNDN, prec);
    char buf[512];
    mpfr_snprintf(buf, sizeof buf, "%.*Rf", digits, v.v);
    return buf;
}

double Surd::to_double() const {
    MpfrReal v(128);
    mpfr_set_zero(v.v, 1);
    for (const auto& t : terms_) accumulate_term(v.v, t.q, t.d, MPFR_RNDN, 128);
    return mpfr_get_d(v.v, MPFR_RNDN);
}

void Surd::interval(long prec_bits, mpq_class& lo, mpq_class& hi) const {
    MpfrReal l(prec_bits), h(prec_bits);
    eval_interval(terms_, prec_bits, l.v, h.v);
    mpf_class fl(0, prec_bits), fh(0, prec_bits);
    mpfr_get_f(fl.get_mpf_t(), l.v, MPFR_RNDD);
    mpfr_get_f(fh.get_mpf_t(), h.v, MPFR_RNDU);
    lo = mpq_class(fl);
    hi = mpq_class(fh);
}

Surd operator+(long a, const Surd& b) { return Surd(a) + b; }
Surd operator-(long a, const Surd& b) { return Surd(a) - b; }
Surd operator*(long a, const Surd& b) { return Surd(a) * b; }

std::ostream& operator<<(std::ostream& os, const Surd& s) { return os << s.to_literal(); }

ScalarMode ScalarMode::surrogate(unsigned bits, const mpq_class& radius) {
    if (bits == 0) throw ConfigError("surrogate mode requires precision_bits > 0");
    if (sgn(radius) <= 0) throw ConfigError("surrogate mode requires validity_radius > 0");
    ScalarMode m;
    m.kind = Kind::rational_surrogate;
    m.precision_bits = bits;
    m.validity_radius = radius;
    return m;
}

mpq_class ScalarMode::epsilon() const {
    mpz_class den(1);
    den <<= precision_bits;
    return mpq_class(mpz_class(1), den);
}

Ordering guarded_cmp(const Surd& x, const Surd& y, const ScalarMode& mode) {
    if (x == y) return Ordering::equal;
    if (mode.is_surrogate()) {
        Surd diff = (x - y).abs();
        if (Surd::compare(diff, Surd(mode.epsilon())) == Ordering::less) {
            throw AmbiguousComparison("values within 2^-" + std::to_string(mode.precision_bits) +
                                      " in surrogate mode: " + x.to_literal() + " vs " +
                                      y.to_literal());
        }
    }
    return Surd::compare(x, y);
}

}  // namespace quasigap
