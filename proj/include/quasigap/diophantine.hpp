#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quasigap/relations.hpp"
#include "quasigap/scheme.hpp"
#include "quasigap/surd.hpp"

namespace quasigap {

// System of k-d linear forms L_i in d variables; sup-norm conventions
// throughout (|x| on vectors, ||x|| distance to the nearest integer vector).
struct LinearFormSystem {
    int d = 0, k = 0;
    SMat rows;  // (k-d) x d

    int codim() const { return k - d; }
    // ||L(n)||: max over forms of the distance of L_i(n) to Z.
    Surd dist_to_lattice(const IVec& n) const;
};

struct ContinuedFraction {
    std::vector<mpz_class> quotients;
    bool terminated = false;               // rational input
    std::optional<size_t> period_start;    // quadratic irrational: cycle start
    std::vector<mpz_class> period;
};

// Exact continued fraction of x, up to `depth` partial quotients; detects
// the eventual period of quadratic irrationals.
ContinuedFraction cf(const Surd& x, int depth);

// Lexicographically first n (positive leading sign, increasing sup-norm
// shells) with 0 < |n| < N and ||L(n)|| <= N^(-d/(k-d)); the bound is
// guaranteed by pigeonhole, so exhaustion is a hard failure.
IVec dirichlet_witness(const LinearFormSystem& l, long n_bound);

struct BadApproxReport {
    Surd value;      // C(H) = min |n|^{d/(k-d)} * ||L(n)||; exact iff (k-d) | d
    bool exact = true;
    IVec witness;
    Surd witness_dist;  // ||L(witness)||
    long height = 0;
};

BadApproxReport bad_approx_constant(const LinearFormSystem& l, long height);
BadApproxReport bad_approx_constant_serial(const LinearFormSystem& l, long height);

struct Transference {
    mpz_class h;
    mpq_class c1, x1;
};

// h = floor(X^-d C^(d-k)), C1 = (h+1)C/2, X1 = (h+1)X/2.
Transference transference(const mpq_class& c, const mpq_class& x, int d, int k);

struct PsiProfile {
    enum class Kind { constant, logpower };
    Kind kind = Kind::constant;
    mpq_class c = 1;        // constant(c)
    mpq_class epsilon = 1;  // logpower(eps): psi(r) = (log r)^(-1-eps), clamped at r=1
    std::string describe() const;
    static PsiProfile constant(const mpq_class& c);
    static PsiProfile logpower(const mpq_class& eps);
};

struct HypothesisViolation {
    IVec n;
    int form = 0;        // i
    int omitted = -1;    // j' for the second hypothesis, -1 for the first
    std::string which;   // "5.1" or "5.2"
};

struct HypothesisReport {
    bool pass51 = true;
    bool pass52 = true;
    std::optional<HypothesisViolation> first_violation;
    long height = 0;
    std::string psi;
};

// Verifies ||L_i(n)|| >= psi(|n|)/|n|^d for all 0 < |n| <= H, and for every
// sub-form omitting one variable, ||sum_{j != j'} n_j b_ij|| >=
// 3^d/(|n|^d psi(|n|)^d); reports the first violation.
HypothesisReport check_hypotheses_51_52(const LinearFormSystem& l, const PsiProfile& psi,
                                        long height);

struct Thm13Params {
    int d = 2;
    mpq_class epsilon = 1;
    long q = 13, p = 5;          // coprime, p/q < 1/2
    Surd alpha1;                 // badly approximable base
    std::vector<Surd> middle;    // alpha_2 .. alpha_{d-1}
    Surd gamma;                  // 0 < gamma <= alpha1 / q^(2d+eps)
    long relation_height = 10000;
};

// (alpha_1, ..., alpha_d) with alpha_d = p*(alpha_1/q) + gamma; rejects
// parameter violations and any integer relation among {1, alpha_*} found
// below the relation height.
std::vector<Surd> thm13_alpha(const Thm13Params& params);

// Distinct circle distances between consecutive elements of
// A(r) = {L_1(n) mod 1 : n in r*Omega' cap Z^d}.
long consecutive_gap_count(const SVec& l1, const mpq_class& r, const OmegaSpec& omega);
// The sorted gap lengths themselves (for reports).
std::vector<Surd> consecutive_gaps(const SVec& l1, const mpq_class& r, const OmegaSpec& omega);

// Observed min over the warm-up radii of r^(d-1) q^d * (smallest gap of the
// m-projected point set), rounded down to a power of two.
mpq_class thm13_calibrate_c(const Thm13Params& params, const std::vector<long>& warmup_radii);

// Certified enclosure of r* = (c/alpha1)^(1/d) * q^(1+eps/d).
void thm13_rstar(const Thm13Params& params, const mpq_class& c, mpq_class& lo, mpq_class& hi);

}  // namespace quasigap
