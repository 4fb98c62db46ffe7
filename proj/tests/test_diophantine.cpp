#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "quasigap/diophantine.hpp"

using namespace quasigap;

namespace {

Surd golden() { return Surd::quad(-1, 1, 2, 5); }

LinearFormSystem single_form(const Surd& alpha) {
    LinearFormSystem l;
    l.d = 1;
    l.k = 2;
    l.rows = SMat(1, 1);
    l.rows.at(0, 0) = alpha;
    return l;
}

OmegaSpec unit_interval_closed() {
    OmegaSpec o;
    o.dim = 1;
    o.halfspaces = {{{mpq_class(-1)}, mpq_class(0), false}, {{mpq_class(1)}, mpq_class(1), false}};
    return o;
}

OmegaSpec unit_interval_left_open() {
    OmegaSpec o;
    o.dim = 1;
    o.halfspaces = {{{mpq_class(-1)}, mpq_class(0), true}, {{mpq_class(1)}, mpq_class(1), false}};
    return o;
}

Thm13Params example_params() {
    Thm13Params p;
    p.d = 2;
    p.epsilon = 1;
    p.q = 13;
    p.p = 5;
    p.alpha1 = golden();
    p.gamma = golden() / Surd(mpz_class(371293));  // alpha1 / 13^5
    return p;
}

std::vector<unsigned long> kRadicands{2, 3, 5, 6, 7, 10};

Surd random_irrational(std::mt19937_64& rng) {
    std::uniform_int_distribution<size_t> pick(0, kRadicands.size() - 1);
    std::uniform_int_distribution<long> small(1, 9);
    Surd v = Surd::quad(small(rng) - 5, small(rng), small(rng), kRadicands[pick(rng)]);
    return v.frac();
}

}  // namespace

TEST_CASE("continued fractions detect periods and termination") {
    ContinuedFraction phi = cf(Surd::quad(1, 1, 2, 5), 8);
    CHECK(phi.quotients == std::vector<mpz_class>(phi.quotients.size(), 1));
    REQUIRE(phi.period_start.has_value());
    CHECK(phi.period == std::vector<mpz_class>{1});

    ContinuedFraction r2 = cf(Surd::root(2), 6);
    REQUIRE(r2.quotients.size() >= 2);
    CHECK(r2.quotients[0] == 1);
    CHECK(r2.quotients[1] == 2);
    REQUIRE(r2.period_start.has_value());
    CHECK(r2.period == std::vector<mpz_class>{2});

    ContinuedFraction rat = cf(Surd(mpq_class(7, 3)), 5);
    CHECK(rat.terminated);
    CHECK(rat.quotients == (std::vector<mpz_class>{2, 3}));
}

TEST_CASE("dirichlet witness matches the golden example") {
    IVec n = dirichlet_witness(single_form(golden()), 5);
    CHECK(n == IVec{3});
    // ||3a|| = (7-3sqrt(5))/2 <= 1/5
    Surd dist = single_form(golden()).dist_to_lattice(n);
    CHECK(dist == Surd::quad(7, -3, 2, 5));
    CHECK(Surd::compare(dist, Surd(mpq_class(1, 5))) == Ordering::less);
}

TEST_CASE("rational slope yields an exact witness") {
    IVec n = dirichlet_witness(single_form(Surd(mpq_class(3, 7))), 10);
    CHECK(single_form(Surd(mpq_class(3, 7))).dist_to_lattice(n).is_zero());
    CHECK(n == IVec{7});
}

TEST_CASE("dirichlet witnesses exist for random systems") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        LinearFormSystem l;
        l.d = 1 + (int)(rng() % 2);
        l.k = l.d + 1 + (int)(rng() % 2);
        l.rows = SMat(l.k - l.d, l.d);
        for (int i = 0; i < l.codim(); ++i)
            for (int j = 0; j < l.d; ++j) l.rows.at(i, j) = random_irrational(rng);
        for (long n_bound : {10L, 60L}) {
            IVec n = dirichlet_witness(l, n_bound);
            long sup = 0;
            for (long v : n) sup = std::max(sup, std::abs(v));
            CHECK(sup < n_bound);
            CHECK(sup > 0);
            Surd lhs = l.dist_to_lattice(n).pow((unsigned)l.codim()) *
                       Surd(mpq_class(n_bound)).pow((unsigned)l.d);
            CHECK(Surd::compare(lhs, Surd(1L)) != Ordering::greater);
        }
    }
}

TEST_CASE("badly approximable constant of the golden ratio stays above the classical bound") {
    auto rep = bad_approx_constant(single_form(golden()), 1000);
    REQUIRE(rep.exact);
    // 1/(sqrt(5)+2) = sqrt(5)-2
    CHECK(Surd::compare(rep.value, Surd::quad(-2, 1, 1, 5)) != Ordering::less);
    // nonincreasing in H
    auto small = bad_approx_constant(single_form(golden()), 100);
    CHECK(Surd::compare(rep.value, small.value) != Ordering::greater);
    // parallel kernel equals the serial reference
    auto ser = bad_approx_constant_serial(single_form(golden()), 1000);
    CHECK(rep.value == ser.value);
    CHECK(rep.witness == ser.witness);
}

TEST_CASE("unit height reduces to the form values themselves") {
    auto rep = bad_approx_constant(single_form(golden()), 1);
    CHECK(rep.value == single_form(golden()).dist_to_lattice(IVec{1}));
}

TEST_CASE("thm13 system collapses the badly-approximable constant") {
    auto alpha = thm13_alpha(example_params());
    LinearFormSystem l;
    l.d = 2;
    l.k = 3;
    l.rows = SMat(1, 2);
    l.rows.at(0, 0) = alpha[0];
    l.rows.at(0, 1) = alpha[1];
    auto rep = bad_approx_constant(l, 20);
    REQUIRE(rep.exact);  // d/(k-d) = 2
    CHECK(Surd::compare(rep.value, Surd(mpq_class(1, 100))) == Ordering::less);
    CHECK(rep.witness == IVec{5, -13});  // sign-canonical form of (-p, q)
}

TEST_CASE("transference follows the closed formulas") {
    Transference t = transference(mpq_class(1, 5), mpq_class(5), 1, 2);
    CHECK(t.h == 1);
    CHECK(t.c1 == mpq_class(1, 5));
    CHECK(t.x1 == mpq_class(5));
    Transference u = transference(1, 1, 1, 2);
    CHECK(u.h == 1);
    CHECK(u.c1 == 1);
    CHECK(u.x1 == 1);
}

TEST_CASE("inhomogeneous witnesses exist inside the transferred bounds") {
    std::mt19937_64 rng(2026);
    int verified = 0;
    for (int trial = 0; trial < 50; ++trial) {
        Surd alpha = random_irrational(rng);
        if (alpha.is_rational() || alpha.is_zero()) continue;
        LinearFormSystem l = single_form(alpha);
        long x_bound = 5 + (long)(rng() % 10);
        // premise constant: strictly below the observed minimum up to X
        Surd m;
        bool have = false;
        for (long n = 1; n <= x_bound; ++n) {
            Surd dist = l.dist_to_lattice(IVec{n});
            if (!have || Surd::compare(dist, m) == Ordering::less) {
                m = dist;
                have = true;
            }
        }
        mpq_class lo, hi;
        m.interval(128, lo, hi);
        mpq_class c = lo / 2;
        if (sgn(c) <= 0) continue;
        Transference t = transference(c, mpq_class(x_bound), 1, 2);
        // random inhomogeneous target
        mpq_class gamma(1 + (long)(rng() % 97), 100);
        long x1 = (long)(Surd(t.x1).ceil().get_si());
        bool found = false;
        for (long n = -x1; n <= x1 && !found; ++n) {
            Surd v = alpha * Surd(n) - Surd(gamma);
            Surd f = v.frac();
            Surd dist = Surd::compare(f, Surd(1L) - f) == Ordering::greater ? Surd(1L) - f : f;
            if (Surd::compare(dist, Surd(t.c1)) != Ordering::greater) found = true;
        }
        CHECK(found);
        ++verified;
    }
    CHECK(verified >= 40);
}

TEST_CASE("hypothesis checks: constant profile from the observed minimum passes") {
    LinearFormSystem l = single_form(golden());
    auto baseline = bad_approx_constant(l, 200);
    mpq_class lo, hi;
    baseline.value.interval(128, lo, hi);  // rational profile just under C(H)
    auto rep = check_hypotheses_51_52(l, PsiProfile::constant(lo), 200);
    // d=1: the constant is exactly the min of |n| * ||L(n)||, so 5.1 holds
    CHECK(rep.pass51);
    CHECK(rep.pass52);  // vacuous for d=1
    CHECK(!rep.first_violation.has_value());
}

TEST_CASE("hypothesis checks: thm13 construction violates 5.1 near q") {
    auto alpha = thm13_alpha(example_params());
    LinearFormSystem l;
    l.d = 2;
    l.k = 3;
    l.rows = SMat(1, 2);
    l.rows.at(0, 0) = alpha[0];
    l.rows.at(0, 1) = alpha[1];
    auto rep = check_hypotheses_51_52(l, PsiProfile::constant(mpq_class(1, 10)), 15);
    CHECK(!rep.pass51);
    REQUIRE(rep.first_violation.has_value());
    CHECK(rep.first_violation->which == "5.1");
    // the construction's own witness (-p, q) violates the bound: ||L|| = q*gamma
    Surd qgamma = l.dist_to_lattice(IVec{-5, 13});
    CHECK(qgamma == Surd(13L) * example_params().gamma);
    CHECK(Surd::compare(qgamma, Surd(mpq_class(1, 10) / mpq_class(169))) == Ordering::less);
}

TEST_CASE("logpower profile is checkable and reports the inevitable small-n violation") {
    LinearFormSystem l = single_form(golden());
    auto rep = check_hypotheses_51_52(l, PsiProfile::logpower(1), 50);
    // (log r)^(-2) > 1/2 for r <= 4, so 5.1 cannot hold there; logged, not asserted
    CHECK(!rep.pass51);
    REQUIRE(rep.first_violation.has_value());
    CHECK(rep.first_violation->which == "5.1");
}

TEST_CASE("thm13 construction and rejections") {
    auto alpha = thm13_alpha(example_params());
    REQUIRE(alpha.size() == 2);
    CHECK(alpha[0] == golden());
    CHECK(alpha[1] == Surd(mpq_class(142806, 371293)) * golden());

    Thm13Params bad = example_params();
    bad.p = 7;  // 7/13 >= 1/2
    CHECK_THROWS_AS(thm13_alpha(bad), ConfigError);

    bad = example_params();
    bad.gamma = Surd();
    CHECK_THROWS_AS(thm13_alpha(bad), ConfigError);

    bad = example_params();
    bad.gamma = golden() / Surd(13L);  // exceeds alpha1/q^5
    CHECK_THROWS_AS(thm13_alpha(bad), ConfigError);

    // the hidden relation q^5 a_2 = (p q^4 + 1) a_1 sits at height 371293
    Thm13Params strict = example_params();
    strict.relation_height = 1000000;
    CHECK_THROWS_AS(thm13_alpha(strict), RelationFound);
}

TEST_CASE("consecutive gaps of the golden orbit") {
    SVec l1{golden()};
    // with 0 in Omega', n=0 contributes the point 0: two distinct gaps
    CHECK(consecutive_gap_count(l1, 4, unit_interval_closed()) == 2);
    // excluding n=0 gives the classical three-distance pattern
    CHECK(consecutive_gap_count(l1, 4, unit_interval_left_open()) == 3);
    auto gaps = consecutive_gaps(l1, 4, unit_interval_left_open());
    std::set<Surd> distinct(gaps.begin(), gaps.end());
    std::set<Surd> expect{Surd::quad(7, -3, 2, 5), Surd::quad(-2, 1, 1, 5),
                          Surd::quad(3, -1, 2, 5)};
    CHECK(distinct == expect);
    // single point: one full-circle gap
    CHECK(consecutive_gap_count(l1, mpq_class(1, 2), unit_interval_closed()) == 1);
}

TEST_CASE("one-dimensional gap counts never exceed three") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        SVec l1{random_irrational(rng)};
        for (long r : {7L, 23L, 61L}) {
            CHECK(consecutive_gap_count(l1, r, unit_interval_closed()) <= 3);
        }
    }
}

TEST_CASE("thm13 calibration and r* enclosure are consistent") {
    Thm13Params p = example_params();
    mpq_class c = thm13_calibrate_c(p, {20, 35, 50});
    CHECK(sgn(c) > 0);
    mpq_class lo, hi;
    thm13_rstar(p, c, lo, hi);
    CHECK(lo <= hi);
    CHECK(hi - lo < mpq_class(1, 1000000));
    CHECK(lo > 0);
}
