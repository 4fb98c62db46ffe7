#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quasigap/scheme.hpp"
#include "testutil.hpp"

using namespace quasigap;
using namespace quasigap::testutil;

TEST_CASE("unit window derives trivial B, I, m") {
    Scheme s = Scheme::build(fibonacci_config());
    CHECK(s.window().index == 1);
    CHECK(s.window().denominators == std::vector<long>{1});
}

TEST_CASE("coupled window derives B, I=2, m=(1,2)") {
    // columns w1=(1,1), w2=(0,2): B = [[1,0],[1,2]]
    Scheme s = Scheme::build(coupled_window_config());
    CHECK(s.window().b.at(0, 0) == 1);
    CHECK(s.window().b.at(0, 1) == 0);
    CHECK(s.window().b.at(1, 0) == 1);
    CHECK(s.window().b.at(1, 1) == 2);
    CHECK(s.window().index == 2);
    CHECK(s.window().denominators == (std::vector<long>{1, 2}));
}

TEST_CASE("rational slope is rejected with a relation witness") {
    SchemeConfig c = fibonacci_config();
    c.alpha = {{"1/2"}};
    try {
        Scheme::build(c);
        CHECK(false);
    } catch (const NotTotallyIrrational& e) {
        CHECK(std::string(e.what()).find("height 2") != std::string::npos);
    }
}

TEST_CASE("two surds in one quadratic field cannot span a k-d=2 scheme") {
    // {1, a1, a2} with both a_i in Q(sqrt(5)) always carries a relation
    SchemeConfig c = golden_root2_config();
    c.alpha = {{"(-1+1*sqrt(5))/2"}, {"(-1+1*sqrt(5))/3"}};
    CHECK_THROWS_AS(Scheme::build(c), NotTotallyIrrational);
}

TEST_CASE("degenerate window is rejected") {
    SchemeConfig c = golden_root2_config();
    c.window_generators = {{1, 1}, {2, 2}};
    CHECK_THROWS_AS(Scheme::build(c), DegenerateWindow);
}

TEST_CASE("f0 containing a lattice vector is rejected") {
    SchemeConfig c = fibonacci_config();
    c.f0_mode = "explicit";
    c.f0_basis = {{"0", "1"}};
    CHECK_THROWS_AS(Scheme::build(c), BadF0);
}

TEST_CASE("f0 inside E degenerates the projection solve") {
    SchemeConfig c = fibonacci_config();
    c.f0_mode = "explicit";
    c.f0_basis = {{"1", "(-1+1*sqrt(5))/2"}};  // spans E itself
    CHECK_THROWS_AS(Scheme::build(c), SingularF0);
}

TEST_CASE("star matches the golden example and is additive") {
    Scheme s = Scheme::build(fibonacci_config());
    CHECK(s.star(IVec{0, 0})[0].is_zero());
    // star((1,1)) = 1 - alpha = (3-sqrt(5))/2
    CHECK(s.star(IVec{1, 1})[0] == Surd::quad(3, -1, 2, 5));
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
            SVec lhs = s.star(IVec{a + 1, b - 2});
            SVec rhs = s.star(IVec{a, b});
            SVec add = s.star(IVec{1, -2});
            CHECK(lhs[0] == rhs[0] + add[0]);
        }
}

TEST_CASE("star shifts by a window generator move one coordinate by one") {
    Scheme s = Scheme::build(coupled_window_config());
    IVec n{3, -1, 2};
    for (size_t g = 0; g < s.window().generators.size(); ++g) {
        IVec shifted = n;
        for (int i = 0; i < s.codim(); ++i)
            shifted[s.d() + i] += s.window().generators[g][i];
        SVec before = s.star(n);
        SVec after = s.star(shifted);
        for (int i = 0; i < s.codim(); ++i) {
            Surd expect = before[i] + (i == (int)g ? Surd(1L) : Surd());
            CHECK(after[i] == expect);
        }
    }
}

TEST_CASE("projections: pi2 reads off n_1, pi1 solves along F0") {
    Scheme s = Scheme::build(fibonacci_config());
    CHECK(s.project(IVec{4, 7}, Scheme::Proj::pi2)[0] == Surd(4L));
    CHECK(s.project(IVec{0, 5}, Scheme::Proj::pi2)[0].is_zero());
    // orthogonal projection of (1,1) onto E: x = (1+alpha)/(1+alpha^2)
    Surd alpha = Surd::quad(-1, 1, 2, 5);
    Surd expect = (Surd(1L) + alpha) / (Surd(1L) + alpha * alpha);
    CHECK(s.project(IVec{1, 1}, Scheme::Proj::pi1)[0] == expect);
    double numeric = s.project(IVec{1, 1}, Scheme::Proj::pi1)[0].to_double();
    CHECK(numeric == doctest::Approx(1.170820393).epsilon(1e-9));
}

TEST_CASE("pi1 plus the F0 component reconstructs the lattice vector") {
    for (const auto& cfg : {fibonacci_config(), golden_root2_config(), planar_config()}) {
        Scheme s = Scheme::build(cfg);
        IVec n(s.k());
        for (int i = 0; i < s.k(); ++i) n[i] = (i * 7 + 3) % 11 - 5;
        SVec x = s.project(n, Scheme::Proj::pi1);
        // E-point (x, L(x)); remainder must be annihilated by pi1
        SVec e(s.k());
        for (int j = 0; j < s.d(); ++j) e[j] = x[j];
        SVec lx = s.apply_l(x);
        for (int i = 0; i < s.codim(); ++i) e[s.d() + i] = lx[i];
        SVec rem(s.k());
        for (int i = 0; i < s.k(); ++i) rem[i] = Surd((long)n[i]) - e[i];
        // the remainder lies in F0 = ker(pi1), and e + rem = n exactly
        SVec remimg = s.projector().mul(rem);
        for (int j = 0; j < s.d(); ++j) CHECK(remimg[j].is_zero());
        for (int i = 0; i < s.k(); ++i) CHECK((e[i] + rem[i]) == Surd((long)n[i]));
    }
}

TEST_CASE("accept matches the shifted-window example") {
    SchemeConfig c = fibonacci_config();
    Scheme s = Scheme::build(c);
    CHECK(s.accept(IVec{0, 0}));
    // exactly one n_2 accepted per n_1
    for (long n1 = -20; n1 <= 20; ++n1) {
        int count = 0;
        for (long n2 = -40; n2 <= 40; ++n2)
            if (s.accept(IVec{n1, n2})) ++count;
        CHECK(count == 1);
    }
}

TEST_CASE("exact boundary hit raises SingularShift (surrogate rig)") {
    SchemeConfig c;
    c.k = 2;
    c.d = 1;
    // alpha = 12345/2^20: smallest relation height is 2^20/gcd = beyond H
    c.alpha = {{"12345/1048576"}};
    // shift puts the lift (3,1) exactly on the window boundary
    c.shift = {"0", "3692035/1048576"};  // 3*alpha - 1 + 1 = ... chosen below
    c.window_generators = {{1}};
    c.mode = ScalarMode::surrogate(64, mpq_class(1000000));
    // s2 = 3*alpha - 1  ->  star((3,1)) = 1 + s2 - 3*alpha = 0
    mpq_class alpha(12345, 1048576);
    mpq_class s2 = 3 * alpha - 1;
    c.shift[1] = s2.get_num().get_str() + "/" + s2.get_den().get_str();
    Scheme s = Scheme::build(c);
    CHECK_THROWS_AS(s.accept(IVec{3, 1}), SingularShift);
}

TEST_CASE("surrogate ambiguity surfaces as AmbiguousComparison") {
    SchemeConfig c;
    c.k = 2;
    c.d = 1;
    c.alpha = {{"12345/1048576"}};
    c.window_generators = {{1}};
    c.mode = ScalarMode::surrogate(200, mpq_class(1000000));
    // shift within 2^-200 of the boundary hit above
    mpq_class alpha(12345, 1048576);
    mpq_class s2 = 3 * alpha - 1 + mpq_class(mpz_class(1), mpz_class(1) << 210);
    c.shift = {"0", s2.get_num().get_str() + "/" + s2.get_den().get_str()};
    Scheme s = Scheme::build(c);
    CHECK_THROWS_AS(s.accept(IVec{3, 1}), AmbiguousComparison);
}

TEST_CASE("config JSON round-trips bit-exactly") {
    for (const auto& cfg : {fibonacci_config(), golden_root2_config(), planar_config()}) {
        std::string once = cfg.to_json_text();
        SchemeConfig parsed = SchemeConfig::from_json_text(once);
        CHECK(parsed.to_json_text() == once);
        Scheme a = Scheme::build(cfg);
        Scheme b = Scheme::build(parsed);
        CHECK(a.alpha().a == b.alpha().a);
        CHECK(a.shift() == b.shift());
    }
    SchemeConfig surr = fibonacci_config();
    surr.alpha = {{"12345/1048576"}};
    surr.mode = ScalarMode::surrogate(256, mpq_class(1000000));
    std::string once = surr.to_json_text();
    CHECK(SchemeConfig::from_json_text(once).to_json_text() == once);
}

TEST_CASE("omega presets validate and bound correctly") {
    OmegaSpec cube = OmegaSpec::hypercube(2);
    cube.validate();
    QVec lo, hi;
    cube.bounding_box(lo, hi);
    CHECK(lo == QVec{-1, -1});
    CHECK(hi == QVec{1, 1});
    CHECK(cube.contains(IVec{0, 0}, mpq_class(1)));
    CHECK(!cube.contains(IVec{1, 0}, mpq_class(1)));  // open at the face
    OmegaSpec closed = OmegaSpec::hypercube(2, false);
    CHECK(closed.contains(IVec{1, 0}, mpq_class(1)));

    OmegaSpec t13 = OmegaSpec::theorem13(2);
    t13.validate();
    CHECK(t13.contains(IVec{1, 2}, mpq_class(10)));   // 2 + 2*1 <= 10
    CHECK(!t13.contains(IVec{0, 2}, mpq_class(10)));  // x_1 > 0 fails
    CHECK(!t13.contains(IVec{4, 3}, mpq_class(10)));  // 3 + 8 > 10
    t13.bounding_box(lo, hi);
    CHECK(lo == QVec{0, 0});
    CHECK(hi == (QVec{mpq_class(1, 2), 1}));

    OmegaSpec unbounded;
    unbounded.dim = 1;
    unbounded.halfspaces = {{{mpq_class(1)}, mpq_class(1), false}};
    CHECK_THROWS_AS(unbounded.validate(), ConfigError);
}
