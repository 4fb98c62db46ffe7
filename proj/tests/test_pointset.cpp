#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "quasigap/pointset.hpp"
#include "testutil.hpp"

using namespace quasigap;
using namespace quasigap::testutil;

namespace {

// Independent oracle: raw double scan over a generous lattice box.
std::set<IVec> brute_force_points(const Scheme& s, const mpq_class& radius, long box) {
    std::set<IVec> out;
    IVec n(s.k());
    std::function<void(int)> rec = [&](int i) {
        if (i == s.k()) {
            if (!s.accept(n)) return;
            SVec phys = s.physical(n);
            Surd norm;
            for (const auto& c : phys) {
                Surd a = c.abs();
                if (Surd::compare(a, norm) == Ordering::greater) norm = a;
            }
            if (Surd::compare(norm, Surd(radius)) != Ordering::greater) out.insert(n);
            return;
        }
        for (long v = -box; v <= box; ++v) {
            n[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace

TEST_CASE("lifts return exactly I lexicographically sorted values") {
    Scheme fib = Scheme::build(fibonacci_config());
    CHECK(lifts(fib, IVec{0}).size() == 1);
    Scheme coupled = Scheme::build(coupled_window_config());
    for (long n1 = -15; n1 <= 15; ++n1) {
        auto ls = lifts(coupled, IVec{n1});
        CHECK(ls.size() == 2);
        CHECK(std::is_sorted(ls.begin(), ls.end()));
    }
    Scheme planar = Scheme::build(planar_config());
    for (long a = -6; a <= 6; ++a)
        for (long b = -6; b <= 6; ++b) CHECK(lifts(planar, IVec{a, b}).size() == 2);
}

TEST_CASE("generate is complete against brute force") {
    for (const auto& cfg : {fibonacci_config(), golden_root2_config()}) {
        Scheme s = Scheme::build(cfg);
        auto pts = generate(s, 10);
        auto expect = brute_force_points(s, 10, 14);
        CHECK(pts.size() == expect.size());
        for (const auto& p : pts) {
            CHECK(expect.count(p.n) == 1);
            CHECK(s.accept(p.n));
        }
    }
}

TEST_CASE("generate(R) is a prefix of generate(R')") {
    Scheme s = Scheme::build(fibonacci_config());
    auto small = generate(s, 8);
    auto large = generate(s, 16);
    REQUIRE(small.size() <= large.size());
    for (size_t i = 0; i < small.size(); ++i) CHECK(small[i].n == large[i].n);
}

TEST_CASE("parallel generate equals the serial reference") {
    for (const auto& cfg : {fibonacci_config(), golden_root2_config(), planar_config()}) {
        Scheme s = Scheme::build(cfg);
        auto par = generate(s, 12);
        auto ser = generate_serial(s, 12);
        REQUIRE(par.size() == ser.size());
        for (size_t i = 0; i < par.size(); ++i) {
            CHECK(par[i].n == ser[i].n);
            CHECK(par[i].physical == ser[i].physical);
            CHECK(par[i].internal == ser[i].internal);
        }
    }
}

TEST_CASE("internal coordinates live in the half-open window") {
    Scheme s = Scheme::build(coupled_window_config());
    for (const auto& p : generate(s, 6)) {
        for (const auto& c : p.internal) {
            CHECK(c.sign() >= 0);
            CHECK(Surd::compare(c, Surd(1L)) == Ordering::less);
        }
    }
}

TEST_CASE("Fibonacci nearest-neighbor gaps take exactly two values") {
    Scheme s = Scheme::build(fibonacci_config());
    auto pts = generate(s, 40);
    std::vector<Surd> xs;
    for (const auto& p : pts) xs.push_back(p.physical[0]);
    std::sort(xs.begin(), xs.end());
    std::set<Surd> gaps;
    for (size_t i = 0; i + 1 < xs.size(); ++i) gaps.insert(xs[i + 1] - xs[i]);
    CHECK(gaps.size() == 2);
    // the two tile lengths differ by a factor of the golden ratio
    Surd ratio = *gaps.rbegin() / *gaps.begin();
    CHECK(ratio == Surd::quad(1, 1, 2, 5));
}

TEST_CASE("counts roughly double when the radius doubles (d=1)") {
    Scheme s = Scheme::build(fibonacci_config());
    double a = (double)generate(s, 50).size();
    double b = (double)generate(s, 100).size();
    CHECK(b / a > 1.8);
    CHECK(b / a < 2.2);
}

TEST_CASE("degenerate ball radius zero") {
    Scheme s = Scheme::build(fibonacci_config());
    auto pts = generate(s, 0);
    // at most I points can share the physical origin
    CHECK(pts.size() <= 1);
}

TEST_CASE("points CSV has the fixed header and one row per point") {
    Scheme s = Scheme::build(fibonacci_config());
    auto pts = generate(s, 5);
    std::string csv = points_csv(s, pts, 6);
    CHECK(csv.rfind("n_1,n_2,physical_1,internal_1\n", 0) == 0);
    size_t rows = std::count(csv.begin(), csv.end(), '\n');
    CHECK(rows == pts.size() + 1);
}
