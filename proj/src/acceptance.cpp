#include "quasigap/acceptance.hpp"

#include <mpfr.h>
#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "quasigap/diophantine.hpp"
#include "quasigap/patches.hpp"
#include "quasigap/pointset.hpp"
#include "quasigap/steinhaus.hpp"
#include "quasigap/windowpartition.hpp"

namespace quasigap {

namespace {

struct CriterionResult {
    bool pass = false;
    std::string detail;
};

// --- shared fixtures ------------------------------------------------------

SchemeConfig fibonacci_config(const std::string& shift2 = "1/3") {
    SchemeConfig c;
    c.k = 2;
    c.d = 1;
    c.alpha = {{"(-1+1*sqrt(5))/2"}};
    c.shift = {"0", shift2};
    c.window_generators = {{1}};
    return c;
}

SchemeConfig golden_root2_config() {
    SchemeConfig c;
    c.k = 3;
    c.d = 1;
    c.alpha = {{"(-1+1*sqrt(5))/2"}, {"(-1+1*sqrt(2))/1"}};
    c.shift = {"0", "1/3", "1/5"};
    c.window_generators = {{1, 0}, {0, 1}};
    return c;
}

SchemeConfig planar_config() {
    SchemeConfig c;
    c.k = 3;
    c.d = 2;
    c.alpha = {{"(-1+1*sqrt(5))/2", "(-1+1*sqrt(2))/1"}};
    c.shift = {"0", "0", "1/3"};
    c.window_generators = {{2}};
    return c;
}

const std::vector<unsigned long> kRadicands{2, 3, 5, 6, 7, 10, 11, 13, 14, 15};

Surd random_irrational(std::mt19937_64& rng) {
    std::uniform_int_distribution<size_t> pick(0, kRadicands.size() - 1);
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> b(1, 12);
    std::uniform_int_distribution<long> den(1, 12);
    return Surd::quad(num(rng), b(rng), den(rng), kRadicands[pick(rng)]).frac();
}

// 256-bit dyadic surrogate of 2cos(2pi/7) and its square, reduced mod 1.
void cubic_surrogates(mpq_class& theta_frac, mpq_class& theta2_frac) {
    mpfr_t pi, t, t2;
    mpfr_inits2(360, pi, t, t2, (mpfr_ptr) nullptr);
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_mul_ui(t, pi, 2, MPFR_RNDN);
    mpfr_div_ui(t, t, 7, MPFR_RNDN);
    mpfr_cos(t, t, MPFR_RNDN);
    mpfr_mul_ui(t, t, 2, MPFR_RNDN);  // theta = 2cos(2pi/7) in (1, 2)
    mpfr_sqr(t2, t, MPFR_RNDN);       // theta^2 in (1, 2)
    auto to_dyadic = [](mpfr_t v) {
        mpfr_sub_ui(v, v, 1, MPFR_RNDN);  // fractional part
        mpfr_mul_2ui(v, v, 256, MPFR_RNDN);
        mpz_class scaled;
        mpfr_get_z(scaled.get_mpz_t(), v, MPFR_RNDN);
        mpq_class out(scaled, mpz_class(1) << 256);
        out.canonicalize();
        return out;
    };
    theta_frac = to_dyadic(t);
    theta2_frac = to_dyadic(t2);
    mpfr_clears(pi, t, t2, (mpfr_ptr) nullptr);
}

SchemeConfig cubic_surrogate_config() {
    mpq_class a1, a2;
    cubic_surrogates(a1, a2);
    SchemeConfig c;
    c.k = 3;
    c.d = 2;
    c.alpha = {{a1.get_str(), a2.get_str()}};
    c.shift = {"0", "0", "1/3"};
    c.window_generators = {{1}};
    c.mode = ScalarMode::surrogate(256, mpq_class(1000000));
    return c;
}

// Distinct type-2 frequencies for a codimension-1 window: cell lengths of
// the offset circle, deduplicated under the surrogate guard.
long distinct_type2_frequencies_cod1(const Scheme& scheme, const mpq_class& r,
                                     const OmegaSpec& omega) {
    auto ws = walls(scheme, r, PatchType::type2, omega);
    std::vector<Surd> offsets;
    offsets.reserve(ws.size() + 1);
    for (const auto& w : ws) offsets.push_back(w.offset);
    std::sort(offsets.begin(), offsets.end());
    offsets.push_back(Surd(1L));
    std::vector<Surd> lengths;
    for (size_t i = 0; i + 1 < offsets.size(); ++i)
        lengths.push_back(offsets[i + 1] - offsets[i]);
    std::sort(lengths.begin(), lengths.end());
    long distinct = 0;
    for (size_t i = 0; i < lengths.size(); ++i) {
        if (i == 0 ||
            guarded_cmp(lengths[i], lengths[i - 1], scheme.mode()) != Ordering::equal)
            ++distinct;
    }
    return distinct;
}

// --- criteria -------------------------------------------------------------

CriterionResult criterion1() {
    const int n_alphas = 500;
    const long n_max = 5000;
    std::mt19937_64 seed_rng(0xC1);
    std::vector<Surd> alphas;
    while ((int)alphas.size() < n_alphas) {
        Surd a = random_irrational(seed_rng);
        if (!a.is_rational() && !a.is_zero()) alphas.push_back(a);
    }
    std::vector<std::string> failures((size_t)n_alphas);
#pragma omp parallel for schedule(dynamic)
    for (int ai = 0; ai < n_alphas; ++ai) {
        const Surd& alpha = alphas[(size_t)ai];
        std::set<Surd> pts;
        std::map<Surd, long> gaps;
        Surd cur;
        for (long n = 1; n <= n_max; ++n) {
            cur = (cur + alpha).frac();
            size_t before = pts.size();
            auto [it, fresh] = pts.insert(cur);
            if (!fresh) {
                failures[(size_t)ai] = "orbit point repeated (rational alpha?)";
                break;
            }
            if (before == 0) {
                gaps[Surd(1L)] = 1;
                continue;
            }
            auto succ = std::next(it) == pts.end() ? pts.begin() : std::next(it);
            auto pred = it == pts.begin() ? std::prev(pts.end()) : std::prev(it);
            Surd old = (before == 1) ? Surd(1L) : (*succ - *pred).frac();
            auto oit = gaps.find(old);
            if (oit == gaps.end()) {
                failures[(size_t)ai] = "gap bookkeeping lost an interval";
                break;
            }
            if (--oit->second == 0) gaps.erase(oit);
            ++gaps[(*it - *pred).frac()];
            ++gaps[(*succ - *it).frac()];
            if (gaps.size() > 3) {
                failures[(size_t)ai] = "more than 3 distinct gaps at N=" + std::to_string(n);
                break;
            }
            if (gaps.size() == 3) {
                auto g = gaps.begin();
                Surd lo = g->first;
                Surd mid = std::next(g)->first;
                Surd hi = std::next(g, 2)->first;
                if (hi != lo + mid) {
                    failures[(size_t)ai] =
                        "largest gap is not the sum of the other two at N=" + std::to_string(n);
                    break;
                }
            }
        }
    }
    for (int ai = 0; ai < n_alphas; ++ai) {
        if (!failures[(size_t)ai].empty()) {
            return {false, "alpha #" + std::to_string(ai) + ": " + failures[(size_t)ai]};
        }
    }
    return {true, std::to_string(n_alphas) + " quadratic alphas, all N <= " +
                      std::to_string(n_max) + ", gap count <= 3 with exact sum identity"};
}

CriterionResult criterion2() {
    std::ostringstream detail;
    for (const auto& cfg : {fibonacci_config(), golden_root2_config()}) {
        Scheme s = Scheme::build(cfg);
        OmegaSpec omega = OmegaSpec::hypercube(s.d(), false);
        for (long r = 1; r <= 20; ++r) {
            auto part = components_of(walls(s, r, PatchType::type2, omega), s.codim());
            AnalyticSpectrum spec;
            try {
                spec = analytic_spectrum(s, r, PatchType::type2, omega, part);
            } catch (const Error& e) {
                return {false, "r=" + std::to_string(r) + ": " + e.what()};
            }
            if (spec.class_count() != (long)part.components.size())
                return {false, "class/component count mismatch at r=" + std::to_string(r)};
            // every class frequency is exactly one component volume
            std::multiset<std::string> vols, freqs;
            for (const auto& comp : part.components) vols.insert(comp.volume.to_literal());
            for (const auto& [cls, f] : spec.attribution) freqs.insert(f.to_literal());
            if (vols != freqs)
                return {false, "class frequencies differ from component volumes at r=" +
                                   std::to_string(r)};
        }
        detail << (detail.tellp() > 0 ? "; " : "") << "k=" << s.k() << " scheme: r=1..20 ok";
    }
    return {true, detail.str()};
}

CriterionResult criterion3() {
    const mpq_class big_r(10000);
    const mpq_class tol(1, 50);
    std::ostringstream detail;
    for (const auto& cfg : {fibonacci_config(), golden_root2_config()}) {
        Scheme s = Scheme::build(cfg);
        OmegaSpec omega = OmegaSpec::hypercube(s.d(), false);
        for (long r : {1L, 2L, 5L, 10L}) {
            auto analytic = analytic_spectrum(s, r, PatchType::type2, omega);
            auto empirical = empirical_spectrum(s, r, big_r, PatchType::type2, omega);
            std::set<PatchClass> all;
            for (const auto& [cls, f] : analytic.attribution) all.insert(cls);
            for (const auto& [cls, n] : empirical.counts) all.insert(cls);
            for (const auto& cls : all) {
                Surd af;
                auto it = analytic.attribution.find(cls);
                if (it != analytic.attribution.end()) af = it->second;
                Surd err = (Surd(empirical.frequency(cls)) - af).abs();
                if (Surd::compare(err, Surd(tol)) == Ordering::greater)
                    return {false, "k=" + std::to_string(s.k()) + " r=" + std::to_string(r) +
                                       ": classwise error " + err.to_decimal(6) + " > 0.02"};
            }
        }
        detail << (detail.tellp() > 0 ? "; " : "") << "k=" << s.k()
               << ": r in {1,2,5,10} within 0.02 at R=10^4";
    }
    return {true, detail.str()};
}

CriterionResult criterion4() {
    int centers_checked = 0;
    for (const auto& cfg : {fibonacci_config(), golden_root2_config(), planar_config()}) {
        Scheme s = Scheme::build(cfg);
        OmegaSpec omega = OmegaSpec::hypercube(s.d(), false);
        mpq_class c2 = sandwich_c2(s, omega);
        auto pts = generate(s, s.d() == 1 ? mpq_class(70) : mpq_class(10));
        if (pts.size() < 100) return {false, "not enough centers sampled"};
        size_t stride = pts.size() / 100;
        int used = 0;
        for (size_t i = 0; i < pts.size() && used < 100; i += stride, ++used) {
            for (long r : {5L, 10L}) {
                PatchClass inner = patch(s, pts[i], mpq_class(r) - c2, PatchType::type2, omega);
                PatchClass mid = patch(s, pts[i], r, PatchType::type1, omega);
                PatchClass outer = patch(s, pts[i], mpq_class(r) + c2, PatchType::type2, omega);
                if (!std::includes(mid.displacements.begin(), mid.displacements.end(),
                                   inner.displacements.begin(), inner.displacements.end()))
                    return {false, "P2(r-c2) not inside P1(r)"};
                if (!std::includes(outer.displacements.begin(), outer.displacements.end(),
                                   mid.displacements.begin(), mid.displacements.end()))
                    return {false, "P1(r) not inside P2(r+c2)"};
            }
            ++centers_checked;
        }
    }
    return {true, std::to_string(centers_checked) +
                      " centers x r in {5,10} x 3 schemes, all inclusions exact"};
}

CriterionResult criterion5() {
    Scheme s = Scheme::build(cubic_surrogate_config());
    OmegaSpec omega = OmegaSpec::hypercube(2);
    std::vector<long> counts(201, 0);
    // The offset sets are nested in r (the open hypercube r*Omega' gains the
    // shell |n| = r-1 when the radius reaches r), so one incremental sweep
    // with circle-gap bookkeeping covers the whole grid.
    std::set<Surd> offsets;
    std::map<Surd, long> gaps;
    auto insert_offset = [&](const Surd& x) {
        size_t before = offsets.size();
        auto [it, fresh] = offsets.insert(x);
        if (!fresh) return;
        if (before == 0) {
            gaps[Surd(1L)] = 1;
            return;
        }
        auto succ = std::next(it) == offsets.end() ? offsets.begin() : std::next(it);
        auto pred = it == offsets.begin() ? std::prev(offsets.end()) : std::prev(it);
        Surd old = (before == 1) ? Surd(1L) : (*succ - *pred).frac();
        auto oit = gaps.find(old);
        if (oit == gaps.end()) throw Error("offset gap bookkeeping lost an interval");
        if (--oit->second == 0) gaps.erase(oit);
        ++gaps[(*it - *pred).frac()];
        ++gaps[(*succ - *it).frac()];
    };
    for (long r = 1; r <= 200; ++r) {
        long shell = r - 1;
        IVec n(2);
        auto add = [&]() {
            Surd l;
            for (int j = 0; j < 2; ++j) l += s.lprime().at(0, j) * Surd((long)n[j]);
            insert_offset(l.frac());
        };
        if (shell == 0) {
            n = {0, 0};
            add();
        } else {
            for (long a = -shell; a <= shell; ++a) {
                for (long b : {-shell, shell}) {
                    n = {a, b};
                    add();
                    n = {b, a};
                    if (a != -shell && a != shell) add();
                }
            }
        }
        // distinct gap lengths under the surrogate ambiguity guard
        long distinct = 0;
        const Surd* prev = nullptr;
        for (const auto& [g, count] : gaps) {
            if (!prev || guarded_cmp(g, *prev, s.mode()) != Ordering::equal) ++distinct;
            prev = &g;
        }
        counts[(size_t)r] = distinct;
    }
    // dual-route integrity at small radii: the lean gap path must agree with
    // the full partition machinery
    for (long r : {3L, 7L, 12L}) {
        auto part = components_of(walls(s, r, PatchType::type2, omega), 1);
        std::set<Surd> distinct;
        for (const auto& comp : part.components) distinct.insert(comp.volume);
        if ((long)distinct.size() != counts[(size_t)r])
            return {false, "gap path disagrees with partition path at r=" + std::to_string(r)};
    }
    long max_low = 0, max_high = 0;
    for (long r = 1; r <= 100; ++r) max_low = std::max(max_low, counts[(size_t)r]);
    for (long r = 101; r <= 200; ++r) max_high = std::max(max_high, counts[(size_t)r]);
    std::string detail = "max #xi_2 over (0,100] = " + std::to_string(max_low) +
                         ", over (100,200] = " + std::to_string(max_high);
    return {max_low == max_high, detail};
}

CriterionResult criterion6() {
    struct Case {
        long q, p;
    };
    std::vector<Case> cases{{13, 5}, {21, 8}, {34, 13}};
    // one fixed constant, calibrated on warm-up scans across all q
    mpq_class c;
    bool have_c = false;
    std::vector<Thm13Params> params;
    for (const auto& cs : cases) {
        Thm13Params p;
        p.d = 2;
        p.epsilon = 1;
        p.q = cs.q;
        p.p = cs.p;
        p.alpha1 = Surd::quad(-1, 1, 2, 5);
        mpz_class q5;
        mpz_pow_ui(q5.get_mpz_t(), mpz_class(cs.q).get_mpz_t(), 5);
        p.gamma = p.alpha1 / Surd(q5);
        params.push_back(p);
        std::vector<long> warmups{(long)std::ceil(std::pow((double)cs.q, 1.25)),
                                  (long)std::ceil(std::pow((double)cs.q, 1.4)),
                                  (long)std::ceil(std::pow((double)cs.q, 1.5))};
        mpq_class cq = thm13_calibrate_c(p, warmups);
        if (!have_c || cq < c) {
            c = cq;
            have_c = true;
        }
    }
    std::ostringstream detail;
    detail << "c = " << c.get_str();
    for (const auto& p : params) {
        auto alpha = thm13_alpha(p);
        mpq_class lo, hi;
        thm13_rstar(p, c, lo, hi);
        mpz_class fl, fh;
        mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
        mpz_fdiv_q(fh.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
        if (fl != fh) return {false, "r* enclosure straddles an integer"};
        SVec l1{alpha[0], alpha[1]};
        long count = consecutive_gap_count(l1, lo, OmegaSpec::theorem13(2));
        // count >= r*/q, conservatively via the upper end of the enclosure
        if (mpq_class(count) * mpq_class(p.q) < hi)
            return {false, "q=" + std::to_string(p.q) + ": " + std::to_string(count) +
                               " distinct gaps < r*/q"};
        detail << "; q=" << p.q << ": " << count << " gaps >= r*/q ~ "
               << mpq_class(hi / p.q).get_d();
    }
    return {true, detail.str()};
}

CriterionResult criterion7() {
    std::mt19937_64 rng(0xC7);
    std::vector<LinearFormSystem> systems;
    for (int i = 0; i < 100; ++i) {
        LinearFormSystem l;
        l.d = 1 + (int)(rng() % 2);
        l.k = l.d + 1 + (int)(rng() % 2);
        l.rows = SMat(l.k - l.d, l.d);
        for (int a = 0; a < l.codim(); ++a)
            for (int b = 0; b < l.d; ++b) l.rows.at(a, b) = random_irrational(rng);
        systems.push_back(std::move(l));
    }
    std::vector<std::string> failures(systems.size());
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < systems.size(); ++i) {
        const LinearFormSystem& l = systems[i];
        for (long n_bound : {10L, 100L, 1000L}) {
            try {
                IVec n = dirichlet_witness(l, n_bound);
                long sup = 0;
                for (long v : n) sup = std::max(sup, std::abs(v));
                Surd lhs = l.dist_to_lattice(n).pow((unsigned)l.codim()) *
                           Surd(mpz_class(n_bound)).pow((unsigned)l.d);
                if (sup <= 0 || sup >= n_bound ||
                    Surd::compare(lhs, Surd(1L)) == Ordering::greater) {
                    failures[i] = "invalid witness at N=" + std::to_string(n_bound);
                    break;
                }
            } catch (const std::exception& e) {
                failures[i] = e.what();
                break;
            }
        }
    }
    for (size_t i = 0; i < systems.size(); ++i)
        if (!failures[i].empty())
            return {false, "system #" + std::to_string(i) + ": " + failures[i]};
    return {true, "100 random systems x N in {10,100,1000}, witness always found"};
}

CriterionResult criterion8() {
    long partitions = 0;
    for (const auto& cfg : {fibonacci_config(), golden_root2_config(), planar_config()}) {
        Scheme s = Scheme::build(cfg);
        OmegaSpec omega = OmegaSpec::hypercube(s.d(), false);
        long rmax = s.d() == 1 ? 12 : 8;
        for (long r = 1; r <= rmax; ++r) {
            for (PatchType t : {PatchType::type2, PatchType::type1}) {
                if (t == PatchType::type1 && r > 6) continue;
                auto part = components_of(walls(s, r, t, omega), s.codim());
                if (!(part.total_volume() == Surd(1L)))
                    return {false, "component volumes do not sum to 1 exactly"};
                auto spec = analytic_spectrum(s, r, t, omega, part);
                Surd fsum;
                for (const auto& [cls, f] : spec.attribution) fsum += f;
                if (!(fsum == Surd(1L)))
                    return {false, "class frequencies do not sum to 1 exactly"};
                ++partitions;
            }
        }
    }
    return {true, std::to_string(partitions) +
                      " (scheme, r, type) partitions, volumes and frequencies sum to 1 exactly"};
}

CriterionResult criterion9() {
    Scheme a = Scheme::build(fibonacci_config("1/3"));
    Scheme b = Scheme::build(fibonacci_config("2/7"));
    OmegaSpec omega = OmegaSpec::hypercube(1, false);
    for (long r = 1; r <= 10; ++r) {
        auto sa = analytic_spectrum(a, r, PatchType::type2, omega);
        auto sb = analytic_spectrum(b, r, PatchType::type2, omega);
        if (!(sa.attribution == sb.attribution))
            return {false, "analytic spectra differ between shifts at r=" + std::to_string(r)};
    }
    auto ea = empirical_spectrum(a, 2, 10000, PatchType::type2, omega);
    auto eb = empirical_spectrum(b, 2, 10000, PatchType::type2, omega);
    std::set<PatchClass> all;
    for (const auto& [cls, n] : ea.counts) all.insert(cls);
    for (const auto& [cls, n] : eb.counts) all.insert(cls);
    for (const auto& cls : all) {
        mpq_class diff = ea.frequency(cls) - eb.frequency(cls);
        if (abs(diff) > mpq_class(1, 50))
            return {false, "empirical spectra differ by more than 0.02 between shifts"};
    }
    return {true, "analytic spectra identical for shifts 1/3 and 2/7 (r=1..10); empirical "
                  "within 0.02 at R=10^4"};
}

// Regression pin: shapes of Gamma_N for alpha = (-1+sqrt(5))/2, N = 1..50.
// 'c' = circle (degenerate N=1 only), 'w' = wedge, 't' = theta.
const char kGoldenShapes[] = "cwtwttwttttwtttttttwttttttttttttwttttttttttttttttt";

CriterionResult criterion10() {
    std::mt19937_64 rng(0xC10);
    for (int trial = 0; trial < 200; ++trial) {
        Surd alpha = random_irrational(rng);
        if (alpha.is_rational()) continue;
        long n = 2 + (long)(rng() % 299);
        GammaComplex g = gamma(alpha, n);
        size_t out2 = 0, in2 = 0;
        for (size_t j = 0; j < g.vertex_count; ++j) {
            if (g.out_degree[j] < 1 || g.out_degree[j] > 2 || g.in_degree[j] < 1 ||
                g.in_degree[j] > 2)
                return {false, "degree outside {1,2} at N=" + std::to_string(n)};
            out2 += g.out_degree[j] == 2;
            in2 += g.in_degree[j] == 2;
        }
        if (out2 != 1 || in2 != 1)
            return {false, "branch/merge multiplicity wrong at N=" + std::to_string(n)};
        if (classify(g) == GammaShape::circle)
            return {false, "irrational alpha classified as circle at N=" + std::to_string(n)};
    }
    std::uniform_int_distribution<long> qd(2, 30);
    for (int trial = 0; trial < 20; ++trial) {
        long q = qd(rng);
        long p = 1 + (long)(rng() % (q - 1));
        long g = mpz_class(gcd(mpz_class(p), mpz_class(q))).get_si();
        p /= g;
        q /= g;
        if (q == 1) continue;
        GammaComplex gc = gamma(Surd(mpq_class(p, q)), q + (long)(rng() % 20), true);
        if (classify(gc) != GammaShape::circle)
            return {false, "rational rig did not classify as circle"};
    }
    Surd golden = Surd::quad(-1, 1, 2, 5);
    std::string shapes;
    for (long n = 1; n <= 50; ++n) {
        GammaShape s = classify(gamma(golden, n));
        shapes += (s == GammaShape::circle ? 'c' : (s == GammaShape::wedge ? 'w' : 't'));
    }
    if (shapes != kGoldenShapes)
        return {false, "golden-ratio shape sequence drifted: " + shapes};
    return {true, "200 random (alpha,N) degree-invariant; rational rigs circle; golden shape "
                  "sequence N=1..50 pinned"};
}

}  // namespace

bool run_acceptance(const AcceptanceOptions& options, std::ostream& os) {
    using Runner = CriterionResult (*)();
    struct Entry {
        int id;
        const char* title;
        Runner run;
    };
    const std::vector<Entry> entries{
        {1, "three-distance law, 500 random alphas, N <= 5000", &criterion1},
        {2, "type-2 class/component bijection with exact volumes, r = 1..20", &criterion2},
        {3, "empirical vs analytic frequencies within 0.02 at R = 10^4", &criterion3},
        {4, "sandwich inclusions with c2 at sampled centers", &criterion4},
        {5, "bounded #xi_2 for the cubic surrogate, r in (0,200]", &criterion5},
        {6, "thm13 gap growth: count >= r*/q for q in {13,21,34}", &criterion6},
        {7, "Dirichlet witnesses for 100 random systems", &criterion7},
        {8, "partition conservation: volumes and frequencies sum to 1", &criterion8},
        {9, "shift invariance of the spectra", &criterion9},
        {10, "Gamma_N degree structure and shape regression", &criterion10},
    };
    bool all_pass = true;
    for (const auto& e : entries) {
        if (!options.only.empty() &&
            std::find(options.only.begin(), options.only.end(), e.id) == options.only.end())
            continue;
        auto t0 = std::chrono::steady_clock::now();
        CriterionResult r;
        try {
            r = e.run();
        } catch (const std::exception& ex) {
            r = {false, std::string("exception: ") + ex.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        os << (r.pass ? "[PASS]" : "[FAIL]") << " C" << e.id << ": " << e.title << " -- "
           << r.detail << " (" << (long)(secs * 10) / 10.0 << " s)\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass;
}

}  // namespace quasigap
