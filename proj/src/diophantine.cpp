#include "quasigap/diophantine.hpp"

#include <mpfr.h>
#include <omp.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace quasigap {

namespace {

mpz_class mpz_pow(const mpz_class& base, unsigned long e) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

mpq_class mpq_pow(const mpq_class& base, unsigned long e) {
    mpq_class out(mpz_pow(base.get_num(), e), mpz_pow(base.get_den(), e));
    out.canonicalize();
    return out;
}

// Calls body(n) for every n in Z^d with |n|_sup = s, in lexicographic order
// of enumeration coordinates; each point visited once.
template <typename Body>
void scan_shell(int d, long s, Body&& body) {
    IVec n(d);
    // face coordinate f carries |n_f| = s; coordinates before f stay strictly
    // inside to avoid revisiting corners
    for (int f = 0; f < d; ++f) {
        for (int sigma = -1; sigma <= 1; sigma += 2) {
            n[f] = sigma * s;
            std::function<void(int)> rec = [&](int j) {
                if (j == d) {
                    body(n);
                    return;
                }
                if (j == f) {
                    rec(j + 1);
                    return;
                }
                long lim = (j < f) ? s - 1 : s;
                for (long v = -lim; v <= lim; ++v) {
                    n[j] = v;
                    rec(j + 1);
                }
            };
            rec(0);
        }
    }
}

IVec sign_canonical(const IVec& n) {
    for (long v : n) {
        if (v > 0) return n;
        if (v < 0) {
            IVec out(n);
            for (auto& x : out) x = -x;
            return out;
        }
    }
    return n;
}

// |n|^d * ||L(n)||^(k-d) as an exact surd; the comparison proxy for the
// fractional-power quantity |n|^(d/(k-d)) ||L(n)||.
Surd badness_proxy(const LinearFormSystem& l, long s, const Surd& dist) {
    return dist.pow((unsigned)l.codim()) * Surd(mpz_pow(mpz_class(s), (unsigned long)l.d));
}

struct PsiBounds {
    mpq_class lo, hi;  // enclosure of psi(s)
};

// Directed enclosure of (log s)^(-1-eps); s = 1 clamps to s = 2.
PsiBounds psi_logpower_bounds(long s, const mpq_class& eps, long prec) {
    if (s < 2) s = 2;
    mpfr_t t_lo, t_hi, e_lo, e_hi, r, best_lo, best_hi;
    mpfr_inits2(prec, t_lo, t_hi, e_lo, e_hi, r, best_lo, best_hi, (mpfr_ptr) nullptr);
    mpfr_set_si(t_lo, s, MPFR_RNDD);
    mpfr_log(t_lo, t_lo, MPFR_RNDD);
    mpfr_set_si(t_hi, s, MPFR_RNDU);
    mpfr_log(t_hi, t_hi, MPFR_RNDU);
    mpq_class exponent = mpq_class(-1) - eps;
    mpfr_set_q(e_lo, exponent.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(e_hi, exponent.get_mpq_t(), MPFR_RNDU);
    bool first = true;
    for (mpfr_ptr t : {(mpfr_ptr)t_lo, (mpfr_ptr)t_hi}) {
        for (mpfr_ptr e : {(mpfr_ptr)e_lo, (mpfr_ptr)e_hi}) {
            for (mpfr_rnd_t rnd : {MPFR_RNDD, MPFR_RNDU}) {
                mpfr_pow(r, t, e, rnd);
                if (first || mpfr_cmp(r, best_lo) < 0) mpfr_set(best_lo, r, MPFR_RNDD);
                if (first || mpfr_cmp(r, best_hi) > 0) mpfr_set(best_hi, r, MPFR_RNDU);
                first = false;
            }
        }
    }
    PsiBounds out;
    mpf_class lo(0, prec), hi(0, prec);
    mpfr_get_f(lo.get_mpf_t(), best_lo, MPFR_RNDD);
    mpfr_get_f(hi.get_mpf_t(), best_hi, MPFR_RNDU);
    out.lo = mpq_class(lo);
    out.hi = mpq_class(hi);
    mpfr_clears(t_lo, t_hi, e_lo, e_hi, r, best_lo, best_hi, (mpfr_ptr) nullptr);
    return out;
}

// dist >= bound, decided rigorously: bound given as an enclosure.
// Returns {-1 violated, +1 satisfied, 0 undecided at this precision}.
int compare_dist_to_bound(const Surd& dist, const mpq_class& bound_lo, const mpq_class& bound_hi,
                          long prec) {
    mpq_class d_lo, d_hi;
    dist.interval(prec, d_lo, d_hi);
    if (d_lo >= bound_hi) return 1;
    if (d_hi < bound_lo) return -1;
    return 0;
}

}  // namespace

Surd LinearFormSystem::dist_to_lattice(const IVec& n) const {
    Surd best;
    for (int i = 0; i < codim(); ++i) {
        Surd v;
        for (int j = 0; j < d; ++j) v += rows.at(i, j) * Surd((long)n[j]);
        Surd f = v.frac();
        Surd dist = f;
        Surd other = Surd(1L) - f;
        if (Surd::compare(other, dist) == Ordering::less) dist = other;
        if (Surd::compare(dist, best) == Ordering::greater) best = dist;
    }
    return best;
}

ContinuedFraction cf(const Surd& x, int depth) {
    if (depth < 1) throw ConfigError("cf depth must be >= 1");
    ContinuedFraction out;
    std::map<Surd, size_t> seen;
    Surd cur = x;
    for (int i = 0; i < depth; ++i) {
        if (!out.period_start) {
            auto it = seen.find(cur);
            if (it != seen.end()) {
                out.period_start = it->second;
                out.period.assign(out.quotients.begin() + (long)it->second,
                                  out.quotients.end());
                break;
            }
            seen.emplace(cur, (size_t)i);
        }
        mpz_class a = cur.floor();
        out.quotients.push_back(a);
        Surd rem = cur - Surd(a);
        if (rem.is_zero()) {
            out.terminated = true;
            break;
        }
        cur = Surd(1L) / rem;
    }
    return out;
}

IVec dirichlet_witness(const LinearFormSystem& l, long n_bound) {
    if (n_bound < 2) throw ConfigError("dirichlet_witness needs N >= 2");
    // ||L(n)|| <= N^(-d/(k-d))  <=>  ||L(n)||^(k-d) * N^d <= 1
    Surd threshold_pow(mpz_pow(mpz_class(n_bound), (unsigned long)l.d));
    // Double prefilter: candidates clearly above the threshold are skipped;
    // anything within the margin gets the exact test, so no true witness is
    // ever lost and the scan order (hence the winner) is unchanged.
    std::vector<std::vector<double>> coeff((size_t)l.codim(), std::vector<double>(l.d));
    for (int i = 0; i < l.codim(); ++i)
        for (int j = 0; j < l.d; ++j) coeff[(size_t)i][(size_t)j] = l.rows.at(i, j).to_double();
    double tau = std::pow((double)n_bound, -(double)l.d / (double)l.codim()) + 1e-9;
    for (long s = 1; s < n_bound; ++s) {
        IVec found;
        scan_shell(l.d, s, [&](const IVec& n) {
            if (!found.empty()) return;
            double dmax = 0;
            for (int i = 0; i < l.codim(); ++i) {
                double v = 0;
                for (int j = 0; j < l.d; ++j) v += coeff[(size_t)i][(size_t)j] * (double)n[j];
                dmax = std::max(dmax, std::fabs(v - std::nearbyint(v)));
            }
            if (dmax > tau) return;
            Surd t = l.dist_to_lattice(n);
            if (Surd::compare(t.pow((unsigned)l.codim()) * threshold_pow, Surd(1L)) !=
                Ordering::greater) {
                found = sign_canonical(n);
            }
        });
        if (!found.empty()) return found;
    }
    throw Error("no Dirichlet witness below N, which contradicts the pigeonhole bound");
}

namespace {

struct BadApproxBest {
    bool have = false;
    long s = 0;
    Surd dist;
    Surd proxy;
    IVec witness;

    void offer(const LinearFormSystem& l, long shell, const IVec& n, const Surd& dist_n) {
        Surd proxy_n = badness_proxy(l, shell, dist_n);
        if (!have || Surd::compare(proxy_n, proxy) == Ordering::less ||
            (Surd::compare(proxy_n, proxy) == Ordering::equal &&
             sign_canonical(n) < witness)) {
            have = true;
            s = shell;
            dist = dist_n;
            proxy = proxy_n;
            witness = sign_canonical(n);
        }
    }
    void merge(const BadApproxBest& o) {
        if (!o.have) return;
        if (!have || Surd::compare(o.proxy, proxy) == Ordering::less ||
            (Surd::compare(o.proxy, proxy) == Ordering::equal && o.witness < witness)) {
            *this = o;
        }
    }
};

BadApproxReport finish_bad_approx(const LinearFormSystem& l, long height,
                                  const BadApproxBest& best) {
    BadApproxReport rep;
    rep.height = height;
    rep.witness = best.witness;
    rep.witness_dist = best.dist;
    if (l.d % l.codim() == 0) {
        unsigned e = (unsigned)(l.d / l.codim());
        rep.value = best.dist * Surd(mpz_pow(mpz_class(best.s), e));
        rep.exact = true;
    } else {
        // |n|^(d/(k-d)) leaves the field; report a 256-bit rational stand-in
        mpfr_t v;
        mpfr_init2(v, 256);
        mpfr_set_si(v, best.s, MPFR_RNDN);
        mpq_class expo((long)l.d, (long)l.codim());
        expo.canonicalize();
        mpfr_t e;
        mpfr_init2(e, 256);
        mpfr_set_q(e, expo.get_mpq_t(), MPFR_RNDN);
        mpfr_pow(v, v, e, MPFR_RNDN);
        mpf_class f(0, 256);
        mpfr_get_f(f.get_mpf_t(), v, MPFR_RNDN);
        rep.value = Surd(mpq_class(f)) * best.dist;
        rep.exact = false;
        mpfr_clears(v, e, (mpfr_ptr) nullptr);
    }
    return rep;
}

}  // namespace

BadApproxReport bad_approx_constant_serial(const LinearFormSystem& l, long height) {
    if (height < 1) throw ConfigError("bad_approx_constant needs H >= 1");
    BadApproxBest best;
    for (long s = 1; s <= height; ++s) {
        scan_shell(l.d, s, [&](const IVec& n) { best.offer(l, s, n, l.dist_to_lattice(n)); });
    }
    return finish_bad_approx(l, height, best);
}

BadApproxReport bad_approx_constant(const LinearFormSystem& l, long height) {
    if (height < 1) throw ConfigError("bad_approx_constant needs H >= 1");
    int threads = omp_get_max_threads();
    std::vector<BadApproxBest> partial((size_t)threads);
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (long s = 1; s <= height; ++s) {
        try {
            BadApproxBest& mine = partial[(size_t)omp_get_thread_num()];
            scan_shell(l.d, s, [&](const IVec& n) { mine.offer(l, s, n, l.dist_to_lattice(n)); });
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    BadApproxBest best;
    for (const auto& p : partial) best.merge(p);
    return finish_bad_approx(l, height, best);
}

Transference transference(const mpq_class& c, const mpq_class& x, int d, int k) {
    if (sgn(c) <= 0 || sgn(x) <= 0) throw ConfigError("transference needs C, X > 0");
    mpq_class v = mpq_pow(x, (unsigned long)d) * mpq_pow(c, (unsigned long)(k - d));
    mpq_class inv = 1 / v;
    Transference t;
    mpz_fdiv_q(t.h.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
    mpq_class scale = mpq_class(t.h + 1) / 2;
    t.c1 = scale * c;
    t.x1 = scale * x;
    return t;
}

PsiProfile PsiProfile::constant(const mpq_class& c) {
    PsiProfile p;
    p.kind = Kind::constant;
    p.c = c;
    return p;
}

PsiProfile PsiProfile::logpower(const mpq_class& eps) {
    PsiProfile p;
    p.kind = Kind::logpower;
    p.epsilon = eps;
    return p;
}

std::string PsiProfile::describe() const {
    if (kind == Kind::constant) return "constant(" + c.get_str() + ")";
    return "logpower(" + epsilon.get_str() + ")";
}

HypothesisReport check_hypotheses_51_52(const LinearFormSystem& l, const PsiProfile& psi,
                                        long height) {
    if (height < 2) throw ConfigError("hypothesis check needs H >= 2");
    HypothesisReport rep;
    rep.height = height;
    rep.psi = psi.describe();

    auto psi_bounds = [&](long s, long prec) -> PsiBounds {
        if (psi.kind == PsiProfile::Kind::constant) return {psi.c, psi.c};
        return psi_logpower_bounds(s, psi.epsilon, prec);
    };

    // dist >= psi(s)/s^d ?  (first hypothesis)
    auto check51 = [&](const Surd& dist, long s) -> bool {
        mpq_class sd(mpz_pow(mpz_class(s), (unsigned long)l.d));
        if (psi.kind == PsiProfile::Kind::constant) {
            mpq_class bound = psi.c / sd;
            return Surd::compare(dist, Surd(bound)) != Ordering::less;
        }
        for (long prec = 128; prec <= 4096; prec *= 2) {
            PsiBounds b = psi_bounds(s, prec);
            int r = compare_dist_to_bound(dist, b.lo / sd, b.hi / sd, prec);
            if (r != 0) return r > 0;
        }
        throw Error("hypothesis comparison undecided at precision cap");
    };

    // dist >= 3^d/(s^d psi(s)^d) ?  (second hypothesis)
    auto check52 = [&](const Surd& dist, long s) -> bool {
        mpq_class numer(mpz_pow(mpz_class(3), (unsigned long)l.d));
        mpq_class sd(mpz_pow(mpz_class(s), (unsigned long)l.d));
        if (psi.kind == PsiProfile::Kind::constant) {
            mpq_class bound = numer / (sd * mpq_pow(psi.c, (unsigned long)l.d));
            return Surd::compare(dist, Surd(bound)) != Ordering::less;
        }
        for (long prec = 128; prec <= 4096; prec *= 2) {
            PsiBounds b = psi_bounds(s, prec);
            mpq_class lo = numer / (sd * mpq_pow(b.hi, (unsigned long)l.d));
            mpq_class hi = numer / (sd * mpq_pow(b.lo, (unsigned long)l.d));
            int r = compare_dist_to_bound(dist, lo, hi, prec);
            if (r != 0) return r > 0;
        }
        throw Error("hypothesis comparison undecided at precision cap");
    };

    for (long s = 1; s <= height && rep.pass51; ++s) {
        scan_shell(l.d, s, [&](const IVec& n) {
            if (!rep.pass51) return;
            for (int i = 0; i < l.codim(); ++i) {
                Surd v;
                for (int j = 0; j < l.d; ++j) v += l.rows.at(i, j) * Surd((long)n[j]);
                Surd f = v.frac();
                Surd dist = Surd::compare(f, Surd(1L) - f) == Ordering::greater ? Surd(1L) - f : f;
                if (!check51(dist, s)) {
                    rep.pass51 = false;
                    if (!rep.first_violation)
                        rep.first_violation = HypothesisViolation{n, i, -1, "5.1"};
                    return;
                }
            }
        });
    }

    if (l.d >= 2) {
        for (int jp = 0; jp < l.d && rep.pass52; ++jp) {
            for (long s = 1; s <= height && rep.pass52; ++s) {
                scan_shell(l.d - 1, s, [&](const IVec& sub) {
                    if (!rep.pass52) return;
                    IVec n(l.d, 0);
                    int t = 0;
                    for (int j = 0; j < l.d; ++j)
                        if (j != jp) n[j] = sub[t++];
                    for (int i = 0; i < l.codim(); ++i) {
                        Surd v;
                        for (int j = 0; j < l.d; ++j)
                            if (j != jp) v += l.rows.at(i, j) * Surd((long)n[j]);
                        Surd f = v.frac();
                        Surd dist =
                            Surd::compare(f, Surd(1L) - f) == Ordering::greater ? Surd(1L) - f : f;
                        if (!check52(dist, s)) {
                            rep.pass52 = false;
                            if (!rep.first_violation)
                                rep.first_violation = HypothesisViolation{n, i, jp, "5.2"};
                            return;
                        }
                    }
                });
            }
        }
    }
    return rep;
}

std::vector<Surd> thm13_alpha(const Thm13Params& params) {
    if (params.d < 2) throw ConfigError("thm13 construction needs d >= 2");
    if ((int)params.middle.size() != params.d - 2)
        throw ConfigError("thm13 needs exactly d-2 middle entries");
    if (params.p <= 0 || params.q <= 0) throw ConfigError("thm13 needs positive p, q");
    if (gcd(mpz_class(params.p), mpz_class(params.q)) != 1)
        throw ConfigError("thm13 needs p, q coprime");
    if (2 * params.p >= params.q) throw ConfigError("thm13 needs p/q < 1/2");
    if (sgn(params.epsilon) <= 0) throw ConfigError("thm13 needs epsilon > 0");
    if (params.alpha1.is_rational())
        throw ConfigError("thm13 base alpha_1 must be a quadratic irrational");
    if (params.gamma.sign() <= 0)
        throw ConfigError("thm13 analyzed case needs gamma > 0 (gamma = 0 breaks independence)");
    // gamma <= alpha1 / q^(2d+eps), decided exactly through v-th powers
    unsigned long ev = params.epsilon.get_den().get_ui();
    unsigned long eu = mpz_class(params.epsilon.get_num()).get_ui();
    mpz_class qpow = mpz_pow(mpz_class(params.q), 2 * (unsigned long)params.d * ev + eu);
    Surd lhs = params.gamma.pow((unsigned)ev) * Surd(qpow);
    Surd rhs = params.alpha1.pow((unsigned)ev);
    if (Surd::compare(lhs, rhs) == Ordering::greater)
        throw ConfigError("thm13 needs gamma <= alpha1/q^(2d+eps)");

    std::vector<Surd> alpha;
    alpha.push_back(params.alpha1);
    for (const auto& a : params.middle) alpha.push_back(a);
    Surd alpha_d = Surd(mpq_class(params.p, params.q)) * params.alpha1 + params.gamma;
    alpha.push_back(alpha_d);

    std::vector<Surd> with_one;
    with_one.push_back(Surd(1L));
    for (const auto& a : alpha) with_one.push_back(a);
    auto rel = integer_relation(with_one);
    if (rel && rel->supnorm <= params.relation_height) {
        std::ostringstream os;
        os << "relation among {1, alpha} at height " << rel->supnorm.get_str() << ": (";
        for (size_t i = 0; i < rel->vec.size(); ++i) os << (i ? "," : "") << rel->vec[i];
        os << ")";
        throw RelationFound(os.str());
    }
    return alpha;
}

std::vector<Surd> consecutive_gaps(const SVec& l1, const mpq_class& r, const OmegaSpec& omega) {
    if (sgn(r) <= 0) throw ConfigError("gap count needs r > 0");
    int d = (int)l1.size();
    QVec blo, bhi;
    omega.bounding_box(blo, bhi);
    IVec lo(d), hi(d);
    for (int j = 0; j < d; ++j) {
        lo[j] = Surd(r * blo[j]).floor().get_si() - 1;
        hi[j] = Surd(r * bhi[j]).ceil().get_si() + 1;
    }
    std::set<Surd> points;
    IVec cur(lo);
    while (true) {
        if (omega.contains(cur, r)) {
            Surd v;
            for (int j = 0; j < d; ++j) v += l1[j] * Surd((long)cur[j]);
            points.insert(v.frac());
        }
        int i = 0;
        while (i < d && ++cur[i] > hi[i]) {
            cur[i] = lo[i];
            ++i;
        }
        if (i == d) break;
    }
    std::vector<Surd> gaps;
    if (points.empty()) return gaps;
    std::vector<Surd> sorted(points.begin(), points.end());
    if (sorted.size() == 1) {
        gaps.push_back(Surd(1L));
        return gaps;
    }
    for (size_t i = 0; i + 1 < sorted.size(); ++i) gaps.push_back(sorted[i + 1] - sorted[i]);
    gaps.push_back(sorted.front() + Surd(1L) - sorted.back());
    std::sort(gaps.begin(), gaps.end());
    return gaps;
}

long consecutive_gap_count(const SVec& l1, const mpq_class& r, const OmegaSpec& omega) {
    auto gaps = consecutive_gaps(l1, r, omega);
    std::set<Surd> distinct(gaps.begin(), gaps.end());
    return (long)distinct.size();
}

mpq_class thm13_calibrate_c(const Thm13Params& params, const std::vector<long>& warmup_radii) {
    auto alpha = thm13_alpha(params);
    OmegaSpec omega = OmegaSpec::theorem13(params.d);
    Surd alpha1_over_q = params.alpha1 / Surd((long)params.q);
    Surd cmin;
    bool have = false;
    for (long r : warmup_radii) {
        // projected set: m = (n_1 q + n_d p, n_2..n_{d-1}) over n in r*Omega'
        QVec blo, bhi;
        omega.bounding_box(blo, bhi);
        IVec lo(params.d), hi(params.d);
        for (int j = 0; j < params.d; ++j) {
            lo[j] = Surd(mpq_class(r) * blo[j]).floor().get_si() - 1;
            hi[j] = Surd(mpq_class(r) * bhi[j]).ceil().get_si() + 1;
        }
        std::set<Surd> points;
        IVec cur(lo);
        while (true) {
            if (omega.contains(cur, mpq_class(r))) {
                Surd v = alpha1_over_q * Surd((long)(cur[0] * params.q +
                                                     cur[params.d - 1] * params.p));
                for (int j = 1; j + 1 < params.d; ++j) v += alpha[j] * Surd((long)cur[j]);
                points.insert(v.frac());
            }
            int i = 0;
            while (i < params.d && ++cur[i] > hi[i]) {
                cur[i] = lo[i];
                ++i;
            }
            if (i == params.d) break;
        }
        if (points.size() < 2) continue;
        std::vector<Surd> sorted(points.begin(), points.end());
        Surd gap_min = sorted[1] - sorted[0];
        for (size_t i = 1; i + 1 < sorted.size(); ++i) {
            Surd g = sorted[i + 1] - sorted[i];
            if (Surd::compare(g, gap_min) == Ordering::less) gap_min = g;
        }
        Surd wrap = sorted.front() + Surd(1L) - sorted.back();
        if (Surd::compare(wrap, gap_min) == Ordering::less) gap_min = wrap;
        Surd scaled = gap_min * Surd(mpz_pow(mpz_class(r), (unsigned long)(params.d - 1))) *
                      Surd(mpz_pow(mpz_class(params.q), (unsigned long)params.d));
        if (!have || Surd::compare(scaled, cmin) == Ordering::less) {
            cmin = scaled;
            have = true;
        }
    }
    if (!have) throw Error("thm13 calibration produced no gaps");
    // largest power of two <= cmin
    double approx = cmin.to_double();
    int e = (int)std::floor(std::log2(std::max(approx, 1e-300)));
    mpq_class c = (e >= 0) ? mpq_class(mpz_class(1) << e)
                           : mpq_class(mpz_class(1), mpz_class(1) << (-e));
    while (Surd::compare(Surd(c), cmin) == Ordering::greater) c /= 2;
    while (Surd::compare(Surd(c * 2), cmin) != Ordering::greater) c *= 2;
    return c;
}

void thm13_rstar(const Thm13Params& params, const mpq_class& c, mpq_class& lo, mpq_class& hi) {
    // r* = (c/alpha1)^(1/d) q^(1+eps/d) = [ (c/alpha1)^v * q^(dv+u) ]^(1/(dv))
    unsigned long ev = params.epsilon.get_den().get_ui();
    unsigned long eu = mpz_class(params.epsilon.get_num()).get_ui();
    Surd base = (Surd(c) / params.alpha1).pow((unsigned)ev) *
                Surd(mpz_pow(mpz_class(params.q), (unsigned long)params.d * ev + eu));
    unsigned long root = (unsigned long)params.d * ev;
    const long prec = 192;
    mpq_class blo, bhi;
    base.interval(prec, blo, bhi);
    mpfr_t v;
    mpfr_init2(v, prec);
    mpf_class out(0, prec);
    mpfr_set_q(v, blo.get_mpq_t(), MPFR_RNDD);
    mpfr_rootn_ui(v, v, root, MPFR_RNDD);
    mpfr_get_f(out.get_mpf_t(), v, MPFR_RNDD);
    lo = mpq_class(out);
    mpfr_set_q(v, bhi.get_mpq_t(), MPFR_RNDU);
    mpfr_rootn_ui(v, v, root, MPFR_RNDU);
    mpfr_get_f(out.get_mpf_t(), v, MPFR_RNDU);
    hi = mpq_class(out);
    mpfr_clear(v);
}

}  // namespace quasigap
