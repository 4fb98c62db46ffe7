#include "quasigap/pointset.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>

namespace quasigap {

namespace {

// n_2 candidates enumerated over the integer box of B[0,1)^(k-d) shifted by
// the fractional data; every candidate is then checked exactly.
struct LiftScanner {
    const Scheme& scheme;
    IVec box_lo, box_hi;

    explicit LiftScanner(const Scheme& s) : scheme(s) { s.window_box(box_lo, box_hi); }

    // Exact center of the candidate box: n_2 must lie in B[0,1)^(k-d) - t0
    // where t0 = s_2 - L(n_1 + s_1).
    std::vector<IVec> run(const IVec& n1) const {
        int cod = scheme.codim();
        SVec n1s(scheme.d());
        for (int j = 0; j < scheme.d(); ++j)
            n1s[j] = Surd((long)n1[j]) + scheme.shift()[j];
        SVec l = scheme.apply_l(n1s);
        std::vector<IVec> out;
        IVec lo(cod), hi(cod);
        for (int i = 0; i < cod; ++i) {
            // n_2i in [box_lo_i - t0_i, box_hi_i - t0_i] with t0 = s_2 - L(...)
            Surd t0 = scheme.shift()[scheme.d() + i] - l[i];
            lo[i] = (Surd((long)box_lo[i]) - t0).ceil().get_si();
            hi[i] = (Surd((long)box_hi[i]) - t0).floor().get_si();
        }
        IVec n(scheme.k());
        for (int j = 0; j < scheme.d(); ++j) n[j] = n1[j];
        IVec cur = lo;
        while (true) {
            for (int i = 0; i < cod; ++i) n[scheme.d() + i] = cur[i];
            if (scheme.accept(n)) out.push_back(IVec(cur.begin(), cur.end()));
            int i = 0;
            while (i < cod && ++cur[i] > hi[i]) {
                cur[i] = lo[i];
                ++i;
            }
            if (i == cod) break;
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

Surd supnorm(const SVec& v) {
    Surd best;
    for (const auto& c : v) {
        Surd a = c.abs();
        if (Surd::compare(a, best) == Ordering::greater) best = a;
    }
    return best;
}

bool point_order(const LiftedPoint& a, const LiftedPoint& b) {
    Ordering c = Surd::compare(supnorm(a.physical), supnorm(b.physical));
    if (c != Ordering::equal) return c == Ordering::less;
    return a.n < b.n;
}

// Per-coordinate integer ranges of n_1 guaranteed to cover all accepted
// points with |physical| <= R: physical = (n_1 + s_1) + P2*(window offset),
// so |n_1 + s_1| <= R + physical_reach.
void covering_ranges(const Scheme& scheme, const mpq_class& radius, IVec& lo, IVec& hi) {
    Surd reach = scheme.physical_reach();
    Surd bound = Surd(radius) + reach;
    lo.resize(scheme.d());
    hi.resize(scheme.d());
    for (int j = 0; j < scheme.d(); ++j) {
        lo[j] = ((-bound) - scheme.shift()[j]).floor().get_si() - 1;
        hi[j] = (bound - scheme.shift()[j]).ceil().get_si() + 1;
    }
}

LiftedPoint make_point(const Scheme& scheme, const IVec& n) {
    LiftedPoint p;
    p.n = n;
    p.physical = scheme.physical(n);
    p.internal = scheme.star_shifted(n);
    return p;
}

template <typename Body>
void scan_columns(const IVec& lo, const IVec& hi, Body&& body) {
    int d = (int)lo.size();
    IVec cur(lo);
    while (true) {
        body(cur);
        int i = 0;
        while (i < d && ++cur[i] > hi[i]) {
            cur[i] = lo[i];
            ++i;
        }
        if (i == d) break;
    }
}

}  // namespace

std::vector<IVec> lifts(const Scheme& scheme, const IVec& n1) {
    if ((int)n1.size() != scheme.d()) throw ConfigError("lifts: n1 must be a d-vector");
    return LiftScanner(scheme).run(n1);
}

std::vector<LiftedPoint> generate_serial(const Scheme& scheme, const mpq_class& radius) {
    if (sgn(radius) < 0) throw ConfigError("generate: radius must be nonnegative");
    scheme.check_radius(radius);
    IVec lo, hi;
    covering_ranges(scheme, radius, lo, hi);
    LiftScanner scanner(scheme);
    std::vector<LiftedPoint> out;
    Surd rbound((mpq_class(radius)));
    scan_columns(lo, hi, [&](const IVec& n1) {
        for (const auto& n2 : scanner.run(n1)) {
            IVec n(n1);
            n.insert(n.end(), n2.begin(), n2.end());
            LiftedPoint p = make_point(scheme, n);
            if (scheme.gcmp(supnorm(p.physical), rbound) != Ordering::greater)
                out.push_back(std::move(p));
        }
    });
    std::sort(out.begin(), out.end(), point_order);
    return out;
}

std::vector<LiftedPoint> generate(const Scheme& scheme, const mpq_class& radius) {
    if (sgn(radius) < 0) throw ConfigError("generate: radius must be nonnegative");
    scheme.check_radius(radius);
    IVec lo, hi;
    covering_ranges(scheme, radius, lo, hi);
    // parallelize over the first coordinate of n_1
    std::int64_t n_slabs = hi[0] - lo[0] + 1;
    std::vector<std::vector<LiftedPoint>> slabs((size_t)n_slabs);
    Surd rbound((mpq_class(radius)));
    std::exception_ptr err;
#pragma omp parallel
    {
        LiftScanner scanner(scheme);
#pragma omp for schedule(dynamic)
        for (std::int64_t s = 0; s < n_slabs; ++s) {
            try {
                IVec slo(lo), shi(hi);
                slo[0] = shi[0] = lo[0] + s;
                scan_columns(slo, shi, [&](const IVec& n1) {
                    for (const auto& n2 : scanner.run(n1)) {
                        IVec n(n1);
                        n.insert(n.end(), n2.begin(), n2.end());
                        LiftedPoint p = make_point(scheme, n);
                        if (scheme.gcmp(supnorm(p.physical), rbound) != Ordering::greater)
                            slabs[(size_t)s].push_back(std::move(p));
                    }
                });
            } catch (...) {
#pragma omp critical
                if (!err) err = std::current_exception();
            }
        }
    }
    if (err) std::rethrow_exception(err);
    std::vector<LiftedPoint> out;
    for (auto& s : slabs)
        for (auto& p : s) out.push_back(std::move(p));
    std::sort(out.begin(), out.end(), point_order);
    return out;
}

std::string points_csv(const Scheme& scheme, const std::vector<LiftedPoint>& points,
                       int digits) {
    std::ostringstream os;
    for (int i = 0; i < scheme.k(); ++i) os << "n_" << (i + 1) << ",";
    for (int i = 0; i < scheme.d(); ++i) os << "physical_" << (i + 1) << ",";
    for (int i = 0; i < scheme.codim(); ++i)
        os << "internal_" << (i + 1) << (i + 1 < scheme.codim() ? "," : "");
    os << "\n";
    for (const auto& p : points) {
        for (auto v : p.n) os << v << ",";
        for (const auto& v : p.physical) os << v.to_decimal(digits) << ",";
        for (size_t i = 0; i < p.internal.size(); ++i)
            os << p.internal[i].to_decimal(digits) << (i + 1 < p.internal.size() ? "," : "");
        os << "\n";
    }
    return os.str();
}

}  // namespace quasigap
