#include "quasigap/steinhaus.hpp"

#include <omp.h>

#include <algorithm>
#include <set>
#include <sstream>

namespace quasigap {

namespace {

// Index of the partition interval containing x (x must not be a partition
// point); intervals are [points[i], points[i+1]) wrapping past the end.
size_t interval_of(const std::vector<Surd>& points, const Surd& x, bool& on_point) {
    on_point = false;
    // find last point <= x
    size_t lo = 0, hi = points.size();
    // x < points[0] means the wrap interval (last one)
    if (Surd::compare(x, points.front()) == Ordering::less) return points.size() - 1;
    while (hi - lo > 1) {
        size_t mid = (lo + hi) / 2;
        Ordering c = Surd::compare(points[mid], x);
        if (c == Ordering::equal) {
            on_point = true;
            return mid;
        }
        if (c == Ordering::less)
            lo = mid;
        else
            hi = mid;
    }
    if (points[lo] == x) on_point = true;
    return lo;
}

}  // namespace

CirclePartition circle_partition(const Surd& alpha, long n) {
    if (n < 1) throw ConfigError("circle_partition needs N >= 1");
    std::set<Surd> pts;
    Surd cur;
    for (long i = 1; i <= n; ++i) {
        cur = (cur + alpha).frac();
        pts.insert(cur);
    }
    CirclePartition part;
    part.points.assign(pts.begin(), pts.end());
    size_t m = part.points.size();
    part.gaps.resize(m);
    for (size_t i = 0; i + 1 < m; ++i) part.gaps[i] = part.points[i + 1] - part.points[i];
    part.gaps[m - 1] = part.points.front() + Surd(1L) - part.points.back();
    return part;
}

GammaComplex gamma(const Surd& alpha, long n, bool allow_rational) {
    if (n < 1) throw ConfigError("gamma needs N >= 1");
    if (alpha.is_rational() && !allow_rational)
        throw RationalAlpha("gamma needs irrational alpha (rational rigs must opt in)");
    CirclePartition part = circle_partition(alpha, n);
    size_t m = part.points.size();
    GammaComplex g;
    g.n = n;
    g.vertex_count = m;
    g.out_edges.assign(m, {});
    g.out_degree.assign(m, 0);
    g.in_degree.assign(m, 0);
    Surd frac_alpha = alpha.frac();
    for (size_t j = 0; j < m; ++j) {
        // T(J) = (points[j] + alpha, points[j] + alpha + gap_j); walk the
        // intervals its interior meets
        std::set<size_t> targets;
        Surd start = (part.points[j] + frac_alpha).frac();
        bool on_point = false;
        size_t idx = interval_of(part.points, start, on_point);
        Surd covered;  // arc length consumed from `start`
        // when the image starts strictly inside an interval, that interval
        // is met; when it starts at a partition point, the interval ahead is
        size_t cur = idx;
        while (true) {
            targets.insert(cur);
            // remaining length of `cur` past `start` position
            Surd cur_end_from_start;
            if (targets.size() == 1) {
                // distance from start to the end of interval cur
                Surd end = part.points[(cur + 1) % m];
                Surd delta = (cur + 1 == m ? part.points.front() + Surd(1L) : end) -
                             (on_point ? part.points[cur] : start);
                if (!on_point) {
                    // start lies inside cur
                    cur_end_from_start = delta;
                } else {
                    cur_end_from_start = part.gaps[cur];
                }
                covered = cur_end_from_start;
            } else {
                covered += part.gaps[cur];
            }
            if (Surd::compare(covered, part.gaps[j]) != Ordering::less) break;
            cur = (cur + 1) % m;
            if (targets.size() > m) break;  // full wrap guard
        }
        g.out_edges[j].assign(targets.begin(), targets.end());
        g.out_degree[j] = targets.size();
        g.edge_count += targets.size();
        for (size_t t : targets) ++g.in_degree[t];
    }
    for (size_t j = 0; j < m; ++j) {
        if (g.out_degree[j] >= 2) g.branch_vertex = (long)j;
        if (g.in_degree[j] >= 2) g.merge_vertex = (long)j;
    }
    return g;
}

GammaShape classify(const GammaComplex& g) {
    bool all_one = true;
    for (size_t j = 0; j < g.vertex_count; ++j)
        if (g.out_degree[j] != 1 || g.in_degree[j] != 1) all_one = false;
    if (all_one) return GammaShape::circle;
    if (g.branch_vertex >= 0 && g.branch_vertex == g.merge_vertex) return GammaShape::wedge;
    return GammaShape::theta;
}

const char* shape_name(GammaShape s) {
    switch (s) {
        case GammaShape::circle: return "circle";
        case GammaShape::wedge: return "wedge";
        default: return "theta";
    }
}

namespace {

// Exact membership of beta in alpha*Z + Z, decided through the radical
// coordinates (no height cap needed); rational alpha rigs are left to the
// orbit's own partition-point detection.
void check_beta(const Surd& beta, const Surd& alpha) {
    if (alpha.is_rational()) return;
    mpq_class m;
    bool have = false;
    for (const auto& t : alpha.terms()) {
        if (t.d == 1) continue;
        mpq_class coef(0);
        for (const auto& bt : beta.terms())
            if (bt.d == t.d) coef = bt.q;
        mpq_class cand = coef / t.q;
        if (!have) {
            m = cand;
            have = true;
        } else if (cand != m) {
            return;
        }
    }
    for (const auto& bt : beta.terms()) {
        if (bt.d == 1) continue;
        bool in_alpha = false;
        for (const auto& t : alpha.terms()) in_alpha = in_alpha || t.d == bt.d;
        if (!in_alpha) return;  // beta carries a radical alpha cannot cancel
    }
    if (!have || m.get_den() != 1) return;
    Surd rem = beta - Surd(m) * alpha;
    if (!rem.is_rational()) return;
    if (rem.rational().get_den() == 1)
        throw DegenerateBeta("beta = " + m.get_str() + "*alpha + " +
                             rem.rational().get_str());
}

}  // namespace

std::vector<mpq_class> ergodic_freq_serial(const Surd& beta, const Surd& alpha, long n, long r) {
    if (r < 1) throw ConfigError("ergodic_freq needs R >= 1");
    check_beta(beta, alpha);
    CirclePartition part = circle_partition(alpha, n);
    std::vector<long> counts(part.points.size(), 0);
    Surd pos = beta.frac();
    Surd step = alpha.frac();
    for (long i = 1; i <= r; ++i) {
        pos = (pos + step).frac();
        bool on_point = false;
        size_t idx = interval_of(part.points, pos, on_point);
        if (on_point)
            throw DegenerateBeta("orbit point hits a partition point: beta in alpha*Z + Z");
        ++counts[idx];
    }
    std::vector<mpq_class> out(counts.size());
    for (size_t i = 0; i < counts.size(); ++i) {
        out[i] = mpq_class(counts[i], r);
        out[i].canonicalize();
    }
    return out;
}

std::vector<mpq_class> ergodic_freq(const Surd& beta, const Surd& alpha, long n, long r) {
    if (r < 1) throw ConfigError("ergodic_freq needs R >= 1");
    check_beta(beta, alpha);
    CirclePartition part = circle_partition(alpha, n);
    size_t m = part.points.size();
    std::vector<long> counts(m, 0);
    std::exception_ptr err;
#pragma omp parallel
    {
        std::vector<long> mine(m, 0);
#pragma omp for schedule(static)
        for (long i = 1; i <= r; ++i) {
            try {
                Surd pos = (beta + Surd((long)i) * alpha).frac();
                bool on_point = false;
                size_t idx = interval_of(part.points, pos, on_point);
                if (on_point)
                    throw DegenerateBeta(
                        "orbit point hits a partition point: beta in alpha*Z + Z");
                ++mine[idx];
            } catch (...) {
#pragma omp critical
                if (!err) err = std::current_exception();
            }
        }
#pragma omp critical
        for (size_t t = 0; t < m; ++t) counts[t] += mine[t];
    }
    if (err) std::rethrow_exception(err);
    std::vector<mpq_class> out(m);
    for (size_t i = 0; i < m; ++i) {
        out[i] = mpq_class(counts[i], r);
        out[i].canonicalize();
    }
    return out;
}

std::string steinhaus_csv_header() {
    return "N,distinct_gap_count,gaps,shape,branch_vertex_index,merge_vertex_index\n";
}

std::string steinhaus_csv_row(const Surd& alpha, long n, int digits) {
    CirclePartition part = circle_partition(alpha, n);
    std::set<Surd> distinct(part.gaps.begin(), part.gaps.end());
    std::ostringstream os;
    os << n << "," << distinct.size() << ",";
    size_t i = 0;
    for (const auto& gp : distinct) {
        os << gp.to_literal() << "~" << gp.to_decimal(digits)
           << (++i < distinct.size() ? ";" : "");
    }
    GammaComplex g = gamma(alpha, n, alpha.is_rational());
    os << "," << shape_name(classify(g)) << "," << g.branch_vertex << "," << g.merge_vertex
       << "\n";
    return os.str();
}

}  // namespace quasigap
