#include "quasigap/patches.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>

namespace quasigap {

namespace {

// Integer column box covering {n_1 : displacement can pass the type's
// window test}: r*Omega' bounds, inflated by the physical reach of one
// window diameter for type 1 (whose test depends on n_2 as well).
void column_ranges(const Scheme& scheme, const mpq_class& r, PatchType type,
                   const OmegaSpec& omega, IVec& lo, IVec& hi) {
    QVec blo, bhi;
    omega.bounding_box(blo, bhi);
    Surd reach = (type == PatchType::type1) ? scheme.physical_reach() : Surd();
    lo.resize(scheme.d());
    hi.resize(scheme.d());
    for (int j = 0; j < scheme.d(); ++j) {
        lo[j] = (Surd(r * blo[j]) - reach).floor().get_si() - 1;
        hi[j] = (Surd(r * bhi[j]) + reach).ceil().get_si() + 1;
    }
}

template <typename Body>
void scan_box(const IVec& lo, const IVec& hi, Body&& body) {
    IVec cur(lo);
    int dim = (int)lo.size();
    while (true) {
        body(cur);
        int i = 0;
        while (i < dim && ++cur[i] > hi[i]) {
            cur[i] = lo[i];
            ++i;
        }
        if (i == dim) break;
    }
}

PatchClass finish(std::vector<IVec> disp, PatchType type, const mpq_class& r) {
    std::sort(disp.begin(), disp.end());
    PatchClass c;
    c.displacements = std::move(disp);
    c.patch_type = type;
    c.r = r;
    return c;
}

}  // namespace

PatchClass patch(const Scheme& scheme, const LiftedPoint& y, const mpq_class& r,
                 PatchType type, const OmegaSpec& omega) {
    if (sgn(r) < 0) throw ConfigError("patch radius must be nonnegative");
    scheme.check_radius(r);
    IVec lo, hi;
    column_ranges(scheme, r, type, omega, lo, hi);
    IVec y1(y.n.begin(), y.n.begin() + scheme.d());
    IVec y2(y.n.begin() + scheme.d(), y.n.end());
    std::vector<IVec> disp;
    scan_box(lo, hi, [&](const IVec& delta1) {
        if (type == PatchType::type2 && !omega.contains(delta1, r)) return;
        IVec column(scheme.d());
        for (int j = 0; j < scheme.d(); ++j) column[j] = y1[j] + delta1[j];
        for (const auto& n2 : lifts(scheme, column)) {
            IVec n(delta1);
            for (int i = 0; i < scheme.codim(); ++i) n.push_back(n2[i] - y2[i]);
            if (type == PatchType::type1) {
                SVec img = scheme.project(n, Scheme::Proj::pi1);
                if (!omega.contains(img, r, scheme.mode())) continue;
            }
            disp.push_back(std::move(n));
        }
    });
    return finish(std::move(disp), type, r);
}

EmpiricalSpectrum empirical_spectrum_serial(const Scheme& scheme, const mpq_class& r,
                                            const mpq_class& big_r, PatchType type,
                                            const OmegaSpec& omega) {
    if (sgn(big_r) <= 0) throw ConfigError("ball radius must be positive");
    auto centers = generate_serial(scheme, big_r);
    EmpiricalSpectrum spec;
    for (const auto& y : centers) {
        PatchClass c = patch(scheme, y, r, type, omega);
        ++spec.counts[c];
    }
    spec.total = (long)centers.size();
    return spec;
}

EmpiricalSpectrum empirical_spectrum(const Scheme& scheme, const mpq_class& r,
                                     const mpq_class& big_r, PatchType type,
                                     const OmegaSpec& omega) {
    if (sgn(big_r) <= 0) throw ConfigError("ball radius must be positive");
    auto centers = generate(scheme, big_r);
    int threads = omp_get_max_threads();
    std::vector<std::map<PatchClass, long>> partial((size_t)threads);
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < (std::int64_t)centers.size(); ++i) {
        try {
            PatchClass c = patch(scheme, centers[(size_t)i], r, type, omega);
            ++partial[(size_t)omp_get_thread_num()][c];
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    EmpiricalSpectrum spec;
    for (const auto& m : partial)
        for (const auto& [cls, count] : m) spec.counts[cls] += count;
    spec.total = (long)centers.size();
    return spec;
}

Surd sandwich_c2_exact(const Scheme& scheme, const OmegaSpec& omega) {
    int cod = scheme.codim();
    Surd bound;
    for (unsigned mask = 0; mask < (1u << cod); ++mask) {
        SVec w(cod);
        for (int i = 0; i < cod; ++i) {
            long v = 0;
            for (int j = 0; j < cod; ++j) {
                long sign = (mask & (1u << j)) ? 1 : -1;
                v += sign * mpz_class(scheme.window().b.at(i, j)).get_si();
            }
            w[i] = Surd(v);
        }
        Surd g = omega.gauge(scheme.p2().mul(w));
        if (Surd::compare(g, bound) == Ordering::greater) bound = g;
    }
    return bound;
}

mpq_class sandwich_c2(const Scheme& scheme, const OmegaSpec& omega) {
    Surd bound = sandwich_c2_exact(scheme, omega);
    mpz_class scaled = (bound * Surd(mpq_class(1 << 20))).ceil();
    mpq_class c2(scaled, mpz_class(1 << 20));
    c2.canonicalize();
    return c2;
}

std::string spectrum_json(const EmpiricalSpectrum& spec) {
    // class ids follow the canonical class order (size, displacement lex)
    struct Row {
        size_t id;
        size_t size;
        long count;
    };
    std::vector<Row> rows;
    size_t id = 0;
    for (const auto& [cls, count] : spec.counts) rows.push_back({id++, cls.size(), count});
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.id < b.id;
    });
    std::ostringstream os;
    os << "[\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        mpq_class f(rows[i].count, spec.total);
        f.canonicalize();
        os << "  {\"class_id\": " << rows[i].id << ", \"size\": " << rows[i].size
           << ", \"count\": " << rows[i].count << ", \"frequency_num\": " << f.get_num()
           << ", \"frequency_den\": " << f.get_den() << "}" << (i + 1 < rows.size() ? "," : "")
           << "\n";
    }
    os << "]\n";
    return os.str();
}

}  // namespace quasigap
