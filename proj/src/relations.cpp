#include "quasigap/relations.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace quasigap {

namespace {

// Unimodular transform sending column pair (i, j) to (u*ci + v*cj, a*ci + b*cj)
// with determinant +-1.
void combine_columns(ZMat& m, size_t i, size_t j, const mpz_class& u, const mpz_class& v,
                     const mpz_class& a, const mpz_class& b) {
    for (size_t r = 0; r < m.rows; ++r) {
        mpz_class ci = m.at(r, i), cj = m.at(r, j);
        m.at(r, i) = u * ci + v * cj;
        m.at(r, j) = a * ci + b * cj;
    }
}

}  // namespace

ZMat integer_kernel(const ZMat& m) {
    size_t e = m.rows, n = m.cols;
    // Work on [M; I] stacked.
    ZMat w(e + n, n);
    for (size_t i = 0; i < e; ++i)
        for (size_t j = 0; j < n; ++j) w.at(i, j) = m.at(i, j);
    for (size_t j = 0; j < n; ++j) w.at(e + j, j) = 1;

    size_t col = 0;
    for (size_t row = 0; row < e && col < n; ++row) {
        size_t piv = col;
        while (piv < n && w.at(row, piv) == 0) ++piv;
        if (piv == n) continue;
        if (piv != col) {
            for (size_t r = 0; r < w.rows; ++r) std::swap(w.at(r, piv), w.at(r, col));
        }
        for (size_t j = col + 1; j < n; ++j) {
            if (w.at(row, j) == 0) continue;
            mpz_class g, u, v;
            mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), w.at(row, col).get_mpz_t(),
                       w.at(row, j).get_mpz_t());
            mpz_class a = -w.at(row, j) / g, b = w.at(row, col) / g;
            combine_columns(w, col, j, u, v, a, b);
        }
        ++col;
    }
    // Columns whose M-part is zero span the kernel.
    std::vector<size_t> keep;
    for (size_t j = 0; j < n; ++j) {
        bool zero = true;
        for (size_t i = 0; i < e && zero; ++i) zero = (w.at(i, j) == 0);
        if (zero) keep.push_back(j);
    }
    ZMat out(n, keep.size());
    for (size_t c = 0; c < keep.size(); ++c)
        for (size_t r = 0; r < n; ++r) out.at(r, c) = w.at(e + r, keep[c]);
    return out;
}

ZMat scale_rows_to_integer(const QMat& m) {
    ZMat out(m.rows, m.cols);
    for (size_t i = 0; i < m.rows; ++i) {
        mpz_class l(1);
        for (size_t j = 0; j < m.cols; ++j) l = lcm(l, m.at(i, j).get_den());
        for (size_t j = 0; j < m.cols; ++j) {
            mpq_class v = m.at(i, j) * mpq_class(l);
            out.at(i, j) = v.get_num();
        }
    }
    return out;
}

namespace {

mpz_class supnorm_of(const std::vector<mpz_class>& v) {
    mpz_class s(0);
    for (const auto& x : v) {
        mpz_class a = ::abs(x);
        if (a > s) s = a;
    }
    return s;
}

mpq_class dot(const ZMat& b, size_t i, size_t j) {
    mpq_class s(0);
    for (size_t r = 0; r < b.rows; ++r) s += mpq_class(b.at(r, i)) * mpq_class(b.at(r, j));
    return s;
}

// Size-reduce columns against each other until stable (ranks here are tiny).
void pairwise_reduce(ZMat& b) {
    bool changed = true;
    int guard = 0;
    while (changed && guard++ < 1000) {
        changed = false;
        for (size_t i = 0; i < b.cols; ++i) {
            for (size_t j = 0; j < b.cols; ++j) {
                if (i == j) continue;
                mpq_class bjj = dot(b, j, j);
                if (sgn(bjj) == 0) continue;
                mpq_class mu = dot(b, i, j) / bjj;
                // nearest integer to mu
                mpz_class num = mu.get_num(), den = mu.get_den(), q, r;
                mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
                if (mpq_class(r, den) * 2 >= 1) q += 1;
                if (q == 0) continue;
                mpq_class before = dot(b, i, i);
                for (size_t row = 0; row < b.rows; ++row) b.at(row, i) -= q * b.at(row, j);
                if (dot(b, i, i) < before) {
                    changed = true;
                } else {
                    for (size_t row = 0; row < b.rows; ++row) b.at(row, i) += q * b.at(row, j);
                }
            }
        }
    }
}

struct Enumerator {
    const ZMat& basis;          // n x rho columns
    std::vector<QVec> mu;       // mu[i][j], j < i
    QVec bstar2;                // squared GSO norms
    mpq_class budget;           // L2^2 search radius
    std::vector<mpz_class> coeff;
    std::optional<LatticeMin> best;

    explicit Enumerator(const ZMat& b) : basis(b) {}

    void consider(const std::vector<mpz_class>& c) {
        std::vector<mpz_class> v(basis.rows, mpz_class(0));
        bool nonzero = false;
        for (size_t r = 0; r < basis.rows; ++r) {
            for (size_t i = 0; i < basis.cols; ++i) v[r] += c[i] * basis.at(r, i);
            if (v[r] != 0) nonzero = true;
        }
        if (!nonzero) return;
        mpz_class s = supnorm_of(v);
        if (!best || s < best->supnorm ||
            (s == best->supnorm && std::lexicographical_compare(v.begin(), v.end(),
                                                                best->vec.begin(), best->vec.end()))) {
            best = LatticeMin{v, s};
        }
    }

    // Level i from rho-1 down to 0; `used` is the consumed part of the budget.
    void recurse(size_t level, const mpq_class& used) {
        if (level == (size_t)-1) {
            consider(coeff);
            return;
        }
        // center = -sum_{j>level} mu[j][level]*c_j
        mpq_class center(0);
        for (size_t j = level + 1; j < basis.cols; ++j)
            center -= mu[j][level] * mpq_class(coeff[j]);
        mpq_class room = budget - used;
        if (sgn(room) < 0) return;
        if (sgn(bstar2[level]) == 0) return;  // dependent direction (should not occur)
        double half = std::sqrt(room.get_d() / bstar2[level].get_d()) + 2.0;
        double cd = center.get_d();
        long lo = (long)std::floor(cd - half), hi = (long)std::ceil(cd + half);
        for (long c = lo; c <= hi; ++c) {
            mpq_class delta = mpq_class(c) - center;
            mpq_class add = delta * delta * bstar2[level];
            if (used + add > budget) continue;
            coeff[level] = c;
            recurse(level - 1, used + add);
        }
    }

    void run() {
        size_t rho = basis.cols;
        mu.assign(rho, QVec(rho, mpq_class(0)));
        bstar2.assign(rho, mpq_class(0));
        // Exact Gram-Schmidt from the Gram matrix.
        std::vector<QVec> gram(rho, QVec(rho));
        for (size_t i = 0; i < rho; ++i)
            for (size_t j = 0; j < rho; ++j) gram[i][j] = dot(basis, i, j);
        for (size_t i = 0; i < rho; ++i) {
            bstar2[i] = gram[i][i];
            for (size_t j = 0; j < i; ++j) {
                mpq_class m = gram[i][j];
                for (size_t k = 0; k < j; ++k) m -= mu[i][k] * mu[j][k] * bstar2[k];
                mu[i][j] = (sgn(bstar2[j]) == 0) ? mpq_class(0) : m / bstar2[j];
                bstar2[i] -= mu[i][j] * mu[i][j] * bstar2[j];
            }
        }
        // Initial radius: best single column, in L2 terms scaled for sup-norm.
        mpq_class r0;
        bool have = false;
        for (size_t i = 0; i < rho; ++i) {
            std::vector<mpz_class> col(basis.rows);
            for (size_t r = 0; r < basis.rows; ++r) col[r] = basis.at(r, i);
            mpz_class s = supnorm_of(col);
            if (!have || mpq_class(s) < r0) {
                r0 = mpq_class(s);
                have = true;
            }
        }
        if (!have) return;
        // Any vector with sup-norm <= r0 has L2^2 <= n*r0^2.
        budget = r0 * r0 * (long)basis.rows;
        coeff.assign(rho, mpz_class(0));
        recurse(rho - 1, mpq_class(0));
    }
};

}  // namespace

std::optional<LatticeMin> lattice_shortest_supnorm(const ZMat& basis_in) {
    if (basis_in.cols == 0) return std::nullopt;
    ZMat basis = basis_in;
    pairwise_reduce(basis);
    Enumerator en(basis);
    en.run();
    return en.best;
}

std::optional<LatticeMin> integer_relation(const std::vector<Surd>& xs) {
    // Rows: one per radical (including the rational part) present anywhere.
    std::set<unsigned long> ds;
    ds.insert(1);
    for (const auto& x : xs)
        for (const auto& t : x.terms()) ds.insert(t.d);
    QMat m(ds.size(), xs.size());
    size_t row = 0;
    for (unsigned long d : ds) {
        for (size_t j = 0; j < xs.size(); ++j) {
            mpq_class c(0);
            for (const auto& t : xs[j].terms())
                if (t.d == d) c = t.q;
            m.at(row, j) = c;
        }
        ++row;
    }
    ZMat kern = integer_kernel(scale_rows_to_integer(m));
    return lattice_shortest_supnorm(kern);
}

}  // namespace quasigap
