#pragma once

#include <cstdint>
#include <vector>

#include "quasigap/surd.hpp"

namespace quasigap {

using IVec = std::vector<std::int64_t>;
using QVec = std::vector<mpq_class>;
using SVec = std::vector<Surd>;

// Dense row-major exact matrix over the surd field.
struct SMat {
    size_t rows = 0, cols = 0;
    std::vector<Surd> a;

    SMat() = default;
    SMat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
    Surd& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Surd& at(size_t i, size_t j) const { return a[i * cols + j]; }

    static SMat identity(size_t n) {
        SMat m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = Surd(1L);
        return m;
    }

    SVec mul(const SVec& v) const;
    SMat mul(const SMat& o) const;
    // Exact inverse by Gauss-Jordan; empty on singular input.
    bool invert(SMat& out) const;
};

SVec operator+(const SVec& x, const SVec& y);
SVec operator-(const SVec& x, const SVec& y);

SVec to_svec(const IVec& v);
SVec to_svec(const QVec& v);

// Rational row-major matrix (window coordinates, B^-1 and friends).
struct QMat {
    size_t rows = 0, cols = 0;
    std::vector<mpq_class> a;

    QMat() = default;
    QMat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
    mpq_class& at(size_t i, size_t j) { return a[i * cols + j]; }
    const mpq_class& at(size_t i, size_t j) const { return a[i * cols + j]; }

    QVec mul(const QVec& v) const;
    bool invert(QMat& out) const;
    mpq_class det() const;
};

// Integer matrix with arbitrary-precision entries (relation search).
struct ZMat {
    size_t rows = 0, cols = 0;
    std::vector<mpz_class> a;

    ZMat() = default;
    ZMat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
    mpz_class& at(size_t i, size_t j) { return a[i * cols + j]; }
    const mpz_class& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

}  // namespace quasigap
