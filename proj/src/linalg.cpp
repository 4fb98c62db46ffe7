#include "quasigap/linalg.hpp"

namespace quasigap {

SVec SMat::mul(const SVec& v) const {
    SVec out(rows);
    for (size_t i = 0; i < rows; ++i) {
        Surd acc;
        for (size_t j = 0; j < cols; ++j) acc += at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

SMat SMat::mul(const SMat& o) const {
    SMat out(rows, o.cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < cols; ++k)
            for (size_t j = 0; j < o.cols; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
    return out;
}

bool SMat::invert(SMat& out) const {
    if (rows != cols) return false;
    SMat m = *this;
    out = identity(rows);
    for (size_t col = 0; col < cols; ++col) {
        size_t pivot = col;
        while (pivot < rows && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows) return false;
        if (pivot != col) {
            for (size_t j = 0; j < cols; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(out.at(pivot, j), out.at(col, j));
            }
        }
        Surd inv = Surd(1L) / m.at(col, col);
        for (size_t j = 0; j < cols; ++j) {
            m.at(col, j) *= inv;
            out.at(col, j) *= inv;
        }
        for (size_t i = 0; i < rows; ++i) {
            if (i == col || m.at(i, col).is_zero()) continue;
            Surd f = m.at(i, col);
            for (size_t j = 0; j < cols; ++j) {
                m.at(i, j) -= f * m.at(col, j);
                out.at(i, j) -= f * out.at(col, j);
            }
        }
    }
    return true;
}

SVec operator+(const SVec& x, const SVec& y) {
    SVec out(x.size());
    for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
    return out;
}

SVec operator-(const SVec& x, const SVec& y) {
    SVec out(x.size());
    for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
    return out;
}

SVec to_svec(const IVec& v) {
    SVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Surd((long)v[i]);
    return out;
}

SVec to_svec(const QVec& v) {
    SVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Surd(v[i]);
    return out;
}

QVec QMat::mul(const QVec& v) const {
    QVec out(rows, mpq_class(0));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) out[i] += at(i, j) * v[j];
    return out;
}

bool QMat::invert(QMat& out) const {
    if (rows != cols) return false;
    QMat m = *this;
    out = QMat(rows, cols);
    for (size_t i = 0; i < rows; ++i) out.at(i, i) = 1;
    for (size_t col = 0; col < cols; ++col) {
        size_t pivot = col;
        while (pivot < rows && sgn(m.at(pivot, col)) == 0) ++pivot;
        if (pivot == rows) return false;
        if (pivot != col) {
            for (size_t j = 0; j < cols; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(out.at(pivot, j), out.at(col, j));
            }
        }
        mpq_class inv = 1 / m.at(col, col);
        for (size_t j = 0; j < cols; ++j) {
            m.at(col, j) *= inv;
            out.at(col, j) *= inv;
        }
        for (size_t i = 0; i < rows; ++i) {
            if (i == col || sgn(m.at(i, col)) == 0) continue;
            mpq_class f = m.at(i, col);
            for (size_t j = 0; j < cols; ++j) {
                m.at(i, j) -= f * m.at(col, j);
                out.at(i, j) -= f * out.at(col, j);
            }
        }
    }
    return true;
}

mpq_class QMat::det() const {
    QMat m = *this;
    mpq_class det(1);
    for (size_t col = 0; col < cols; ++col) {
        size_t pivot = col;
        while (pivot < rows && sgn(m.at(pivot, col)) == 0) ++pivot;
        if (pivot == rows) return 0;
        if (pivot != col) {
            for (size_t j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        mpq_class inv = 1 / m.at(col, col);
        for (size_t i = col + 1; i < rows; ++i) {
            mpq_class f = m.at(i, col) * inv;
            if (sgn(f) == 0) continue;
            for (size_t j = col; j < cols; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

}  // namespace quasigap
