#include "modcat/matrix.hpp"

#include <utility>

namespace modcat {

CycMatrix::CycMatrix(long rows, long cols, long conductor)
    : rows_(rows), cols_(cols), conductor_(conductor),
      entries_(static_cast<size_t>(rows) * cols, CycNum::zero(conductor)) {
    if (rows < 0 || cols < 0) throw IndexOutOfRange("CycMatrix: negative shape");
}

CycMatrix CycMatrix::identity(long n, long conductor) {
    CycMatrix m(n, n, conductor);
    for (long i = 0; i < n; ++i) m.set(i, i, CycNum::one(conductor));
    return m;
}

void CycMatrix::set(long i, long j, CycNum v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw IndexOutOfRange("CycMatrix: index out of range");
    if (v.conductor() != conductor_)
        throw ConductorMismatch("CycMatrix: entry conductor differs from matrix conductor");
    entries_[i * cols_ + j] = std::move(v);
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
    if (a.cols_ != b.rows_) throw IndexOutOfRange("CycMatrix: shape mismatch in product");
    if (a.conductor_ != b.conductor_)
        throw ConductorMismatch("CycMatrix: conductors differ in product");
    CycMatrix out(a.rows_, b.cols_, a.conductor_);
    for (long i = 0; i < a.rows_; ++i) {
        for (long k = 0; k < a.cols_; ++k) {
            const CycNum& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (long j = 0; j < b.cols_; ++j) {
                const CycNum& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                out.entries_[i * out.cols_ + j] += aik * bkj;
            }
        }
    }
    return out;
}

CycMatrix operator*(const CycMatrix& a, const CycNum& s) {
    CycMatrix out(a.rows_, a.cols_, a.conductor_);
    for (long i = 0; i < a.rows_; ++i)
        for (long j = 0; j < a.cols_; ++j) out.set(i, j, a.at(i, j) * s);
    return out;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    if (a.conductor_ != b.conductor_)
        throw ConductorMismatch("CycMatrix: comparing matrices over different conductors");
    return a.entries_ == b.entries_;
}

CycNum det_exact(const CycMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquare("det_exact: matrix is not square");
    const long n = m.rows();
    if (n == 0) return CycNum::one(m.conductor());

    std::vector<std::vector<CycNum>> a(n, std::vector<CycNum>(n, CycNum::zero(m.conductor())));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    // One-step Bareiss: after step k every entry is an exact (k+2)-minor, so
    // the division by the previous pivot is exact and coefficients stay small.
    bool negate = false;
    CycNum prev = CycNum::one(m.conductor());
    for (long k = 0; k < n - 1; ++k) {
        if (a[k][k].is_zero()) {
            long pivot = -1;
            for (long i = k + 1; i < n; ++i) {
                if (!a[i][k].is_zero()) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) return CycNum::zero(m.conductor());
            std::swap(a[k], a[pivot]);
            negate = !negate;
        }
        const CycNum inv_prev = prev.inverse();
        for (long i = k + 1; i < n; ++i) {
            for (long j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) * inv_prev;
            }
        }
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

} // namespace modcat
