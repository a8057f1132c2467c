#pragma once

#include <vector>

#include "modcat/cyclotomic.hpp"

namespace modcat {

/// Dense matrix over a single cyclotomic field Q(zeta_N). All entries share
/// one conductor, enforced at mutation time.
class CycMatrix {
public:
    CycMatrix(long rows, long cols, long conductor);
    static CycMatrix identity(long n, long conductor);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    long conductor() const { return conductor_; }

    const CycNum& at(long i, long j) const { return entries_[i * cols_ + j]; }
    void set(long i, long j, CycNum v);

    friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
    friend CycMatrix operator*(const CycMatrix& a, const CycNum& s);
    friend bool operator==(const CycMatrix& a, const CycMatrix& b);
    friend bool operator!=(const CycMatrix& a, const CycMatrix& b) { return !(a == b); }

private:
    long rows_, cols_, conductor_;
    std::vector<CycNum> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Nonzero result iff the matrix is invertible. Throws NotSquare.
CycNum det_exact(const CycMatrix& m);

} // namespace modcat
