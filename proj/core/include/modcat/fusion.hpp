#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modcat/matrix.hpp"

namespace modcat {

/// A premodular category given by its numerical data: simple-object labels,
/// unit, duals, fusion multiplicities N[x][y][z], quantum dimensions, twists,
/// and the derived S-matrix. All scalars live in one cyclotomic field
/// Q(zeta_conductor) so every axiom and theorem check is a strict equality.
///
/// The struct is a passive carrier; `validate` checks the axioms and
/// `finalize` (validation + S-matrix) must run before the data is shared or
/// fed to downstream operations. Finalized data is immutable by convention.
struct PremodularData {
    std::string name;
    long conductor = 1;
    int rank = 0;
    std::vector<std::string> labels;
    int unit = 0;
    std::vector<int> dual;
    /// Dense fusion tensor, layout (x * rank + y) * rank + z.
    std::vector<int> fusion;
    std::vector<CycNum> dims;
    std::vector<CycNum> twists;
    /// Derived; filled by compute_S. Never read from files, always recomputed.
    std::optional<CycMatrix> smat;
    bool finalized = false;

    int n_of(int x, int y, int z) const {
        return fusion[(static_cast<size_t>(x) * rank + y) * rank + z];
    }
    int& n_mut(int x, int y, int z) {
        return fusion[(static_cast<size_t>(x) * rank + y) * rank + z];
    }
    /// Row N[x][y][.] of the fusion tensor.
    const int* n_row(int x, int y) const {
        return fusion.data() + (static_cast<size_t>(x) * rank + y) * rank;
    }
    const CycMatrix& smatrix() const;
    const std::string& label(int x) const { return labels[x]; }
};

/// Outcome of checking every PremodularData invariant; empty iff valid.
struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

/// Checks all data-level axioms exactly: unit laws, associativity,
/// commutativity, duality N[x][y][unit] = delta_{y,dual(x)}, dual involution,
/// dimension homomorphism, twist constraints. Failures are report entries
/// with the offending indices, never exceptions.
ValidationReport validate(const PremodularData& data);

/// S(X,Y) = sum_Z N_{XY}^Z (omega_Z / (omega_X omega_Y)) d(Z); caches the
/// matrix on the data and returns it. Throws InvalidData if validation fails.
const CycMatrix& compute_S(PremodularData& data);

/// validate-or-throw, then compute and cache S. Every constructor and loader
/// funnels through this so downstream code sees only checked data.
void finalize(PremodularData& data);
PremodularData finalized(PremodularData data);

/// dim C = sum_X d(X)^2, exact.
CycNum dim_category(const PremodularData& data);

/// Permutation matrix C with C[x][y] = delta_{y, dual(x)}.
CycMatrix charge_conjugation(const PremodularData& data);

/// True iff every dimension is self-conjugate with positive sign and every
/// twist has |omega| = 1 (omega * conj(omega) = 1). The bound checks of the
/// structure module require this.
bool unitary_diagnostic(const PremodularData& data);

} // namespace modcat
