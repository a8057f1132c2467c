#pragma once

#include "modcat/report.hpp"
#include "modcat/subcat.hpp"

namespace modcat {

/// The S-matrix identity families, checked as exact equalities over all index
/// tuples: S(U,Y)S(X,Y) = d(Y) sum_W N_{UX}^W S(W,Y); S(X,Y)S(X,Z) =
/// d(X) sum_W N_{YZ}^W S(X,W); sum_X S(X,Y)S(X,Z) = dim C sum_{W central}
/// N_{YZ}^W d(W); and, when the center is trivial, S^2 = dim C * C.
Report verify_smatrix_identities(const PremodularData& data);

/// The two centrality criteria for one simple object: S(X,Y) = d(X)d(Y) for
/// all Y versus sum_Y S(X,Y) d(Y) != 0; asserts they agree. Throws
/// ZeroDimension when dim C = 0.
Report centrality_equivalence(const PremodularData& data, int x);

/// Everything the lemma layer provides: the S-matrix identities, the
/// characteristic-function identity over every (subcategory, object) pair,
/// and the centrality equivalence for every object.
Report verify_lemma_suite(const PremodularData& data);

/// Modularity-criteria agreement (det S != 0 iff trivial center) on the data
/// itself and on every lattice restriction.
Report verify_modularity_agreement(const PremodularData& data);

/// Double-centralizer suite over the whole lattice of a modular category:
/// K'' = K, dim K * dim K' = dim C, Z2(K') = Z2(K), K modular => K' modular,
/// K symmetric => Z2(K') = K. Throws NotModular.
Report verify_dct(const PremodularData& data);

/// dim C >= dim K * dim Z2(K) for every lattice K, with equality exactly when
/// C_C(K) = Z2(K). Requires modular data with positive dimensions; throws
/// NotModular / NotUnitary.
Report verify_bound(const PremodularData& data);

} // namespace modcat
