#pragma once

#include <string>
#include <vector>

#include "modcat/fusion.hpp"

namespace modcat {

/// A semisimple tensor subcategory of `parent`, represented by the closed
/// subset of simple-object labels it is determined by: contains the unit and
/// is closed under duals and fusion. The parent must outlive the SubCat.
struct SubCat {
    const PremodularData* parent = nullptr;
    std::vector<int> members; // ascending, unique

    bool contains(int x) const;
    int size() const { return static_cast<int>(members.size()); }
    bool is_full() const { return size() == parent->rank; }
    bool is_trivial() const { return size() == 1; }
    /// Lexicographically sorted member label names: "{(0,0),(1,2)}".
    std::string to_string() const;
};

/// Wraps an explicit member set, verifying closure. Throws InvalidSubcat.
SubCat subcat_from_members(const PremodularData& data, std::vector<int> members);

/// Smallest closed subset containing the seeds and the unit: the fixpoint of
/// adding duals and fusion products. Throws IndexOutOfRange on bad seeds.
SubCat generated(const PremodularData& data, const std::vector<int>& seeds);

/// C_C(K): all X with S(X,Y) = d(X) d(Y) exactly for every Y in K. The result
/// is closed (a theorem); closure is asserted.
SubCat centralizer(const PremodularData& data, const SubCat& k);

/// Z_2(C) = C_C(C), the subcategory of transparent objects.
SubCat center(const PremodularData& data);

/// Re-indexes a closed subset as standalone premodular data (same conductor).
/// Postcondition (asserted): the S-matrix of the restriction equals the
/// restriction of the parent S-matrix.
PremodularData restrict_to(const PremodularData& data, const SubCat& k);

/// sum_{Y in K} d(Y) S(X,Y), the left side of the characteristic-function
/// identity; equals d(X) dim(K) when X centralizes K and 0 otherwise.
CycNum chi_sum(const PremodularData& data, const SubCat& k, int x);

/// Closure of the union. Both arguments must share a parent.
SubCat join(const SubCat& k1, const SubCat& k2);

/// The complete lattice of subcategories: all singly-generated ones, closed
/// under join. Complete because every closed subset is the join of its
/// singly-generated parts. Sorted by (size, members).
std::vector<SubCat> enumerate_subcats(const PremodularData& data);

/// sum of d(X)^2 over a member set.
CycNum dim_members(const PremodularData& data, const std::vector<int>& members);

/// Both modularity criteria plus their witnesses. The two criteria are
/// provably equivalent, so any disagreement raises InternalInconsistency.
struct ModularityWitness {
    bool modular = false;
    bool center_trivial = false;
    bool det_nonzero = false;
    std::vector<int> center_members;
    CycNum det;
};

/// Tests the ambient category. Throws ZeroDimension if dim C = 0.
ModularityWitness is_modular(const PremodularData& data);
/// Tests a subcategory as a standalone premodular category (via restrict_to).
ModularityWitness is_modular(const PremodularData& data, const SubCat& k);

} // namespace modcat
