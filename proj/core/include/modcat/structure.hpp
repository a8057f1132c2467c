#pragma once

#include <memory>
#include <optional>

#include "modcat/report.hpp"
#include "modcat/subcat.hpp"

namespace modcat {

/// Witness of an equivalence (K x L)-labels -> C-labels exhibited by a split
/// or a Deligne product: maps the pair (a, b) to a parent label, preserving
/// unit, duals, dimensions, twists, fusion and S entrywise.
struct LabelBijection {
    int rank_left = 0;
    int rank_right = 0;
    std::vector<int> to_target; // (a * rank_right + b) -> target label

    int target(int a, int b) const { return to_target[a * rank_right + b]; }
};

/// Data-level Deligne product: labels Gamma_A x Gamma_B, multiplicative N, d,
/// omega, conductor lcm. Postcondition (asserted): the computed S equals the
/// entrywise product of the factors' S-matrices.
PremodularData deligne_product(const PremodularData& a, const PremodularData& b);

/// Same fusion and dimensions, inverted twists, S recomputed. An involution
/// (also on names: a trailing '~' toggles).
PremodularData reverse(const PremodularData& data);

/// For modular C the quantum double is modeled as C x reverse(C); asserts the
/// result is modular with dim = (dim C)^2. Throws NotModular.
PremodularData double_of_modular(const PremodularData& data);

struct SplitResult {
    PremodularData left;  ///< restrict(K)
    PremodularData right; ///< restrict(C_C(K))
    LabelBijection witness;
};

/// C ~ K x C_C(K) for a modular subcategory K of modular C. The canonical map
/// (k,l) -> the unique z with N_{kl}^z != 0 is computed and every preservation
/// assertion is checked exactly; a failure would contradict the factorization
/// theorem and raises SplitFailure.
SplitResult split_along(const PremodularData& data, const SubCat& k);

/// Binary factor tree: leaves are prime factors, inner nodes carry the
/// bijection from (left x right) onto this node's labels.
struct FactorNode {
    PremodularData data;
    std::unique_ptr<FactorNode> left, right;
    LabelBijection witness; // meaningful iff left != nullptr

    bool is_leaf() const { return left == nullptr; }
};

struct Factorization {
    /// Null iff the input has rank 1 (the empty product).
    std::unique_ptr<FactorNode> root;

    /// Leaf data, sorted by (rank, scalar fingerprint) for deterministic output.
    std::vector<const PremodularData*> factors() const;
};

/// Splits off the first modular proper subcategory found (in lattice order)
/// and recurses; a category with no such subcategory is prime. Throws
/// NotModular.
Factorization prime_factorize(const PremodularData& data);

/// All unordered prime factorizations reachable by varying the subcategory
/// chosen at each step, exploring one representative per equivalence class of
/// first choices and deduplicating results by pairwise factor equivalence.
std::vector<Factorization> prime_factorize_all(const PremodularData& data);

/// Searches for a label bijection preserving unit, dual, N, d and omega
/// (hence S). Sound: any witness returned has been verified exactly.
/// Complete at desk scale via fingerprint-pruned backtracking.
std::optional<std::vector<int>> equivalent(const PremodularData& a, const PremodularData& b);

/// Verifies that `perm` (a-labels -> b-labels) is an equivalence of the data.
/// Returns a description of the first mismatch, or nothing if it checks out.
std::optional<std::string> check_equivalence(const PremodularData& a, const PremodularData& b,
                                             const std::vector<int>& perm, bool check_smatrix);

/// Re-multiplies every inner node of the tree via deligne_product and checks
/// the node's witness transports the product onto the node's data exactly
/// (N, d, omega, duals and S).
Report verify_factorization(const Factorization& f);

/// Modular with rank > 1 and no proper nontrivial modular subcategory.
bool is_prime_modular(const PremodularData& data);

/// dim C / dim Z2(C): the dimension the modular closure would have. The
/// closure itself is not constructed. Throws ZeroDimension.
CycNum closure_dimension(const PremodularData& data);

} // namespace modcat
