#pragma once

#include <string>
#include <vector>

#include "modcat/report.hpp"
#include "modcat/subcat.hpp"

namespace modcat {

/// Finite abelian group presented as a direct product of cyclic groups.
/// Elements are indexed 0..order-1 in mixed-radix order (first component most
/// significant); characters use the same indexing of their exponent tuples.
struct AbelianGroup {
    std::vector<long> orders; // cyclic factor orders, each >= 2; empty = trivial group

    /// Drops factors of order 1; throws InvalidGroup on orders < 1.
    static AbelianGroup from_orders(std::vector<long> orders);

    long order() const;
    long exponent() const; // lcm of the factor orders, 1 for the trivial group

    std::vector<long> decode(long index) const;
    long encode(const std::vector<long>& element) const;
    long add(long i, long j) const;
    long neg(long i) const;
    std::string element_name(long index) const; // components joined by '.'

    /// e with <chi_b, g_a> = zeta_E^e, E the exponent:
    /// e = sum_i (E/n_i) a_i b_i mod E. Bimultiplicative and non-degenerate.
    long pairing_exponent(long chi_index, long g_index) const;
};

/// An isomorphism alpha: G -> G^ given by an integer matrix acting on
/// exponent tuples: alpha(g)_i = sum_j mat[i][j] g_j mod n_i.
struct Isom {
    std::vector<std::vector<long>> mat;

    static Isom cyclic(long m) { return Isom{{{m}}}; }
    long apply(const AbelianGroup& g, long g_index) const;
    bool is_isomorphism(const AbelianGroup& g) const; // bijectivity by enumeration
};

/// Modular data of D(G)-mod for abelian G: rank |G|^2 with labels G x G^, all
/// dimensions 1, group-law fusion, duals (g,chi) -> (-g, chi^-1), twists
/// omega_{(g,chi)} = <chi,g>, conductor = exponent(G). Postconditions
/// (asserted): the computed S equals <sigma,g><chi,h> entrywise and the data
/// is modular. Throws BudgetExceeded when |G|^2 > max_rank.
PremodularData drinfeld_double(const AbelianGroup& g, long max_rank = 256);

/// (ja, jb) in Z2(<(a,b)>) iff 2jab = 0 mod p^n.
bool transparency_criterion(long p, long n, long a, long b, long j);

/// Full classification run for D(Z/p^n): lattice enumeration, modularity of
/// every proper subcategory, and the structural assertions (count
/// p^n - p^(n-1) for odd p, primality for p = 2, diagonal form, centralizer
/// pairing m -> -m, agreement with the transparency criterion).
struct DoubleClassification {
    long p = 0, n = 0;
    PremodularData double_data;
    std::vector<std::vector<int>> modular_subcats; // member index lists
    std::vector<long> alphas;                      // unit m with K = {(g, m g)}
    Report report;
};

DoubleClassification classify_modular_subcats_cyclic(long p, long n, long max_rank = 256);

/// D(K x L) vs D(K) (x) D(L): asserts an equivalence witness is found.
Report product_group_double_check(const std::vector<long>& orders, long max_rank = 256);

} // namespace modcat
