#include "modcat/structure.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "modcat/io.hpp"

namespace modcat {

namespace {

void require_finalized(const PremodularData& d, const char* op) {
    if (!d.finalized) throw Error(std::string(op) + ": data '" + d.name + "' not finalized");
}

std::string toggle_reverse_name(const std::string& name) {
    if (!name.empty() && name.back() == '~') return name.substr(0, name.size() - 1);
    return name + "~";
}

} // namespace

PremodularData deligne_product(const PremodularData& a, const PremodularData& b) {
    require_finalized(a, "deligne_product");
    require_finalized(b, "deligne_product");
    const long rank = static_cast<long>(a.rank) * b.rank;
    if (rank > max_supported_rank)
        throw BudgetExceeded("deligne_product: product rank " + std::to_string(rank) +
                             " exceeds the supported maximum " + std::to_string(max_supported_rank));
    PremodularData p;
    p.name = a.name + " x " + b.name;
    p.conductor = std::lcm(a.conductor, b.conductor);
    p.rank = static_cast<int>(rank);
    p.unit = a.unit * b.rank + b.unit;
    const auto idx = [&](int x, int y) { return x * b.rank + y; };
    for (int x = 0; x < a.rank; ++x) {
        for (int y = 0; y < b.rank; ++y) {
            p.labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
            p.dual.push_back(idx(a.dual[x], b.dual[y]));
            p.dims.push_back(embed(a.dims[x], p.conductor) * embed(b.dims[y], p.conductor));
            p.twists.push_back(embed(a.twists[x], p.conductor) * embed(b.twists[y], p.conductor));
        }
    }
    p.fusion.assign(static_cast<size_t>(p.rank) * p.rank * p.rank, 0);
    for (int x1 = 0; x1 < a.rank; ++x1)
        for (int x2 = 0; x2 < a.rank; ++x2)
            for (int x3 = 0; x3 < a.rank; ++x3) {
                const int na = a.n_of(x1, x2, x3);
                if (na == 0) continue;
                for (int y1 = 0; y1 < b.rank; ++y1)
                    for (int y2 = 0; y2 < b.rank; ++y2)
                        for (int y3 = 0; y3 < b.rank; ++y3) {
                            const int nb = b.n_of(y1, y2, y3);
                            if (nb != 0) p.n_mut(idx(x1, y1), idx(x2, y2), idx(x3, y3)) = na * nb;
                        }
            }
    finalize(p);

    // S factorizes entrywise over the product; anything else is a bug.
    std::vector<CycNum> sa(static_cast<size_t>(a.rank) * a.rank, CycNum::zero(p.conductor));
    std::vector<CycNum> sb(static_cast<size_t>(b.rank) * b.rank, CycNum::zero(p.conductor));
    for (int x = 0; x < a.rank; ++x)
        for (int y = 0; y < a.rank; ++y)
            sa[static_cast<size_t>(x) * a.rank + y] = embed(a.smatrix().at(x, y), p.conductor);
    for (int x = 0; x < b.rank; ++x)
        for (int y = 0; y < b.rank; ++y)
            sb[static_cast<size_t>(x) * b.rank + y] = embed(b.smatrix().at(x, y), p.conductor);
    for (int x1 = 0; x1 < a.rank; ++x1)
        for (int y1 = 0; y1 < b.rank; ++y1)
            for (int x2 = 0; x2 < a.rank; ++x2)
                for (int y2 = 0; y2 < b.rank; ++y2)
                    if (p.smatrix().at(idx(x1, y1), idx(x2, y2)) !=
                        sa[static_cast<size_t>(x1) * a.rank + x2] * sb[static_cast<size_t>(y1) * b.rank + y2])
                        throw InternalInconsistency("deligne_product: S does not factor at (" +
                                                    p.label(idx(x1, y1)) + "," + p.label(idx(x2, y2)) + ")");
    return p;
}

PremodularData reverse(const PremodularData& d) {
    require_finalized(d, "reverse");
    PremodularData out = d;
    out.name = toggle_reverse_name(d.name);
    out.smat.reset();
    out.finalized = false;
    for (auto& t : out.twists) t = t.inverse();
    finalize(out);
    return out;
}

PremodularData double_of_modular(const PremodularData& d) {
    if (!is_modular(d).modular)
        throw NotModular("double_of_modular: '" + d.name + "' is not modular");
    PremodularData p = deligne_product(d, reverse(d));
    const CycNum dim_c = dim_category(d);
    if (dim_category(p) != dim_c * dim_c)
        throw InternalInconsistency("double_of_modular: dim != (dim C)^2");
    if (center(p).members.size() != 1)
        throw InternalInconsistency("double_of_modular: center of C x C~ not trivial");
    return p;
}

std::optional<std::string> check_equivalence(const PremodularData& a, const PremodularData& b,
                                             const std::vector<int>& perm, bool check_smatrix) {
    if (a.rank != b.rank) return "rank mismatch";
    if (perm.size() != static_cast<size_t>(a.rank)) return "witness has wrong length";
    std::vector<char> hit(a.rank, 0);
    for (int t : perm) {
        if (t < 0 || t >= a.rank) return "witness target out of range";
        if (hit[t]) return "witness not injective";
        hit[t] = 1;
    }
    if (perm[a.unit] != b.unit) return "unit not preserved";
    for (int x = 0; x < a.rank; ++x)
        if (perm[a.dual[x]] != b.dual[perm[x]]) return "duals not preserved at " + a.label(x);
    const long m = std::lcm(a.conductor, b.conductor);
    for (int x = 0; x < a.rank; ++x) {
        if (embed(a.dims[x], m) != embed(b.dims[perm[x]], m))
            return "dimensions not preserved at " + a.label(x);
        if (embed(a.twists[x], m) != embed(b.twists[perm[x]], m))
            return "twists not preserved at " + a.label(x);
    }
    for (int x = 0; x < a.rank; ++x)
        for (int y = 0; y < a.rank; ++y)
            for (int z = 0; z < a.rank; ++z)
                if (a.n_of(x, y, z) != b.n_of(perm[x], perm[y], perm[z]))
                    return "fusion not preserved at (" + a.label(x) + "," + a.label(y) + "," +
                           a.label(z) + ")";
    if (check_smatrix) {
        const CycMatrix& sa = a.smatrix();
        const CycMatrix& sb = b.smatrix();
        for (int x = 0; x < a.rank; ++x)
            for (int y = 0; y < a.rank; ++y)
                if (embed(sa.at(x, y), m) != embed(sb.at(perm[x], perm[y]), m))
                    return "S not preserved at (" + a.label(x) + "," + a.label(y) + ")";
    }
    return std::nullopt;
}

SplitResult split_along(const PremodularData& d, const SubCat& k) {
    require_finalized(d, "split_along");
    if (!is_modular(d).modular)
        throw NotModular("split_along: ambient '" + d.name + "' is not modular");
    PremodularData kr = restrict_to(d, k);
    if (!is_modular(kr).modular)
        throw NotModular("split_along: subcategory " + k.to_string() + " is not modular");
    const SubCat l = centralizer(d, k);
    PremodularData lr = restrict_to(d, l);

    const int nk = k.size(), nl = l.size();
    if (static_cast<long>(nk) * nl != d.rank)
        throw SplitFailure("split_along: |K| * |C(K)| != rank");
    LabelBijection bij{nk, nl, std::vector<int>(static_cast<size_t>(nk) * nl, -1)};
    std::vector<char> hit(d.rank, 0);
    for (int i = 0; i < nk; ++i) {
        for (int j = 0; j < nl; ++j) {
            const int* row = d.n_row(k.members[i], l.members[j]);
            int target = -1;
            for (int z = 0; z < d.rank; ++z) {
                if (row[z] == 0) continue;
                if (target >= 0 || row[z] != 1)
                    throw SplitFailure("split_along: K (x) C(K) product not simple at (" +
                                       d.label(k.members[i]) + "," + d.label(l.members[j]) + ")");
                target = z;
            }
            if (target < 0)
                throw SplitFailure("split_along: empty fusion product in K x C(K)");
            if (hit[target])
                throw SplitFailure("split_along: canonical map not injective at " + d.label(target));
            hit[target] = 1;
            bij.to_target[static_cast<size_t>(i) * nl + j] = target;
        }
    }

    PremodularData prod = deligne_product(kr, lr);
    if (auto why = check_equivalence(prod, d, bij.to_target, true))
        throw SplitFailure("split_along: witness fails: " + *why);
    return SplitResult{std::move(kr), std::move(lr), std::move(bij)};
}

namespace {

std::string scalar_fingerprint(const PremodularData& d) {
    std::ostringstream os;
    for (const auto& x : d.dims) os << x.to_string();
    for (const auto& x : d.twists) os << x.to_string();
    return os.str();
}

void collect_leaves(const FactorNode& n, std::vector<const PremodularData*>& out) {
    if (n.is_leaf()) {
        out.push_back(&n.data);
        return;
    }
    collect_leaves(*n.left, out);
    collect_leaves(*n.right, out);
}

std::unique_ptr<FactorNode> clone_tree(const FactorNode& n) {
    auto out = std::make_unique<FactorNode>();
    out->data = n.data;
    out->witness = n.witness;
    if (!n.is_leaf()) {
        out->left = clone_tree(*n.left);
        out->right = clone_tree(*n.right);
    }
    return out;
}

std::unique_ptr<FactorNode> factor_tree_first(const PremodularData& d) {
    auto node = std::make_unique<FactorNode>();
    node->data = d;
    const auto lattice = enumerate_subcats(node->data);
    for (const auto& k : lattice) {
        if (k.is_trivial() || k.is_full()) continue;
        if (!is_modular(node->data, k).modular) continue;
        SplitResult s = split_along(node->data, k);
        node->witness = std::move(s.witness);
        node->left = factor_tree_first(s.left);
        node->right = factor_tree_first(s.right);
        return node;
    }
    return node; // prime: leaf
}

} // namespace

std::vector<const PremodularData*> Factorization::factors() const {
    std::vector<const PremodularData*> out;
    if (root) collect_leaves(*root, out);
    std::sort(out.begin(), out.end(), [](const PremodularData* a, const PremodularData* b) {
        if (a->rank != b->rank) return a->rank < b->rank;
        return scalar_fingerprint(*a) < scalar_fingerprint(*b);
    });
    return out;
}

Factorization prime_factorize(const PremodularData& d) {
    if (!is_modular(d).modular)
        throw NotModular("prime_factorize: '" + d.name + "' is not modular");
    Factorization f;
    if (d.rank == 1) return f; // trivial category: empty product
    f.root = factor_tree_first(d);
    return f;
}

namespace {

std::vector<std::unique_ptr<FactorNode>> all_factor_trees(const PremodularData& d) {
    std::vector<std::unique_ptr<FactorNode>> out;
    const auto lattice = enumerate_subcats(d);
    std::vector<SubCat> candidates;
    for (const auto& k : lattice) {
        if (k.is_trivial() || k.is_full()) continue;
        if (is_modular(d, k).modular) candidates.push_back(k);
    }
    if (candidates.empty()) {
        auto leaf = std::make_unique<FactorNode>();
        leaf->data = d;
        out.push_back(std::move(leaf));
        return out;
    }
    // one representative per equivalence class of first choices; the final
    // dedup over factor multisets makes this a pure optimization
    std::vector<PremodularData> representatives;
    std::vector<SubCat> chosen;
    for (const auto& k : candidates) {
        PremodularData kr = restrict_to(d, k);
        bool seen = false;
        for (const auto& r : representatives) {
            if (equivalent(kr, r)) {
                seen = true;
                break;
            }
        }
        if (!seen) {
            representatives.push_back(std::move(kr));
            chosen.push_back(k);
        }
    }
    for (const auto& k : chosen) {
        SplitResult s = split_along(d, k);
        const auto lefts = all_factor_trees(s.left);
        const auto rights = all_factor_trees(s.right);
        for (const auto& lt : lefts) {
            for (const auto& rt : rights) {
                auto node = std::make_unique<FactorNode>();
                node->data = d;
                node->witness = s.witness;
                node->left = clone_tree(*lt);
                node->right = clone_tree(*rt);
                out.push_back(std::move(node));
            }
        }
    }
    return out;
}

bool multiset_equivalent(const std::vector<const PremodularData*>& a,
                         const std::vector<const PremodularData*>& b) {
    if (a.size() != b.size()) return false;
    std::vector<char> used(b.size(), 0);
    for (const auto* fa : a) {
        bool matched = false;
        for (size_t i = 0; i < b.size(); ++i) {
            if (used[i]) continue;
            if (equivalent(*fa, *b[i])) {
                used[i] = 1;
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

} // namespace

std::vector<Factorization> prime_factorize_all(const PremodularData& d) {
    if (!is_modular(d).modular)
        throw NotModular("prime_factorize: '" + d.name + "' is not modular");
    std::vector<Factorization> out;
    if (d.rank == 1) {
        out.emplace_back();
        return out;
    }
    auto trees = all_factor_trees(d);
    std::vector<std::vector<const PremodularData*>> kept;
    for (auto& t : trees) {
        Factorization f;
        f.root = std::move(t);
        const auto leaves = f.factors();
        bool dup = false;
        for (const auto& prev : kept) {
            if (multiset_equivalent(leaves, prev)) {
                dup = true;
                break;
            }
        }
        if (!dup) {
            kept.push_back(leaves);
            out.push_back(std::move(f));
        }
    }
    return out;
}

namespace {

// Fingerprint used to prune the bijection search; labels can only map to
// labels with equal fingerprints.
std::string label_fingerprint(const PremodularData& d, int x, long m) {
    std::ostringstream os;
    os << embed(d.dims[x], m).to_string() << '|' << embed(d.twists[x], m).to_string() << '|'
       << (d.dual[x] == x ? 1 : 0) << '|';
    std::vector<std::string> parts;
    for (int z = 0; z < d.rank; ++z) {
        const int n = d.n_of(x, x, z);
        if (n != 0)
            parts.push_back(std::to_string(n) + ":" + embed(d.twists[z], m).to_string());
    }
    std::sort(parts.begin(), parts.end());
    for (const auto& p : parts) os << p << ',';
    return os.str();
}

struct EquivSearch {
    const PremodularData& a;
    const PremodularData& b;
    std::vector<std::string> fpa, fpb;
    std::vector<int> order;   // a-labels in assignment order, unit first
    std::vector<int> sigma;   // a-label -> b-label, -1 while unassigned
    std::vector<char> used;   // b-labels already taken
    std::vector<int> assigned;

    bool consistent(int x, int bx) const {
        const int dx = a.dual[x];
        if (sigma[dx] != -1 && sigma[dx] != b.dual[bx]) return false;
        // all fusion triples whose indices are assigned (or x itself)
        auto img = [&](int y) { return y == x ? bx : sigma[y]; };
        for (size_t i = 0; i <= assigned.size(); ++i) {
            const int y = (i == assigned.size()) ? x : assigned[i];
            for (size_t j = 0; j <= assigned.size(); ++j) {
                const int z = (j == assigned.size()) ? x : assigned[j];
                if (a.n_of(x, y, z) != b.n_of(bx, img(y), img(z))) return false;
                if (a.n_of(y, z, x) != b.n_of(img(y), img(z), bx)) return false;
            }
        }
        return true;
    }

    bool search(size_t depth) {
        if (depth == order.size()) return true;
        const int x = order[depth];
        if (x == a.unit) {
            const int bx = b.unit;
            if (!used[bx] && fpa[x] == fpb[bx] && consistent(x, bx)) {
                sigma[x] = bx;
                used[bx] = 1;
                assigned.push_back(x);
                if (search(depth + 1)) return true;
                assigned.pop_back();
                used[bx] = 0;
                sigma[x] = -1;
            }
            return false;
        }
        for (int bx = 0; bx < b.rank; ++bx) {
            if (used[bx] || fpa[x] != fpb[bx] || !consistent(x, bx)) continue;
            sigma[x] = bx;
            used[bx] = 1;
            assigned.push_back(x);
            if (search(depth + 1)) return true;
            assigned.pop_back();
            used[bx] = 0;
            sigma[x] = -1;
        }
        return false;
    }
};

// Assignment order: unit first, then prefer labels already expressible as a
// fusion product of placed ones, so most images are forced immediately.
std::vector<int> assignment_order(const PremodularData& d) {
    std::vector<int> order;
    std::vector<char> placed(d.rank, 0), reachable(d.rank, 0);
    auto place = [&](int w) {
        placed[w] = 1;
        order.push_back(w);
        for (int u : order) {
            const int* row = d.n_row(u, w);
            for (int z = 0; z < d.rank; ++z)
                if (row[z] != 0) reachable[z] = 1;
        }
    };
    place(d.unit);
    while (static_cast<int>(order.size()) < d.rank) {
        int next = -1;
        for (int x = 0; x < d.rank; ++x)
            if (!placed[x] && reachable[x]) {
                next = x;
                break;
            }
        if (next < 0) {
            for (int x = 0; x < d.rank; ++x)
                if (!placed[x]) {
                    next = x;
                    break;
                }
        }
        place(next);
    }
    return order;
}

} // namespace

std::optional<std::vector<int>> equivalent(const PremodularData& a, const PremodularData& b) {
    require_finalized(a, "equivalent");
    require_finalized(b, "equivalent");
    if (a.rank != b.rank) return std::nullopt;
    const long m = std::lcm(a.conductor, b.conductor);
    EquivSearch s{a, b, {}, {}, {}, {}, {}, {}};
    s.fpa.reserve(a.rank);
    s.fpb.reserve(b.rank);
    for (int x = 0; x < a.rank; ++x) s.fpa.push_back(label_fingerprint(a, x, m));
    for (int x = 0; x < b.rank; ++x) s.fpb.push_back(label_fingerprint(b, x, m));
    {
        auto sa = s.fpa, sb = s.fpb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    s.order = assignment_order(a);
    s.sigma.assign(a.rank, -1);
    s.used.assign(b.rank, 0);
    if (!s.search(0)) return std::nullopt;
    if (auto why = check_equivalence(a, b, s.sigma, true))
        throw InternalInconsistency("equivalent: witness failed post-verification: " + *why);
    return s.sigma;
}

Report verify_factorization(const Factorization& f) {
    Report rep;
    if (!f.root) {
        rep.add_pass("factorization-recombine", "trivial", "empty product");
        return rep;
    }
    // walk the tree iteratively to keep the report order deterministic
    std::vector<const FactorNode*> stack{f.root.get()};
    while (!stack.empty()) {
        const FactorNode* n = stack.back();
        stack.pop_back();
        if (n->is_leaf()) {
            if (is_prime_modular(n->data))
                rep.add_pass("factorization-leaf-prime", n->data.name);
            else
                rep.add_fail("factorization-leaf-prime", n->data.name);
            continue;
        }
        PremodularData prod = deligne_product(n->left->data, n->right->data);
        if (auto why = check_equivalence(prod, n->data, n->witness.to_target, true))
            rep.add_fail("factorization-recombine", n->data.name, *why);
        else
            rep.add_pass("factorization-recombine", n->data.name);
        stack.push_back(n->right.get());
        stack.push_back(n->left.get());
    }
    return rep;
}

bool is_prime_modular(const PremodularData& d) {
    if (!is_modular(d).modular) return false;
    if (d.rank == 1) return false; // the trivial category is the unit, not a prime
    for (const auto& k : enumerate_subcats(d)) {
        if (k.is_trivial() || k.is_full()) continue;
        if (is_modular(d, k).modular) return false;
    }
    return true;
}

CycNum closure_dimension(const PremodularData& d) {
    require_finalized(d, "closure_dimension");
    const CycNum dim_z2 = dim_members(d, center(d).members);
    if (dim_z2.is_zero())
        throw ZeroDimension("closure_dimension: dim Z2(C) = 0");
    return dim_category(d) * dim_z2.inverse();
}

} // namespace modcat
