#include "modcat/subcat.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace modcat {

bool SubCat::contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

std::string SubCat::to_string() const {
    std::vector<std::string> names;
    names.reserve(members.size());
    for (int m : members) names.push_back(parent->label(m));
    std::sort(names.begin(), names.end());
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < names.size(); ++i) {
        if (i) os << ',';
        os << names[i];
    }
    os << '}';
    return os.str();
}

namespace {

void require_finalized(const PremodularData& d) {
    if (!d.finalized)
        throw Error("subcat operation on non-finalized data '" + d.name + "'");
}

void require_same_parent(const PremodularData& d, const SubCat& k, const char* op) {
    if (k.parent != &d)
        throw ParentMismatch(std::string(op) + ": subcategory belongs to a different parent");
}

// First closure violation, if any: unit membership, dual closure, fusion closure.
std::optional<std::string> closure_violation(const PremodularData& d, const std::vector<int>& mem) {
    if (!std::binary_search(mem.begin(), mem.end(), d.unit)) return "unit not a member";
    for (int x : mem)
        if (!std::binary_search(mem.begin(), mem.end(), d.dual[x]))
            return "not dual-closed at " + d.label(x);
    for (int x : mem) {
        for (int y : mem) {
            const int* row = d.n_row(x, y);
            for (int z = 0; z < d.rank; ++z)
                if (row[z] != 0 && !std::binary_search(mem.begin(), mem.end(), z))
                    return "not fusion-closed: " + d.label(x) + " (x) " + d.label(y) +
                           " contains " + d.label(z);
        }
    }
    return std::nullopt;
}

} // namespace

SubCat subcat_from_members(const PremodularData& d, std::vector<int> members) {
    require_finalized(d);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int m : members)
        if (m < 0 || m >= d.rank) throw IndexOutOfRange("subcat member index out of range");
    if (auto why = closure_violation(d, members))
        throw InvalidSubcat("not a closed subset: " + *why);
    return SubCat{&d, std::move(members)};
}

SubCat generated(const PremodularData& d, const std::vector<int>& seeds) {
    require_finalized(d);
    for (int s : seeds)
        if (s < 0 || s >= d.rank) throw IndexOutOfRange("seed index out of range");
    std::vector<char> in(d.rank, 0);
    std::vector<int> mem;
    auto push = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            mem.push_back(x);
        }
    };
    push(d.unit);
    for (int s : seeds) push(s);
    // Worklist closure; commutativity makes (x, y) with y later than x covered
    // when y reaches the front.
    for (size_t i = 0; i < mem.size(); ++i) {
        const int x = mem[i];
        push(d.dual[x]);
        for (size_t j = 0; j <= i; ++j) {
            const int* row = d.n_row(x, mem[j]);
            for (int z = 0; z < d.rank; ++z)
                if (row[z] != 0) push(z);
        }
    }
    std::sort(mem.begin(), mem.end());
    return SubCat{&d, std::move(mem)};
}

SubCat centralizer(const PremodularData& d, const SubCat& k) {
    require_finalized(d);
    require_same_parent(d, k, "centralizer");
    const CycMatrix& s = d.smatrix();
    std::vector<int> mem;
    for (int x = 0; x < d.rank; ++x) {
        bool central = true;
        for (int y : k.members) {
            if (s.at(x, y) != d.dims[x] * d.dims[y]) {
                central = false;
                break;
            }
        }
        if (central) mem.push_back(x);
    }
    if (auto why = closure_violation(d, mem))
        throw InternalInconsistency("centralizer not closed (contradicts the centralizer lemma): " + *why);
    return SubCat{&d, std::move(mem)};
}

SubCat center(const PremodularData& d) {
    require_finalized(d);
    std::vector<int> all(d.rank);
    for (int i = 0; i < d.rank; ++i) all[i] = i;
    return centralizer(d, SubCat{&d, std::move(all)});
}

PremodularData restrict_to(const PremodularData& d, const SubCat& k) {
    require_finalized(d);
    require_same_parent(d, k, "restrict");
    if (auto why = closure_violation(d, k.members))
        throw InvalidSubcat("restrict: not a closed subset: " + *why);
    const int r = k.size();
    std::vector<int> pos(d.rank, -1);
    for (int i = 0; i < r; ++i) pos[k.members[i]] = i;

    PremodularData out;
    out.name = d.name + "|" + k.to_string();
    out.conductor = d.conductor;
    out.rank = r;
    out.unit = pos[d.unit];
    for (int m : k.members) {
        out.labels.push_back(d.labels[m]);
        out.dual.push_back(pos[d.dual[m]]);
        out.dims.push_back(d.dims[m]);
        out.twists.push_back(d.twists[m]);
    }
    out.fusion.assign(static_cast<size_t>(r) * r * r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int l = 0; l < r; ++l)
                out.n_mut(i, j, l) = d.n_of(k.members[i], k.members[j], k.members[l]);
    finalize(out);

    const CycMatrix& sk = out.smatrix();
    const CycMatrix& sp = d.smatrix();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (sk.at(i, j) != sp.at(k.members[i], k.members[j]))
                throw InternalInconsistency("restrict: S of restriction differs from restricted S at (" +
                                            out.label(i) + "," + out.label(j) + ")");
    return out;
}

CycNum chi_sum(const PremodularData& d, const SubCat& k, int x) {
    require_finalized(d);
    require_same_parent(d, k, "chi_sum");
    if (x < 0 || x >= d.rank) throw IndexOutOfRange("chi_sum: label out of range");
    const CycMatrix& s = d.smatrix();
    CycNum acc = CycNum::zero(d.conductor);
    for (int y : k.members) acc += d.dims[y] * s.at(x, y);
    return acc;
}

SubCat join(const SubCat& k1, const SubCat& k2) {
    if (k1.parent == nullptr || k1.parent != k2.parent)
        throw ParentMismatch("join: subcategories of different parents");
    std::vector<int> seeds = k1.members;
    seeds.insert(seeds.end(), k2.members.begin(), k2.members.end());
    return generated(*k1.parent, seeds);
}

std::vector<SubCat> enumerate_subcats(const PremodularData& d) {
    require_finalized(d);
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> list;
    auto add = [&](std::vector<int> mem) {
        if (seen.insert(mem).second) list.push_back(std::move(mem));
    };
    for (int x = 0; x < d.rank; ++x) add(generated(d, {x}).members);
    add(generated(d, {}).members);
    // Join-close; every closed subset is the join of its singly-generated parts,
    // so the fixpoint is the complete lattice.
    for (size_t i = 0; i < list.size(); ++i) {
        for (size_t j = 0; j < i; ++j) {
            if (std::includes(list[i].begin(), list[i].end(), list[j].begin(), list[j].end()) ||
                std::includes(list[j].begin(), list[j].end(), list[i].begin(), list[i].end()))
                continue;
            std::vector<int> seeds = list[i];
            seeds.insert(seeds.end(), list[j].begin(), list[j].end());
            add(generated(d, seeds).members);
        }
    }
    std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<SubCat> out;
    out.reserve(list.size());
    for (auto& mem : list) out.push_back(SubCat{&d, std::move(mem)});
    return out;
}

CycNum dim_members(const PremodularData& d, const std::vector<int>& members) {
    CycNum acc = CycNum::zero(d.conductor);
    for (int m : members) acc += d.dims[m] * d.dims[m];
    return acc;
}

ModularityWitness is_modular(const PremodularData& d) {
    require_finalized(d);
    if (dim_category(d).is_zero())
        throw ZeroDimension("is_modular: dim C = 0 for '" + d.name + "'");
    ModularityWitness w;
    w.center_members = center(d).members;
    w.center_trivial = (w.center_members.size() == 1);
    w.det = det_exact(d.smatrix());
    w.det_nonzero = !w.det.is_zero();
    if (w.center_trivial != w.det_nonzero)
        throw InternalInconsistency(
            "is_modular: trivial-center and det(S) != 0 criteria disagree on '" + d.name + "'");
    w.modular = w.center_trivial;
    return w;
}

ModularityWitness is_modular(const PremodularData& d, const SubCat& k) {
    PremodularData restricted = restrict_to(d, k);
    return is_modular(restricted);
}

} // namespace modcat
