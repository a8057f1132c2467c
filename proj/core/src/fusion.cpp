#include "modcat/fusion.hpp"

#include <sstream>

namespace modcat {

const CycMatrix& PremodularData::smatrix() const {
    if (!smat) throw Error("smatrix: data not finalized (compute_S has not run)");
    return *smat;
}

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    for (const auto& v : violations) os << v << '\n';
    return os.str();
}

namespace {

std::string at2(const PremodularData& d, int x, int y) {
    return "(" + d.label(x) + "," + d.label(y) + ")";
}

std::string at3(const PremodularData& d, int x, int y, int z) {
    return "(" + d.label(x) + "," + d.label(y) + "," + d.label(z) + ")";
}

void check_structure(const PremodularData& d, std::vector<std::string>& vio) {
    if (d.rank < 1) vio.push_back("structure: rank must be >= 1");
    if (d.conductor < 1) vio.push_back("structure: conductor must be >= 1");
    if (d.labels.size() != static_cast<size_t>(d.rank))
        vio.push_back("structure: labels length != rank");
    if (d.unit < 0 || d.unit >= d.rank) vio.push_back("structure: unit index out of range");
    if (d.dual.size() != static_cast<size_t>(d.rank))
        vio.push_back("structure: dual length != rank");
    for (size_t i = 0; i < d.dual.size(); ++i)
        if (d.dual[i] < 0 || d.dual[i] >= d.rank)
            vio.push_back("structure: dual[" + std::to_string(i) + "] out of range");
    const size_t r3 = static_cast<size_t>(d.rank) * d.rank * d.rank;
    if (d.fusion.size() != r3) vio.push_back("structure: fusion tensor size != rank^3");
    for (size_t i = 0; i < d.fusion.size(); ++i) {
        if (d.fusion[i] < 0) {
            vio.push_back("structure: negative fusion coefficient at flat index " + std::to_string(i));
            break;
        }
    }
    if (d.dims.size() != static_cast<size_t>(d.rank))
        vio.push_back("structure: dims length != rank");
    if (d.twists.size() != static_cast<size_t>(d.rank))
        vio.push_back("structure: twists length != rank");
    for (const auto& x : d.dims)
        if (x.conductor() != d.conductor) {
            vio.push_back("structure: dimension conductor differs from data conductor");
            break;
        }
    for (const auto& x : d.twists)
        if (x.conductor() != d.conductor) {
            vio.push_back("structure: twist conductor differs from data conductor");
            break;
        }
}

void check_associativity(const PremodularData& d, std::vector<std::string>& vio) {
    const int r = d.rank;
    // Nonzero lists per (a,b) pair make both sides of
    //   sum_w N[x][y][w] N[w][z][u] = sum_w N[y][z][w] N[x][w][u]
    // cost O(nonzeros) instead of O(r^2) per pair; group-law fusion at rank
    // 289 stays near r^3 operations.
    std::vector<std::vector<std::pair<int, int>>> nz(static_cast<size_t>(r) * r);
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            const int* row = d.n_row(a, b);
            auto& list = nz[static_cast<size_t>(a) * r + b];
            for (int z = 0; z < r; ++z)
                if (row[z] != 0) list.emplace_back(z, row[z]);
        }
    std::vector<long long> lhs(static_cast<size_t>(r) * r, 0), rhs(static_cast<size_t>(r) * r, 0);
    std::vector<size_t> lhs_touched, rhs_touched;
    for (int x = 0; x < r; ++x) {
        for (int y = 0; y < r; ++y) {
            lhs_touched.clear();
            rhs_touched.clear();
            for (const auto& [w, c] : nz[static_cast<size_t>(x) * r + y]) {
                for (int z = 0; z < r; ++z) {
                    for (const auto& [u, v] : nz[static_cast<size_t>(w) * r + z]) {
                        const size_t idx = static_cast<size_t>(z) * r + u;
                        if (lhs[idx] == 0) lhs_touched.push_back(idx);
                        lhs[idx] += static_cast<long long>(c) * v;
                    }
                }
            }
            for (int z = 0; z < r; ++z) {
                for (const auto& [w, c] : nz[static_cast<size_t>(y) * r + z]) {
                    for (const auto& [u, v] : nz[static_cast<size_t>(x) * r + w]) {
                        const size_t idx = static_cast<size_t>(z) * r + u;
                        if (rhs[idx] == 0) rhs_touched.push_back(idx);
                        rhs[idx] += static_cast<long long>(c) * v;
                    }
                }
            }
            for (const size_t idx : lhs_touched)
                if (lhs[idx] != rhs[idx])
                    vio.push_back("associativity at " +
                                  at3(d, x, y, static_cast<int>(idx / r)) + "->" +
                                  d.label(static_cast<int>(idx % r)));
            for (const size_t idx : rhs_touched)
                if (lhs[idx] == 0 && rhs[idx] != 0)
                    vio.push_back("associativity at " +
                                  at3(d, x, y, static_cast<int>(idx / r)) + "->" +
                                  d.label(static_cast<int>(idx % r)));
            for (const size_t idx : lhs_touched) lhs[idx] = 0;
            for (const size_t idx : rhs_touched) rhs[idx] = 0;
        }
    }
}

} // namespace

ValidationReport validate(const PremodularData& d) {
    ValidationReport rep;
    auto& vio = rep.violations;
    check_structure(d, vio);
    if (!vio.empty()) return rep; // indexing below needs sound shapes

    const int r = d.rank;
    const int u0 = d.unit;

    for (int y = 0; y < r; ++y)
        for (int z = 0; z < r; ++z) {
            if (d.n_of(u0, y, z) != (y == z ? 1 : 0))
                vio.push_back("unit law (left) at " + at2(d, y, z));
            if (d.n_of(y, u0, z) != (y == z ? 1 : 0))
                vio.push_back("unit law (right) at " + at2(d, y, z));
        }

    for (int x = 0; x < r; ++x)
        for (int y = 0; y < x; ++y)
            for (int z = 0; z < r; ++z)
                if (d.n_of(x, y, z) != d.n_of(y, x, z))
                    vio.push_back("commutativity at " + at3(d, x, y, z));

    check_associativity(d, vio);

    for (int x = 0; x < r; ++x)
        for (int y = 0; y < r; ++y)
            if (d.n_of(x, y, u0) != (y == d.dual[x] ? 1 : 0))
                vio.push_back("duality N[x][y][unit] = delta at " + at2(d, x, y));

    if (d.dual[u0] != u0) vio.push_back("dual fixes unit");
    for (int x = 0; x < r; ++x)
        if (d.dual[d.dual[x]] != x) vio.push_back("dual involution at " + d.label(x));

    if (!d.dims[u0].is_one()) vio.push_back("d(unit) = 1");
    for (int x = 0; x < r; ++x)
        if (d.dims[x] != d.dims[d.dual[x]])
            vio.push_back("d(X) = d(dual X) at " + d.label(x));
    for (int x = 0; x < r; ++x) {
        for (int y = 0; y < r; ++y) {
            CycNum sum = CycNum::zero(d.conductor);
            const int* row = d.n_row(x, y);
            for (int z = 0; z < r; ++z)
                if (row[z] != 0) sum += d.dims[z] * Rational(row[z]);
            if (sum != d.dims[x] * d.dims[y])
                vio.push_back("dimension homomorphism at " + at2(d, x, y));
        }
    }

    if (!d.twists[u0].is_one()) vio.push_back("omega(unit) = 1");
    for (int x = 0; x < r; ++x)
        if (d.twists[x] != d.twists[d.dual[x]])
            vio.push_back("omega(X) = omega(dual X) at " + d.label(x));
    for (int x = 0; x < r; ++x)
        if (!d.twists[x].pow(d.conductor).is_one())
            vio.push_back("omega(X)^conductor = 1 at " + d.label(x));

    return rep;
}

namespace {

void require_valid(const PremodularData& d) {
    if (d.finalized) return;
    auto rep = validate(d);
    if (!rep.ok())
        throw InvalidData("invalid premodular data '" + d.name + "':\n" + rep.to_string());
}

} // namespace

const CycMatrix& compute_S(PremodularData& d) {
    if (d.smat) return *d.smat;
    require_valid(d);
    const int r = d.rank;
    std::vector<CycNum> tw_inv, wd;
    tw_inv.reserve(r);
    wd.reserve(r);
    for (int x = 0; x < r; ++x) {
        tw_inv.push_back(d.twists[x].inverse());
        wd.push_back(d.twists[x] * d.dims[x]);
    }
    CycMatrix s(r, r, d.conductor);
    for (int x = 0; x < r; ++x) {
        for (int y = 0; y < r; ++y) {
            CycNum acc = CycNum::zero(d.conductor);
            const int* row = d.n_row(x, y);
            for (int z = 0; z < r; ++z)
                if (row[z] != 0) acc += wd[z] * Rational(row[z]);
            s.set(x, y, acc * tw_inv[x] * tw_inv[y]);
        }
    }
    for (int x = 0; x < r; ++x) {
        if (s.at(d.unit, x) != d.dims[x])
            throw InternalInconsistency("compute_S: unit row != dims at " + d.label(x));
        for (int y = 0; y < x; ++y)
            if (s.at(x, y) != s.at(y, x))
                throw InternalInconsistency("compute_S: asymmetric at " + at2(d, x, y));
    }
    d.smat = std::move(s);
    return *d.smat;
}

void finalize(PremodularData& d) {
    if (d.finalized) return;
    auto rep = validate(d);
    if (!rep.ok())
        throw InvalidData("invalid premodular data '" + d.name + "':\n" + rep.to_string());
    compute_S(d);
    d.finalized = true;
}

PremodularData finalized(PremodularData d) {
    finalize(d);
    return d;
}

CycNum dim_category(const PremodularData& d) {
    require_valid(d);
    CycNum sum = CycNum::zero(d.conductor);
    for (const auto& dim : d.dims) sum += dim * dim;
    return sum;
}

CycMatrix charge_conjugation(const PremodularData& d) {
    require_valid(d);
    CycMatrix c(d.rank, d.rank, d.conductor);
    for (int x = 0; x < d.rank; ++x) c.set(x, d.dual[x], CycNum::one(d.conductor));
    return c;
}

bool unitary_diagnostic(const PremodularData& d) {
    require_valid(d);
    const CycNum one = CycNum::one(d.conductor);
    for (const auto& dim : d.dims) {
        if (dim.conj() != dim) return false;
        if (real_sign(dim) != Sign::positive) return false;
    }
    for (const auto& tw : d.twists)
        if (tw * tw.conj() != one) return false;
    return true;
}

} // namespace modcat
