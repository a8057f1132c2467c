#include "modcat/catalog.hpp"

#include <map>

#include "modcat/doubles.hpp"
#include "modcat/structure.hpp"

namespace modcat {

namespace {

// rank-2 pointed category with Z2 fusion: labels {1, g}, d = (1,1),
// omega = (1, twist_g)
PremodularData pointed_z2(const std::string& name, long conductor, CycNum twist_g) {
    PremodularData d;
    d.name = name;
    d.conductor = conductor;
    d.rank = 2;
    d.labels = {"1", "g"};
    d.unit = 0;
    d.dual = {0, 1};
    d.dims = {CycNum::one(conductor), CycNum::one(conductor)};
    d.twists = {CycNum::one(conductor), std::move(twist_g)};
    d.fusion.assign(8, 0);
    d.n_mut(0, 0, 0) = d.n_mut(0, 1, 1) = d.n_mut(1, 0, 1) = d.n_mut(1, 1, 0) = 1;
    finalize(d);
    return d;
}

PremodularData make_vec() {
    PremodularData d;
    d.name = "vec";
    d.conductor = 1;
    d.rank = 1;
    d.labels = {"1"};
    d.unit = 0;
    d.dual = {0};
    d.dims = {CycNum::one(1)};
    d.twists = {CycNum::one(1)};
    d.fusion = {1};
    finalize(d);
    return d;
}

PremodularData make_fib() {
    PremodularData d;
    d.name = "fib";
    d.conductor = 5;
    d.rank = 2;
    d.labels = {"1", "tau"};
    d.unit = 0;
    d.dual = {0, 1};
    // d(tau) = -zeta5^2 - zeta5^3, the golden ratio; omega_tau = zeta5^2
    d.dims = {CycNum::one(5),
              CycNum::from_coeffs(5, {Rational(0), Rational(0), Rational(-1), Rational(-1)})};
    d.twists = {CycNum::one(5), CycNum::root_of_unity(5, 2)};
    d.fusion.assign(8, 0);
    d.n_mut(0, 0, 0) = d.n_mut(0, 1, 1) = d.n_mut(1, 0, 1) = 1;
    d.n_mut(1, 1, 0) = d.n_mut(1, 1, 1) = 1;
    finalize(d);
    return d;
}

PremodularData make_ising() {
    PremodularData d;
    d.name = "ising";
    d.conductor = 16;
    d.rank = 3;
    d.labels = {"1", "eps", "sigma"};
    d.unit = 0;
    d.dual = {0, 1, 2};
    // d(sigma) = zeta8 + zeta8^7 = sqrt(2) = zeta16^2 - zeta16^6
    CycNum sqrt2 = CycNum::root_of_unity(16, 2) + CycNum::root_of_unity(16, 14);
    d.dims = {CycNum::one(16), CycNum::one(16), std::move(sqrt2)};
    d.twists = {CycNum::one(16), -CycNum::one(16), CycNum::root_of_unity(16, 1)};
    d.fusion.assign(27, 0);
    d.n_mut(0, 0, 0) = d.n_mut(0, 1, 1) = d.n_mut(0, 2, 2) = 1;
    d.n_mut(1, 0, 1) = d.n_mut(2, 0, 2) = 1;
    d.n_mut(1, 1, 0) = 1;              // eps (x) eps = 1
    d.n_mut(1, 2, 2) = d.n_mut(2, 1, 2) = 1; // eps (x) sigma = sigma
    d.n_mut(2, 2, 0) = d.n_mut(2, 2, 1) = 1; // sigma^2 = 1 + eps
    finalize(d);
    return d;
}

PremodularData renamed(PremodularData d, const std::string& name) {
    d.name = name;
    return d;
}

std::map<std::string, CatalogEntry> build_catalog() {
    std::map<std::string, CatalogEntry> cat;
    auto put = [&cat](const std::string& key, PremodularData data, CatalogExpected exp) {
        cat.emplace(key, CatalogEntry{key, std::move(data), exp});
    };
    const double golden = 1.6180339887498949;

    put("vec", make_vec(), {true, false, 1.0, 1, 1});
    put("semion", pointed_z2("semion", 4, CycNum::root_of_unity(4, 1)), {true, true, 2.0, 1, 2});
    put("fib", make_fib(), {true, true, 1.0 + golden * golden, 1, 2});
    put("ising", make_ising(), {true, true, 4.0, 1, 3});
    put("rep-z2-sym", pointed_z2("rep-z2-sym", 2, CycNum::one(2)), {false, false, 2.0, 2, 2});
    put("toric", renamed(drinfeld_double(AbelianGroup::from_orders({2})), "toric"),
        {true, true, 4.0, 1, 5});
    put("dz3", renamed(drinfeld_double(AbelianGroup::from_orders({3})), "dz3"),
        {true, false, 9.0, 1, 6});
    put("dz4", renamed(drinfeld_double(AbelianGroup::from_orders({4})), "dz4"),
        {true, true, 16.0, 1, 15});
    put("dz5", renamed(drinfeld_double(AbelianGroup::from_orders({5})), "dz5"),
        {true, false, 25.0, 1, 8});
    put("dz9", renamed(drinfeld_double(AbelianGroup::from_orders({9})), "dz9"),
        {true, false, 81.0, 1, 23});
    put("fib-x-ising",
        renamed(deligne_product(cat.at("fib").data, cat.at("ising").data), "fib-x-ising"),
        {true, false, 4.0 * (1.0 + golden * golden), 1, 6});
    return cat;
}

const std::map<std::string, CatalogEntry>& catalog_all() {
    static const std::map<std::string, CatalogEntry> cat = build_catalog();
    return cat;
}

} // namespace

const std::vector<std::string>& catalog_keys() {
    static const std::vector<std::string> keys = {"vec",  "semion", "fib", "ising",
                                                  "rep-z2-sym", "toric", "dz3", "dz4",
                                                  "dz5",  "dz9",    "fib-x-ising"};
    return keys;
}

const CatalogEntry& catalog_entry(const std::string& key) {
    const auto& cat = catalog_all();
    auto it = cat.find(key);
    if (it == cat.end()) throw UnknownKey("unknown catalog key: " + key);
    return it->second;
}

PremodularData catalog_get(const std::string& key) {
    return catalog_entry(key).data;
}

} // namespace modcat
