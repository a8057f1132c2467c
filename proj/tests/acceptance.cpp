// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "modcat/catalog.hpp"
#include "modcat/doubles.hpp"
#include "modcat/structure.hpp"
#include "modcat/verify.hpp"

using namespace modcat;
using Clock = std::chrono::steady_clock;

namespace {

struct Checker {
    bool ok = true;
    std::string note;
    void require(bool cond, const std::string& msg) {
        if (!cond && ok) {
            ok = false;
            note = msg;
        }
    }
};

int g_failures = 0;

void criterion(const std::string& id, const std::string& title,
               const std::function<void(Checker&)>& body) {
    Checker c;
    const auto t0 = Clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("%s %s: %s (%.1f s)%s%s\n", c.ok ? "PASS" : "FAIL", id.c_str(), title.c_str(),
                secs, c.note.empty() ? "" : " -- ", c.note.c_str());
    std::fflush(stdout);
    if (!c.ok) ++g_failures;
}

const std::vector<std::string> kModularKeys = {"vec",  "semion", "fib",  "ising",      "toric",
                                               "dz3",  "dz4",    "dz5",  "fib-x-ising"};

} // namespace

int main() {
    criterion("criterion-1", "cyclic double classification counts", [](Checker& c) {
        struct Row {
            long p, n, expected;
            int rank;
        };
        const std::vector<Row> rows = {
            {2, 1, 0, 4}, {2, 2, 0, 16}, {3, 1, 2, 9}, {5, 1, 4, 25}, {3, 2, 6, 81}};
        for (const auto& row : rows) {
            const auto t0 = Clock::now();
            const auto r = classify_modular_subcats_cyclic(row.p, row.n);
            const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
            const std::string tag =
                "(" + std::to_string(row.p) + "," + std::to_string(row.n) + ")";
            c.require(r.report.all_pass(), tag + " report has failures");
            c.require(static_cast<long>(r.modular_subcats.size()) == row.expected,
                      tag + " wrong count");
            c.require(r.double_data.rank == row.rank, tag + " wrong rank");
            c.require(secs < 60.0, tag + " exceeded 60 s");
            if (row.p == 5) {
                // centralizer pairing m -> -m mod 5 over alphas {1,2,3,4}
                c.require(r.alphas == std::vector<long>({1, 2, 3, 4}), "(5,1) wrong alphas");
            }
            if (row.p == 3 && row.n == 2) {
                for (const auto& mem : r.modular_subcats)
                    c.require(mem.size() == 9, "(3,2) subcategory not of rank 9");
            }
        }
    });

    criterion("criterion-2", "double centralizer suite on all modular catalog entries",
              [](Checker& c) {
                  for (const auto& key : kModularKeys) {
                      const auto rep = verify_dct(catalog_get(key));
                      c.require(rep.all_pass(),
                                key + ": " + std::to_string(rep.failures()) + " failures");
                  }
              });

    criterion("criterion-3", "lemma suite on ALL catalog entries (< 120 s)", [](Checker& c) {
        const auto t0 = Clock::now();
        for (const auto& key : catalog_keys()) {
            const auto rep = verify_lemma_suite(catalog_get(key));
            c.require(rep.all_pass(), key + ": " + std::to_string(rep.failures()) + " failures");
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        c.require(secs < 120.0, "total runtime " + std::to_string(secs) + " s exceeds 120 s");
    });

    criterion("criterion-4", "modularity criteria agree on every entry and restriction",
              [](Checker& c) {
                  for (const auto& key : catalog_keys()) {
                      const auto rep = verify_modularity_agreement(catalog_get(key));
                      c.require(rep.all_pass(), key + ": disagreement found");
                  }
              });

    criterion("criterion-5", "prime factorizations", [](Checker& c) {
        const auto f3 = prime_factorize(catalog_get("dz3"));
        const auto f3_factors = f3.factors();
        c.require(f3_factors.size() == 2, "dz3: expected 2 factors");
        for (const auto* f : f3_factors) c.require(f->rank == 3, "dz3: factor not rank 3");
        c.require(verify_factorization(f3).all_pass(), "dz3: recombination failed");

        c.require(prime_factorize_all(catalog_get("dz5")).size() == 2,
                  "dz5: expected exactly 2 unordered factorizations");

        for (const auto& key : {"fib", "ising", "semion", "toric", "dz4"}) {
            const auto f = prime_factorize(catalog_get(key));
            c.require(f.factors().size() == 1 && is_prime_modular(*f.factors()[0]),
                      std::string(key) + ": expected prime");
        }

        const auto ffi = prime_factorize(catalog_get("fib-x-ising"));
        const auto fi_factors = ffi.factors();
        c.require(fi_factors.size() == 2, "fib-x-ising: expected 2 factors");
        if (fi_factors.size() == 2) {
            c.require(equivalent(*fi_factors[0], catalog_get("fib")).has_value(),
                      "fib-x-ising: first factor not equivalent to fib");
            c.require(equivalent(*fi_factors[1], catalog_get("ising")).has_value(),
                      "fib-x-ising: second factor not equivalent to ising");
        }
        c.require(verify_factorization(ffi).all_pass(), "fib-x-ising: recombination failed");
    });

    criterion("criterion-6", "S^2 = dimC * C entrywise on every modular entry incl. dz9 (< 5 min)",
              [](Checker& c) {
                  const auto t0 = Clock::now();
                  auto keys = kModularKeys;
                  keys.push_back("dz9");
                  for (const auto& key : keys) {
                      const PremodularData d = catalog_get(key);
                      const CycMatrix& s = d.smatrix();
                      const CycMatrix expected = charge_conjugation(d) * dim_category(d);
                      c.require(s * s == expected, key + ": S^2 != dimC * C");
                  }
                  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
                  c.require(secs < 300.0, "runtime " + std::to_string(secs) + " s exceeds 5 min");
              });

    criterion("criterion-7", "dimension bound with exact equality characterization",
              [](Checker& c) {
                  auto keys = kModularKeys;
                  keys.push_back("dz9");
                  bool ising_equality_seen = false;
                  for (const auto& key : keys) {
                      const auto rep = verify_bound(catalog_get(key));
                      c.require(rep.all_pass(), key + ": bound violated");
                      if (key == "ising") {
                          for (const auto& chk : rep.checks())
                              if (chk.id == "dimension-bound" &&
                                  chk.instance.find("{1,eps}") != std::string::npos &&
                                  chk.detail == "equality")
                                  ising_equality_seen = true;
                      }
                  }
                  c.require(ising_equality_seen, "ising K={1,eps} equality case not reproduced");
              });

    criterion("criterion-8", "doubles S-matrix formula for |G| <= 12; D(Z6) = D(Z2) x D(Z3)",
              [](Checker& c) {
                  const std::vector<std::vector<long>> groups = {
                      {},  {2},    {3},       {4},  {2, 2}, {5},    {6},  {7},   {8},
                      {4, 2}, {2, 2, 2}, {9}, {3, 3}, {10},   {11}, {12}, {6, 2}};
                  for (const auto& orders : groups) {
                      const AbelianGroup g = AbelianGroup::from_orders(orders);
                      const PremodularData d = drinfeld_double(g);
                      const long m = g.order();
                      const long e = g.exponent();
                      const CycMatrix& s = d.smatrix();
                      bool entrywise = true;
                      for (long g1 = 0; g1 < m && entrywise; ++g1)
                          for (long c1 = 0; c1 < m && entrywise; ++c1)
                              for (long g2 = 0; g2 < m && entrywise; ++g2)
                                  for (long c2 = 0; c2 < m && entrywise; ++c2) {
                                      const long expo = (g.pairing_exponent(c2, g1) +
                                                         g.pairing_exponent(c1, g2)) % e;
                                      if (s.at(g1 * m + c1, g2 * m + c2) !=
                                          CycNum::root_of_unity(e, expo))
                                          entrywise = false;
                                  }
                      c.require(entrywise, d.name + ": S != pairing formula");
                  }
                  const PremodularData d6 = drinfeld_double(AbelianGroup::from_orders({6}));
                  const PremodularData p =
                      deligne_product(drinfeld_double(AbelianGroup::from_orders({2})),
                                      drinfeld_double(AbelianGroup::from_orders({3})));
                  c.require(equivalent(d6, p).has_value(), "no witness for D(Z6) = D(Z2) x D(Z3)");
              });

    criterion("criterion-9", "modular-closure dimensions", [](Checker& c) {
        c.require(closure_dimension(catalog_get("rep-z2-sym")).is_one(),
                  "closure_dimension(rep-z2-sym) != 1");
        const PremodularData ising = catalog_get("ising");
        const PremodularData r = restrict_to(ising, subcat_from_members(ising, {0, 1}));
        c.require(closure_dimension(r).is_one(), "closure_dimension(ising|{1,eps}) != 1");
    });

    std::printf("%s: %d of 9 criteria failed\n", g_failures == 0 ? "ALL PASS" : "FAILURES",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}
