#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "zagreb/canonical.hpp"
#include "zagreb/constructors.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/verifier.hpp"

using namespace zagreb;

namespace {

const ClaimEntry* find_entry(const VerificationReport& rep,
                             const std::string& id, int n, int k,
                             const std::string& cls,
                             const std::string& index) {
  for (const ClaimEntry& e : rep.entries) {
    if (e.claim_id == id && e.n == n && e.k == k && e.cls == cls &&
        e.index == index) {
      return &e;
    }
  }
  return nullptr;
}

}  // namespace

TEST_CASE("find_extrema locates the known optima on five vertices") {
  ExtremalRecord mx = find_extrema(5, 1, GraphClass::vertex_class,
                                   IndexKind::pi1, Direction::maximum);
  CHECK(mx.optimum == ExactProduct::from_integer(11664));
  CHECK(mx.extremal_g6 ==
        std::vector<std::string>{canonical_form(knk(5, 1)).bytes});
  CHECK(mx.class_size == 11);  // 21 connected classes minus 10 biconnected

  ExtremalRecord mx2 = find_extrema(5, 2, GraphClass::vertex_class,
                                    IndexKind::pi1, Direction::maximum);
  CHECK(mx2.optimum == ExactProduct::from_integer(82944));
  CHECK(mx2.extremal_g6 ==
        std::vector<std::string>{canonical_form(knk(5, 2)).bytes});

  for (int k = 1; k <= 4; ++k) {
    ExtremalRecord mn = find_extrema(5, k, GraphClass::vertex_class,
                                     IndexKind::pi1, Direction::minimum);
    CHECK(mn.optimum == ExactProduct::from_integer(16));
    CHECK(mn.extremal_g6 ==
          std::vector<std::string>{canonical_form(star(5)).bytes});
  }
  ExtremalRecord mnp = find_extrema(5, 3, GraphClass::edge_class,
                                    IndexKind::pi2, Direction::minimum);
  CHECK(mnp.optimum == ExactProduct::from_integer(64));
  CHECK(mnp.extremal_g6 ==
        std::vector<std::string>{canonical_form(path(5)).bytes});

  CHECK_THROWS_AS(find_extrema(1, 1, GraphClass::vertex_class, IndexKind::pi1,
                               Direction::maximum),
                  std::invalid_argument);
  CHECK_THROWS_AS(find_extrema(5, 5, GraphClass::vertex_class, IndexKind::pi1,
                               Direction::maximum),
                  std::invalid_argument);
}

TEST_CASE("find_extrema maxima are nondecreasing in k") {
  // Larger k only widens the class, so the class maximum cannot drop.
  ExactProduct prev = ExactProduct::zero();
  for (int k = 1; k <= 5; ++k) {
    ExtremalRecord rec = find_extrema(6, k, GraphClass::vertex_class,
                                      IndexKind::pi1, Direction::maximum);
    CHECK(rec.optimum >= prev);
    prev = rec.optimum;
  }
}

TEST_CASE("closed_form evaluates both published variants") {
  CHECK(closed_form(5, 2, IndexKind::pi1, FormulaVariant::proof) ==
        ExactProduct::from_integer(82944));
  CHECK(closed_form(5, 2, IndexKind::pi1, FormulaVariant::statement) ==
        ExactProduct::from_integer(26244));
  // At k = 1 the two pi1 variants coincide: (n-k) == (n-1).
  CHECK(closed_form(5, 1, IndexKind::pi1, FormulaVariant::statement) ==
        closed_form(5, 1, IndexKind::pi1, FormulaVariant::proof));
  // The pi2 bound has a single published form.
  CHECK(closed_form(5, 2, IndexKind::pi2, FormulaVariant::proof) ==
        ExactProduct::from_integer(191102976));
  CHECK(closed_form(5, 2, IndexKind::pi2, FormulaVariant::statement) ==
        closed_form(5, 2, IndexKind::pi2, FormulaVariant::proof));

  CHECK_THROWS_AS(closed_form(1, 1, IndexKind::pi1, FormulaVariant::proof),
                  std::invalid_argument);
  CHECK_THROWS_AS(closed_form(5, 0, IndexKind::pi1, FormulaVariant::proof),
                  std::invalid_argument);
  CHECK_THROWS_AS(closed_form(5, 5, IndexKind::pi1, FormulaVariant::proof),
                  std::invalid_argument);
}

TEST_CASE("closed forms match pi1/pi2 of K_n^k exactly") {
  for (int n = 4; n <= 7; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      Graph g = knk(n, k);
      CHECK(closed_form(n, k, IndexKind::pi1, FormulaVariant::proof) == pi1(g));
      CHECK(closed_form(n, k, IndexKind::pi2, FormulaVariant::proof) == pi2(g));
    }
  }
}

TEST_CASE("verify_suite adjudicates the statement/proof discrepancy") {
  VerificationReport rep = verify_suite(6, {"thm1", "thm2"});
  const ClaimEntry* e = find_entry(rep, "thm1", 6, 2, "vertex", "pi1");
  REQUIRE(e != nullptr);
  CHECK(e->status == "confirmed-with-correction");
  CHECK(e->brute_force == pi1(knk(6, 2)).decimal());
  CHECK(e->closed_form == e->brute_force);  // records the matching variant
  CHECK(e->observation.find("statement variant") != std::string::npos);
  CHECK(e->extremal_graphs ==
        std::vector<std::string>{canonical_form(knk(6, 2)).bytes});

  // k = 1 keeps the two variants equal, so no correction is flagged.
  const ClaimEntry* k1 = find_entry(rep, "thm1", 6, 1, "vertex", "pi1");
  REQUIRE(k1 != nullptr);
  CHECK(k1->status == "confirmed");

  // pi2 has a single variant; the edge-class run stays clean too.
  const ClaimEntry* p2 = find_entry(rep, "thm2", 6, 2, "edge", "pi2");
  REQUIRE(p2 != nullptr);
  CHECK(p2->status == "confirmed");
  CHECK(p2->extremal_graphs ==
        std::vector<std::string>{canonical_form(knk(6, 2)).bytes});

  CHECK_FALSE(rep.any_refuted());
}

TEST_CASE("verify_suite covers lemmas with the documented ranges") {
  VerificationReport rep = verify_suite(6, {"lem1", "lem4"});
  const ClaimEntry* l1 = find_entry(rep, "lem1", 6, -1, "", "");
  REQUIRE(l1 != nullptr);
  CHECK(l1->status == "confirmed");
  // Six trees on 6 vertices; P_6 and S_6 are excluded from the check.
  CHECK(l1->observation.find("checked 4 trees") != std::string::npos);
  CHECK(l1->observation.find("held for every such tree") != std::string::npos);

  // lem1 reaches one order past n_max (cheap tree stream), lem4 caps at 6.
  std::set<int> l1_orders, l4_orders;
  for (const ClaimEntry& e : rep.entries) {
    if (e.claim_id == "lem1") l1_orders.insert(e.n);
    if (e.claim_id == "lem4") l4_orders.insert(e.n);
  }
  CHECK(l1_orders == std::set<int>{5, 6, 7});
  CHECK(l4_orders == std::set<int>{3, 4, 5, 6});
}

TEST_CASE("verify_suite argument handling") {
  CHECK_THROWS_AS(verify_suite(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(verify_suite(10, {}), std::invalid_argument);
  CHECK_THROWS_AS(verify_suite(5, {"thm9"}), std::invalid_argument);

  // Duplicates collapse; execution follows catalog order, not request order.
  VerificationReport once = verify_suite(5, {"lem4"});
  VerificationReport twice = verify_suite(5, {"lem4", "lem4"});
  CHECK(once.to_json() == twice.to_json());

  VerificationReport swapped = verify_suite(5, {"lem4", "lem2"});
  VerificationReport ordered = verify_suite(5, {"lem2", "lem4"});
  CHECK(swapped.to_json() == ordered.to_json());
  CHECK(swapped.entries.front().claim_id == "lem2");
}

TEST_CASE("a full run touches every catalog claim and stays stable") {
  const std::vector<std::string>& catalog = claim_catalog();
  CHECK(catalog.size() == 13);

  VerificationReport full = verify_suite(5, {});
  std::set<std::string> seen;
  for (const ClaimEntry& e : full.entries) seen.insert(e.claim_id);
  CHECK(seen == std::set<std::string>(catalog.begin(), catalog.end()));
  CHECK(full.entries.size() == 80);
  CHECK_FALSE(full.any_refuted());
  for (const ClaimEntry& e : full.entries) CHECK(e.elapsed_ms == 0);

  // Byte-identical serialization across repeat runs and job counts.
  std::string again = verify_suite(5, {}).to_json();
  CHECK(full.to_json() == again);
  RunOptions par;
  par.jobs = 4;
  CHECK(verify_suite(5, {}, par).to_json() == again);
}
