#include <doctest.h>

#include "fixtures.hpp"
#include "ncph/error.hpp"

using namespace ncph;
using ncph::testing::built;

namespace {

Vector rational_vector(const NumberField& f, std::initializer_list<int> xs) {
  Vector v;
  for (int x : xs) v.emplace_back(f, x);
  return v;
}

}  // namespace

TEST_CASE("ordered_roots") {
  SUBCASE("rho_1 = alpha_1") {
    for (auto [type, rank] : {std::pair{'A', 1}, {'A', 3}, {'B', 3}, {'H', 3}}) {
      const auto& b = built(type, rank);
      CHECK(b.order.roots[0] == b.system->simple_root(0));
    }
  }
  SUBCASE("A2: rho2 = alpha1 + alpha2, rho3 = alpha2") {
    // In coordinates alpha1 = (1, 0), alpha2 = (-1/2, sqrt3/2) this is
    // rho2 = (1/2, sqrt3/2); in the simple-root basis it is (1, 1).
    const auto& b = built('A', 2);
    const auto& f = b.system->field();
    REQUIRE(b.order.size() == 3);
    CHECK(b.order.roots[1] == rational_vector(f, {1, 1}));
    CHECK(b.order.roots[2] == rational_vector(f, {0, 1}));
  }
  SUBCASE("count = nh/2 and the set is the positive system") {
    for (auto [type, rank, m] : {std::tuple{'A', 2, 0}, {'A', 3, 0}, {'B', 3, 0}, {'H', 3, 0}, {'D', 4, 0},
                                 {'I', 2, 5}, {'I', 2, 8}}) {
      const auto& b = built(type, rank, m);
      const auto& sys = *b.system;
      CHECK(b.order.size() * 2 == static_cast<std::size_t>(rank * sys.coxeter_number()));
      std::vector<bool> seen(b.t.size(), false);
      for (std::size_t p = 0; p < b.order.size(); ++p) {
        CHECK(sys.inner(b.order.roots[p], sys.chamber_interior()).sign() == 1);
        seen[b.order.reflection_index[p]] = true;
        CHECK(b.order.position_of[b.order.reflection_index[p]] == p);
      }
      CHECK(std::all_of(seen.begin(), seen.end(), [](bool x) { return x; }));
    }
  }
  SUBCASE("cyclic extension flips sign after nh/2") {
    // For B3, c^{h/2} = -1, so the flip is index by index.
    const auto& b = built('B', 3);
    const std::size_t count = b.order.size();
    for (std::size_t i = 1; i <= count; ++i) {
      CHECK(cyclic_root(*b.system, i) == b.order.roots[i - 1]);
      CHECK(cyclic_root(*b.system, i + count) == -b.order.roots[i - 1]);
    }
  }
  SUBCASE("A3: the second half-period is the negative system, not index-aligned") {
    const auto& b = built('A', 3);
    const std::size_t count = b.order.size();
    bool aligned = true;
    for (std::size_t i = 1; i <= count; ++i) {
      Vector later = cyclic_root(*b.system, i + count);
      CHECK(b.system->inner(later, b.system->chamber_interior()).sign() == -1);
      CHECK(b.t.find_root(later).has_value());
      aligned = aligned && later == -b.order.roots[i - 1];
    }
    CHECK_FALSE(aligned);
  }
}

TEST_CASE("last_n_roots") {
  SUBCASE("rank 1: tau_1 = rho_1 = alpha_1") {
    const auto& b = built('A', 1);
    auto tau = last_n_roots(*b.group, b.order);
    REQUIRE(tau.size() == 1);
    CHECK(tau[0] == b.system->simple_root(0));
  }
  SUBCASE("A2: tau = (rho2, rho3) and r(rho3) r(rho2) = c") {
    const auto& b = built('A', 2);
    auto tau = last_n_roots(*b.group, b.order);
    CHECK(tau == std::vector<Vector>{b.order.roots[1], b.order.roots[2]});
    CHECK(b.group->multiply(b.order.reflections[2], b.order.reflections[1]) == b.group->coxeter_element());
  }
  SUBCASE("B3 and H3: product of the last three reflections reversed is c") {
    for (char type : {'B', 'H'}) {
      const auto& b = built(type, 3);
      const std::size_t N = b.order.size();
      ElementId prod = b.group->multiply(b.group->multiply(b.order.reflections[N - 1], b.order.reflections[N - 2]),
                                         b.order.reflections[N - 3]);
      CHECK(prod == b.group->coxeter_element());
      CHECK_NOTHROW(last_n_roots(*b.group, b.order));
    }
  }
  SUBCASE("swapping the color classes still yields a valid ordering") {
    const auto& b = built('B', 3, 0, true);
    CHECK(b.system->s() == 1);
    CHECK_NOTHROW(last_n_roots(*b.group, b.order));
  }
}
