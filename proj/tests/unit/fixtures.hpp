#ifndef NCPH_TESTS_FIXTURES_HPP
#define NCPH_TESTS_FIXTURES_HPP

#include <map>
#include <memory>
#include <string>

#include "ncph/coxeter.hpp"
#include "ncph/rootorder.hpp"

namespace ncph::testing {

// Group data for one diagram, built once per test binary.
struct Built {
  std::unique_ptr<CoxeterSystem> system;
  std::unique_ptr<CoxeterGroup> group;
  ReflectionSet t;
  OrderedRoots order;
};

inline const Built& built(char type, int rank, int m = 0, bool swap = false) {
  static std::map<std::string, std::unique_ptr<Built>> cache;
  std::string key = std::string(1, type) + std::to_string(rank) + ":" + std::to_string(m) + (swap ? "s" : "");
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  auto b = std::make_unique<Built>();
  b->system = std::make_unique<CoxeterSystem>(CoxeterSystem::build(standard_diagram(type, rank, m), swap));
  b->group = std::make_unique<CoxeterGroup>(CoxeterGroup::generate(*b->system));
  b->t = reflections(*b->group);
  b->order = ordered_roots(*b->group, b->t);
  return *cache.emplace(key, std::move(b)).first->second;
}

}  // namespace ncph::testing

#endif
