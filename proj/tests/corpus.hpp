#pragma once

// Shared test corpus: every small loop the suites reason about, built once
// and cached. Names are stable so failure messages stay readable.

#include <string>
#include <vector>

#include "loopkit/cayley_table.hpp"
#include "loopkit/constructions.hpp"

namespace corpus {

struct Entry {
  std::string name;
  loopkit::CayleyTable table;
};

// Representatives of every isomorphism class of orders 1..6 (120 loops).
inline const std::vector<Entry>& census() {
  static const std::vector<Entry> list = [] {
    std::vector<Entry> out;
    for (int n = 1; n <= 6; ++n) {
      auto reps = loopkit::enumerate_loops(n);
      for (std::size_t i = 0; i < reps.size(); ++i)
        out.push_back({"census_" + std::to_string(n) + "_" + std::to_string(i),
                       std::move(reps[i])});
    }
    return out;
  }();
  return list;
}

// Groups of order <= 24: cyclic, dihedral (as Chein doubles of cyclic
// groups), and a few direct products.
inline const std::vector<Entry>& groups() {
  static const std::vector<Entry> list = [] {
    using namespace loopkit;
    std::vector<Entry> out;
    for (int n = 1; n <= 24; ++n)
      out.push_back({"Z" + std::to_string(n), cyclic_group(n)});
    for (int n = 3; n <= 12; ++n)
      out.push_back({"D" + std::to_string(n), chein_double(cyclic_group(n))});
    auto prod = [&](const std::string& name, const CayleyTable& a, const CayleyTable& b) {
      out.push_back({name, direct_product(a, b)});
    };
    prod("Z2xZ2", cyclic_group(2), cyclic_group(2));
    prod("Z2xZ4", cyclic_group(2), cyclic_group(4));
    prod("Z2xZ2xZ2", direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2));
    prod("Z3xZ3", cyclic_group(3), cyclic_group(3));
    prod("Z2xZ6", cyclic_group(2), cyclic_group(6));
    prod("Z4xZ4", cyclic_group(4), cyclic_group(4));
    prod("Z2xZ10", cyclic_group(2), cyclic_group(10));
    prod("S3xZ2", chein_double(cyclic_group(3)), cyclic_group(2));
    prod("S3xZ4", chein_double(cyclic_group(3)), cyclic_group(4));
    prod("D4xZ2", chein_double(cyclic_group(4)), cyclic_group(2));
    prod("Z4xZ6", cyclic_group(4), cyclic_group(6));
    return out;
  }();
  return list;
}

// Nonassociative Moufang loops: Chein doubles of nonabelian groups.
inline const std::vector<Entry>& moufang_doubles() {
  static const std::vector<Entry> list = [] {
    using namespace loopkit;
    std::vector<Entry> out;
    out.push_back({"M(S3,2)", chein_double(chein_double(cyclic_group(3)))});
    out.push_back({"M(D4,2)", chein_double(chein_double(cyclic_group(4)))});
    out.push_back({"M(D5,2)", chein_double(chein_double(cyclic_group(5)))});
    out.push_back({"M(D6,2)", chein_double(chein_double(cyclic_group(6)))});
    return out;
  }();
  return list;
}

inline const loopkit::CayleyTable& order10() {
  static const loopkit::CayleyTable L = loopkit::search_order10_counterexample();
  return L;
}

inline const loopkit::CayleyTable& paige2() {
  static const loopkit::CayleyTable L = loopkit::paige_loop(2);
  return L;
}

// Everything of order <= 24 (census, groups, Moufang doubles, order-10
// example): the corpus the quotient-lifting and decision-procedure suites
// sweep.
inline const std::vector<Entry>& small() {
  static const std::vector<Entry> list = [] {
    std::vector<Entry> out = census();
    for (const Entry& e : groups()) out.push_back(e);
    for (const Entry& e : moufang_doubles()) out.push_back(e);
    out.push_back({"order10", order10()});
    return out;
  }();
  return list;
}

}  // namespace corpus
