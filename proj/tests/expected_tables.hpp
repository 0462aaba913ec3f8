#pragma once

// Frozen expected values for the noise-evolution table of every gate: each
// intermediate error matrix as exact integer delta/epsilon coefficients, plus
// the correction error variances. Shared by the unit tests and the acceptance
// suite.

#include <string>
#include <vector>

#include "gkpft/cluster_gates.hpp"
#include "test_util.hpp"

namespace gkpft_test {

struct ExpectedTrace {
  gkpft::Gate gate;
  std::vector<std::pair<std::string, gkpft::SymbolicCovariance>> rows;
  // (step, rail, delta coefficient, epsilon coefficient) of sigma2_err
  std::vector<std::tuple<int, gkpft::Rail, int, int>> err_vars;
};

inline std::vector<ExpectedTrace> expected_traces() {
  using gkpft::Gate;
  using gkpft::Rail;
  std::vector<ExpectedTrace> traces;

  traces.push_back(
      {Gate::I,
       {
           {"eta0", make_cov(2, {1, 0, 0, 2}, {0, 0, 0, 1})},
           {"eta1", make_cov(2, {2, 0, 0, 1}, {1, 0, 0, 1})},
           {"eta2", make_cov(2, {1, 0, 0, 2}, {1, 0, 0, 2})},
           {"eta3", make_cov(2, {2, 0, 0, 1}, {2, 0, 0, 2})},
           {"eta3_c", make_cov(2, {1, 0, 0, 2}, {0, 0, 0, 2})},
           {"eta4", make_cov(2, {2, 0, 0, 1}, {2, 0, 0, 1})},
           {"eta4_c", make_cov(2, {1, 0, 0, 2}, {0, 0, 0, 1})},
       },
       {{3, Rail::single, 3, 2}, {4, Rail::single, 3, 2}}});

  traces.push_back(
      {Gate::P,
       {
           {"eta0", make_cov(2, {1, 0, 0, 2}, {0, 0, 0, 1})},
           {"eta1", make_cov(2, {3, -1, -1, 1}, {1, 0, 0, 1})},
           {"eta2", make_cov(2, {1, 1, 1, 3}, {1, 0, 0, 2})},
           {"eta3", make_cov(2, {3, -1, -1, 1}, {2, 0, 0, 2})},
           {"eta3_c", make_cov(2, {1, 0, 0, 2}, {0, 0, 0, 2})},
           {"eta4", make_cov(2, {2, 0, 0, 1}, {2, 0, 0, 1})},
           {"eta4_c", make_cov(2, {1, 0, 0, 2}, {0, 0, 0, 1})},
       },
       {{3, Rail::single, 4, 2}, {4, Rail::single, 3, 2}}});

  traces.push_back(
      {Gate::F,
       {
           {"eta0", make_cov(2, {1, 0, 0, 2}, {0, 0, 0, 1})},
           {"eta1", make_cov(2, {3, -1, -1, 1}, {1, 0, 0, 1})},
           {"eta2", make_cov(2, {2, -2, -2, 3}, {2, -1, -1, 2})},
           {"eta3", make_cov(2, {1, 0, 0, 2}, {2, -1, -1, 3})},
           {"eta3_c", make_cov(2, {1, 0, 0, 3}, {0, 0, 0, 3})},
           {"eta4", make_cov(2, {3, 0, 0, 1}, {3, 0, 0, 1})},
           {"eta4_c", make_cov(2, {1, 0, 0, 2}, {0, 0, 0, 1})},
       },
       {{3, Rail::single, 2, 2}, {4, Rail::single, 4, 3}}});

  traces.push_back(
      {Gate::CZ,
       {
           {"eta0", diag_cov({1, 1, 2, 2}, {0, 0, 1, 1})},
           {"eta0_prime", make_cov(4,
                                   {1, 0, 0, -1,   //
                                    0, 1, -1, 0,   //
                                    0, -1, 3, 0,   //
                                    -1, 0, 0, 3},
                                   {0, 0, 0, 0,   //
                                    0, 0, 0, 0,   //
                                    0, 0, 2, 0,   //
                                    0, 0, 0, 2})},
           {"eta1", make_cov(4,
                             {3, 0, 0, 1,   //
                              0, 3, 1, 0,   //
                              0, 1, 1, 0,   //
                              1, 0, 0, 1},
                             {2, 0, 0, 0,   //
                              0, 2, 0, 0,   //
                              0, 0, 1, 0,   //
                              0, 0, 0, 1})},
           {"eta2", make_cov(4,
                             {1, 0, 0, -1,   //
                              0, 1, -1, 0,   //
                              0, -1, 3, 0,   //
                              -1, 0, 0, 3},
                             {1, 0, 0, 0,   //
                              0, 1, 0, 0,   //
                              0, 0, 3, 0,   //
                              0, 0, 0, 3})},
           {"eta3", make_cov(4,
                             {3, 0, 0, 1,   //
                              0, 3, 1, 0,   //
                              0, 1, 1, 0,   //
                              1, 0, 0, 1},
                             {3, 0, 0, 0,   //
                              0, 3, 0, 0,   //
                              0, 0, 2, 0,   //
                              0, 0, 0, 2})},
           {"eta3_c", diag_cov({1, 1, 2, 2}, {0, 0, 2, 2})},
           {"eta4", diag_cov({2, 2, 1, 1}, {2, 2, 1, 1})},
           {"eta4_c", diag_cov({1, 1, 2, 2}, {0, 0, 1, 1})},
       },
       {{3, Rail::top, 4, 3},
        {3, Rail::bottom, 4, 3},
        {4, Rail::top, 3, 2},
        {4, Rail::bottom, 3, 2}}});

  return traces;
}

}  // namespace gkpft_test
