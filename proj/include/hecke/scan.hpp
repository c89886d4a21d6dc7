#pragma once

#include <vector>

#include "hecke/bounds.hpp"

namespace hecke {

struct ScanConfig {
  long long d_min = 7;
  long long d_max = 10000;
  std::vector<long long> twists{1};  // applied to every valid D in range
  double tolerance = 1e-12;
  int jobs = 1;
  bool force_direct = false;
};

// One verdict row per certification target: each valid D in [d_min, d_max]
// crossed with each compatible twist whose functional equation is odd.
// Pairs with root number +1 or with d sharing a factor with the conductor
// are not targets and produce no row; genuine evaluation failures are
// recorded in the row's error field.  Row order and every numeric value are
// independent of `jobs`.
std::vector<VerdictReport> run_scan(const ScanConfig& cfg);

}  // namespace hecke
