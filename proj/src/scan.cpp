#include "hecke/scan.hpp"

#include <atomic>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace hecke {

namespace {

struct Target {
  long long D = 0;
  long long d = 1;
};

VerdictReport failed_row(const Target& t, const std::string& message) {
  VerdictReport row;
  row.D = t.D;
  row.d = t.d;
  row.nonvanishing = false;
  row.error = message;
  return row;
}

}  // namespace

std::vector<VerdictReport> run_scan(const ScanConfig& cfg) {
  if (cfg.d_min > cfg.d_max) {
    throw std::invalid_argument("scan: d_min must be <= d_max");
  }
  if (!(cfg.tolerance > 0.0) || cfg.tolerance > 1e-2) {
    throw std::invalid_argument("scan: tolerance must lie in (0, 1e-2]");
  }
  if (cfg.jobs < 1 || cfg.jobs > 1024) {
    throw std::invalid_argument("scan: jobs must lie in [1, 1024]");
  }
  if (cfg.twists.empty()) {
    throw std::invalid_argument("scan: twist list must not be empty");
  }
  for (long long d : cfg.twists) {
    if (d == 0 || !is_fundamental_discriminant(d)) {
      throw std::invalid_argument(
          "scan: twist " + std::to_string(d) +
          " is neither 1 nor a fundamental discriminant");
    }
  }

  // Enumerate the certification targets in deterministic order.
  std::vector<Target> targets;
  for (long long D = cfg.d_min; D <= cfg.d_max; ++D) {
    const DiscriminantClass cls = classify_discriminant(D);
    if (!cls.valid) continue;
    const bool even = cls.parity == FieldParity::even;
    for (long long d : cfg.twists) {
      if (std::gcd(std::llabs(d), D) != 1) continue;
      if (even && d % 2 == 0) continue;  // twist collides with the conductor
      const int sign_d = (d > 0) ? +1 : -1;
      const int family = even ? -sign_d : kronecker(2, D);
      if (family * sign_d != -1) continue;  // even functional equation
      targets.push_back({D, d});
    }
  }

  std::vector<VerdictReport> rows(targets.size());
  VerdictOptions opts;
  opts.tolerance = cfg.tolerance;
  opts.force_direct = cfg.force_direct;

  // Workers pull indices from a shared counter and write into preallocated
  // slots, so the output is bitwise identical for any job count.
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= targets.size()) return;
      try {
        rows[i] = certify_nonvanishing(targets[i].D, targets[i].d, opts);
      } catch (const std::exception& e) {
        rows[i] = failed_row(targets[i], e.what());
      }
    }
  };

  const std::size_t pool_size = std::min<std::size_t>(
      static_cast<std::size_t>(cfg.jobs), std::max<std::size_t>(targets.size(), 1));
  if (pool_size <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(pool_size);
    for (std::size_t k = 0; k < pool_size; ++k) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  return rows;
}

}  // namespace hecke
