#pragma once

namespace hecke {

// Kahan compensated accumulator: keeps the running rounding error in a
// correction term so long alternating sums stay accurate to ~1 ulp.
class KahanSum {
 public:
  void add(double x) {
    double y = x - compensation_;
    double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace hecke
