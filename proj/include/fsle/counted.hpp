// Copyright 2026 The fsle Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FSLE_COUNTED_HPP
#define FSLE_COUNTED_HPP

#include <cmath>
#include <cstdint>

namespace fsle {

class MultiplicationCounter;

namespace detail {
inline thread_local std::uint64_t* active_mult_counter = nullptr;

inline void count_mult() {
  if (active_mult_counter != nullptr) {
    ++*active_mult_counter;
  }
}
}  // namespace detail

/// Scope guard that collects the multiplications and divisions performed by
/// CountedReal on the current thread while it is alive. Guards nest; the
/// innermost one receives the counts.
class MultiplicationCounter {
 public:
  MultiplicationCounter() : previous_(detail::active_mult_counter) {
    detail::active_mult_counter = &count_;
  }
  ~MultiplicationCounter() { detail::active_mult_counter = previous_; }

  MultiplicationCounter(const MultiplicationCounter&) = delete;
  MultiplicationCounter& operator=(const MultiplicationCounter&) = delete;

  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t count_ = 0;
  std::uint64_t* previous_;
};

/// A double that reports every multiplication and division to the active
/// MultiplicationCounter. Additions, subtractions, negation and comparisons
/// are free.
class CountedReal {
 public:
  CountedReal() = default;
  CountedReal(double v) : v_(v) {}  // NOLINT: implicit by intent

  double value() const { return v_; }

  CountedReal& operator+=(CountedReal o) { v_ += o.v_; return *this; }
  CountedReal& operator-=(CountedReal o) { v_ -= o.v_; return *this; }
  CountedReal& operator*=(CountedReal o) { detail::count_mult(); v_ *= o.v_; return *this; }
  CountedReal& operator/=(CountedReal o) { detail::count_mult(); v_ /= o.v_; return *this; }

  friend CountedReal operator+(CountedReal a, CountedReal b) { return a += b; }
  friend CountedReal operator-(CountedReal a, CountedReal b) { return a -= b; }
  friend CountedReal operator*(CountedReal a, CountedReal b) { return a *= b; }
  friend CountedReal operator/(CountedReal a, CountedReal b) { return a /= b; }
  friend CountedReal operator-(CountedReal a) { return CountedReal(-a.v_); }

  friend bool operator==(CountedReal a, CountedReal b) { return a.v_ == b.v_; }
  friend auto operator<=>(CountedReal a, CountedReal b) { return a.v_ <=> b.v_; }

  friend double to_double(CountedReal x) { return x.v_; }
  friend CountedReal abs(CountedReal x) { return CountedReal(std::abs(x.v_)); }

 private:
  double v_ = 0.0;
};

}  // namespace fsle

#endif  // FSLE_COUNTED_HPP
