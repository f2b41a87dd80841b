#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace branchcount {

/// Largest ring this library supports. The double-point pipeline needs six.
inline constexpr std::size_t kMaxVariables = 8;

/// A point of N^n, i.e. the exponent of a monomial x^alpha.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t nvars);
  ExponentVector(std::initializer_list<unsigned> entries);
  explicit ExponentVector(std::span<const unsigned> entries);

  static ExponentVector unit(std::size_t nvars, std::size_t var, unsigned power = 1);

  std::size_t size() const noexcept { return n_; }
  unsigned operator[](std::size_t i) const noexcept { return e_[i]; }
  unsigned degree() const noexcept { return deg_; }
  void set(std::size_t i, unsigned value);

  ExponentVector operator+(const ExponentVector& other) const;
  /// Componentwise `*this - other`; requires other.divides(*this).
  ExponentVector operator-(const ExponentVector& other) const;
  ExponentVector lcm(const ExponentVector& other) const;
  /// Componentwise max(*this - other, 0).
  ExponentVector saturating_sub(const ExponentVector& other) const;

  /// Componentwise `*this <= other`.
  bool divides(const ExponentVector& other) const noexcept;
  bool coprime(const ExponentVector& other) const noexcept;
  bool is_zero() const noexcept { return deg_ == 0; }

  std::vector<unsigned> entries() const;
  std::string to_string() const;

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) noexcept {
    return a.n_ == b.n_ && a.deg_ == b.deg_ && a.e_ == b.e_;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<std::uint16_t, kMaxVariables> e_{};
  std::uint16_t n_ = 0;
  std::uint32_t deg_ = 0;

  friend std::strong_ordering compare_unchecked(const ExponentVector&, const ExponentVector&) noexcept;
};

/// The local order: compare (alpha_1, ..., alpha_n, |alpha|) lexicographically
/// from the right. Total degree decides first, then alpha_n, ..., alpha_1.
/// The initial exponent of a series is its minimum.
std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b);

inline std::strong_ordering compare_unchecked(const ExponentVector& a,
                                              const ExponentVector& b) noexcept {
  if (a.deg_ != b.deg_) return a.deg_ <=> b.deg_;
  for (std::size_t i = a.n_; i-- > 0;) {
    if (a.e_[i] != b.e_[i]) return a.e_[i] <=> b.e_[i];
  }
  return std::strong_ordering::equal;
}

/// Strict-weak-order functor for containers sorted by the local order.
struct LocalOrder {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const noexcept {
    return compare_unchecked(a, b) < 0;
  }
};

struct ExponentHash {
  std::size_t operator()(const ExponentVector& e) const noexcept { return e.hash(); }
};

}  // namespace branchcount
