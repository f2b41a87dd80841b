#include "branchcount/exponent.hpp"

#include <algorithm>
#include <limits>

#include "branchcount/error.hpp"

namespace branchcount {

namespace {

void check_size(std::size_t n) {
  if (n > kMaxVariables) {
    throw DimensionError("rings with more than " + std::to_string(kMaxVariables) +
                         " variables are not supported");
  }
}

std::uint16_t narrow(unsigned value) {
  if (value > std::numeric_limits<std::uint16_t>::max()) {
    throw RangeError("exponent " + std::to_string(value) + " overflows");
  }
  return static_cast<std::uint16_t>(value);
}

}  // namespace

ExponentVector::ExponentVector(std::size_t nvars) : n_(static_cast<std::uint16_t>(nvars)) {
  check_size(nvars);
}

ExponentVector::ExponentVector(std::initializer_list<unsigned> entries)
    : ExponentVector(std::span<const unsigned>(entries.begin(), entries.size())) {}

ExponentVector::ExponentVector(std::span<const unsigned> entries)
    : n_(static_cast<std::uint16_t>(entries.size())) {
  check_size(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    e_[i] = narrow(entries[i]);
    deg_ += entries[i];
  }
}

ExponentVector ExponentVector::unit(std::size_t nvars, std::size_t var, unsigned power) {
  if (var >= nvars) throw DimensionError("variable index out of range");
  ExponentVector e(nvars);
  e.set(var, power);
  return e;
}

void ExponentVector::set(std::size_t i, unsigned value) {
  if (i >= n_) throw DimensionError("exponent index out of range");
  deg_ = deg_ - e_[i] + value;
  e_[i] = narrow(value);
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  if (n_ != other.n_) throw DimensionError("exponent length mismatch");
  ExponentVector r(*this);
  for (std::size_t i = 0; i < n_; ++i) {
    r.e_[i] = narrow(unsigned{e_[i]} + other.e_[i]);
  }
  r.deg_ = deg_ + other.deg_;
  return r;
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const {
  ExponentVector r(*this);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] - other.e_[i]);
  r.deg_ = deg_ - other.deg_;
  return r;
}

ExponentVector ExponentVector::lcm(const ExponentVector& other) const {
  ExponentVector r(*this);
  r.deg_ = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    r.e_[i] = std::max(e_[i], other.e_[i]);
    r.deg_ += r.e_[i];
  }
  return r;
}

ExponentVector ExponentVector::saturating_sub(const ExponentVector& other) const {
  ExponentVector r(*this);
  r.deg_ = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    r.e_[i] = e_[i] > other.e_[i] ? static_cast<std::uint16_t>(e_[i] - other.e_[i]) : 0;
    r.deg_ += r.e_[i];
  }
  return r;
}

bool ExponentVector::divides(const ExponentVector& other) const noexcept {
  if (deg_ > other.deg_) return false;
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

bool ExponentVector::coprime(const ExponentVector& other) const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] != 0 && other.e_[i] != 0) return false;
  }
  return true;
}

std::vector<unsigned> ExponentVector::entries() const {
  return std::vector<unsigned>(e_.begin(), e_.begin() + n_);
}

std::string ExponentVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) s += ", ";
    s += std::to_string(e_[i]);
  }
  return s + ")";
}

std::size_t ExponentVector::hash() const noexcept {
  std::size_t h = n_;
  for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ e_[i];
  return h;
}

std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw DimensionError("cannot compare exponents of different lengths");
  return compare_unchecked(a, b);
}

}  // namespace branchcount
