#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "iasl/error.hpp"

namespace iasl {

using Value = std::uint64_t;

/// A finite, non-empty set of non-negative integers kept as a strictly
/// increasing sequence. Set-labels of vertices and edges are IntegerSets.
class IntegerSet {
 public:
  IntegerSet(std::initializer_list<Value> values) : IntegerSet(std::vector<Value>(values)) {}

  explicit IntegerSet(std::vector<Value> values) : elements_(std::move(values)) {
    if (elements_.empty()) throw Error(ErrorCode::EmptyLabel, "set-labels must be non-empty");
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  }

  // Caller guarantees the input is non-empty, sorted and duplicate-free.
  static IntegerSet from_sorted_unique(std::vector<Value> values) {
    IntegerSet s;
    s.elements_ = std::move(values);
    return s;
  }

  std::size_t size() const noexcept { return elements_.size(); }
  Value min() const noexcept { return elements_.front(); }
  Value max() const noexcept { return elements_.back(); }
  std::span<const Value> elements() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }
  Value operator[](std::size_t i) const { return elements_[i]; }

  bool contains(Value x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

  /// Sum of all elements; used to order labelings by size.
  Value mass() const noexcept {
    Value total = 0;
    for (Value x : elements_) total += x;
    return total;
  }

  bool operator==(const IntegerSet&) const = default;
  auto operator<=>(const IntegerSet& other) const { return elements_ <=> other.elements_; }

 private:
  IntegerSet() = default;
  std::vector<Value> elements_;
};

/// {x + y : x in a, y in b}.
inline IntegerSet sumset(const IntegerSet& a, const IntegerSet& b) {
  std::vector<Value> sums;
  sums.reserve(a.size() * b.size());
  for (Value x : a)
    for (Value y : b) sums.push_back(x + y);
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return IntegerSet::from_sorted_unique(std::move(sums));
}

/// Arithmetic-progression view of a set. Singletons have no common
/// difference (`diff` is empty).
struct ApProfile {
  Value first = 0;
  std::optional<Value> diff;
  std::size_t length = 1;

  bool is_singleton() const noexcept { return length == 1; }

  IntegerSet reconstruct() const {
    std::vector<Value> values;
    values.reserve(length);
    for (std::size_t i = 0; i < length; ++i) values.push_back(first + i * diff.value_or(0));
    return IntegerSet::from_sorted_unique(std::move(values));
  }

  bool operator==(const ApProfile&) const = default;
};

/// Returns the profile when all consecutive differences agree, nullopt otherwise.
inline std::optional<ApProfile> ap_profile(const IntegerSet& s) {
  ApProfile p{s.min(), std::nullopt, s.size()};
  if (s.size() == 1) return p;
  const Value d = s[1] - s[0];
  for (std::size_t i = 2; i < s.size(); ++i)
    if (s[i] - s[i - 1] != d) return std::nullopt;
  p.diff = d;
  return p;
}

inline IntegerSet make_ap(Value first, Value diff, std::size_t length) {
  if (length == 0) throw Error(ErrorCode::EmptyLabel, "progression length must be positive");
  if (length > 1 && diff == 0) throw std::invalid_argument("progression difference must be positive");
  return ApProfile{first, length > 1 ? std::optional<Value>(diff) : std::nullopt, length}.reconstruct();
}

enum class Parity { Even, Odd };

constexpr std::string_view to_string(Parity p) { return p == Parity::Even ? "EVEN" : "ODD"; }

/// Parity of a set is the parity of its cardinality.
inline Parity set_parity(const IntegerSet& s) noexcept {
  return s.size() % 2 == 0 ? Parity::Even : Parity::Odd;
}

/// |A + B| for APs A (length m, difference d) and B (length n, difference k*d),
/// which is m + k(n-1) whenever k <= m.
inline std::size_t ap_sumset_cardinality(std::size_t m, std::size_t n, std::size_t k) {
  if (m == 0 || n == 0 || k == 0) throw std::invalid_argument("lengths and ratio must be positive");
  if (k > m)
    throw Error(ErrorCode::AdmissibilityViolation,
                "ratio " + std::to_string(k) + " exceeds length " + std::to_string(m));
  return m + k * (n - 1);
}

inline std::string to_string(const IntegerSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  out += '}';
  return out;
}

}  // namespace iasl
