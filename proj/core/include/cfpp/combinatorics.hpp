#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cfpp {

/// Practical ceiling on n for partition enumeration.
inline constexpr int kMaxEnumerationN = 64;

/// Multiplicity vector (k_1, ..., k_m) with sum k_j = k and sum j k_j = n.
/// Theta-form vectors have m = n, Lambda-form vectors have m = n - k + 1.
struct PartitionVector {
  std::vector<int> parts;
  int n = 0;
  int k = 0;

  friend bool operator==(const PartitionVector&, const PartitionVector&) = default;
};

/// Ordered tuple of positive integers (m_1, ..., m_k) summing to n.
struct Composition {
  std::vector<int> parts;

  friend bool operator==(const Composition&, const Composition&) = default;
};

/// Theta_n^k, lexicographic. DomainError unless 1 <= k <= n <= kMaxEnumerationN.
std::vector<PartitionVector> enumerate_theta(int n, int k);

/// Lambda_n^k, lexicographic. Same preconditions as enumerate_theta.
std::vector<PartitionVector> enumerate_lambda(int n, int k);

/// Ordinary Bell polynomial: sum over Lambda_n^k of k! prod u_j^{k_j} / k_j!.
/// `u` must hold at least n - k + 1 values; u[0] is u_1.
double bell_ordinary(int n, int k, std::span<const double> u);

/// All compositions of n into exactly k positive parts, lexicographic.
std::vector<Composition> enumerate_compositions(int n, int k);

/// All k-tuples of non-negative integers summing to r, lexicographic.
std::vector<std::vector<int>> enumerate_weak_compositions(int r, int k);

/// ln(n!): exact integer factorial for n <= 20, lgamma above.
double log_factorial(int n);

/// k! / prod parts_i!, exact integer arithmetic when k <= 20.
double multinomial(int k, std::span<const int> parts);

/// Stirling numbers of the second kind S(n, k).
double stirling2(int n, int k);

/// Visits every vector of `length` non-negative integers with sum k and
/// weighted sum n (weights 1..length), in lexicographic order.
template <typename Visitor>
void for_each_bounded_partition(int n, int k, int length, Visitor&& visit) {
  std::vector<int> parts(static_cast<std::size_t>(length), 0);
  // Fill position j (1-based) given remaining count c and weight w.
  auto recurse = [&](auto&& self, int j, int c, int w) -> void {
    if (j > length) {
      if (c == 0 && w == 0) visit(std::span<const int>(parts));
      return;
    }
    for (int m = 0; m <= c && m * j <= w; ++m) {
      const int c_rest = c - m;
      const int w_rest = w - m * j;
      // Remaining parts use sizes j+1..length.
      if (c_rest == 0 ? w_rest != 0 : (w_rest < (j + 1) * c_rest || w_rest > length * c_rest)) continue;
      parts[static_cast<std::size_t>(j - 1)] = m;
      self(self, j + 1, c_rest, w_rest);
    }
    parts[static_cast<std::size_t>(j - 1)] = 0;
  };
  recurse(recurse, 1, k, n);
}

/// Visits every composition of n into k positive parts in lexicographic order.
template <typename Visitor>
void for_each_composition(int n, int k, Visitor&& visit) {
  std::vector<int> parts(static_cast<std::size_t>(k), 0);
  auto recurse = [&](auto&& self, int i, int remaining) -> void {
    const int slots_after = k - i - 1;
    if (slots_after == 0) {
      parts[static_cast<std::size_t>(i)] = remaining;
      visit(std::span<const int>(parts));
      return;
    }
    for (int m = 1; m <= remaining - slots_after; ++m) {
      parts[static_cast<std::size_t>(i)] = m;
      self(self, i + 1, remaining - m);
    }
  };
  recurse(recurse, 0, n);
}

}  // namespace cfpp
