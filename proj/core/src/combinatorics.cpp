#include "cfpp/combinatorics.hpp"

#include <array>
#include <cmath>
#include <string>

#include "cfpp/error.hpp"

namespace cfpp {
namespace {

constexpr int kExactFactorialMax = 20;

constexpr std::array<std::uint64_t, kExactFactorialMax + 1> make_factorials() {
  std::array<std::uint64_t, kExactFactorialMax + 1> f{};
  f[0] = 1;
  for (int i = 1; i <= kExactFactorialMax; ++i) f[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i - 1)] * static_cast<std::uint64_t>(i);
  return f;
}

constexpr auto kFactorials = make_factorials();

void check_nk(int n, int k, const char* what) {
  if (k < 1 || k > n || n > kMaxEnumerationN) {
    throw DomainError(std::string(what) + ": need 1 <= k <= n <= " + std::to_string(kMaxEnumerationN) +
                      " (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
}

std::vector<PartitionVector> collect(int n, int k, int length) {
  std::vector<PartitionVector> out;
  for_each_bounded_partition(n, k, length, [&](std::span<const int> parts) {
    out.push_back(PartitionVector{std::vector<int>(parts.begin(), parts.end()), n, k});
  });
  return out;
}

}  // namespace

std::vector<PartitionVector> enumerate_theta(int n, int k) {
  check_nk(n, k, "enumerate_theta");
  return collect(n, k, n);
}

std::vector<PartitionVector> enumerate_lambda(int n, int k) {
  check_nk(n, k, "enumerate_lambda");
  return collect(n, k, n - k + 1);
}

double bell_ordinary(int n, int k, std::span<const double> u) {
  check_nk(n, k, "bell_ordinary");
  const int length = n - k + 1;
  if (static_cast<int>(u.size()) < length) {
    throw DomainError("bell_ordinary: need " + std::to_string(length) + " variables, got " + std::to_string(u.size()));
  }
  double sum = 0.0;
  for_each_bounded_partition(n, k, length, [&](std::span<const int> parts) {
    double term = multinomial(k, parts);
    for (int j = 0; j < length; ++j) {
      if (parts[static_cast<std::size_t>(j)] > 0) term *= std::pow(u[static_cast<std::size_t>(j)], parts[static_cast<std::size_t>(j)]);
    }
    sum += term;
  });
  return sum;
}

std::vector<Composition> enumerate_compositions(int n, int k) {
  if (k < 1 || k > n) {
    throw DomainError("enumerate_compositions: need 1 <= k <= n (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  std::vector<Composition> out;
  for_each_composition(n, k, [&](std::span<const int> parts) {
    out.push_back(Composition{std::vector<int>(parts.begin(), parts.end())});
  });
  return out;
}

std::vector<std::vector<int>> enumerate_weak_compositions(int r, int k) {
  if (r < 1 || k < 1) throw DomainError("enumerate_weak_compositions: need r >= 1 and k >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> parts(static_cast<std::size_t>(k), 0);
  auto recurse = [&](auto&& self, int i, int remaining) -> void {
    if (i == k - 1) {
      parts[static_cast<std::size_t>(i)] = remaining;
      out.push_back(parts);
      return;
    }
    for (int m = 0; m <= remaining; ++m) {
      parts[static_cast<std::size_t>(i)] = m;
      self(self, i + 1, remaining - m);
    }
  };
  recurse(recurse, 0, r);
  return out;
}

double log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial: n must be >= 0");
  if (n <= kExactFactorialMax) return std::log(static_cast<double>(kFactorials[static_cast<std::size_t>(n)]));
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double multinomial(int k, std::span<const int> parts) {
  if (k <= kExactFactorialMax) {
    std::uint64_t value = kFactorials[static_cast<std::size_t>(k)];
    for (int m : parts) value /= kFactorials[static_cast<std::size_t>(m)];
    return static_cast<double>(value);
  }
  double log_value = log_factorial(k);
  for (int m : parts) log_value -= log_factorial(m);
  return std::exp(log_value);
}

double stirling2(int n, int k) {
  if (n < 0 || k < 0) throw DomainError("stirling2: arguments must be >= 0");
  if (k > n) return 0.0;
  std::vector<double> row(static_cast<std::size_t>(k) + 1, 0.0);
  row[0] = 1.0;  // S(0,0)
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] = static_cast<double>(j) * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
    }
    row[0] = 0.0;
  }
  return row[static_cast<std::size_t>(k)];
}

}  // namespace cfpp
