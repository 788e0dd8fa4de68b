#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "cfpp/combinatorics.hpp"
#include "cfpp/error.hpp"

using namespace cfpp;

namespace {

std::vector<std::vector<int>> parts_of(const std::vector<PartitionVector>& v) {
  std::vector<std::vector<int>> out;
  for (const auto& p : v) out.push_back(p.parts);
  return out;
}

// Every vector of `length` entries in [0, n] with the two constraints, by odometer.
std::vector<std::vector<int>> brute_force(int n, int k, int length) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(static_cast<std::size_t>(length), 0);
  while (true) {
    int sum = 0, weighted = 0;
    for (int j = 0; j < length; ++j) {
      sum += v[static_cast<std::size_t>(j)];
      weighted += (j + 1) * v[static_cast<std::size_t>(j)];
    }
    if (sum == k && weighted == n) out.push_back(v);
    int pos = length - 1;
    while (pos >= 0 && v[static_cast<std::size_t>(pos)] == n / (pos + 1)) v[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++v[static_cast<std::size_t>(pos)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Coefficients of (sum_j u_j z^j)^k up to z^n.
std::vector<double> poly_power(const std::vector<double>& u, int k, int n) {
  std::vector<double> base(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::size_t j = 0; j < u.size() && j + 1 <= static_cast<std::size_t>(n); ++j) base[j + 1] = u[j];
  std::vector<double> acc(static_cast<std::size_t>(n) + 1, 0.0);
  acc[0] = 1.0;
  for (int p = 0; p < k; ++p) {
    std::vector<double> next(acc.size(), 0.0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      for (std::size_t j = 1; i + j < acc.size(); ++j) next[i + j] += acc[i] * base[j];
    }
    acc = next;
  }
  return acc;
}

}  // namespace

TEST(Theta, Examples) {
  EXPECT_EQ(parts_of(enumerate_theta(2, 1)), (std::vector<std::vector<int>>{{0, 1}}));
  EXPECT_EQ(parts_of(enumerate_theta(4, 2)), (std::vector<std::vector<int>>{{0, 2, 0, 0}, {1, 0, 1, 0}}));
  EXPECT_EQ(parts_of(enumerate_theta(3, 3)), (std::vector<std::vector<int>>{{3, 0, 0}}));
}

TEST(Lambda, Examples) {
  EXPECT_EQ(parts_of(enumerate_lambda(4, 2)), (std::vector<std::vector<int>>{{0, 2, 0}, {1, 0, 1}}));
  EXPECT_EQ(parts_of(enumerate_lambda(1, 1)), (std::vector<std::vector<int>>{{1}}));
  EXPECT_EQ(parts_of(enumerate_lambda(5, 4)), (std::vector<std::vector<int>>{{3, 1}}));
}

TEST(Theta, MatchesExhaustiveSearchInLexOrder) {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto theta = enumerate_theta(n, k);
      EXPECT_EQ(parts_of(theta), brute_force(n, k, n)) << n << "," << k;
      for (const auto& p : theta) {
        EXPECT_EQ(p.n, n);
        EXPECT_EQ(p.k, k);
      }
      EXPECT_EQ(parts_of(enumerate_lambda(n, k)), brute_force(n, k, n - k + 1)) << n << "," << k;
    }
  }
}

TEST(ThetaLambda, ZeroPaddingIsABijection) {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto theta = enumerate_theta(n, k);
      const auto lambda = enumerate_lambda(n, k);
      ASSERT_EQ(theta.size(), lambda.size());
      std::set<std::vector<int>> padded;
      for (auto p : lambda) {
        p.parts.resize(static_cast<std::size_t>(n), 0);
        padded.insert(p.parts);
      }
      EXPECT_EQ(padded.size(), lambda.size());
      const auto tp = parts_of(theta);
      EXPECT_EQ(padded, std::set<std::vector<int>>(tp.begin(), tp.end())) << n << "," << k;
    }
  }
}

TEST(Theta, PartitionCountsSumToPartitionNumbers) {
  // p(n) for n = 1..15.
  const int pn[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176};
  for (int n = 1; n <= 15; ++n) {
    std::size_t total = 0;
    for (int k = 1; k <= n; ++k) total += enumerate_lambda(n, k).size();
    EXPECT_EQ(total, static_cast<std::size_t>(pn[n - 1]));
  }
}

TEST(Enumeration, RejectsBadArguments) {
  EXPECT_THROW(enumerate_theta(3, 4), DomainError);
  EXPECT_THROW(enumerate_theta(3, 0), DomainError);
  EXPECT_THROW(enumerate_lambda(0, 0), DomainError);
  EXPECT_THROW(enumerate_lambda(kMaxEnumerationN + 1, 1), DomainError);
  EXPECT_THROW(enumerate_compositions(2, 3), DomainError);
  EXPECT_THROW(enumerate_weak_compositions(0, 2), DomainError);
}

TEST(Bell, Examples) {
  const double u1 = 0.7, u2 = -1.3, u3 = 2.1;
  const std::vector<double> one{u1};
  const std::vector<double> two{u1, u2};
  const std::vector<double> three{u1, u2, u3};
  EXPECT_NEAR(bell_ordinary(3, 3, one), u1 * u1 * u1, 1e-15);
  EXPECT_NEAR(bell_ordinary(3, 2, two), 2.0 * u1 * u2, 1e-15);
  EXPECT_NEAR(bell_ordinary(4, 2, three), u2 * u2 + 2.0 * u1 * u3, 1e-14);
  EXPECT_THROW(bell_ordinary(4, 2, two), DomainError);
}

TEST(Bell, PowerIdentity) {
  // (sum u_j t^j)^k = sum_{n >= k} B_{n,k}(u) t^n.
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> dist(-1.5, 1.5);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> u(8);
    for (auto& x : u) x = dist(gen);
    for (int k = 1; k <= 8; ++k) {
      const auto coef = poly_power(u, k, 8);
      for (int n = k; n <= 8; ++n) {
        const std::span<const double> head(u.data(), static_cast<std::size_t>(n - k + 1));
        EXPECT_NEAR(bell_ordinary(n, k, head), coef[static_cast<std::size_t>(n)], 1e-10) << n << "," << k;
      }
    }
  }
}

TEST(Bell, ExponentialIdentity) {
  // exp(x sum u_j t^j) = 1 + sum_n t^n sum_k B_{n,k}(u) x^k / k!.
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> u(8);
    for (auto& v : u) v = dist(gen);
    const double x = 2.0 * dist(gen);
    // g = exp(f) with f_m = x u_m:  n g_n = sum_m m f_m g_{n-m}.
    std::vector<double> g(9, 0.0);
    g[0] = 1.0;
    for (int n = 1; n <= 8; ++n) {
      double s = 0.0;
      for (int m = 1; m <= n; ++m) s += m * x * u[static_cast<std::size_t>(m - 1)] * g[static_cast<std::size_t>(n - m)];
      g[static_cast<std::size_t>(n)] = s / n;
    }
    for (int n = 1; n <= 8; ++n) {
      double s = 0.0;
      for (int k = 1; k <= n; ++k) {
        s += bell_ordinary(n, k, std::span<const double>(u.data(), static_cast<std::size_t>(n - k + 1))) *
             std::pow(x, k) / std::tgamma(k + 1.0);
      }
      EXPECT_NEAR(s, g[static_cast<std::size_t>(n)], 1e-10);
    }
  }
}

TEST(Compositions, Examples) {
  const auto c32 = enumerate_compositions(3, 2);
  ASSERT_EQ(c32.size(), 2u);
  EXPECT_EQ(c32[0].parts, (std::vector<int>{1, 2}));
  EXPECT_EQ(c32[1].parts, (std::vector<int>{2, 1}));
  const auto c41 = enumerate_compositions(4, 1);
  ASSERT_EQ(c41.size(), 1u);
  EXPECT_EQ(c41[0].parts, (std::vector<int>{4}));
  EXPECT_EQ(enumerate_compositions(5, 3).size(), 6u);
}

TEST(Compositions, CountsAreBinomial) {
  for (int n = 1; n <= 14; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto c = enumerate_compositions(n, k);
      EXPECT_NEAR(static_cast<double>(c.size()), std::round(std::exp(std::lgamma(n) - std::lgamma(k) - std::lgamma(n - k + 1))), 0.5);
      for (const auto& comp : c) {
        int s = 0;
        for (int p : comp.parts) {
          EXPECT_GE(p, 1);
          s += p;
        }
        EXPECT_EQ(s, n);
      }
    }
  }
}

TEST(WeakCompositions, Examples) {
  EXPECT_EQ(enumerate_weak_compositions(1, 2), (std::vector<std::vector<int>>{{0, 1}, {1, 0}}));
  EXPECT_EQ(enumerate_weak_compositions(2, 2), (std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}}));
  EXPECT_EQ(enumerate_weak_compositions(3, 2).size(), 4u);
  EXPECT_EQ(enumerate_weak_compositions(4, 3).size(), 15u);
}

TEST(Factorials, ExactBelowTwentyAndLogAbove) {
  EXPECT_EQ(log_factorial(0), 0.0);
  EXPECT_NEAR(log_factorial(20), std::log(2432902008176640000.0), 1e-15 * 43);
  EXPECT_NEAR(log_factorial(50), std::lgamma(51.0), 1e-12);
  const std::vector<int> parts{2, 1, 3};
  EXPECT_EQ(multinomial(6, parts), 60.0);
  const std::vector<int> big{10, 12};
  EXPECT_NEAR(multinomial(22, big), 646646.0, 1e-6);
  EXPECT_EQ(stirling2(5, 2), 15.0);
  EXPECT_EQ(stirling2(6, 3), 90.0);
  EXPECT_EQ(stirling2(4, 0), 0.0);
}
