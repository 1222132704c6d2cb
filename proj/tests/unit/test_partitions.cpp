#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "hookvan/characters.hpp"
#include "hookvan/errors.hpp"
#include "hookvan/partition.hpp"

using namespace hookvan;

namespace {

// p(n) from Euler's pentagonal recurrence.
std::vector<long long> partition_numbers(int top) {
  std::vector<long long> p(static_cast<std::size_t>(top + 1), 0);
  p[0] = 1;
  for (int n = 1; n <= top; ++n) {
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const long long sign = k % 2 ? 1 : -1;
      p[static_cast<std::size_t>(n)] += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) p[static_cast<std::size_t>(n)] += sign * p[static_cast<std::size_t>(n - g2)];
    }
  }
  return p;
}

// Cells of the diagram, for hook lengths counted directly.
std::set<std::pair<int, int>> cells(const Partition& lam) {
  std::set<std::pair<int, int>> out;
  for (int i = 0; i < lam.length(); ++i) {
    for (int j = 0; j < lam.row(i); ++j) out.insert({i + 1, j + 1});
  }
  return out;
}

int counted_hook(const Partition& lam, int r, int c) {
  const auto cs = cells(lam);
  int n = 1;
  for (auto [i, j] : cs) {
    if ((i == r && j > c) || (j == c && i > r)) ++n;
  }
  return n;
}

}  // namespace

TEST(Partition, ParseForms) {
  EXPECT_EQ(Partition::parse("6,3,3,2"), (Partition{6, 3, 3, 2}));
  EXPECT_EQ(Partition::parse("2^3,1^2"), (Partition{2, 2, 2, 1, 1}));
  EXPECT_EQ(Partition::parse("1^2,3"), (Partition{3, 1, 1}));
  EXPECT_EQ(Partition::parse("-"), Partition{});
  EXPECT_EQ(Partition::parse(" 4 , 1 "), (Partition{4, 1}));
  EXPECT_THROW(Partition::parse("3,4"), ParseError);
  EXPECT_THROW(Partition::parse("3,,1"), ParseError);
  EXPECT_THROW(Partition::parse("a"), ParseError);
  EXPECT_THROW(Partition::parse("2^"), ParseError);
  EXPECT_THROW(Partition(std::vector<int>{2, 0, 1}), DomainError);
  EXPECT_THROW(Partition(std::vector<int>{-1}), DomainError);
}

TEST(Partition, Basics) {
  const Partition lam{6, 3, 3, 2};
  EXPECT_EQ(lam.size(), 14);
  EXPECT_EQ(lam.length(), 4);
  EXPECT_EQ(lam.row(9), 0);
  EXPECT_EQ(lam.str(), "6,3,3,2");
  EXPECT_EQ(Partition{}.str(), "-");
  EXPECT_EQ(Partition(std::vector<int>{3, 1, 0, 0}), (Partition{3, 1}));
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(conjugate(Partition{6, 3, 3, 2}), (Partition{4, 4, 3, 1, 1, 1}));
  EXPECT_EQ(conjugate(Partition{}), Partition{});
  EXPECT_TRUE(is_self_conjugate(Partition{3, 3, 2}));
  EXPECT_TRUE(is_self_conjugate(Partition{4, 2, 1, 1}));
  EXPECT_TRUE(is_self_conjugate(Partition{7, 4, 2, 2, 1, 1, 1}));
  EXPECT_FALSE(is_self_conjugate(Partition{4}));
  for (int n = 0; n <= 12; ++n) {
    for (const auto& lam : partitions_of(n)) EXPECT_EQ(conjugate(conjugate(lam)), lam);
  }
}

TEST(Partition, Enumeration) {
  const auto p = partition_numbers(25);
  for (int n = 0; n <= 25; ++n) {
    const auto all = partitions_of(n);
    EXPECT_EQ(static_cast<long long>(all.size()), p[static_cast<std::size_t>(n)]) << n;
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), std::greater<>())) << n;
    EXPECT_EQ(std::set<Partition>(all.begin(), all.end()).size(), all.size());
  }
  EXPECT_EQ(partitions_of(4).front(), (Partition{4}));
  EXPECT_EQ(partitions_with_parts(4, {1, 2}).size(), 3u);
}

TEST(Hooks, LengthsAgreeWithCellCount) {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& lam : partitions_of(n)) {
      std::vector<int> counted;
      for (auto [i, j] : cells(lam)) {
        EXPECT_EQ(hook_length(lam, Node{i, j}), counted_hook(lam, i, j));
        counted.push_back(counted_hook(lam, i, j));
      }
      std::sort(counted.begin(), counted.end(), std::greater<>());
      EXPECT_EQ(hook_multiset(lam), counted);
    }
  }
}

TEST(Hooks, Examples) {
  EXPECT_EQ(hook_multiset(Partition{2, 2}), (std::vector<int>{3, 2, 2, 1}));
  const auto two_hooks = hooks_of_length(Partition{2, 2}, 2);
  ASSERT_EQ(two_hooks.size(), 2u);
  EXPECT_EQ(two_hooks[0].corner, (Node{1, 2}));
  EXPECT_EQ(two_hooks[0].leg, 1);
  EXPECT_EQ(two_hooks[1].corner, (Node{2, 1}));
  EXPECT_EQ(two_hooks[1].leg, 0);
  EXPECT_EQ(leg_length(Partition{9, 8, 6, 5, 1}, Node{2, 3}), 2);
  EXPECT_THROW(hook_length(Partition{2}, Node{2, 1}), DomainError);
}

TEST(Hooks, RemovalFigure) {
  const Partition lam{9, 8, 6, 5, 1};
  EXPECT_EQ(hook_length(lam, Node{2, 3}), 8);
  const HookRemoval r = remove_hook(lam, Node{2, 3});
  EXPECT_EQ(r.rest, (Partition{9, 5, 4, 2, 1}));
  EXPECT_EQ(r.leg, 2);
  EXPECT_THROW(remove_hook(lam, Node{6, 1}), DomainError);
}

// Diagram removal and bead moves give the same partitions with the same legs.
TEST(Hooks, DiagramRemovalMatchesBeads) {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& lam : partitions_of(n)) {
      for (int e = 1; e <= 5; ++e) {
        std::map<Partition, int> diagram;
        for (const Hook& h : hooks_of_length(lam, e)) {
          const HookRemoval r = remove_hook(lam, h.corner);
          EXPECT_EQ(r.leg, h.leg);
          EXPECT_EQ(r.rest.size(), n - e);
          diagram[r.rest] = r.leg;
        }
        std::map<Partition, int> beads;
        for (const auto& step : rim_hook_removals(lam, e)) beads[step.rest] = step.leg;
        EXPECT_EQ(diagram, beads) << lam.str() << " e=" << e;
      }
    }
  }
}
