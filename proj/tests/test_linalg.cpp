#include <gtest/gtest.h>

#include <random>

#include "common.hpp"

using namespace lindef;

namespace {
SparseMatrix<long long> random_int_matrix(std::size_t r, std::size_t c, double density, std::mt19937& rng) {
  std::bernoulli_distribution coin(density);
  std::uniform_int_distribution<int> v(-3, 3);
  SparseMatrix<long long> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (coin(rng)) m.set(i, j, v(rng));
  return m;
}

template <class K>
SparseMatrix<typename K::value_type> convert(const SparseMatrix<long long>& m, const K& k) {
  SparseMatrix<typename K::value_type> out(m.nrows(), m.ncols());
  m.for_each([&](std::size_t r, std::size_t c, long long v) {
    auto x = k.from_int(v);
    if (!k.is_zero(x)) out.set(r, c, x);
  });
  return out;
}
}  // namespace

TEST(Field, Validation) {
  EXPECT_EQ(FieldSpec(0).name(), "QQ");
  EXPECT_EQ(FieldSpec(2).name(), "ZZ/2");
  EXPECT_THROW(FieldSpec(4), InputError);
  EXPECT_THROW(FieldSpec(1), InputError);
  PrimeField f(7);
  EXPECT_EQ(f.mul(f.inv(3), 3), 1u);
  EXPECT_EQ(f.from_int(-1), 6u);
}

TEST(SparseMatrix, SetGetTranspose) {
  SparseMatrix<long long> m(2, 3);
  m.set(0, 2, 5);
  m.set(1, 0, -1);
  m.set(0, 2, 0);
  EXPECT_EQ(m.get(0, 2), 0);
  EXPECT_EQ(m.nonzeros(), 1u);
  auto t = m.transpose();
  EXPECT_EQ(t.nrows(), 3u);
  EXPECT_EQ(t.get(0, 1), -1);
}

TEST(SparseMatrix, KnownRanks) {
  SparseMatrix<long long> m(3, 3);
  // [[1,1,0],[0,1,1],[1,0,1]]: determinant 2
  m.set(0, 0, 1), m.set(0, 1, 1), m.set(1, 1, 1), m.set(1, 2, 1), m.set(2, 0, 1), m.set(2, 2, 1);
  EXPECT_EQ(rank(m, FieldSpec(0)), 3u);
  EXPECT_EQ(rank(m, FieldSpec(2)), 2u);
  EXPECT_EQ(rank(m, FieldSpec(3)), 3u);
}

TEST(SparseMatrix, RankOverQIsAtLeastRankModP) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    auto m = random_int_matrix(6 + trial % 5, 7, 0.4, rng);
    auto q = rank(m, FieldSpec(0));
    for (unsigned p : {2u, 3u, 5u}) EXPECT_GE(q, rank(m, FieldSpec(p)));
    EXPECT_EQ(q, rank(convert(m, RationalField{}), RationalField{}));
    EXPECT_EQ(q, rank(m.transpose(), FieldSpec(0)));
  }
}

TEST(SparseMatrix, KernelBasisMultipliesToZero) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    auto m = random_int_matrix(5, 8, 0.4, rng);
    auto check = [&](const auto& k) {
      auto mk = convert(m, k);
      auto basis = kernel_basis(mk, k);
      EXPECT_EQ(basis.size() + rank(mk, k), m.ncols());
      SubspaceBasis<std::decay_t<decltype(k)>> span(m.ncols(), k);
      for (const auto& v : basis) {
        for (const auto& x : multiply(mk, v, k)) EXPECT_TRUE(k.is_zero(x));
        EXPECT_TRUE(span.insert(v));
      }
      EXPECT_EQ(span.rank(), basis.size());
    };
    check(RationalField{});
    check(PrimeField(2));
    check(PrimeField(101));
  }
}

TEST(SparseMatrix, SubspaceMembership) {
  PrimeField k(5);
  SubspaceBasis<PrimeField> s(3, k);
  EXPECT_TRUE(s.insert({1, 2, 0}));
  EXPECT_TRUE(s.insert({0, 1, 1}));
  EXPECT_TRUE(s.contains({1, 3, 1}));
  EXPECT_FALSE(s.contains({0, 0, 1}));
  EXPECT_FALSE(s.insert({2, 4, 0}));
  EXPECT_EQ(s.rank(), 2u);
}
