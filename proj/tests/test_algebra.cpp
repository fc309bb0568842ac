#include <random>

#include <gtest/gtest.h>

#include "gabra/algebra.hpp"
#include "gabra/error.hpp"
#include "gabra/units.hpp"
#include "oracle.hpp"

using namespace gabra;

namespace {

class KQ8 : public ::testing::Test {
 protected:
  ContextPtr ctx = AlgebraContext::make(build_group("q8"), 2);

  AlgebraElement e(const char* text) const { return parse_element(ctx, text); }
  AlgebraElement g(const char* label) const { return AlgebraElement::embed(ctx, ctx->group().find(label)); }
};

constexpr std::uint64_t kSeed = 20240611;

}  // namespace

TEST(AlgebraContextCtor, EnforcesModularCondition) {
  EXPECT_THROW(AlgebraContext::make(build_group("q8"), 3), InvalidInput);
  EXPECT_THROW(AlgebraContext::make(build_group("c9"), 2), InvalidInput);
  EXPECT_THROW(AlgebraContext::make(build_group("c2xc3"), 2), InvalidInput);
  EXPECT_THROW(AlgebraContext::make(build_group("q8"), 4), InvalidInput);
  EXPECT_THROW(AlgebraContext::make(build_group("c1"), 257), InvalidInput);
  EXPECT_NO_THROW(AlgebraContext::make(build_group("c1"), 7));
  EXPECT_NO_THROW(AlgebraContext::make(build_group("elem3e2"), 3));
}

TEST(AlgebraContextCtor, InversionOrbitsPartitionTheGroup) {
  for (const char* spec : {"q8", "d8", "d16", "c8", "c4xc2", "elem2e3", "q8xc2"}) {
    const auto ctx = AlgebraContext::make(build_group(spec), 2);
    std::vector<int> hits(ctx->dimension(), 0);
    for (const auto& orbit : ctx->inversion_orbits()) {
      for (auto g : orbit) ++hits[g];
      EXPECT_NE(std::find(orbit.begin(), orbit.end(), ctx->group().inverse(orbit[0])), orbit.end());
    }
    for (int h : hits) EXPECT_EQ(h, 1) << spec;
  }
}

TEST_F(KQ8, AddExamples) {
  const auto x = e("1 + a + b");
  EXPECT_EQ(x + AlgebraElement::zero(ctx), x);
  EXPECT_EQ(x + x, AlgebraElement::zero(ctx));
  EXPECT_EQ(e("1 + a") + e("a + b"), e("1 + b"));
}

TEST_F(KQ8, MulExamples) {
  const auto& group = ctx->group();
  for (ElementIndex x = 0; x < 8; ++x) {
    for (ElementIndex y = 0; y < 8; ++y) {
      EXPECT_EQ(mul(AlgebraElement::embed(ctx, x), AlgebraElement::embed(ctx, y)),
                AlgebraElement::embed(ctx, group.mul(x, y)));
    }
  }
  EXPECT_EQ(g("b") * g("b"), g("a^2"));
  EXPECT_EQ(power(e("1 + a"), 2), e("1 + a^2"));
}

TEST_F(KQ8, MulMatchesRegularRepresentation) {
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 200; ++i) {
    const auto x = random_element(ctx, rng), y = random_element(ctx, rng);
    EXPECT_EQ(x * y, oracle::product(x, y));
  }
}

TEST(AlgebraMul, MatchesRegularRepresentationOddPrime) {
  const auto ctx = AlgebraContext::make(build_group("c3xc3"), 3);
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 200; ++i) {
    const auto x = random_element(ctx, rng), y = random_element(ctx, rng);
    EXPECT_EQ(x * y, oracle::product(x, y));
  }
}

TEST_F(KQ8, InvolutionExamples) {
  EXPECT_EQ(involution(g("a")), g("a^3"));
  EXPECT_EQ(involution(e("1 + a + b")), e("1 + a^3 + a^2*b"));
  for (std::size_t c = 0; c < ctx->classes().size(); ++c) {
    const auto sum = class_sum(ctx, c);
    EXPECT_EQ(involution(sum), sum);
  }
}

TEST_F(KQ8, InvolutionIsTransposeOfRegularMatrix) {
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 100; ++i) {
    const auto x = random_element(ctx, rng);
    EXPECT_EQ(oracle::regular_matrix(involution(x)), oracle::transpose(oracle::regular_matrix(x)));
  }
}

TEST_F(KQ8, AugmentationExamples) {
  for (ElementIndex i = 0; i < 8; ++i) EXPECT_EQ(augmentation(AlgebraElement::embed(ctx, i)), 1u);
  EXPECT_EQ(augmentation(e("a + b")), 0u);
  // alpha0 + alpha1 a^2 + gamma with alpha0 + alpha1 = 1
  EXPECT_EQ(augmentation(e("a^2 + a + a^3 + a*b + a^3*b")), 1u);
  EXPECT_EQ(augmentation(e("1 + b + a^2*b")), 1u);
}

TEST_F(KQ8, InverseExamples) {
  const auto one = AlgebraElement::one(ctx);
  EXPECT_EQ(inverse_normalized(one), one);
  for (ElementIndex i = 0; i < 8; ++i) {
    EXPECT_EQ(inverse_normalized(AlgebraElement::embed(ctx, i)),
              AlgebraElement::embed(ctx, ctx->group().inverse(i)));
  }
  const auto s = e("1 + b + a^2*b");
  EXPECT_TRUE(is_symmetric(s));
  EXPECT_EQ(s * s, one);
  EXPECT_EQ(inverse_normalized(s), s);
}

TEST_F(KQ8, InverseRejectsNonNormalized) {
  EXPECT_THROW(inverse_normalized(e("a + b")), NotNormalizedUnit);
  EXPECT_THROW(inverse_normalized(AlgebraElement::zero(ctx)), NotNormalizedUnit);
}

TEST(AlgebraInverse, AgreesWithMatrixInverse) {
  for (const auto& [spec, p] : std::vector<std::pair<const char*, unsigned>>{
           {"q8", 2}, {"d8", 2}, {"c4xc2", 2}, {"c9", 3}, {"elem3e2", 3}, {"c5", 5}}) {
    const auto ctx = AlgebraContext::make(build_group(spec), p);
    std::mt19937_64 rng(kSeed);
    for (int i = 0; i < 50; ++i) {
      const auto x = random_unit(ctx, rng);
      const auto inv = oracle::invert(oracle::regular_matrix(x), p);
      ASSERT_TRUE(inv.has_value()) << spec;
      EXPECT_EQ(inverse_normalized(x), AlgebraElement(ctx, oracle::from_matrix(*inv))) << spec;
    }
  }
}

TEST(AlgebraInverse, NilpotencyIndexOfAugmentationIdeal) {
  const auto ctx = AlgebraContext::make(build_group("c4"), 2);
  // (1 + g)^4 = 1 + g^4 = 0 in characteristic two, (1 + g)^3 != 0
  const auto z = parse_element(ctx, "1 + g");
  EXPECT_EQ(nilpotency_index(z), 4u);
  EXPECT_EQ(nilpotency_index(AlgebraElement::zero(ctx)), 1u);
  EXPECT_THROW(nilpotency_index(AlgebraElement::one(ctx)), PreconditionViolation);
}

TEST_F(KQ8, ClassSums) {
  EXPECT_EQ(class_sum(ctx, 0), AlgebraElement::one(ctx));
  EXPECT_EQ(class_sum(ctx, 1), e("a + a^3"));
  EXPECT_EQ(class_sum(ctx, 3), e("b + a^2*b"));
  for (std::size_t c = 0; c < ctx->classes().size(); ++c) EXPECT_TRUE(is_central(class_sum(ctx, c)));
  EXPECT_THROW(class_sum(ctx, 5), InvalidInput);
}

TEST(AlgebraClassSums, CentralAcrossCatalog) {
  for (const char* spec : {"d8", "d16", "q8xc2", "d8xc2"}) {
    const auto ctx = AlgebraContext::make(build_group(spec), 2);
    for (std::size_t c = 0; c < ctx->classes().size(); ++c) {
      const auto sum = class_sum(ctx, c);
      // check against every group element, not only the generators
      for (const auto& h : embedded_group(ctx)) EXPECT_EQ(sum * h, h * sum) << spec;
      if (ctx->classes().classes[c].members.size() == 1) {
        const auto z = ctx->classes().classes[c].members[0];
        EXPECT_EQ(sum, AlgebraElement::embed(ctx, z));
        EXPECT_NE(std::find(ctx->center().begin(), ctx->center().end(), z), ctx->center().end());
      }
    }
  }
}

TEST_F(KQ8, Centrality) {
  EXPECT_TRUE(is_central(AlgebraElement::one(ctx)));
  EXPECT_FALSE(is_central(g("a")));
  EXPECT_TRUE(is_central(g("a^2")));
}

TEST_F(KQ8, Symmetry) {
  EXPECT_TRUE(is_symmetric(AlgebraElement::one(ctx)));
  EXPECT_FALSE(is_symmetric(g("a")));
  EXPECT_TRUE(is_symmetric(e("a + a^3")));
}

TEST(AlgebraProperties, AntiautomorphismAndAugmentation) {
  for (const auto& [spec, p] : std::vector<std::pair<const char*, unsigned>>{
           {"q8", 2}, {"d8", 2}, {"d16", 2}, {"elem3e2", 3}, {"c9", 3}}) {
    const auto ctx = AlgebraContext::make(build_group(spec), p);
    std::mt19937_64 rng(kSeed);
    for (int i = 0; i < 300; ++i) {
      const auto x = random_element(ctx, rng), y = random_element(ctx, rng);
      EXPECT_EQ(involution(involution(x)), x);
      EXPECT_EQ(involution(x * y), involution(y) * involution(x));
      EXPECT_EQ(involution(x + y), involution(x) + involution(y));
      EXPECT_EQ(augmentation(x + y), (augmentation(x) + augmentation(y)) % p);
      EXPECT_EQ(augmentation(x * y), (augmentation(x) * augmentation(y)) % p);
      EXPECT_EQ(is_symmetric(x), involution(x) == x);
    }
  }
}

TEST(AlgebraProperties, NormalizedUnits) {
  for (const auto& [spec, p] : std::vector<std::pair<const char*, unsigned>>{
           {"q8", 2}, {"d8", 2}, {"q8xc2", 2}, {"elem3e2", 3}, {"c25", 5}}) {
    const auto ctx = AlgebraContext::make(build_group(spec), p);
    const auto one = AlgebraElement::one(ctx);
    std::mt19937_64 rng(kSeed);
    for (int i = 0; i < 200; ++i) {
      const auto x = random_unit(ctx, rng);
      ASSERT_EQ(augmentation(x), 1u);
      EXPECT_TRUE(is_symmetric(involution(x) * x)) << spec;
      const auto y = inverse_normalized(x);
      EXPECT_EQ(x * y, one) << spec;
      EXPECT_EQ(y * x, one) << spec;
      EXPECT_EQ(inverse_normalized(y), x) << spec;
    }
    for (const auto& h : embedded_group(ctx)) EXPECT_EQ(involution(h), inverse_normalized(h));
  }
}

TEST(AlgebraElementText, FormatsAndParses) {
  const auto ctx = AlgebraContext::make(build_group("c9"), 3);
  const AlgebraElement x(ctx, {1, 0, 2, 0, 0, 0, 0, 0, 1});
  EXPECT_EQ(to_string(x), "1 + 2*g^2 + g^8");
  EXPECT_EQ(to_string(AlgebraElement::zero(ctx)), "0");
  EXPECT_EQ(to_string(scale(AlgebraElement::one(ctx), 2)), "2");
  EXPECT_EQ(parse_element(ctx, "1 + 2*g^2 + g^8"), x);
  EXPECT_EQ(parse_element(ctx, "2*g^2 + 1 + g^8"), x);
  EXPECT_EQ(parse_element(ctx, "g + g + g"), AlgebraElement::zero(ctx));
  EXPECT_EQ(parse_element(ctx, "0"), AlgebraElement::zero(ctx));
  EXPECT_THROW(parse_element(ctx, "1 + + g"), InvalidInput);
  EXPECT_THROW(parse_element(ctx, "h"), InvalidInput);

  std::mt19937_64 rng(kSeed);
  for (const char* spec : {"q8", "d8xc2", "c4xc2"}) {
    const auto c = AlgebraContext::make(build_group(spec), 2);
    for (int i = 0; i < 50; ++i) {
      const auto y = random_element(c, rng);
      EXPECT_EQ(parse_element(c, to_string(y)), y);
    }
  }
}

TEST(AlgebraElementCtor, ReducesAndValidates) {
  const auto ctx = AlgebraContext::make(build_group("c3"), 3);
  EXPECT_EQ(AlgebraElement(ctx, {4, 5, 3}).coefficients(), (Coefficients{1, 2, 0}));
  EXPECT_THROW(AlgebraElement(ctx, {1, 0}), InvalidInput);
  const auto other = AlgebraContext::make(build_group("c3"), 3);
  EXPECT_THROW(add(AlgebraElement::one(ctx), AlgebraElement::one(other)), InvalidInput);
  EXPECT_THROW(mul(AlgebraElement::one(ctx), AlgebraElement::one(other)), InvalidInput);
}
