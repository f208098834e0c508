#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "toricsym/census.hpp"
#include "toricsym/error.hpp"

using namespace toricsym;

namespace {

ErrorCode parse_error(const char* text, int rank = 3) {
  try {
    parse_centers(text, rank);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for '" << text << "'";
  return ErrorCode::kInternal;
}

}  // namespace

TEST(Blowup, ParseCenters) {
  const BlowupConfig c = parse_centers("p124,p123,l34,l23,l14");
  EXPECT_EQ(c.points.size(), 2u);
  EXPECT_EQ(c.lines.size(), 3u);
  EXPECT_EQ(c.to_string(), "p123,p124,l34,l23,l14");
  EXPECT_EQ(c.lines[0].token(), "l34");
  EXPECT_EQ(parse_centers("").center_count(), 0u);
  EXPECT_EQ(parse_centers("p12", 2).points.size(), 1u);
}

TEST(Blowup, ParseErrors) {
  EXPECT_EQ(parse_error("x12"), ErrorCode::kInvalidArgument);
  EXPECT_EQ(parse_error("p12"), ErrorCode::kInvalidArgument);
  EXPECT_EQ(parse_error("p125"), ErrorCode::kInvalidArgument);
  EXPECT_EQ(parse_error("l11"), ErrorCode::kInvalidArgument);
  EXPECT_EQ(parse_error("l34,p123"), ErrorCode::kOrderingViolation);
  EXPECT_EQ(parse_error("l34,l34"), ErrorCode::kDuplicate);
  EXPECT_EQ(parse_error("p123,p132"), ErrorCode::kDuplicate);
  EXPECT_EQ(parse_error("l12", 2), ErrorCode::kInvalidArgument);
  EXPECT_EQ(parse_error("p123,,l12"), ErrorCode::kInvalidArgument);
}

TEST(Blowup, LedgerOfClassA) {
  const BlowupSpace x = build(parse_centers(fixtures::kClassA));
  EXPECT_EQ(x.ledger().basis_names, (std::vector<std::string>{"H", "E123", "F34", "F24"}));
  EXPECT_EQ(x.curve_basis_names(), (std::vector<std::string>{"h", "e123", "f34", "f24"}));
  const Fan& f = x.fan();
  auto cls = [&](const char* label) { return x.ledger().ray_classes[static_cast<std::size_t>(*f.find_label(label))]; };
  EXPECT_EQ(cls("v1"), (IntVec{1, -1, 0, 0}));
  EXPECT_EQ(cls("v2"), (IntVec{1, -1, 0, -1}));
  EXPECT_EQ(cls("v3"), (IntVec{1, -1, -1, 0}));
  EXPECT_EQ(cls("v4"), (IntVec{1, 0, -1, -1}));
  EXPECT_EQ(cls("v123"), (IntVec{0, 1, 0, 0}));
  EXPECT_EQ(cls("v34"), (IntVec{0, 0, 1, 0}));
  EXPECT_EQ(cls("v24"), (IntVec{0, 0, 0, 1}));
  EXPECT_EQ(x.family(*f.find_label("v34")), RayFamily::kLineExceptional);
  EXPECT_EQ(x.family(*f.find_label("v123")), RayFamily::kPointExceptional);
  EXPECT_EQ(x.family(*f.find_label("v1")), RayFamily::kOriginal);
}

TEST(Blowup, SectionInvertsRayClasses) {
  for (const char* centers : {fixtures::kClassA, fixtures::kClassB, fixtures::kClassC, fixtures::kClassD}) {
    const BlowupSpace x = build(parse_centers(centers));
    const IntMat ray = x.ledger().ray_matrix();
    const IntMat sec = x.ledger().section_matrix();
    EXPECT_EQ(ray * sec, IntMat::identity(x.basis_size())) << centers;
  }
}

TEST(Blowup, CountingFormulasAndReplay) {
  std::mt19937 rng(424242);
  const auto configs = enumerate_configs(3);
  std::uniform_int_distribution<std::size_t> pick(0, configs.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const BlowupConfig& c = configs[pick(rng)];
    const BlowupSpace x = build(c);
    const std::size_t n = c.center_count();
    EXPECT_EQ(x.fan().ray_count(), 4 + n) << c.to_string();
    EXPECT_EQ(x.fan().maximal_cones().size(), 4 + 2 * n) << c.to_string();
    EXPECT_EQ(x.history().size(), n);
    EXPECT_EQ(replay(x), x.fan());
  }
}

TEST(Blowup, RankTwo) {
  const BlowupSpace x = build(parse_centers("p12,p13,p23", 2));
  EXPECT_EQ(x.rank(), 2);
  EXPECT_EQ(x.fan().ray_count(), 6u);
  EXPECT_EQ(x.fan().maximal_cones().size(), 6u);
  EXPECT_EQ(x.ledger().basis_names, (std::vector<std::string>{"H", "E12", "E13", "E23"}));
}

TEST(Blowup, LineAfterPointOnIt) {
  // p123 lies on l12, so the line's proper transform still has a cone.
  const BlowupSpace x = build(parse_centers("p123,l12"));
  EXPECT_TRUE(x.fan().is_valid());
  EXPECT_EQ(x.fan().ray_count(), 6u);
}
