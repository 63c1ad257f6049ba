#include "h2d/report.hpp"
#include "h2d/tables.hpp"

#include <gtest/gtest.h>

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

using namespace h2d;

TEST(GridSpec, ParseLinear) {
  const auto g = GridSpec::parse("0:5:6");
  EXPECT_EQ(g.points, 6);
  EXPECT_EQ(g.scale, GridSpec::Scale::linear);
  const auto v = g.values();
  ASSERT_EQ(v.size(), 6u);
  EXPECT_EQ(v.front(), 0.0);
  EXPECT_EQ(v.back(), 5.0);
  EXPECT_DOUBLE_EQ(v[2], 2.0);
}

TEST(GridSpec, ParseLog) {
  const auto g = GridSpec::parse("0.05:20:20:log");
  const auto v = g.values();
  EXPECT_DOUBLE_EQ(v.front(), 0.05);
  EXPECT_DOUBLE_EQ(v.back(), 20.0);
  EXPECT_NEAR(v[1] / v[0], v[2] / v[1], 1e-12);
  EXPECT_EQ(g.describe(), "0.05:20:20:log");
}

TEST(GridSpec, Rejects) {
  EXPECT_THROW(GridSpec::parse("1:0:5"), std::invalid_argument);
  EXPECT_THROW(GridSpec::parse("0:1:1"), std::invalid_argument);
  EXPECT_THROW(GridSpec::parse("0:1:5:log"), std::invalid_argument);
  EXPECT_THROW(GridSpec::parse("0:1"), std::invalid_argument);
  EXPECT_THROW(GridSpec::parse("a:1:5"), std::invalid_argument);
  EXPECT_THROW(GridSpec::parse("0:1:5:cubic"), std::invalid_argument);
}

TEST(ErrorTracker, AbsoluteAndRelative) {
  ErrorTracker t;
  t.add(1.1, 1.0);
  t.add(std::complex<double>(0.0, 2.2), std::complex<double>(0.0, 2.0));
  EXPECT_NEAR(t.max_abs(), 0.2, 1e-15);
  EXPECT_NEAR(t.max_rel(), 0.1, 1e-15);
  EXPECT_EQ(t.count(), 2u);
}

TEST(ErrorTracker, NanPoisons) {
  ErrorTracker t;
  t.add(std::numeric_limits<double>::quiet_NaN(), 1.0);
  const auto r = make_report("x", "g", t, 1.0, ErrorMetric::absolute);
  EXPECT_FALSE(r.pass);
}

TEST(ErrorTracker, MergeIsOrderIndependent) {
  ErrorTracker a, b;
  a.add(1.0, 1.5);
  b.add(2.0, 2.1);
  ErrorTracker ab = a, ba = b;
  ab.merge(b);
  ba.merge(a);
  EXPECT_EQ(ab.max_abs(), ba.max_abs());
  EXPECT_EQ(ab.max_rel(), ba.max_rel());
  EXPECT_EQ(ab.count(), ba.count());
}

TEST(Report, PassIffWithinTolerance) {
  ErrorTracker t;
  t.add(1.0 + 1e-9, 1.0);
  EXPECT_TRUE(make_report("c", "g", t, 1e-8, ErrorMetric::absolute).pass);
  EXPECT_FALSE(make_report("c", "g", t, 1e-10, ErrorMetric::absolute).pass);
  EXPECT_FALSE(make_report("c", "g", t, 1e-10, ErrorMetric::relative).pass);
}

TEST(Report, Vacuous) {
  const auto r = make_report("c", "g", ErrorTracker{}, 0.0, ErrorMetric::absolute);
  EXPECT_TRUE(r.pass);
  EXPECT_NE(r.notes.find("vacuous"), std::string::npos);
}

TEST(Tables, EigenRows) {
  const auto rows = tables::eigen_table(2);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].q0, 2.0);
  EXPECT_EQ(rows[0].energy, -4.0);
  EXPECT_DOUBLE_EQ(rows[1].q0, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(rows[1].energy, -4.0 / 9.0);
  EXPECT_DOUBLE_EQ(rows[2].q0, 0.4);
  EXPECT_DOUBLE_EQ(rows[2].energy, -4.0 / 25.0);
  for (const auto& r : tables::eigen_table(10)) EXPECT_NEAR(r.energy * (r.n + 0.5) * (r.n + 0.5), -1.0, 1e-15);
  EXPECT_EQ(tables::eigen_table(0).size(), 1u);
  EXPECT_THROW(tables::eigen_table(-1), std::invalid_argument);
  EXPECT_THROW(tables::eigen_table(51), std::invalid_argument);
}

TEST(Tables, CsvRoundTrip) {
  const auto rows = tables::wave_table(tables::Space::position, {2, 1}, GridSpec::parse("0:7:15"), {0.3});
  std::ostringstream os;
  tables::write_wave_csv(os, tables::Space::position, rows, false);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "rho,re_psi,im_psi,abs2_psi");
  std::size_t i = 0;
  while (std::getline(is, line)) {
    EXPECT_EQ(line.find('\r'), std::string::npos);
    std::vector<double> f;
    std::size_t start = 0;
    while (start <= line.size()) {
      const auto end = std::min(line.find(',', start), line.size());
      double v = 0;
      std::from_chars(line.data() + start, line.data() + end, v);
      f.push_back(v);
      start = end + 1;
    }
    ASSERT_EQ(f.size(), 4u);
    EXPECT_EQ(f[0], rows[i].coordinate);
    EXPECT_EQ(f[1], rows[i].psi.real());
    EXPECT_EQ(f[2], rows[i].psi.imag());
    ++i;
  }
  EXPECT_EQ(i, rows.size());
}

TEST(Tables, MeshOrdering) {
  const auto rows = tables::wave_table(tables::Space::momentum, {1, 1}, GridSpec::parse("0.1:1:3"), {0.0, 1.0});
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0].coordinate, rows[1].coordinate);
  EXPECT_LT(rows[1].coordinate, rows[2].coordinate);
  EXPECT_EQ(rows[1].angle, 1.0);
}
