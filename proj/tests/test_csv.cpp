#include <landing/csv.hpp>

#include <gtest/gtest.h>

#include <sstream>

#include "test_support.hpp"

using namespace landing;

TEST(Csv, ParsesPlainRows) {
  std::istringstream in("1,2.5,-3\n4e-1, 5 ,6\n\n");
  const Matrix m = csv::parse_matrix(in);
  ASSERT_EQ(m.rows(), 2);
  ASSERT_EQ(m.cols(), 3);
  EXPECT_DOUBLE_EQ(m(0, 1), 2.5);
  EXPECT_DOUBLE_EQ(m(1, 0), 0.4);
  EXPECT_DOUBLE_EQ(m(1, 1), 5.0);
}

TEST(Csv, RejectsMalformedInput) {
  std::istringstream ragged("1,2\n3\n");
  EXPECT_THROW(csv::parse_matrix(ragged), std::runtime_error);
  std::istringstream header("a,b\n1,2\n");
  EXPECT_THROW(csv::parse_matrix(header), std::runtime_error);
  std::istringstream empty("");
  EXPECT_THROW(csv::parse_matrix(empty), std::runtime_error);
  std::istringstream trailing("1,2,\n");
  EXPECT_THROW(csv::parse_matrix(trailing), std::runtime_error);
  EXPECT_THROW(csv::read_matrix("/nonexistent/matrix.csv"), std::runtime_error);
}

TEST(Csv, SeventeenDigitsRoundTrip) {
  const Matrix m = landing::testing::random_matrix(4, 3, 9) * 1e-3;
  std::ostringstream out;
  csv::write_matrix(out, m);
  std::istringstream in(out.str());
  EXPECT_EQ(csv::parse_matrix(in), m);
  EXPECT_EQ(csv::format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(csv::format_number(1.0), "1");
}

TEST(Csv, TraceHeaderAndRows) {
  std::vector<IterationRecord> trace(2);
  trace[0] = {0, 1.5, 0.25, 0.5, 0.125, 0.01, 0.9};
  trace[1] = {1, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0};
  std::ostringstream out;
  csv::write_trace(out, trace);
  EXPECT_EQ(out.str(),
            "iter,f,grad_norm,h_norm,N,eta,sigma_min_ratio\n"
            "0,1.5,0.25,0.5,0.125,0.01,0.90000000000000002\n"
            "1,1,0,0,0,0,1\n");
}
