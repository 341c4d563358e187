#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcmaes/errors.hpp"
#include "bcmaes/trace_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

using bcmaes::IterationTrace;
using bcmaes::Vector;

namespace {

IterationTrace make_row(int iter, double f_iter, double f_best, double m0,
                        double m1, double logdet, double lam, double nu) {
  IterationTrace t;
  t.iteration = iter;
  t.best_f_iter = f_iter;
  t.best_f_so_far = f_best;
  t.mean = Vector(2);
  t.mean << m0, m1;
  t.logdet_cov = logdet;
  t.lambda_n = lam;
  t.nu_n = nu;
  return t;
}

double from_chars_strict(const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  REQUIRE(res.ec == std::errc());
  REQUIRE(res.ptr == s.data() + s.size());
  return v;
}

}  // namespace

TEST_CASE("format_double round-trips awkward values exactly") {
  for (double v : {0.0, -0.0, 0.1, 1.0 / 3.0, 2.0, -12345.6789, 1e-300,
                   6.02214076e23, 2.718281828459045}) {
    const std::string s = bcmaes::format_double(v);
    const double back = from_chars_strict(s);
    CHECK(std::signbit(back) == std::signbit(v));
    CHECK(back == v);
  }
  CHECK(bcmaes::format_double(2.0) == "2");
}

TEST_CASE("header names every column for the dimension") {
  CHECK(bcmaes::trace_csv_header(1) ==
        "iter,best_f_iter,best_f_so_far,mean_0,logdet_cov,lambda_n,nu_n");
  CHECK(bcmaes::trace_csv_header(3) ==
        "iter,best_f_iter,best_f_so_far,mean_0,mean_1,mean_2,logdet_cov,"
        "lambda_n,nu_n");
}

TEST_CASE("trace csv round-trips every field bit for bit") {
  std::vector<IterationTrace> trace{
      make_row(1, 14.208, 14.208, 10.1, 9.7, 0.1 + 0.2, 7.0, 12.0),
      make_row(2, 1.0 / 3.0, 0.25, -1e-17, 3.5e300, -41.25, 13.0, 18.0),
  };
  std::ostringstream out;
  bcmaes::write_trace_csv(out, trace, 2);
  const std::string text = out.str();
  CHECK(text.find('\r') == std::string::npos);
  CHECK(text.back() == '\n');

  std::istringstream in(text);
  const auto back = bcmaes::read_trace_csv(in);
  REQUIRE(back.size() == trace.size());
  for (std::size_t i = 0; i < trace.size(); ++i) {
    CHECK(back[i].iteration == trace[i].iteration);
    CHECK(back[i].best_f_iter == trace[i].best_f_iter);
    CHECK(back[i].best_f_so_far == trace[i].best_f_so_far);
    CHECK((back[i].mean.array() == trace[i].mean.array()).all());
    CHECK(back[i].logdet_cov == trace[i].logdet_cov);
    CHECK(back[i].lambda_n == trace[i].lambda_n);
    CHECK(back[i].nu_n == trace[i].nu_n);
  }
}

TEST_CASE("writing twice yields byte-identical text") {
  std::vector<IterationTrace> trace{make_row(1, 0.3, 0.3, 1.0, 2.0, -3.0, 7.0, 12.0)};
  std::ostringstream a, b;
  bcmaes::write_trace_csv(a, trace, 2);
  bcmaes::write_trace_csv(b, trace, 2);
  CHECK(a.str() == b.str());
}

TEST_CASE("reader rejects malformed input") {
  std::istringstream bad_header("oops,header\n");
  CHECK_THROWS_AS(bcmaes::read_trace_csv(bad_header), bcmaes::Error);
  std::istringstream short_row(
      "iter,best_f_iter,best_f_so_far,mean_0,logdet_cov,lambda_n,nu_n\n"
      "1,2.0,2.0\n");
  CHECK_THROWS_AS(bcmaes::read_trace_csv(short_row), bcmaes::Error);
  std::istringstream bad_field(
      "iter,best_f_iter,best_f_so_far,mean_0,logdet_cov,lambda_n,nu_n\n"
      "1,zebra,2.0,1.0,0.0,7,12\n");
  CHECK_THROWS_AS(bcmaes::read_trace_csv(bad_field), bcmaes::Error);
  std::istringstream empty("");
  CHECK_THROWS_AS(bcmaes::read_trace_csv(empty), bcmaes::Error);
}

TEST_CASE("summaries compute median and success counts") {
  const auto odd = bcmaes::summarize_best({3.0, 1.0, 2.0}, 2.5);
  CHECK(odd.seeds == 3);
  CHECK(odd.median_best_f == 2.0);
  CHECK(odd.successes == 2);

  const auto even = bcmaes::summarize_best({4.0, 1.0, 3.0, 2.0}, 0.5);
  CHECK(even.seeds == 4);
  CHECK(even.median_best_f == 2.5);
  CHECK(even.successes == 0);

  CHECK_THROWS_AS(bcmaes::summarize_best({}, 1.0), bcmaes::InvalidArgument);
}

TEST_CASE("summary csv uses the shortest exact formatting") {
  bcmaes::SweepSummary s;
  s.seeds = 10;
  s.median_best_f = 0.125;
  s.successes = 9;
  CHECK(bcmaes::summary_csv(s) == "seeds,median_best_f,successes\n10,0.125,9\n");
}
