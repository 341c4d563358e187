#pragma once

#include "bcmaes/optimizer.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace bcmaes {

// Shortest round-trip decimal form of a double (std::to_chars),
// locale-independent.
std::string format_double(double v);

// Header: iter,best_f_iter,best_f_so_far,mean_0..mean_{p-1},logdet_cov,lambda_n,nu_n
std::string trace_csv_header(int dim);

void write_trace_csv(std::ostream& out, const std::vector<IterationTrace>& trace,
                     int dim);
void write_trace_csv_file(const std::string& path,
                          const std::vector<IterationTrace>& trace, int dim);

// Parse a trace CSV written by write_trace_csv; round-trips exactly.
std::vector<IterationTrace> read_trace_csv(std::istream& in);
std::vector<IterationTrace> read_trace_csv_file(const std::string& path);

struct SweepSummary {
  int seeds = 0;
  double median_best_f = 0.0;
  int successes = 0;  // runs with final best_f_so_far < tol
};

// Aggregate final best fitnesses; median of an even count is the mean
// of the two middle order statistics.
SweepSummary summarize_best(const std::vector<double>& best_f, double tol);

std::string summary_csv(const SweepSummary& s);

}  // namespace bcmaes
