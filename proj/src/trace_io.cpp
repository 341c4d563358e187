#include "bcmaes/trace_io.hpp"

#include "bcmaes/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace bcmaes {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc())
    throw Error("format_double: conversion failed");
  return std::string(buf, ptr);
}

namespace {

double parse_double(std::string_view s, const char* what) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(std::string("trace csv: bad ") + what + " field '" +
                std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace

std::string trace_csv_header(int dim) {
  std::string h = "iter,best_f_iter,best_f_so_far";
  for (int j = 0; j < dim; ++j) h += ",mean_" + std::to_string(j);
  h += ",logdet_cov,lambda_n,nu_n";
  return h;
}

void write_trace_csv(std::ostream& out, const std::vector<IterationTrace>& trace,
                     int dim) {
  out << trace_csv_header(dim) << '\n';
  for (const auto& row : trace) {
    if (row.mean.size() != dim)
      throw InvalidArgument("write_trace_csv: row dimension mismatch");
    out << row.iteration << ',' << format_double(row.best_f_iter) << ','
        << format_double(row.best_f_so_far);
    for (int j = 0; j < dim; ++j) out << ',' << format_double(row.mean[j]);
    out << ',' << format_double(row.logdet_cov) << ','
        << format_double(row.lambda_n) << ',' << format_double(row.nu_n)
        << '\n';
  }
}

void write_trace_csv_file(const std::string& path,
                          const std::vector<IterationTrace>& trace, int dim) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("write_trace_csv_file: cannot open " + path);
  write_trace_csv(out, trace, dim);
  if (!out) throw Error("write_trace_csv_file: write failed for " + path);
}

std::vector<IterationTrace> read_trace_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error("trace csv: missing header");
  const auto header = split_csv(line);
  if (header.size() < 6 || header[0] != "iter")
    throw Error("trace csv: unrecognized header");
  const int dim = static_cast<int>(header.size()) - 6;
  for (int j = 0; j < dim; ++j)
    if (header[3 + j] != "mean_" + std::to_string(j))
      throw Error("trace csv: unrecognized header");

  std::vector<IterationTrace> trace;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != header.size())
      throw Error("trace csv: wrong field count in row");
    IterationTrace row;
    row.iteration = static_cast<int>(parse_double(fields[0], "iter"));
    row.best_f_iter = parse_double(fields[1], "best_f_iter");
    row.best_f_so_far = parse_double(fields[2], "best_f_so_far");
    row.mean = Vector(dim);
    for (int j = 0; j < dim; ++j)
      row.mean[j] = parse_double(fields[3 + j], "mean");
    row.logdet_cov = parse_double(fields[3 + dim], "logdet_cov");
    row.lambda_n = parse_double(fields[4 + dim], "lambda_n");
    row.nu_n = parse_double(fields[5 + dim], "nu_n");
    trace.push_back(std::move(row));
  }
  return trace;
}

std::vector<IterationTrace> read_trace_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("read_trace_csv_file: cannot open " + path);
  return read_trace_csv(in);
}

SweepSummary summarize_best(const std::vector<double>& best_f, double tol) {
  if (best_f.empty()) throw InvalidArgument("summarize_best: empty input");
  std::vector<double> sorted = best_f;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  SweepSummary s;
  s.seeds = static_cast<int>(n);
  s.median_best_f = (n % 2 == 1)
                        ? sorted[n / 2]
                        : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  s.successes = static_cast<int>(
      std::count_if(sorted.begin(), sorted.end(),
                    [tol](double v) { return v < tol; }));
  return s;
}

std::string summary_csv(const SweepSummary& s) {
  std::ostringstream out;
  out << "seeds,median_best_f,successes\n"
      << s.seeds << ',' << format_double(s.median_best_f) << ',' << s.successes
      << '\n';
  return out.str();
}

}  // namespace bcmaes
