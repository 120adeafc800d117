#pragma once

#include <landing/landing.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace landing::csv {

inline constexpr const char *kTraceHeader =
    "iter,f,grad_norm,h_norm,N,eta,sigma_min_ratio";

/// 17 significant digits, enough to round-trip any double.
std::string format_number(Scalar value);

/// Comma-separated decimal rows, no header. Blank lines are skipped.
/// Throws std::runtime_error on unreadable files, ragged rows or bad numbers.
Matrix parse_matrix(std::istream &in, const std::string &source = "<stream>");
Matrix read_matrix(const std::string &path);

void write_matrix(std::ostream &out, const Matrix &m);

void write_trace(std::ostream &out, const std::vector<IterationRecord> &trace);
void write_trace(const std::string &path, const std::vector<IterationRecord> &trace);

} // namespace landing::csv
