#include <landing/csv.hpp>

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

namespace landing::csv {

std::string format_number(Scalar value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

std::string trim(const std::string &s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

Scalar parse_number(const std::string &field, const std::string &source,
                    std::size_t line) {
  const std::string token = trim(field);
  Scalar value = 0;
  const char *begin = token.data();
  const char *end = begin + token.size();
  if (!token.empty() && *begin == '+')
    ++begin;
  const auto res = std::from_chars(begin, end, value);
  if (token.empty() || res.ec != std::errc() || res.ptr != end) {
    std::ostringstream msg;
    msg << source << ":" << line << ": invalid number '" << token << "'";
    throw std::runtime_error(msg.str());
  }
  return value;
}

} // namespace

Matrix parse_matrix(std::istream &in, const std::string &source) {
  std::vector<std::vector<Scalar>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty())
      continue;
    std::vector<Scalar> row;
    std::stringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ','))
      row.push_back(parse_number(field, source, lineno));
    if (!line.empty() && trim(line).back() == ',')
      row.push_back(parse_number("", source, lineno));
    if (!rows.empty() && row.size() != rows.front().size()) {
      std::ostringstream msg;
      msg << source << ":" << lineno << ": expected " << rows.front().size()
          << " columns, got " << row.size();
      throw std::runtime_error(msg.str());
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty())
    throw std::runtime_error(source + ": no matrix data");

  Matrix m(static_cast<Eigen::Index>(rows.size()),
           static_cast<Eigen::Index>(rows.front().size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

Matrix read_matrix(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot read matrix file '" + path + "'");
  return parse_matrix(in, path);
}

void write_matrix(std::ostream &out, const Matrix &m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0)
        out << ',';
      out << format_number(m(i, j));
    }
    out << '\n';
  }
}

void write_trace(std::ostream &out, const std::vector<IterationRecord> &trace) {
  out << kTraceHeader << '\n';
  for (const auto &r : trace) {
    out << r.k << ',' << format_number(r.f_value) << ','
        << format_number(r.grad_norm) << ',' << format_number(r.h_norm) << ','
        << format_number(r.N_value) << ',' << format_number(r.eta) << ','
        << format_number(r.sigma_min_ratio) << '\n';
  }
}

void write_trace(const std::string &path, const std::vector<IterationRecord> &trace) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write trace file '" + path + "'");
  write_trace(out, trace);
}

} // namespace landing::csv
