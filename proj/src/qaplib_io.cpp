#include "qapround/qaplib_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace qapround {

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;  // byte offset in the input
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i >= text.size()) break;
    const std::size_t start = i;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    tokens.push_back(Token{text.substr(start, i - start), start});
  }
  return tokens;
}

double parse_number(const std::vector<Token>& tokens, std::size_t index) {
  const Token& tok = tokens[index];
  double value = 0.0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw ParseError("token " + std::to_string(index + 1) + " at byte " +
                     std::to_string(tok.offset) + " is not a number: '" +
                     std::string(tok.text) + "'");
  if (!std::isfinite(value))
    throw ParseError("token " + std::to_string(index + 1) +
                     " is not finite: '" + std::string(tok.text) + "'");
  return value;
}

int parse_order(const std::vector<Token>& tokens, std::size_t index) {
  const double value = parse_number(tokens, index);
  if (value < 1.0 || value != std::floor(value))
    throw ParseError("token " + std::to_string(index + 1) +
                     " must be a positive integer order, got '" +
                     std::string(tokens[index].text) + "'");
  if (value > 20000.0)
    throw ParseError("order " + std::string(tokens[index].text) +
                     " is implausibly large");
  return static_cast<int>(value);
}

Matrix read_matrix(const std::vector<Token>& tokens, std::size_t start, int n) {
  Matrix m(n, n);
  std::size_t idx = start;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = parse_number(tokens, idx++);
  return m;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void check_symmetric_with_indices(const Matrix& m, const char* which) {
  const int n = static_cast<int>(m.rows());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(m(i, j) - m(j, i)) > Instance::kSymmetryTolerance)
        throw ParseError(std::string(which) + "[" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + "]=" + format_number(m(i, j)) +
                         " != " + std::string(which) + "[" + std::to_string(j + 1) +
                         "," + std::to_string(i + 1) + "]=" +
                         format_number(m(j, i)) +
                         "; asymmetric instances are not supported");
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

Instance parse_instance(std::string_view text, std::string name) {
  const std::vector<Token> tokens = tokenize(text);
  if (tokens.empty()) throw ParseError("empty input");
  const int n = parse_order(tokens, 0);
  const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  const std::size_t with_c = 1 + 3 * nn;
  const std::size_t without_c = 1 + 2 * nn;
  if (tokens.size() != with_c && tokens.size() != without_c)
    throw ParseError("expected " + std::to_string(without_c) + " or " +
                     std::to_string(with_c) + " tokens for n=" +
                     std::to_string(n) + ", found " +
                     std::to_string(tokens.size()));
  Matrix a = read_matrix(tokens, 1, n);
  Matrix b = read_matrix(tokens, 1 + nn, n);
  check_symmetric_with_indices(a, "A");
  check_symmetric_with_indices(b, "B");
  if (tokens.size() == with_c) {
    Matrix c = read_matrix(tokens, 1 + 2 * nn, n);
    return Instance(std::move(name), std::move(a), std::move(b), std::move(c));
  }
  return Instance(std::move(name), std::move(a), std::move(b));
}

Instance parse_instance(std::istream& in, std::string name) {
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  return parse_instance(std::string_view(text), std::move(name));
}

Instance load_instance(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  return parse_instance(std::string_view(text), path.stem().string());
}

SolutionFile parse_solution(std::string_view text) {
  const std::vector<Token> tokens = tokenize(text);
  if (tokens.size() < 2) throw ParseError("solution needs at least n and value");
  const int n = parse_order(tokens, 0);
  const double value = parse_number(tokens, 1);
  if (tokens.size() != static_cast<std::size_t>(n) + 2)
    throw ParseError("expected " + std::to_string(n + 2) +
                     " tokens for n=" + std::to_string(n) + ", found " +
                     std::to_string(tokens.size()));
  std::vector<int> one_based;
  one_based.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double v = parse_number(tokens, static_cast<std::size_t>(i) + 2);
    if (v != std::floor(v))
      throw ParseError("permutation token " + std::to_string(i + 3) +
                       " is not an integer");
    one_based.push_back(static_cast<int>(v));
  }
  try {
    return SolutionFile{n, value, Permutation::from_one_based(one_based)};
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid permutation: ") + e.what());
  }
}

SolutionFile parse_solution(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  return parse_solution(std::string_view(text));
}

SolutionFile load_solution(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  return parse_solution(std::string_view(text));
}

namespace {

std::string perm_field(const Permutation& p) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i > 0) out += '-';
    out += std::to_string(p(i) + 1);
  }
  return out;
}

}  // namespace

void write_profile_csv(const ThetaProfile& profile, std::ostream& out) {
  out << "theta,objective,perm\n";
  for (const ThetaSample& s : profile.samples)
    out << format_number(s.theta) << ',' << format_number(s.objective) << ','
        << perm_field(s.perm) << '\n';
}

void write_comparison_csv(const std::vector<ComparisonRow>& rows,
                          std::ostream& out) {
  out << "instance,n,r,runs,seed,f0,f1,f2,ratio0,ratio1,ratio2,theta2,"
         "theta1_mean,lap_solves_mean\n";
  for (const ComparisonRow& row : rows) {
    out << row.instance << ',' << row.n << ',' << row.r << ',' << row.runs << ','
        << row.seed << ',' << format_number(row.mean_f0) << ','
        << format_number(row.mean_f1) << ',' << format_number(row.mean_f2) << ','
        << format_number(row.mean_ratio0) << ',' << format_number(row.mean_ratio1)
        << ',' << format_number(row.mean_ratio2) << ','
        << format_number(row.theta2) << ',' << format_number(row.mean_theta1)
        << ',' << format_number(row.mean_lap_solves) << '\n';
  }
}

}  // namespace qapround
