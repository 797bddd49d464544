#include "toric_ci/textio.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "toric_ci/errors.hpp"

namespace toric_ci {

namespace {

// Non-blank, comment-stripped lines with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::vector<std::string>>> tokenize(std::istream& in) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (!tokens.empty()) lines.emplace_back(no, std::move(tokens));
  }
  return lines;
}

Integer parse_integer(const std::string& tok, std::size_t line) {
  Integer v;
  const bool sign = tok[0] == '+' || tok[0] == '-';
  if (tok.size() == static_cast<std::size_t>(sign) ||
      tok.find_first_not_of("0123456789", sign ? 1 : 0) != std::string::npos)
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  v.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10);
  return v;
}

std::size_t parse_count(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line, "expected a non-negative count, got '" + tok + "'");
  return std::stoul(tok);
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return in;
}

}  // namespace

IntMatrix read_matrix(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.empty()) throw ParseError(0, "empty matrix file");
  const auto& [hline, header] = lines.front();
  if (header.size() != 2) throw ParseError(hline, "header must be 'rows cols'");
  const std::size_t m = parse_count(header[0], hline);
  const std::size_t n = parse_count(header[1], hline);
  if (lines.size() - 1 != m)
    throw ParseError(lines.back().first, "expected " + std::to_string(m) +
                                             " rows, found " +
                                             std::to_string(lines.size() - 1));
  IntMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& [no, toks] = lines[i + 1];
    if (toks.size() != n)
      throw ParseError(no, "expected " + std::to_string(n) + " entries, found " +
                               std::to_string(toks.size()));
    for (std::size_t j = 0; j < n; ++j) a(i, j) = parse_integer(toks[j], no);
  }
  return a;
}

IntMatrix read_matrix_file(const std::string& path) {
  auto in = open_file(path);
  return read_matrix(in);
}

IntMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const IntMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n' << m;
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

SignMatrix read_sign_matrix(std::istream& in) {
  auto lines = tokenize(in);
  if (lines.empty()) throw ParseError(0, "empty sign matrix file");
  std::size_t expect_rows = 0;
  bool has_header = false;
  {
    const auto& toks = lines.front().second;
    if (toks.size() == 2 && toks[0].find_first_not_of("0123456789") == std::string::npos &&
        toks[1].find_first_not_of("0123456789") == std::string::npos &&
        !(toks[0] == "0" && toks[1] == "0")) {
      has_header = true;
      expect_rows = parse_count(toks[0], lines.front().first);
    }
  }
  const std::size_t first = has_header ? 1 : 0;
  const std::size_t nrows = lines.size() - first;
  if (has_header && nrows != expect_rows)
    throw ParseError(lines.back().first, "expected " + std::to_string(expect_rows) +
                                             " rows, found " + std::to_string(nrows));
  if (nrows == 0) throw ParseError(lines.front().first, "sign matrix has no rows");
  const std::size_t ncols = lines[first].second.size();
  SignMatrix s(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    const auto& [no, toks] = lines[first + i];
    if (toks.size() != ncols)
      throw ParseError(no, "expected " + std::to_string(ncols) + " entries, found " +
                               std::to_string(toks.size()));
    for (std::size_t j = 0; j < ncols; ++j) {
      const std::string& t = toks[j];
      if (t == "+") s.set(i, j, 1);
      else if (t == "-") s.set(i, j, -1);
      else if (t == "0") s.set(i, j, 0);
      else throw ParseError(no, "expected '+', '-' or '0', got '" + t + "'");
    }
  }
  return s;
}

SignMatrix read_sign_matrix_file(const std::string& path) {
  auto in = open_file(path);
  return read_sign_matrix(in);
}

SignMatrix parse_sign_matrix(const std::string& text) {
  std::istringstream in(text);
  return read_sign_matrix(in);
}

void write_sign_matrix(std::ostream& out, const SignMatrix& s) {
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (std::size_t j = 0; j < s.cols(); ++j) {
      if (j) out << ' ';
      const int v = s(i, j);
      out << (v > 0 ? '+' : v < 0 ? '-' : '0');
    }
    out << '\n';
  }
}

std::string format_sign_matrix(const SignMatrix& s) {
  std::ostringstream os;
  write_sign_matrix(os, s);
  return os.str();
}

}  // namespace toric_ci
