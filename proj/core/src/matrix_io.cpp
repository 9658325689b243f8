#include "toricsr/matrix_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "toricsr/errors.hpp"

namespace toricsr {

namespace {

bool is_integer_token(std::string_view s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!is_integer_token(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s));
}

std::size_t parse_dimension(std::string_view s, const char* what) {
  const BigInt v = parse_integer(s);
  if (v < 1 || v > 1'000'000) throw ParseError(std::string(what) + " must be a positive count, got " + std::string(s));
  return static_cast<std::size_t>(v);
}

}  // namespace

IntegerMatrix parse_matrix_text(std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string w;
    while (words >> w) tokens.push_back(w);
  }
  if (tokens.size() < 2) throw ParseError("missing 'rows cols' header");
  const std::size_t d = parse_dimension(tokens[0], "row count");
  const std::size_t n = parse_dimension(tokens[1], "column count");
  const std::size_t body = tokens.size() - 2;
  if (body != d * n) {
    std::ostringstream msg;
    msg << "header declares " << d << "x" << n << " = " << d * n << " entries but found " << body;
    throw ParseError(msg.str());
  }
  IntegerMatrix m(d, n);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = parse_integer(tokens[2 + r * n + c]);
  return m;
}

IntegerMatrix parse_matrix_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("matrix") || !doc["matrix"].is_array())
    throw ParseError("JSON input must be an object with a \"matrix\" array");
  const auto& rows = doc["matrix"];
  if (rows.empty()) throw ParseError("matrix has no rows");

  std::vector<IntegerVector> data;
  for (const auto& row : rows) {
    if (!row.is_array() || row.empty()) throw ParseError("every matrix row must be a nonempty array");
    IntegerVector r;
    for (const auto& e : row) {
      if (e.is_number_integer())
        r.emplace_back(e.is_number_unsigned() ? BigInt(e.get<std::uint64_t>()) : BigInt(e.get<std::int64_t>()));
      else if (e.is_string())
        r.push_back(parse_integer(e.get<std::string>()));
      else
        throw ParseError("matrix entries must be integers or decimal strings");
    }
    if (!data.empty() && r.size() != data.front().size()) throw ParseError("matrix rows have different lengths");
    data.push_back(std::move(r));
  }
  IntegerMatrix m = IntegerMatrix::from_rows(data);
  const auto check_dim = [&](const char* key, std::size_t actual) {
    if (!doc.contains(key)) return;
    if (!doc[key].is_number_unsigned() || doc[key].get<std::size_t>() != actual)
      throw ParseError(std::string("\"") + key + "\" does not match the matrix");
  };
  check_dim("rows", m.rows());
  check_dim("cols", m.cols());
  return m;
}

std::string format_matrix_text(const IntegerMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
    out << '\n';
  }
  return out.str();
}

}  // namespace toricsr
