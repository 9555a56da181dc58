#include "altruns/format.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace altruns {
namespace {

nlohmann::ordered_json to_json_number(const BigInt& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return v.get_si();
  return v.get_str();
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  if (name == "bfile") return OutputFormat::Bfile;
  if (name == "pretty") return OutputFormat::Pretty;
  return std::nullopt;
}

std::string format_table(const TriangularTable& table, OutputFormat format) {
  std::ostringstream os;
  if (table.empty()) return format == OutputFormat::Json ? "[]\n" : "";
  const unsigned first = table.row_offset();
  const unsigned last = table.last_row();

  switch (format) {
    case OutputFormat::Csv:
      for (unsigned n = first; n <= last; ++n) {
        const auto row = table.row(n);
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i].get_str();
        os << '\n';
      }
      break;
    case OutputFormat::Json: {
      auto doc = nlohmann::ordered_json::array();
      for (unsigned n = first; n <= last; ++n) {
        auto row_json = nlohmann::ordered_json::array();
        for (const auto& v : table.row(n)) row_json.push_back(to_json_number(v));
        doc.push_back(std::move(row_json));
      }
      os << doc.dump() << '\n';
      break;
    }
    case OutputFormat::Bfile: {
      std::size_t index = 1;
      for (unsigned n = first; n <= last; ++n)
        for (const auto& v : table.row(n)) os << index++ << ' ' << v.get_str() << '\n';
      break;
    }
    case OutputFormat::Pretty: {
      std::size_t width = 1;
      for (unsigned n = first; n <= last; ++n)
        for (const auto& v : table.row(n)) width = std::max(width, v.get_str().size());
      const std::size_t label = std::to_string(last).size();
      for (unsigned n = first; n <= last; ++n) {
        std::string head = std::to_string(n);
        os << std::string(label - head.size(), ' ') << head << " |";
        for (const auto& v : table.row(n)) {
          const std::string s = v.get_str();
          os << ' ' << std::string(width - s.size(), ' ') << s;
        }
        os << '\n';
      }
      break;
    }
  }
  return os.str();
}

std::string format_poly(const IntPolynomial& poly, std::string_view family, unsigned n, char var,
                        OutputFormat format) {
  std::ostringstream os;
  const auto& c = poly.coeffs();
  switch (format) {
    case OutputFormat::Csv:
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i].get_str();
      if (c.empty()) os << '0';
      os << '\n';
      break;
    case OutputFormat::Json: {
      nlohmann::ordered_json doc;
      doc["family"] = std::string(family);
      doc["n"] = n;
      doc["variable"] = std::string(1, var);
      auto& coeffs = doc["coeffs"] = nlohmann::ordered_json::array();
      for (const auto& v : c) coeffs.push_back(to_json_number(v));
      os << doc.dump() << '\n';
      break;
    }
    case OutputFormat::Bfile:
      for (std::size_t i = 0; i < c.size(); ++i) os << i + 1 << ' ' << c[i].get_str() << '\n';
      break;
    case OutputFormat::Pretty:
      os << to_string(poly, var) << '\n';
      break;
  }
  return os.str();
}

std::vector<BigInt> parse_bfile(std::string_view text) {
  std::vector<BigInt> values;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t expected = 1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto space = line.find(' ');
    if (space == std::string::npos || line.find(' ', space + 1) != std::string::npos)
      throw DomainError("bfile: malformed line '" + line + "'");
    BigInt index;
    BigInt value;
    if (index.set_str(line.substr(0, space), 10) != 0 || value.set_str(line.substr(space + 1), 10) != 0)
      throw DomainError("bfile: malformed line '" + line + "'");
    if (index != expected) throw DomainError("bfile: expected index " + std::to_string(expected));
    values.push_back(std::move(value));
    ++expected;
  }
  return values;
}

}  // namespace altruns
