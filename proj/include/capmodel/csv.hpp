#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "capmodel/errors.hpp"
#include "capmodel/text.hpp"

namespace capmodel {

// RFC-4180-ish CSV: double quotes delimit fields containing commas/quotes,
// "" escapes a quote inside a quoted field.
inline std::vector<std::string> parse_csv_line(const std::string& line,
                                               const std::string& context) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else {
      if (c == '"' && cur.empty()) {
        quoted = true;
      } else if (c == ',') {
        fields.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    ++i;
  }
  if (quoted) throw ValidationError(context + ": unterminated quoted field");
  fields.push_back(cur);
  return fields;
}

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

// Line-oriented reader with 1-based line numbers for error reporting.
// Skips blank lines and '#' comment lines, strips CRLF and a UTF-8 BOM.
class LineReader {
public:
  explicit LineReader(const std::string& path) : path_(path), in_(path) {
    if (!in_) throw ValidationError("cannot open file: " + path);
  }

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++lineno_;
      if (lineno_ == 1 && line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0)
        line.erase(0, 3);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      if (line[0] == '#') continue;
      if (!is_valid_utf8(line))
        throw ValidationError(where() + ": invalid UTF-8 encoding");
      return true;
    }
    return false;
  }

  std::string where() const {
    return path_ + ":" + std::to_string(lineno_);
  }

private:
  std::string path_;
  std::ifstream in_;
  std::size_t lineno_ = 0;
};

inline double parse_double(const std::string& s, const std::string& context) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ValidationError(context + ": not a number: '" + s + "'");
  }
}

inline int parse_int(const std::string& s, const std::string& context) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ValidationError(context + ": not an integer: '" + s + "'");
  }
}

}  // namespace capmodel
