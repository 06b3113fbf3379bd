/*
  data.hpp - bundled data files: location, checksum verification and the
  line-oriented parsers for orbit tables, the induced-orbit table and
  Harish-Chandra series fixtures.

  Every data file starts with '#' header lines, the last of which is
  "# checksum: fnv1a64:<hex>" over the payload (all following lines, each
  terminated by a newline).
*/

#ifndef COXBLOCK_DATA_HPP
#define COXBLOCK_DATA_HPP

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coxblock/cartan.hpp"

namespace coxblock {

struct DataError : std::runtime_error {
  DataError(const std::string& file, int line, const std::string& what)
      : std::runtime_error(file + (line > 0 ? ":" + std::to_string(line) : "") + ": " + what) {}
};

inline std::string fnv1a64_hex(const std::string& payload) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : payload) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

#ifndef COXBLOCK_DATA_DIR
#define COXBLOCK_DATA_DIR ""
#endif

// Data directory: explicit override > COXBLOCK_DATA_DIR environment
// variable > compiled-in default.
inline std::string data_dir(const std::string& override_path = "") {
  if (!override_path.empty()) return override_path;
  if (const char* env = std::getenv("COXBLOCK_DATA_DIR"); env && *env) return env;
  return COXBLOCK_DATA_DIR;
}

struct DataFile {
  std::string path;
  std::vector<std::string> lines;  // payload lines, comments stripped
  std::vector<int> line_numbers;   // original 1-based numbers, for messages
};

inline DataFile load_data_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path, 0, "cannot open data file");
  std::vector<std::string> raw;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    raw.push_back(line);
  }
  std::string checksum;
  size_t payload_start = 0;
  for (size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].rfind("# checksum: fnv1a64:", 0) == 0) {
      checksum = raw[i].substr(std::string("# checksum: fnv1a64:").size());
      payload_start = i + 1;
      break;
    }
    if (raw[i].empty() || raw[i][0] != '#')
      throw DataError(path, static_cast<int>(i + 1), "missing checksum header");
  }
  if (checksum.empty()) throw DataError(path, 0, "missing checksum header");
  std::string payload;
  for (size_t i = payload_start; i < raw.size(); ++i) payload += raw[i] + "\n";
  if (fnv1a64_hex(payload) != checksum)
    throw DataError(path, static_cast<int>(payload_start), "checksum mismatch");
  DataFile out;
  out.path = path;
  for (size_t i = payload_start; i < raw.size(); ++i) {
    if (raw[i].empty() || raw[i][0] == '#') continue;
    out.lines.push_back(raw[i]);
    out.line_numbers.push_back(static_cast<int>(i + 1));
  }
  return out;
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

inline std::vector<Int> parse_int_list(const std::string& s, const std::string& file, int line) {
  std::vector<Int> out;
  if (strip(s).empty()) return out;
  for (const auto& tok : split(s, ',')) {
    try {
      out.push_back(std::stoll(strip(tok)));
    } catch (...) {
      throw DataError(file, line, "bad integer '" + tok + "'");
    }
  }
  return out;
}

}  // namespace detail

// ---- parametric expressions: linear forms a*n + b ----------------------

struct LinearForm {
  Int a = 0, b = 0;  // a*n + b
  Int eval(Int n) const { return a * n + b; }
};

// Grammar: term ('+'|'-' term)*, term = [int]['n'] ; e.g. "2n-5", "n", "7".
inline LinearForm parse_linear_form(const std::string& s, const std::string& file, int line) {
  LinearForm f;
  std::string t = detail::strip(s);
  size_t i = 0;
  int sign = 1;
  while (i < t.size()) {
    if (t[i] == '+') { sign = 1; ++i; continue; }
    if (t[i] == '-') { sign = -1; ++i; continue; }
    Int value = 0;
    bool has_digits = false;
    while (i < t.size() && isdigit(static_cast<unsigned char>(t[i]))) {
      value = value * 10 + (t[i] - '0');
      has_digits = true;
      ++i;
    }
    if (i < t.size() && t[i] == 'n') {
      f.a += sign * (has_digits ? value : 1);
      ++i;
    } else if (has_digits) {
      f.b += sign * value;
    } else {
      throw DataError(file, line, "bad expression '" + s + "'");
    }
    sign = 1;
  }
  return f;
}

// Diagram pattern item: literal weight or w*(expr) repetition.
struct DiagramItem {
  Int weight = 0;
  LinearForm count{0, 1};
};

inline std::vector<DiagramItem> parse_diagram_pattern(const std::string& s,
                                                      const std::string& file, int line) {
  std::vector<DiagramItem> out;
  for (const auto& raw : detail::split(s, ',')) {
    std::string tok = detail::strip(raw);
    auto star = tok.find('*');
    DiagramItem item;
    if (star == std::string::npos) {
      item.weight = std::stoll(tok);
    } else {
      item.weight = std::stoll(tok.substr(0, star));
      std::string rep = detail::strip(tok.substr(star + 1));
      if (rep.size() < 2 || rep.front() != '(' || rep.back() != ')')
        throw DataError(file, line, "bad repetition '" + tok + "'");
      item.count = parse_linear_form(rep.substr(1, rep.size() - 2), file, line);
    }
    out.push_back(item);
  }
  return out;
}

inline std::vector<Int> instantiate_diagram(const std::vector<DiagramItem>& pattern, Int n) {
  std::vector<Int> out;
  for (const auto& item : pattern) {
    Int count = item.count.eval(n);
    if (count < 0) throw std::invalid_argument("diagram pattern: negative repetition");
    for (Int k = 0; k < count; ++k) out.push_back(item.weight);
  }
  return out;
}

}  // namespace coxblock

#endif
