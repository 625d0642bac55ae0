#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hetnet {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Column-oriented CSV writer. Metadata lines are emitted first as
/// '# key: value' comments; values use shortest round-trip formatting so
/// reruns are byte-identical.
class CsvWriter {
 public:
  void metadata(const std::string& key, const std::string& value) {
    meta_.push_back("# " + key + ": " + value);
  }
  void metadata(const std::string& key, std::uint64_t value) {
    metadata(key, std::to_string(value));
  }

  void column(const std::string& name, const std::vector<double>& values) {
    names_.push_back(name);
    columns_.push_back(values);
  }

  std::string str() const {
    std::ostringstream os;
    for (const auto& m : meta_) os << m << '\n';
    for (std::size_t i = 0; i < names_.size(); ++i)
      os << (i ? "," : "") << names_[i];
    os << '\n';
    std::size_t rows = 0;
    for (const auto& c : columns_) rows = std::max(rows, c.size());
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i) os << ',';
        if (r < columns_[i].size()) os << format(columns_[i][r]);
      }
      os << '\n';
    }
    return os.str();
  }

  void write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << str();
    if (!out) throw IoError("write failed: " + path);
  }

  static std::string format(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
  }

 private:
  std::vector<std::string> meta_;
  std::vector<std::string> names_;
  std::vector<std::vector<double>> columns_;
};

}  // namespace hetnet
