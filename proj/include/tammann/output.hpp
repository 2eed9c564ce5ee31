#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace tammann {

/// Shortest decimal form that round-trips to the same double.
std::string fmt_double(double v);

/// Creates `dir` and its parents; throws ConfigError on failure.
void ensure_directory(const std::string& dir);

/// Minimal CSV writer with round-trip number formatting.
class CsvWriter {
public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);

  CsvWriter& operator<<(double v);
  CsvWriter& operator<<(int v);
  CsvWriter& operator<<(long v);
  CsvWriter& operator<<(const std::string& v);
  void end_row();

private:
  void sep();
  std::ofstream out_;
  bool row_started_ = false;
};

} // namespace tammann
