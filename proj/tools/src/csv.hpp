#pragma once

#include <complex>
#include <fstream>
#include <string>
#include <vector>

namespace specpair::cli {

/// RFC-4180 writer: CRLF line ends, fields quoted only when needed.
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path);

  void header(const std::vector<std::string>& names);
  CsvWriter& field(const std::string& text);
  CsvWriter& field(double value);
  CsvWriter& field(long long value);
  CsvWriter& field(std::complex<double> value);  // two columns
  void end_row();

 private:
  void separator();

  std::ofstream stream_;
  bool row_started_ = false;
};

}  // namespace specpair::cli
