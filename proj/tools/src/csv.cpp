#include "csv.hpp"

#include <charconv>

#include "specpair/error.hpp"

namespace specpair::cli {

CsvWriter::CsvWriter(const std::string& path) : stream_(path, std::ios::binary) {
  if (!stream_) throw Error(ErrorCode::invalid_argument, "cannot open " + path + " for writing");
}

void CsvWriter::header(const std::vector<std::string>& names) {
  for (const auto& n : names) field(n);
  end_row();
}

void CsvWriter::separator() {
  if (row_started_) stream_ << ',';
  row_started_ = true;
}

CsvWriter& CsvWriter::field(const std::string& text) {
  separator();
  if (text.find_first_of(",\"\r\n") == std::string::npos) {
    stream_ << text;
    return *this;
  }
  stream_ << '"';
  for (char c : text) {
    if (c == '"') stream_ << '"';
    stream_ << c;
  }
  stream_ << '"';
  return *this;
}

CsvWriter& CsvWriter::field(double value) {
  separator();
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  stream_.write(buf, res.ptr - buf);
  return *this;
}

CsvWriter& CsvWriter::field(long long value) {
  separator();
  stream_ << value;
  return *this;
}

CsvWriter& CsvWriter::field(std::complex<double> value) {
  field(value.real());
  return field(value.imag());
}

void CsvWriter::end_row() {
  stream_ << "\r\n";
  row_started_ = false;
}

}  // namespace specpair::cli
