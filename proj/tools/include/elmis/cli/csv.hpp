#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace elmis::cli {

/// One CSV cell. Floats are written with 17 significant digits so a file
/// round-trips every double exactly.
class Cell {
 public:
  Cell(double v);  // NOLINT(google-explicit-constructor)
  Cell(std::int64_t v);
  Cell(std::uint64_t v);
  Cell(int v) : Cell(static_cast<std::int64_t>(v)) {}
  Cell(unsigned v) : Cell(static_cast<std::uint64_t>(v)) {}
  Cell(bool v) : text_(v ? "1" : "0") {}
  Cell(std::string_view v);
  Cell(const char* v) : Cell(std::string_view(v)) {}
  Cell(const std::string& v) : Cell(std::string_view(v)) {}
  const std::string& text() const noexcept { return text_; }

 private:
  std::string text_;
};

std::string format_double(double v);

/// Writes `# seed=..., cmd=...` followed by the header row. Rows must match
/// the header width.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::uint64_t seed,
            std::string_view command, std::vector<std::string> header);
  void row(std::initializer_list<Cell> cells);
  void row(const std::vector<Cell>& cells);
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
  std::size_t width_;
};

/// Parsed file: provenance comment, header, rows of raw fields.
struct CsvTable {
  std::string provenance;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::size_t column(std::string_view name) const;
  double number(std::size_t row, std::string_view name) const;
};

CsvTable read_csv(const std::filesystem::path& path);

}  // namespace elmis::cli
