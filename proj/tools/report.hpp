#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace shapebasis::cli {

/// One report cell. monostate is written as an empty CSV field / JSON null.
using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct ReportMeta {
  std::string command;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
};

/// "%.12g"; used for every real number in both output formats.
std::string format_real(double value);

void write_csv(std::ostream& out, const Table& table);
void write_json(std::ostream& out, const Table& table, const ReportMeta& meta);

}  // namespace shapebasis::cli
