#pragma once

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace qlift {

using Cell = std::variant<double, std::string>;

/// One output dataset: a header row and rows of numbers or strings.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Shortest round-trip decimal; "nan", "inf", "-inf" for non-finite values.
std::string format_number(double v);

std::string to_csv(const Table& t);
/// {"name", "columns", "rows"}; non-finite numbers become null.
nlohmann::json to_json(const Table& t);

}  // namespace qlift
