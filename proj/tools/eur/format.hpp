#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace eur::cli {

// A value printed by the CLI. monostate renders as "none" in text mode and
// null in JSON mode.
using Value = std::variant<std::monostate, double, long long, bool, std::string>;

struct Field {
  std::string key;
  Value value;
};

using Record = std::vector<Field>;

/// A flat record plus an optional list of sub-records (critique roots).
struct Document {
  Record fields;
  std::string list_key;
  std::vector<Record> items;
};

/// 12 significant digits, the precision used for text and CSV output.
std::string format_number(double v);

/// One "key = value" line per field; list items use "list_key.i.key".
void write_text(std::ostream& out, const Document& doc);

/// A single JSON object with the same keys; list items become an array.
void write_json(std::ostream& out, const Document& doc);

}  // namespace eur::cli
