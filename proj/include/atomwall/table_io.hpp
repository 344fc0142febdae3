#pragma once

// SweepTable serialization. CSV: '#'-prefixed comment lines, a header row,
// then rows in scientific notation with 17 significant digits, independent of
// the process locale. JSON: {"comments": [...], "columns": [...], "rows": [[...]]}.

#include <iosfwd>
#include <string>

#include "atomwall/core_types.hpp"

namespace atomwall::io {

enum class TableFormat { csv, json };

// Throws ConfigError for anything other than "csv" or "json".
TableFormat parse_format(const std::string& name);

std::string format_double(double v);

void write_csv(std::ostream& out, const SweepTable& table);
void write_json(std::ostream& out, const SweepTable& table);
std::string to_string(const SweepTable& table, TableFormat format);

// Writes to a file; throws std::runtime_error on I/O failure.
void write_file(const std::string& path, const SweepTable& table, TableFormat format);

// Inverse of the writers, used for round-trip checks.
SweepTable read_csv(std::istream& in);
SweepTable read_json(std::istream& in);

}  // namespace atomwall::io
