// Small CSV helpers: RFC-4180 field quoting and deterministic double
// formatting (17 significant digits, locale-independent).

#ifndef HSLAB_CSV_HPP
#define HSLAB_CSV_HPP

#include <string>
#include <vector>

namespace hslab {

/// Format a double with enough digits to round-trip exactly.
std::string csv_double(double x);

/// Quote a field per RFC 4180 when it contains a comma, quote, or newline.
std::string csv_field(const std::string& raw);

/// Join fields into one CSV record (no trailing newline).
std::string csv_row(const std::vector<std::string>& fields);

} // namespace hslab

#endif // HSLAB_CSV_HPP
