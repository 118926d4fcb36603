// Locale-independent CSV output with atomic rename and manifest sidecars.

#ifndef MTCC_CSVIO_HPP
#define MTCC_CSVIO_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace mtcc {

// One CSV cell, already formatted.
using CsvRow = std::vector<std::string>;

// Formats a double with '.' decimal separator, shortest round-trip-safe
// representation capped at `precision` significant digits.
std::string format_number(double v, int precision = 10);

// Writes header + rows (LF line endings) to `path` via a temp file and
// atomic rename; no partial file is left behind on failure.
void write_csv_atomic(const std::filesystem::path& path,
                      const std::vector<std::string>& header,
                      const std::vector<CsvRow>& rows);

// Writes `<basename>.manifest.json` next to `csv_path` recording the
// command, resolved parameters, seed, tool version, outputs, and
// wall-clock duration.
void write_manifest(const std::filesystem::path& csv_path,
                    const std::string& command,
                    const std::string& resolved_params, std::uint64_t seed,
                    const std::vector<std::string>& outputs,
                    double duration_seconds);

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace mtcc

#endif  // MTCC_CSVIO_HPP
