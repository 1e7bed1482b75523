#pragma once

#include <string>
#include <vector>

namespace nct {

/// Writes content to path atomically (temp file in the same directory, then
/// rename). Throws std::runtime_error on I/O failure.
void atomic_write_file(const std::string& path, const std::string& content);

/// Shortest-round-trip-ish deterministic formatting used by every CSV writer
/// ("%.12g"); identical inputs yield byte-identical files.
std::string format_double(double v);

/// Minimal CSV accumulator: header once, then rows; cells are written as
/// given (caller formats numbers with format_double).
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);
    void row(const std::vector<std::string>& cells);
    void raw_line(const std::string& line);
    const std::string& text() const { return text_; }
    void save(const std::string& path) const;

private:
    std::string text_;
    size_t columns_;
};

}  // namespace nct
