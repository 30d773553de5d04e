#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace attfilt {

/// Minimal CSV writer. Doubles are written with 17 significant digits so a
/// read-back reproduces them bit for bit.
class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);

    void row(const std::vector<std::string>& fields);
    void begin_row();
    void field(const std::string& s);
    void field(double v);
    void field(std::int64_t v);
    void field(int v) { field(static_cast<std::int64_t>(v)); }
    void empty_field();
    void end_row();

    const std::string& path() const { return path_; }

private:
    void sep();
    std::ofstream out_;
    std::string path_;
    bool first_in_row_ = true;
};

std::string format_double(double v);

/// Splits one CSV line; empty cells come back as empty strings.
std::vector<std::string> split_csv_line(const std::string& line);

/// All rows of a CSV file, header included.
std::vector<std::vector<std::string>> read_csv(const std::string& path);

/// FNV-1a over the raw bytes of a file; a cheap fingerprint for
/// reproducibility checks.
std::uint64_t fnv1a_file(const std::string& path);

}  // namespace attfilt
