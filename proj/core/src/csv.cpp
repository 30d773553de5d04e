#include "attfilt/csv.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace attfilt {

CsvWriter::CsvWriter(const std::string& path) : out_(path, std::ios::binary), path_(path) {
    if (!out_) {
        throw std::runtime_error("CsvWriter: cannot open " + path);
    }
}

void CsvWriter::row(const std::vector<std::string>& fields) {
    begin_row();
    for (const auto& f : fields) {
        field(f);
    }
    end_row();
}

void CsvWriter::begin_row() { first_in_row_ = true; }

void CsvWriter::sep() {
    if (!first_in_row_) {
        out_ << ',';
    }
    first_in_row_ = false;
}

void CsvWriter::field(const std::string& s) {
    sep();
    out_ << s;
}

void CsvWriter::field(double v) {
    sep();
    out_ << format_double(v);
}

void CsvWriter::field(std::int64_t v) {
    sep();
    out_ << v;
}

void CsvWriter::empty_field() { sep(); }

void CsvWriter::end_row() {
    out_ << '\n';
    if (!out_) {
        throw std::runtime_error("CsvWriter: write failed on " + path_);
    }
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("read_csv: cannot open " + path);
    }
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        rows.push_back(split_csv_line(line));
    }
    return rows;
}

std::uint64_t fnv1a_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("fnv1a_file: cannot open " + path);
    }
    std::uint64_t h = 14695981039346656037ull;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace attfilt
