#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace forestconc {

/// '.' decimal, no separators, 17 significant digits: doubles round-trip
/// losslessly and output is byte-stable across runs.
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Minimal deterministic CSV assembly: header once, then rows of
/// already-formatted cells (empty string = empty cell).
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(std::vector<std::string> cells) {
        if (cells.size() != header_.size())
            throw std::invalid_argument("csv: row width mismatch");
        rows_.push_back(std::move(cells));
    }

    std::string str() const {
        std::ostringstream out;
        write_line(out, header_);
        for (const auto& row : rows_) write_line(out, row);
        return out.str();
    }

    void save(const std::string& path) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("csv: cannot write " + path);
        out << str();
    }

private:
    static void write_line(std::ostringstream& out, const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << ',';
            out << cells[i];
        }
        out << '\n';
    }

    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace forestconc
