#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace lhz {

// shortest representation that round-trips the double exactly
std::string format_double(double v);

// FNV-1a 64-bit over the file bytes, hex encoded
std::string file_checksum(const std::filesystem::path& path);

struct CsvWriter {
    explicit CsvWriter(std::vector<std::string> header);
    void row(const std::vector<std::string>& cells);
    const std::string& text() const { return buffer_; }
    void write(const std::filesystem::path& path) const;

  private:
    size_t width_;
    std::string buffer_;
};

}  // namespace lhz
