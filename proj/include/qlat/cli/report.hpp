#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace qlat::cli {

enum class OutputFormat { text, records };

/// Accumulates a human-readable listing and a parallel stream of key=value
/// records. Both keep insertion order, so output is deterministic.
class Report {
public:
    void line(std::string text = {}) { lines_.push_back(std::move(text)); }
    void record(const std::string& key, const std::string& value);
    void record(const std::string& key, bool value) { record(key, std::string(value ? "true" : "false")); }
    void record(const std::string& key, std::size_t value) { record(key, std::to_string(value)); }
    void record(const std::string& key, const char* value) { record(key, std::string(value)); }

    const std::vector<std::string>& lines() const noexcept { return lines_; }
    const std::vector<std::pair<std::string, std::string>>& records() const noexcept { return records_; }
    std::optional<std::string> find(const std::string& key) const;

    void append(const Report& other);
    void write(std::ostream& os, OutputFormat format) const;

private:
    std::vector<std::string> lines_;
    std::vector<std::pair<std::string, std::string>> records_;
};

}  // namespace qlat::cli
