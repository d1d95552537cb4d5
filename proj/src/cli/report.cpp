#include "qlat/cli/report.hpp"

namespace qlat::cli {

void Report::record(const std::string& key, const std::string& value) {
    // Records are line-delimited; keep each value on one line.
    std::string flat = value;
    for (char& c : flat)
        if (c == '\n' || c == '\r')
            c = ' ';
    records_.emplace_back(key, std::move(flat));
}

std::optional<std::string> Report::find(const std::string& key) const {
    for (const auto& [k, v] : records_)
        if (k == key)
            return v;
    return std::nullopt;
}

void Report::append(const Report& other) {
    lines_.insert(lines_.end(), other.lines_.begin(), other.lines_.end());
    records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

void Report::write(std::ostream& os, OutputFormat format) const {
    if (format == OutputFormat::text) {
        for (const auto& l : lines_)
            os << l << '\n';
        return;
    }
    for (const auto& [k, v] : records_)
        os << k << '=' << v << '\n';
}

}  // namespace qlat::cli
