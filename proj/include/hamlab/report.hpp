#pragma once

#include <string>
#include <vector>

namespace hamlab {

struct CheckLine {
    std::string name;
    bool ok;
    std::string detail;
};

struct CheckReport {
    std::string title;
    std::vector<CheckLine> lines;

    bool ok() const {
        for (const auto& l : lines)
            if (!l.ok) return false;
        return true;
    }
    void add(std::string name, bool ok, std::string detail = {}) {
        lines.push_back({std::move(name), ok, std::move(detail)});
    }
    std::string to_string() const;
};

// Compact "%.*g" formatting for report details.
std::string fmt(double x, int precision = 10);

}  // namespace hamlab
