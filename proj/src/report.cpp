#include "hamlab/report.hpp"

#include <cstdio>
#include <sstream>

namespace hamlab {

std::string CheckReport::to_string() const {
    std::ostringstream os;
    os << title << ": " << (ok() ? "ok" : "FAILED") << '\n';
    for (const auto& l : lines) {
        os << "  [" << (l.ok ? "ok" : "FAIL") << "] " << l.name;
        if (!l.detail.empty()) os << " -- " << l.detail;
        os << '\n';
    }
    return os.str();
}

std::string fmt(double x, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    return buf;
}

}  // namespace hamlab
