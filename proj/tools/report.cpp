#include <algorithm>
#include <sstream>

#include "cli.hpp"

namespace threefold::cli {

bool Report::pass() const {
    return std::all_of(items.begin(), items.end(), [](const Item& i) { return i.pass; });
}

std::string render_json(const Report& report) {
    nlohmann::ordered_json doc;
    doc["command"] = report.command;
    doc["pass"] = report.pass();
    auto& items = doc["items"] = nlohmann::ordered_json::array();
    for (const auto& item : report.items) {
        nlohmann::ordered_json j;
        j["label"] = item.label;
        j["pass"] = item.pass;
        j["summary"] = item.summary;
        j["values"] = item.values.is_null() ? nlohmann::ordered_json::object() : item.values;
        items.push_back(std::move(j));
    }
    doc["elapsed_ms"] = report.elapsed_ms;
    return doc.dump(2) + "\n";
}

std::string render_text(const Report& report, bool show_timing) {
    std::size_t width = 0;
    for (const auto& item : report.items) width = std::max(width, item.label.size());
    std::ostringstream out;
    for (const auto& item : report.items) {
        out << (item.pass ? "PASS  " : "FAIL  ") << item.label << std::string(width - item.label.size() + 2, ' ')
            << item.summary << '\n';
    }
    const auto failed = std::count_if(report.items.begin(), report.items.end(), [](const Item& i) { return !i.pass; });
    out << report.command << ": " << (report.pass() ? "pass" : "FAIL") << " (" << report.items.size() << " items";
    if (failed > 0) out << ", " << failed << " failed";
    out << ")";
    if (show_timing) out << " in " << report.elapsed_ms << " ms";
    out << '\n';
    return out.str();
}

}  // namespace threefold::cli
