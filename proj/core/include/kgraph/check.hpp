#pragma once

#include <string>
#include <vector>

namespace kgraph {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;  // failure context or "skipped (...)" note
};

struct CheckReport {
    std::string title;
    std::vector<CheckItem> items;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        items.push_back(CheckItem{name, pass, detail});
    }
    void skip(const std::string& name, const std::string& why) {
        items.push_back(CheckItem{name, true, "skipped (" + why + ")"});
    }
    bool all_pass() const {
        for (const CheckItem& it : items)
            if (!it.pass) return false;
        return true;
    }
    size_t failures() const {
        size_t n = 0;
        for (const CheckItem& it : items)
            if (!it.pass) ++n;
        return n;
    }
};

}  // namespace kgraph
