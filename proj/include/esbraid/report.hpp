#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace esbraid {

/// Thrown when a request exceeds a documented enumeration or size cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckItem {
    std::string name;
    bool pass = false;
    bool skipped = false;
};

struct CheckReport {
    std::vector<CheckItem> items;

    void add(std::string name, bool pass) {
        items.push_back({std::move(name), pass, false});
    }
    void skip(std::string name) {
        items.push_back({std::move(name), true, true});
    }
    bool all_pass() const {
        for (const auto& it : items)
            if (!it.skipped && !it.pass) return false;
        return true;
    }
    std::size_t failure_count() const {
        std::size_t n = 0;
        for (const auto& it : items)
            if (!it.skipped && !it.pass) ++n;
        return n;
    }
};

}  // namespace esbraid
