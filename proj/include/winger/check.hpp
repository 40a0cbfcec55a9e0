#pragma once

#include <string>
#include <vector>

namespace winger {

struct Check {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string actual;
};

inline Check make_check(std::string name, std::string expected, std::string actual) {
    bool ok = expected == actual;
    return {std::move(name), ok, std::move(expected), std::move(actual)};
}

inline bool all_pass(const std::vector<Check>& cs) {
    for (const auto& c : cs)
        if (!c.pass) return false;
    return true;
}

}  // namespace winger
