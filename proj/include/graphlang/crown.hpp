#pragma once

#include <string>

namespace graphlang {

/// Regex for the crown family over an n-cycle: the cycle edges i -> i+1 (mod
/// n) are fixed, and for every cycle vertex i an optional cusp edge n+i -> i
/// may be present. The 2^n cusp subsets give the family members.
inline std::string crown_regex(int n) {
    auto edge = [](int from, int to) {
        std::string w = "a";
        w.append(static_cast<std::size_t>(from), 'b');
        w += "aaa";
        w.append(static_cast<std::size_t>(to), 'b');
        w += "a";
        return w;
    };
    std::string re;
    for (int i = 1; i <= n; ++i) re += edge(i, i % n + 1);
    for (int i = 1; i <= n; ++i) re += "(" + edge(n + i, i) + ")?";
    return re;
}

} // namespace graphlang
