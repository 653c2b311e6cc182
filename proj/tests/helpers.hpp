#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seu/digraph.hpp"

namespace seu::test {

inline Digraph dicycle(int n) {
    Digraph d(n);
    for (int v = 0; v + 1 < n; ++v) d.add_arc(v, v + 1);
    if (n >= 2) d.add_arc(n - 1, 0);
    return d;
}

inline Digraph complete_digraph(int n) {
    Digraph d(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) d.add_arc(a, b);
    return d;
}

inline std::uint64_t code_count(int n) {
    std::uint64_t c = 1;
    for (int p = 0; p < n * (n - 1) / 2; ++p) c *= 4;
    return c;
}

// Runs fn(d) over every labeled digraph of the given order.
template <typename Fn>
void for_each_digraph(int n, Fn&& fn) {
    const std::uint64_t codes = code_count(n);
    for (std::uint64_t code = 0; code < codes; ++code) fn(Digraph::from_pair_code(n, code));
}

} // namespace seu::test
