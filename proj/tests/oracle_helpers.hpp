#pragma once

// Independent brute-force oracles used to validate the library's faster
// implementations. These deliberately avoid the library's solving shortcuts.

#include <set>
#include <vector>

#include "genus1/diophantine.hpp"

namespace oracle {

using genus1::i64;

// Plain cube scan of d1 x1^2 + d2 x2^2 + d3 x3^2 - x1 x2 x3 = d1 d2 d3 a.
inline std::vector<genus1::XTriple> naive_solutions(const genus1::SignTriple& d, i64 a,
                                                    i64 bound) {
    std::vector<genus1::XTriple> out;
    for (i64 x1 = -bound; x1 <= bound; ++x1)
        for (i64 x2 = -bound; x2 <= bound; ++x2)
            for (i64 x3 = -bound; x3 <= bound; ++x3) {
                i64 lhs = d.d[0] * x1 * x1 + d.d[1] * x2 * x2 + d.d[2] * x3 * x3 - x1 * x2 * x3;
                if (lhs == d.product() * a) out.push_back({x1, x2, x3});
            }
    return out;
}

// Scan of y1^2 + y2^2 + y3^2 = 3 y1 y2 y3 over y3 >= y2 >= y1 >= 1 by solving
// the quadratic in y1 for each (y2, y3) pair.
inline std::set<std::array<i64, 3>> markov_scan(i64 limit) {
    std::set<std::array<i64, 3>> out;
    for (i64 y3 = 1; y3 <= limit; ++y3)
        for (i64 y2 = 1; y2 <= y3; ++y2) {
            // y1^2 - 3 y2 y3 y1 + (y2^2 + y3^2) = 0
            i64 b = 3 * y2 * y3;
            i64 disc = b * b - 4 * (y2 * y2 + y3 * y3);
            if (disc < 0) continue;
            auto r = genus1::isqrt_exact(disc);
            if (!r) continue;
            for (i64 num : {b - *r, b + *r}) {
                if (num % 2 != 0) continue;
                i64 y1 = num / 2;
                if (y1 < 1 || y1 > y2) continue;
                out.insert({y3, y2, y1});
            }
        }
    return out;
}

}  // namespace oracle
