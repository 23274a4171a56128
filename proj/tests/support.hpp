#pragma once

#include <doctest.h>

#include <vector>

#include "qgl3/charring.hpp"

namespace doctest {
template <>
struct StringMaker<qgl3::Weight> {
    static String convert(const qgl3::Weight& w) { return qgl3::to_string(w).c_str(); }
};
template <>
struct StringMaker<qgl3::FormalChar> {
    static String convert(const qgl3::FormalChar& x) {
        auto s = x.to_string();
        if (s.size() > 200) s = s.substr(0, 200) + "...";
        return s.c_str();
    }
};
}  // namespace doctest

namespace qgl3::test {

inline const std::vector<int> kLevels = {2, 3, 5};

/// lam = l*(A,B) + (r,s) over A,B in {0..box} and (r,s) restricted.
template <class F>
void for_each_sweep_weight(int l, int box, F f) {
    for (int A = 0; A <= box; ++A)
        for (int B = 0; B <= box; ++B)
            for (int r = 0; r < l; ++r)
                for (int s = 0; s < l; ++s) f(Weight{l * A + r, l * B + s});
}

}  // namespace qgl3::test
