#pragma once

#include <string>

#include "quasigap/scheme.hpp"

namespace quasigap::testutil {

// d=1, k=2, alpha = (-1+sqrt(5))/2, unit window, regular shift (0, 1/3).
inline SchemeConfig fibonacci_config() {
    SchemeConfig c;
    c.k = 2;
    c.d = 1;
    c.alpha = {{"(-1+1*sqrt(5))/2"}};
    c.shift = {"0", "1/3"};
    c.window_generators = {{1}};
    return c;
}

// d=1, k=3, alpha rows (-1+sqrt(5))/2 and (-1+sqrt(2))/1, unit square window.
inline SchemeConfig golden_root2_config() {
    SchemeConfig c;
    c.k = 3;
    c.d = 1;
    c.alpha = {{"(-1+1*sqrt(5))/2"}, {"(-1+1*sqrt(2))/1"}};
    c.shift = {"0", "1/3", "1/5"};
    c.window_generators = {{1, 0}, {0, 1}};
    return c;
}

// d=2, k=3, one form with mixed-field coefficients, doubled window (I=2).
inline SchemeConfig planar_config() {
    SchemeConfig c;
    c.k = 3;
    c.d = 2;
    c.alpha = {{"(-1+1*sqrt(5))/2", "(-1+1*sqrt(2))/1"}};
    c.shift = {"0", "0", "1/3"};
    c.window_generators = {{2}};
    return c;
}

// d=1, k=3 with a genuinely coupled window: generators (1,1) and (0,2).
inline SchemeConfig coupled_window_config() {
    SchemeConfig c;
    c.k = 3;
    c.d = 1;
    c.alpha = {{"(-1+1*sqrt(5))/2"}, {"(-1+1*sqrt(2))/1"}};
    c.shift = {"0", "1/3", "1/5"};
    c.window_generators = {{1, 1}, {0, 2}};
    return c;
}

}  // namespace quasigap::testutil
