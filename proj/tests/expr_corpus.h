#pragma once

namespace b3_test {

// 50 expressions covering every atom and operator shape of the grammar
inline const char* kExprCorpus[50] = {
    "y1",
    "y2",
    "y3",
    "y21",
    "y32",
    "y31",
    "yt32",
    "yt31",
    "yt21",
    "q",
    "q^-1",
    "q^2",
    "3",
    "-7",
    "2/3",
    "-5/9",
    "mu[a1]",
    "mu[at21]",
    "g[1,0,0]",
    "g[3,6,6]",
    "g[1,2,3]^-1",
    "y1^3",
    "y21^2",
    "yt21^0",
    "y2*y1",
    "y2 y1",
    "y3*y2*y1",
    "q*y1",
    "q^-1*y1*y2",
    "2/3*y32",
    "mu[a21]*g[3,0,0]",
    "y1 + y2",
    "y1 - y2",
    "y1 + y2 + y3",
    "y1 - y2 - y3",
    "y2*y1 - q^-1 * y1*y2",
    "-y1",
    "-y1 + y2",
    "-(y1 + y2)",
    "(y1 + y2)*y3",
    "y3*(y1 + y2)",
    "(y1 + y2)^2",
    "[y2, y1]_c",
    "[y3, [y3, y2]_c]_c",
    "[y2, [y3, [y3, [y3, y21]_c]_c]_c]_c",
    "[y3, y2]_c - yt32",
    "q^-1*(y21 - mu[a21]*(g[3,3,0] - 1))",
    "mu[a1]*(g[3,0,0] - 1) + mu[a2]*(g[0,3,0] - 1)",
    "1/2*y1^2*y2^2 - 2*g[1,1,1]*y21",
    "[q*y3 + y32, y2]_c",
};

}  // namespace b3_test
