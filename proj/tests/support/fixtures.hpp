#pragma once

#include <cstdint>
#include <vector>

namespace fixtures {

// Main sequence as printed, n = 3 .. 185.
inline const std::vector<std::int64_t>& main_listing()
{
    static const std::vector<std::int64_t> v = {
        5, 11, 19, 29, 41, 11, 71, 89, 109, 131, 31, 181, 19, 239, 271, 61, 31, 379, 419, 461, 101, 29, 599,
        59, 701, 151, 811, 79, 929, 991, 211, 59, 41, 1259, 1, 281, 1481, 1559, 149, 1721, 1, 61, 1979, 2069,
        2161, 1, 2351, 79, 2549, 241, 1, 2861, 2969, 3079, 3191, 661, 311, 3539, 3659, 199, 71, 139, 4159,
        4289, 4421, 911, 4691, 439, 4969, 269, 1051, 491, 179, 139, 5851, 1201, 101, 89, 1, 229, 1361, 6971,
        1, 7309, 7481, 1531, 191, 8009, 431, 761, 1, 8741, 8929, 829, 9311, 1901, 109, 521, 10099, 10301,
        191, 10711, 179, 359, 1031, 2311, 149, 631, 421, 401, 2531, 1171, 13109, 13339, 331, 251, 739, 131,
        14519, 509, 3001, 151, 1409, 15749, 16001, 3251, 1, 409, 17029, 17291, 3511, 251, 18089, 1669, 601,
        199, 19181, 1, 19739, 20021, 1, 349, 20879, 21169, 1951, 229, 22051, 22349, 1, 389, 4651, 23561,
        23869, 24179, 1289, 1, 25121, 25439, 25759, 2371, 5281, 26731, 27059, 449, 1459, 181, 1, 28729, 709,
        29411, 541, 971, 30449, 1621, 31151, 6301, 211, 1, 32579, 32941, 6661, 3061, 34039,
    };
    return v;
}

// Printed prefixes, n = 3 onward, indexed by k - 1.
inline const std::vector<std::vector<std::int64_t>>& quadratic_table()
{
    static const std::vector<std::vector<std::int64_t>> v = {
        {5, 11, 19, 29, 41, 11, 71, 89, 109, 131, 31, 181, 19, 239, 271, 61, 31},
        {7, 7, 23, 17, 47, 31, 79, 7, 17, 71, 167, 97, 223, 127, 41, 23, 359, 199},
        {3, 17, 9, 13, 53, 23, 29, 107, 43, 17, 179, 23, 79, 269, 101, 113, 29, 139},
        {11, 5, 31, 11, 59, 19, 19, 29, 139, 41, 191, 1, 251, 71, 29, 89, 79, 109},
        {13, 23, 7, 49, 13, 83, 103, 5, 149, 1, 29, 233, 53, 23, 67, 373, 59, 1},
    };
    return v;
}

inline const std::vector<std::vector<std::int64_t>>& linear_table()
{
    static const std::vector<std::vector<std::int64_t>> v = {
        {5, 7, 3, 11, 13, 1, 17, 19, 1, 23, 1, 1, 29, 31, 1, 1, 37, 1, 41, 43, 1, 47},
        {7, 5, 13, 2, 19, 11, 5, 1, 31, 17, 37, 1, 43, 23, 1, 1, 1, 29, 61, 1, 67, 1},
        {3, 13, 17, 7, 5, 29, 11, 37, 41, 1, 7, 53, 19, 61, 1, 23, 73, 1, 1, 1, 89, 31},
        {11, 4, 7, 13, 31, 1, 41, 23, 17, 1, 61, 1, 71, 19, 1, 43, 1, 1, 101, 53, 37},
        {13, 19, 5, 31, 37, 43, 7, 11, 61, 67, 73, 79, 17, 1, 97, 103, 109, 23, 11},
    };
    return v;
}

// Rowland differences r(n+1) - r(n) as printed, n = 1 .. 25.
inline const std::vector<std::int64_t>& rowland_diffs()
{
    static const std::vector<std::int64_t> v = {1, 1, 1, 5, 3, 1, 1, 1, 1, 11, 3, 1, 1,
                                                1, 1, 1, 1, 1, 1, 1, 1, 23, 3, 1, 1};
    return v;
}

}  // namespace fixtures
