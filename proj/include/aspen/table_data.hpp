#pragma once

#include <array>
#include <string_view>

namespace aspen {

// Published (n,l,r)-pentagon counts in factored form, one cell per margin
// pair, row r in [n-1, 2n-3] by column l in [0, n-2]. Strings use the machine
// format "p^a*q" and "0" marks margin pairs admitting no pentagon. Two cells
// are misprints in the source tables; known_errata lists them with the
// factorization of the true count.
struct PublishedCell {
    int n;
    int r;
    int l;
    std::string_view printed;
};

inline constexpr std::array<PublishedCell, 86> published_table_cells{{
    {4, 3, 0, "2*7"},
    {4, 3, 1, "3^2"},
    {4, 3, 2, "0"},
    {4, 4, 0, "5*7"},
    {4, 4, 1, "2^2*7"},
    {4, 4, 2, "3^2"},
    {4, 5, 0, "2*3*7"},
    {4, 5, 1, "5*73"},
    {4, 5, 2, "2*7"},

    {5, 4, 0, "2*3*7"},
    {5, 4, 1, "2^2*7"},
    {5, 4, 2, "0"},
    {5, 4, 3, "0"},
    {5, 5, 0, "3*73"},
    {5, 5, 1, "2^3*23"},
    {5, 5, 2, "2^3*3^2"},
    {5, 5, 3, "0"},
    {5, 6, 0, "3^2*43"},
    {5, 6, 1, "3*5*23"},
    {5, 6, 2, "2^3*23"},
    {5, 6, 3, "2^2*7"},
    {5, 7, 0, "3*11*13"},
    {5, 7, 1, "3^2*43"},
    {5, 7, 2, "3*73"},
    {5, 7, 3, "2*3*7"},

    {6, 5, 0, "2^2*3*11"},
    {6, 5, 1, "2*3^2*5"},
    {6, 5, 2, "0"},
    {6, 5, 3, "0"},
    {6, 5, 4, "0"},
    {6, 6, 0, "2*797"},
    {6, 6, 1, "5^3*11"},
    {6, 6, 2, "3*199"},
    {6, 6, 3, "0"},
    {6, 6, 4, "0"},
    {6, 7, 0, "2*11*13*17"},
    {6, 7, 1, "5^2*179"},
    {6, 7, 2, "2*5^3*11"},
    {6, 7, 3, "3*199"},
    {6, 7, 4, "0"},
    {6, 8, 0, "7^2*11*13"},
    {6, 8, 1, "2*11*13*23"},
    {6, 8, 2, "5^2*179"},
    {6, 8, 3, "5^6*11"},
    {6, 8, 4, "2*3^2*5"},
    {6, 9, 0, "2^2*11*13^2"},
    {6, 9, 1, "7^2*11*13"},
    {6, 9, 2, "2*11*13*17"},
    {6, 9, 3, "2*797"},
    {6, 9, 4, "2^2*3*11"},

    {7, 6, 0, "3*11*13"},
    {7, 6, 1, "3^3*11"},
    {7, 6, 2, "0"},
    {7, 6, 3, "0"},
    {7, 6, 4, "0"},
    {7, 6, 5, "0"},
    {7, 7, 0, "5*13*199"},
    {7, 7, 1, "11*1031"},
    {7, 7, 2, "3^2*11*53"},
    {7, 7, 3, "0"},
    {7, 7, 4, "0"},
    {7, 7, 5, "0"},
    {7, 8, 0, "5*11*13*107"},
    {7, 8, 1, "3*11*13*167"},
    {7, 8, 2, "2*11^2*197"},
    {7, 8, 3, "11*31*37"},
    {7, 8, 4, "0"},
    {7, 8, 5, "0"},
    {7, 9, 0, "2^3*3*13^2*41"},
    {7, 9, 1, "13*12253"},
    {7, 9, 2, "13^2*709"},
    {7, 9, 3, "2*11^2*197"},
    {7, 9, 4, "3^2*11*53"},
    {7, 9, 5, "0"},
    {7, 10, 0, "2^5*3*13^3"},
    {7, 10, 1, "2^2*7*13^2*43"},
    {7, 10, 2, "13*12253"},
    {7, 10, 3, "3*11*13*167"},
    {7, 10, 4, "11*1031"},
    {7, 10, 5, "3^3*11"},
    {7, 11, 0, "2^2*13^2*17*19"},
    {7, 11, 1, "2^5*3*13^3"},
    {7, 11, 2, "2^3*3*13^2*41"},
    {7, 11, 3, "5*11*13*107"},
    {7, 11, 4, "5*13*199"},
    {7, 11, 5, "3*11*13"},
}};

struct TableErratum {
    int n;
    int r;
    int l;
    std::string_view printed;
    std::string_view corrected;
};

// Both misprints break the reflection symmetry cell(l, r) = cell(2n-3-r,
// 2n-3-l) that every other cell of the tables obeys, and brute enumeration
// confirms the corrected values.
inline constexpr std::array<TableErratum, 2> known_errata{{
    {4, 5, 1, "5*73", "5*7"},
    {6, 8, 3, "5^6*11", "5^3*11"},
}};

}  // namespace aspen
