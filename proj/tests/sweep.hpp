#pragma once

#include <vector>

#include "prequant/catalog.hpp"

// The group list shared by catalog-wide property tests.
inline std::vector<prequant::GroupId> sweep_groups()
{
    using namespace prequant;
    std::vector<GroupId> gs;
    for (int n = 2; n <= 10; ++n)
        gs.push_back({Family::PU, n, 0});
    for (int n = 2; n <= 12; ++n)
        for (int k = 2; k < n; ++k)
            if (n % k == 0)
                gs.push_back({Family::SUmodZ, n, k});
    for (int n = 1; n <= 8; ++n)
        gs.push_back({Family::PSp, n, 0});
    for (int n = 7; n <= 12; ++n)
        gs.push_back({Family::SO, n, 0});
    for (int m = 8; m <= 16; m += 2)
        gs.push_back({Family::PO, m, 0});
    for (int m = 8; m <= 20; m += 4)
        gs.push_back({Family::Ss, m, 0});
    gs.push_back({Family::PE6, 0, 0});
    gs.push_back({Family::PE7, 0, 0});
    return gs;
}
