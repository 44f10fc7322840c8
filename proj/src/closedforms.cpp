#include "netbounds/closedforms.hpp"

#include <array>
#include <stdexcept>

#include "netbounds/errors.hpp"

namespace netbounds {

std::int64_t k1_bound(int d) {
    if (d < 3)
        throw std::invalid_argument("k1_bound: d must be >= 3");
    return catalan_u(d) - 2 * catalan_u(d - 1);
}

int neighbor_free_count(const ChordDiagram& g) {
    int count = 0;
    for (int p = 1; p <= g.points(); ++p) {
        const int mate = g.partner(p);
        if (mate != g.next(p) && mate != g.prev(p))
            ++count;
    }
    return count;
}

namespace {

void require_nk_range(int d, int j) {
    if (d < 4)
        throw std::invalid_argument("nk: d must be >= 4");
    if (j < 2 || j > d - 2)
        throw std::invalid_argument("nk: j must satisfy 2 <= j <= d-2");
}

}  // namespace

std::int64_t nk_enumerated(int d, int j) {
    require_nk_range(d, j);
    // Diagrams on 2d-6 points with no chord {i, i+1} for i <= 2j-4.
    const int limit = 2 * j - 4;
    std::int64_t count = 0;
    enumerate_diagrams(d - 2, [&](const ChordDiagram& g) {
        for (int i = 1; i <= limit; ++i)
            if (g.partner(i) == i + 1)
                return;
        ++count;
    });
    return count;
}

std::int64_t nk(int d, int j) {
    require_nk_range(d, j);
    if (j > 6)
        return nk_enumerated(d, j);
    // Inclusion-exclusion over the forbidden adjacent chords, as multiples
    // of u_{d-2}, u_{d-3}, ...
    static constexpr std::array<std::array<std::int64_t, 5>, 5> kCoefficients = {{
        {1, 0, 0, 0, 0},       // j = 2
        {1, -2, 0, 0, 0},      // j = 3
        {1, -4, 3, 0, 0},      // j = 4
        {1, -6, 10, -4, 0},    // j = 5
        {1, -8, 21, -20, 5},   // j = 6
    }};
    const auto& coeff = kCoefficients[static_cast<std::size_t>(j - 2)];
    std::int64_t value = 0;
    for (int t = 0; t < 5; ++t)
        if (coeff[t] != 0)
            value += coeff[t] * catalan_u(d - 2 - t);
    return value;
}

std::int64_t script_n(int d) {
    if (d < 4)
        throw std::invalid_argument("script_n: d must be >= 4");
    std::int64_t total = 0;
    for (int j = 2; j <= d - 2; ++j)
        total += nk(d, j);
    return total;
}

std::int64_t script_n_enumerated(int d) {
    if (d < 4)
        throw std::invalid_argument("script_n_enumerated: d must be >= 4");
    std::int64_t count = 0;
    enumerate_diagrams(d, [&](const ChordDiagram& g) {
        if (g.partner(1) != 2)
            return;
        // First adjacent-pair chord past {1,2}, scanning without wraparound;
        // it must start at an even position.
        for (int p = 3; p + 1 <= g.points(); ++p) {
            if (g.partner(p) == p + 1) {
                if (p % 2 == 0)
                    ++count;
                return;
            }
        }
    });
    return count;
}

}  // namespace netbounds
