#include "netbounds/diagrams.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>
#include <string>

#include "netbounds/errors.hpp"

namespace netbounds {

std::int64_t catalan_u(int d) {
    if (d < 1)
        throw std::invalid_argument("catalan_u: d must be >= 1");
    // u_d is the (d-1)-st Catalan number; C_{m+1} = C_m * 2(2m+1)/(m+2).
    std::int64_t c = 1;
    for (int m = 0; m < d - 1; ++m) {
        const __int128 next = static_cast<__int128>(c) * 2 * (2 * m + 1);
        if (next / (m + 2) > std::numeric_limits<std::int64_t>::max())
            throw std::overflow_error("catalan_u: value exceeds 64-bit range");
        c = static_cast<std::int64_t>(next / (m + 2));  // exact: (m+2) | 2(2m+1)C_m
    }
    return c;
}

namespace {

void validate_partner(int d, const std::vector<int>& partner) {
    if (d < 2)
        throw std::invalid_argument("ChordDiagram: d must be >= 2");
    const int n = 2 * d - 2;
    if (static_cast<int>(partner.size()) != n + 1)
        throw std::invalid_argument("ChordDiagram: partner map must cover positions 1..2d-2");
    for (int p = 1; p <= n; ++p) {
        const int q = partner[p];
        if (q < 1 || q > n)
            throw std::invalid_argument("ChordDiagram: partner out of range");
        if (q == p)
            throw std::invalid_argument("ChordDiagram: a position cannot partner itself");
        if (partner[q] != p)
            throw std::invalid_argument("ChordDiagram: partner map is not an involution");
    }
    // Stack matching doubles as the non-crossing check.
    std::vector<int> open;
    for (int p = 1; p <= n; ++p) {
        if (partner[p] > p) {
            open.push_back(p);
        } else {
            if (open.empty() || open.back() != partner[p])
                throw std::invalid_argument("ChordDiagram: chords cross");
            open.pop_back();
        }
    }
}

}  // namespace

ChordDiagram::ChordDiagram(int d, std::vector<int> partner) : d_(d), partner_(std::move(partner)) {
    validate_partner(d_, partner_);
    partner_[0] = 0;
}

ChordDiagram ChordDiagram::from_pairs(int d, const std::vector<std::pair<int, int>>& chords) {
    const int n = 2 * d - 2;
    std::vector<int> partner(n + 1, 0);
    for (const auto& [a, b] : chords) {
        if (a < 1 || a > n || b < 1 || b > n)
            throw std::invalid_argument("from_pairs: position out of range");
        if (partner[a] != 0 || partner[b] != 0 || a == b)
            throw std::invalid_argument("from_pairs: repeated or degenerate position");
        partner[a] = b;
        partner[b] = a;
    }
    return ChordDiagram(d, std::move(partner));
}

std::vector<std::pair<int, int>> ChordDiagram::chords() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(d_ - 1);
    for (int p = 1; p <= points(); ++p)
        if (partner_[p] > p)
            out.emplace_back(p, partner_[p]);
    return out;
}

ChordDiagram shift(const ChordDiagram& g) {
    const int n = g.points();
    std::vector<int> partner(n + 1, 0);
    for (int p = 1; p <= n; ++p) {
        const int p2 = p % n + 1;
        partner[p2] = g.partner(p) % n + 1;
    }
    return ChordDiagram(g.d(), std::move(partner));
}

FullTableau to_tableau(const ChordDiagram& g) {
    FullTableau t;
    t.first_row.reserve(g.d() - 1);
    t.second_row.reserve(g.d() - 1);
    for (int p = 1; p <= g.points(); ++p)
        (g.partner(p) > p ? t.first_row : t.second_row).push_back(p);
    return t;
}

ChordDiagram from_tableau(const FullTableau& t) {
    const auto rows_ok = [](const std::vector<int>& row) {
        return std::is_sorted(row.begin(), row.end()) &&
               std::adjacent_find(row.begin(), row.end()) == row.end();
    };
    if (t.first_row.size() != t.second_row.size() || t.first_row.empty())
        throw std::invalid_argument("from_tableau: rows must be nonempty and of equal length");
    if (!rows_ok(t.first_row) || !rows_ok(t.second_row))
        throw std::invalid_argument("from_tableau: rows must be strictly increasing");
    const int n = static_cast<int>(t.first_row.size() + t.second_row.size());
    std::vector<char> in_first(n + 1, -1);
    for (int v : t.first_row) {
        if (v < 1 || v > n)
            throw std::invalid_argument("from_tableau: entry out of range");
        in_first[v] = 1;
    }
    for (int v : t.second_row) {
        if (v < 1 || v > n || in_first[v] != -1)
            throw std::invalid_argument("from_tableau: rows must partition 1..2d-2");
        in_first[v] = 0;
    }
    for (std::size_t i = 0; i < t.first_row.size(); ++i)
        if (t.second_row[i] <= t.first_row[i])
            throw std::invalid_argument("from_tableau: column condition violated");

    std::vector<int> partner(n + 1, 0);
    std::vector<int> open;
    for (int p = 1; p <= n; ++p) {
        if (in_first[p]) {
            open.push_back(p);
        } else {
            // Ballot property follows from the column condition, so an
            // opener is always available.
            detail::check(!open.empty(), "from_tableau: ballot property violated");
            partner[p] = open.back();
            partner[open.back()] = p;
            open.pop_back();
        }
    }
    detail::check(open.empty(), "from_tableau: unmatched first-row entries");
    return ChordDiagram(n / 2 + 1, std::move(partner));
}

namespace detail {

std::uint64_t encode_word(const std::vector<int>& partner, int points) {
    std::uint64_t w = 0;
    for (int p = 1; p <= points; ++p)
        w = (w << 1) | static_cast<std::uint64_t>(partner[p] < p);
    return w;
}

std::uint64_t diagram_word(const ChordDiagram& g) {
    std::uint64_t w = 0;
    for (int p = 1; p <= g.points(); ++p)
        w = (w << 1) | static_cast<std::uint64_t>(g.partner(p) < p);
    return w;
}

ChordDiagram diagram_from_word(std::uint64_t word, int d) {
    const int n = 2 * d - 2;
    std::vector<int> partner(n + 1, 0);
    std::vector<int> open;
    for (int p = 1; p <= n; ++p) {
        const bool close = (word >> (n - p)) & 1u;
        if (!close) {
            open.push_back(p);
        } else {
            check(!open.empty(), "diagram_from_word: unbalanced word");
            partner[p] = open.back();
            partner[open.back()] = p;
            open.pop_back();
        }
    }
    check(open.empty(), "diagram_from_word: unbalanced word");
    return ChordDiagram(d, std::move(partner));
}

std::uint64_t shifted_word(const std::vector<int>& partner, int points, int j) {
    std::uint64_t w = 0;
    for (int p = 1; p <= points; ++p) {
        // Position p of shift^j holds the vertex at position p-j of the
        // original; its mate moves by the same rotation.
        const int q = (p - j - 1 + 2 * points) % points + 1;
        const int mate = (partner[q] + j - 1) % points + 1;
        w = (w << 1) | static_cast<std::uint64_t>(mate < p);
    }
    return w;
}

void enumerate_matchings(int points, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> partner(points + 1, 0);
    std::vector<int> open;
    // Trying '(' before ')' at each position yields lexicographic word order.
    auto rec = [&](auto&& self, int p) -> void {
        if (p > points) {
            visit(partner);
            return;
        }
        const int remaining = points - p + 1;
        if (static_cast<int>(open.size()) < remaining) {
            open.push_back(p);
            self(self, p + 1);
            open.pop_back();
        }
        if (!open.empty()) {
            const int q = open.back();
            open.pop_back();
            partner[p] = q;
            partner[q] = p;
            self(self, p + 1);
            partner[p] = 0;
            partner[q] = 0;
            open.push_back(q);
        }
    };
    rec(rec, 1);
}

}  // namespace detail

void enumerate_diagrams(int d, const std::function<void(const ChordDiagram&)>& visit) {
    if (d < 2)
        throw std::invalid_argument("enumerate_diagrams: d must be >= 2");
    detail::enumerate_matchings(2 * d - 2, [&](const std::vector<int>& partner) {
        visit(ChordDiagram(d, partner));
    });
}

std::vector<ChordDiagram> enumerate_diagrams(int d) {
    std::vector<ChordDiagram> out;
    out.reserve(static_cast<std::size_t>(catalan_u(d)));
    enumerate_diagrams(d, [&](const ChordDiagram& g) { out.push_back(g); });
    return out;
}

namespace {

ChordDiagram parse_word(std::string_view text) {
    const int n = static_cast<int>(text.size());
    if (n % 2 != 0)
        throw ParseError("parenthesis word has odd length", n);
    std::vector<int> partner(n + 1, 0);
    std::vector<int> open;
    for (int p = 1; p <= n; ++p) {
        const char ch = text[p - 1];
        if (ch == '(') {
            open.push_back(p);
        } else if (ch == ')') {
            if (open.empty())
                throw ParseError("unbalanced word: ')' without matching '('", p);
            partner[p] = open.back();
            partner[open.back()] = p;
            open.pop_back();
        } else {
            throw ParseError(std::string("unexpected character '") + ch + "' in word", p);
        }
    }
    if (!open.empty())
        throw ParseError("unbalanced word: unmatched '('", open.front());
    if (n < 2)
        throw ParseError("word must have length >= 2", 0);
    return ChordDiagram(n / 2 + 1, std::move(partner));
}

ChordDiagram parse_pair_list(std::string_view text) {
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::size_t> starts;  // 1-based offset of each pair, for errors
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    const auto read_int = [&]() -> int {
        skip_ws();
        const std::size_t at = i;
        int value = 0;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("expected a position number", at + 1);
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            if (value > 1 << 20)
                throw ParseError("position number too large", at + 1);
            ++i;
        }
        return value;
    };
    while (true) {
        skip_ws();
        starts.push_back(i + 1);
        const int a = read_int();
        skip_ws();
        if (i >= text.size() || text[i] != '-')
            throw ParseError("expected '-' between pair positions", i + 1);
        ++i;
        const int b = read_int();
        pairs.emplace_back(a, b);
        skip_ws();
        if (i >= text.size())
            break;
        if (text[i] != ',')
            throw ParseError("expected ',' between pairs", i + 1);
        ++i;
    }
    const int n = 2 * static_cast<int>(pairs.size());
    std::vector<int> partner(n + 1, 0);
    for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
        const auto [a, b] = pairs[idx];
        if (a < 1 || a > n || b < 1 || b > n)
            throw ParseError("position out of range 1..2d-2", starts[idx]);
        if (a == b || partner[a] != 0 || partner[b] != 0)
            throw ParseError("repeated or degenerate position in pair list", starts[idx]);
        partner[a] = b;
        partner[b] = a;
    }
    // Reuse the stack check so crossings are reported with the pair that
    // closes them.
    std::vector<int> open;
    for (int p = 1; p <= n; ++p) {
        if (partner[p] > p) {
            open.push_back(p);
        } else if (open.empty() || open.back() != partner[p]) {
            const int lo = std::min(p, partner[p]);
            std::size_t at = 0;
            for (std::size_t idx = 0; idx < pairs.size(); ++idx)
                if (std::min(pairs[idx].first, pairs[idx].second) == lo)
                    at = starts[idx];
            throw ParseError("pair list contains crossing chords", at);
        } else {
            open.pop_back();
        }
    }
    return ChordDiagram(n / 2 + 1, std::move(partner));
}

}  // namespace

ChordDiagram parse_diagram(std::string_view text) {
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1])))
        --e;
    const std::string_view body = text.substr(b, e - b);
    if (body.empty())
        throw ParseError("empty diagram text", 0);
    if (body.front() == '(' || body.front() == ')')
        return parse_word(body);
    return parse_pair_list(body);
}

std::string format_diagram(const ChordDiagram& g) {
    std::string word(static_cast<std::size_t>(g.points()), ')');
    for (int p = 1; p <= g.points(); ++p)
        if (g.partner(p) > p)
            word[p - 1] = '(';
    return word;
}

}  // namespace netbounds
