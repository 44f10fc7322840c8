#include "netbounds/counting.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "netbounds/errors.hpp"

namespace netbounds {

namespace {

constexpr std::int64_t kMinLevel = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMaxLevel = std::numeric_limits<std::int64_t>::max();

// Clause (i) of the max-point test: some k with L(i) >= U(k) and L strictly
// below L(i) on the open cyclic interval (k, i). Scanning k away from i
// keeps the running maximum of the in-between values, and once that maximum
// reaches L(i) no farther witness can work.
bool max_backward(const BoundsGrid& g, int i) {
    const int n = g.size();
    std::int64_t between = kMinLevel;
    for (int step = 1; step < n; ++step) {
        const int k = (i - step + n) % n;
        if (g.lower[i] >= g.upper[k])
            return true;
        between = std::max(between, g.lower[k]);
        if (between >= g.lower[i])
            return false;
    }
    return false;
}

bool max_forward(const BoundsGrid& g, int i) {
    const int n = g.size();
    std::int64_t between = kMinLevel;
    for (int step = 1; step < n; ++step) {
        const int k = (i + step) % n;
        if (g.lower[i] >= g.upper[k])
            return true;
        between = std::max(between, g.lower[k]);
        if (between > g.lower[i])
            return false;
    }
    return false;
}

bool min_backward(const BoundsGrid& g, int i) {
    const int n = g.size();
    std::int64_t between = kMaxLevel;
    for (int step = 1; step < n; ++step) {
        const int k = (i - step + n) % n;
        if (g.upper[i] <= g.lower[k])
            return true;
        between = std::min(between, g.upper[k]);
        if (between <= g.upper[i])
            return false;
    }
    return false;
}

bool min_forward(const BoundsGrid& g, int i) {
    const int n = g.size();
    std::int64_t between = kMaxLevel;
    for (int step = 1; step < n; ++step) {
        const int k = (i + step) % n;
        if (g.upper[i] <= g.lower[k])
            return true;
        between = std::min(between, g.upper[k]);
        if (between < g.upper[i])
            return false;
    }
    return false;
}

}  // namespace

std::vector<ExtremumPoint> extrema(const BoundsGrid& grid) {
    const int n = grid.size();
    detail::check(n > 0 && grid.upper.size() == grid.lower.size(), "extrema: malformed grid");
    for (int i = 0; i < n; ++i)
        detail::check(grid.lower[i] < grid.upper[i], "extrema: grid must satisfy L < U");

    std::vector<ExtremumPoint> out;
    for (int i = 0; i < n; ++i) {
        if (max_backward(grid, i) && max_forward(grid, i))
            out.push_back({i, ExtremumPoint::Kind::Max, grid.lower[i]});
        if (min_backward(grid, i) && min_forward(grid, i)) {
            detail::check(out.empty() || out.back().index != i,
                          "extrema: a point cannot be both max and min");
            out.push_back({i, ExtremumPoint::Kind::Min, grid.upper[i]});
        }
    }
    const std::size_t count = out.size();
    detail::check(count % 2 == 0, "extrema: max and min points must alternate");
    for (std::size_t i = 0; i < count; ++i)
        detail::check(out[i].kind != out[(i + 1) % count].kind,
                      "extrema: max and min points must alternate");
    return out;
}

std::int64_t v_of_grid(const BoundsGrid& grid) {
    const std::vector<ExtremumPoint> points = extrema(grid);
    if (points.empty())
        return 0;
    std::int64_t v = 0;
    const std::size_t count = points.size();
    for (std::size_t i = 0; i < count; ++i) {
        const ExtremumPoint& a = points[i];
        const ExtremumPoint& b = points[(i + 1) % count];
        const ExtremumPoint& mx = a.kind == ExtremumPoint::Kind::Max ? a : b;
        const ExtremumPoint& mn = a.kind == ExtremumPoint::Kind::Max ? b : a;
        detail::check(mn.level <= mx.level, "v_of_grid: adjacent pair with U(min) > L(max)");
        v += mx.level - mn.level + 1;
    }
    return v;
}

std::int64_t v_of_net(const ChordDiagram& g, int k, const GridOptions& options) {
    return v_of_grid(collect_grid(g, k, options));
}

namespace {

struct OrbitWord {
    std::uint64_t word;
    int period;
};

// Orbit representatives under shift: the words that are lexicographically
// least within their rotation class, with the class size.
std::vector<OrbitWord> scan_orbit_words(int d, int jobs) {
    const int n = 2 * d - 2;
    std::vector<std::uint64_t> words;
    words.reserve(static_cast<std::size_t>(catalan_u(d)));
    detail::enumerate_matchings(
        n, [&](const std::vector<int>& partner) { words.push_back(detail::encode_word(partner, n)); });

    const auto scan_range = [&](std::size_t begin, std::size_t end, std::vector<OrbitWord>& out) {
        std::vector<int> partner(static_cast<std::size_t>(n) + 1, 0);
        std::vector<int> open;
        for (std::size_t idx = begin; idx < end; ++idx) {
            const std::uint64_t w = words[idx];
            open.clear();
            for (int p = 1; p <= n; ++p) {
                if ((w >> (n - p)) & 1u) {
                    partner[p] = open.back();
                    partner[open.back()] = p;
                    open.pop_back();
                } else {
                    open.push_back(p);
                }
            }
            int period = n;
            bool least = true;
            for (int j = 1; j < n; ++j) {
                const std::uint64_t sw = detail::shifted_word(partner, n, j);
                if (sw < w) {
                    least = false;
                    break;
                }
                if (sw == w) {
                    period = j;
                    break;
                }
            }
            if (least)
                out.push_back({w, period});
        }
    };

    std::vector<OrbitWord> reps;
    if (jobs <= 1 || words.size() < 4096) {
        scan_range(0, words.size(), reps);
        return reps;
    }
    const std::size_t chunks = static_cast<std::size_t>(jobs);
    std::vector<std::vector<OrbitWord>> parts(chunks);
    std::vector<std::thread> threads;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (std::size_t t = 0; t < chunks; ++t) {
        threads.emplace_back([&, t] {
            try {
                const std::size_t begin = words.size() * t / chunks;
                const std::size_t end = words.size() * (t + 1) / chunks;
                scan_range(begin, end, parts[t]);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        });
    }
    for (auto& th : threads)
        th.join();
    if (error)
        std::rethrow_exception(error);
    for (auto& part : parts)
        reps.insert(reps.end(), part.begin(), part.end());
    return reps;
}

int resolve_jobs(int jobs) {
    if (jobs > 0)
        return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

std::vector<Orbit> orbits(int d) {
    if (d < 2)
        throw std::invalid_argument("orbits: d must be >= 2");
    std::vector<Orbit> out;
    for (const OrbitWord& ow : scan_orbit_words(d, resolve_jobs(0)))
        out.push_back({detail::diagram_from_word(ow.word, d), ow.period});
    return out;
}

BoundComputer::BoundComputer(int d, const CountOptions& options)
    : d_(d), options_(options), diagram_count_(0) {
    if (d < 3)
        throw std::invalid_argument("lower_bound: d must be >= 3");
    if (2 * d - 2 > 62)
        throw std::invalid_argument("lower_bound: d too large for the word representation");
    diagram_count_ = catalan_u(d);
    const int jobs = resolve_jobs(options_.jobs);
    if (options_.orbit_reduction) {
        std::int64_t total = 0;
        for (const OrbitWord& ow : scan_orbit_words(d, jobs)) {
            items_.push_back({ow.word, ow.period});
            total += ow.period;
        }
        detail::check(total == diagram_count_, "orbit periods must sum to the diagram count");
    } else {
        const int n = 2 * d - 2;
        items_.reserve(static_cast<std::size_t>(diagram_count_));
        detail::enumerate_matchings(n, [&](const std::vector<int>& partner) {
            items_.push_back({detail::encode_word(partner, n), 1});
        });
    }
}

BoundReport BoundComputer::run(int k) const {
    if (k < 1 || k > 2 * d_ - 4)
        throw std::invalid_argument("lower_bound: k must satisfy 1 <= k <= 2d-4");
    const auto started = std::chrono::steady_clock::now();

    const auto v_of_item = [&](const Item& item) -> std::int64_t {
        const ChordDiagram g = detail::diagram_from_word(item.word, d_);
        return v_of_net(g, k, options_.grid) * item.weight;
    };

    const int jobs = resolve_jobs(options_.jobs);
    std::int64_t sum = 0;
    if (jobs <= 1 || items_.size() < 256) {
        for (const Item& item : items_)
            sum += v_of_item(item);
    } else {
        std::atomic<std::size_t> cursor{0};
        std::atomic<std::int64_t> total{0};
        std::vector<std::thread> threads;
        std::exception_ptr error;
        std::mutex error_mutex;
        constexpr std::size_t kChunk = 64;
        for (int t = 0; t < jobs; ++t) {
            threads.emplace_back([&] {
                try {
                    std::int64_t local = 0;
                    while (true) {
                        const std::size_t begin = cursor.fetch_add(kChunk);
                        if (begin >= items_.size())
                            break;
                        const std::size_t end = std::min(items_.size(), begin + kChunk);
                        for (std::size_t i = begin; i < end; ++i)
                            local += v_of_item(items_[i]);
                    }
                    total.fetch_add(local);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                }
            });
        }
        for (auto& th : threads)
            th.join();
        if (error)
            std::rethrow_exception(error);
        sum = total.load();
    }

    detail::check(sum % (2 * d_ - 2) == 0, "lower_bound: sum of V not divisible by 2d-2");
    BoundReport report;
    report.d = d_;
    report.k = k;
    report.sum_v = sum;
    report.bound = sum / (2 * d_ - 2);
    report.diagram_count = diagram_count_;
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    return report;
}

BoundReport lower_bound(int d, int k, const CountOptions& options) {
    return BoundComputer(d, options).run(k);
}

}  // namespace netbounds
