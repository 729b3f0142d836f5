#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "equichow/fan.hpp"
#include "equichow/spoly.hpp"

namespace equichow {

struct Partition {
    std::vector<int> parts;  // weakly decreasing, strictly positive

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
                throw std::invalid_argument("Partition: parts must be weakly decreasing positive");
        }
    }
    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int count() const { return static_cast<int>(parts.size()); }
    Partition conjugate() const {
        std::vector<int> c;
        for (int k = 1; !parts.empty() && k <= parts[0]; ++k) {
            int n = 0;
            for (int p : parts)
                if (p >= k) ++n;
            c.push_back(n);
        }
        return Partition(std::move(c));
    }
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator<(const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(b.parts.begin(), b.parts.end(), a.parts.begin(),
                                            a.parts.end());  // larger first part sorts earlier
    }
    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i)
            s += (i ? "," : "") + std::to_string(parts[i]);
        return s + ")";
    }
};

inline void partitions_of_rec(int n, int maxpart, std::vector<int>& cur,
                              std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_of_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_of_rec(n, n, cur, out);
    return out;
}

// all partitions with at most `rows` parts, each at most `width`
inline std::vector<Partition> partitions_in_box(int rows, int width) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining_rows, int maxpart) -> void {
        out.push_back(Partition(cur));
        if (remaining_rows == 0) return;
        for (int p = maxpart; p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining_rows - 1, p);
            cur.pop_back();
        }
    };
    rec(rec, rows, width);
    return out;
}

inline long long partition_count(int n) {
    static std::vector<long long> cache{1};
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        // Euler's pentagonal recurrence
        long long total = 0;
        for (int k = 1;; ++k) {
            long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            long long sign = (k % 2) ? 1 : -1;
            if (g1 <= m) total += sign * cache[m - g1];
            if (g2 <= m) total += sign * cache[m - g2];
        }
        cache.push_back(total);
    }
    return cache[n];
}

// Finite order ideal of N^2, stored as weakly decreasing column heights.
// Cell (a, b) has monomial u^a v^b in the owning chart's coordinates.
struct Staircase {
    std::vector<int> heights;

    Staircase() = default;
    explicit Staircase(std::vector<int> h) : heights(std::move(h)) {
        for (std::size_t i = 0; i < heights.size(); ++i)
            if (heights[i] <= 0 || (i > 0 && heights[i] > heights[i - 1]))
                throw std::invalid_argument("Staircase: heights must be weakly decreasing positive");
    }
    bool empty() const { return heights.empty(); }
    int size() const { return std::accumulate(heights.begin(), heights.end(), 0); }
    std::vector<std::pair<int, int>> cells() const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < static_cast<int>(heights.size()); ++a)
            for (int b = 0; b < heights[a]; ++b) out.push_back({a, b});
        return out;
    }
    bool contains(int a, int b) const {
        return a >= 0 && b >= 0 && a < static_cast<int>(heights.size()) && b < heights[a];
    }
    Staircase transpose() const {
        std::vector<int> t;
        for (int b = 0; !heights.empty() && b < heights[0]; ++b) {
            int n = 0;
            for (int h : heights)
                if (h > b) ++n;
            t.push_back(n);
        }
        return Staircase(std::move(t));
    }
    Partition column_profile() const { return Partition(heights); }
    friend bool operator==(const Staircase& a, const Staircase& b) {
        return a.heights == b.heights;
    }
    friend bool operator<(const Staircase& a, const Staircase& b) {
        return Partition(a.heights) < Partition(b.heights);
    }
};

// Tangent weights of the punctual Hilbert scheme at a monomial ideal, in the
// closed arm/leg form; exactly 2*|E| characters, none zero. Weights follow the
// target-minus-source convention; `flip` negates all of them.
inline std::vector<Character> tangent_characters(const Staircase& E, const Chart& chart,
                                                 bool flip = false) {
    std::vector<Character> out;
    out.reserve(2 * static_cast<std::size_t>(E.size()));
    const int w = static_cast<int>(E.heights.size());
    for (int a = 0; a < w; ++a) {
        for (int b = 0; b < E.heights[a]; ++b) {
            int arm = 0;
            for (int a2 = a + 1; a2 < w; ++a2)
                if (E.heights[a2] > b) ++arm;
            int leg = E.heights[a] - 1 - b;
            Character x = static_cast<long long>(arm) * chart.u -
                          static_cast<long long>(leg + 1) * chart.v;
            Character y = static_cast<long long>(-(arm + 1)) * chart.u +
                          static_cast<long long>(leg) * chart.v;
            if (flip) {
                x = -x;
                y = -y;
            }
            out.push_back(x);
            out.push_back(y);
        }
    }
    return out;
}

// A T-fixed point of the Hilbert scheme: one staircase per chart.
struct MultiStaircase {
    std::vector<Staircase> chart;

    int length() const {
        int n = 0;
        for (const Staircase& e : chart) n += e.size();
        return n;
    }
    friend bool operator==(const MultiStaircase& a, const MultiStaircase& b) {
        return a.chart == b.chart;
    }
    friend bool operator<(const MultiStaircase& a, const MultiStaircase& b) {
        for (std::size_t i = 0; i < a.chart.size(); ++i) {
            if (a.chart[i] == b.chart[i]) continue;
            return a.chart[i] < b.chart[i];
        }
        return false;
    }
    std::string id(const Fan& fan) const {
        std::ostringstream os;
        os << fan.name << ":d" << length() << ":[";
        for (std::size_t i = 0; i < chart.size(); ++i) {
            if (i) os << "|";
            if (chart[i].empty()) {
                os << "∅";
            } else {
                for (std::size_t j = 0; j < chart[i].heights.size(); ++j)
                    os << (j ? "," : "") << chart[i].heights[j];
            }
        }
        os << "]";
        return os.str();
    }
};

inline std::vector<Character> tangent_characters(const Fan& fan, const MultiStaircase& Z,
                                                 bool flip = false) {
    std::vector<Character> out;
    for (int j = 0; j < fan.size(); ++j) {
        auto part = tangent_characters(Z.chart[j], fan.charts[j], flip);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// All r-tuples of staircases of total size d, in the canonical order used for
// stable point ids everywhere downstream.
inline std::vector<MultiStaircase> enumerate_fixed_points(const Fan& fan, int d) {
    if (d < 0) throw std::invalid_argument("enumerate_fixed_points: negative length");
    std::vector<MultiStaircase> out;
    std::vector<std::vector<Partition>> parts(d + 1);
    for (int n = 0; n <= d; ++n) parts[n] = partitions_of(n);
    MultiStaircase cur;
    cur.chart.resize(fan.size());
    auto rec = [&](auto&& self, int j, int remaining) -> void {
        if (j == fan.size()) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        int lo = (j == fan.size() - 1) ? remaining : 0;
        for (int s = lo; s <= remaining; ++s) {
            for (const Partition& p : parts[s]) {
                cur.chart[j] = Staircase(p.parts);
                self(self, j + 1, remaining - s);
            }
        }
        cur.chart[j] = Staircase();
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end());
    return out;
}

// Connected component of the surface's fixed locus under a subtorus: either an
// isolated fixed point (chart index) or a pointwise-fixed line (line index).
struct ComponentRef {
    bool is_line = false;
    int index = 0;
    friend bool operator==(ComponentRef a, ComponentRef b) {
        return a.is_line == b.is_line && a.index == b.index;
    }
    friend bool operator<(ComponentRef a, ComponentRef b) {
        if (a.is_line != b.is_line) return !a.is_line;
        return a.index < b.index;
    }
};

using WeightFunction = std::map<long long, int>;  // weight -> multiplicity, no zeros

struct HilbertMultifunction {
    std::map<ComponentRef, WeightFunction> at;  // empty functions omitted

    int total() const {
        int n = 0;
        for (const auto& [k, f] : at)
            for (const auto& [w, m] : f) n += m;
        return n;
    }
    friend bool operator==(const HilbertMultifunction& a, const HilbertMultifunction& b) {
        return a.at == b.at;
    }
    friend bool operator<(const HilbertMultifunction& a, const HilbertMultifunction& b) {
        return a.at < b.at;
    }
};

inline long long cell_weight(const Chart& chart, int a, int b, const Subtorus& t) {
    return pairing(static_cast<long long>(a) * chart.u + static_cast<long long>(b) * chart.v, t.w);
}

inline HilbertMultifunction hilbert_multifunction(const Fan& fan, const MultiStaircase& Z,
                                                  const Subtorus& t,
                                                  const FixedLocusShape& shape) {
    HilbertMultifunction mf;
    std::vector<int> chart_line(fan.size(), -1);
    for (int l : shape.lfix) {
        chart_line[fan.lines[l].chart_a] = l;
        chart_line[fan.lines[l].chart_b] = l;
    }
    for (int j = 0; j < fan.size(); ++j) {
        const Staircase& e = Z.chart[j];
        if (e.empty()) continue;
        ComponentRef ref = chart_line[j] >= 0 ? ComponentRef{true, chart_line[j]}
                                              : ComponentRef{false, j};
        WeightFunction& f = mf.at[ref];
        for (auto [a, b] : e.cells()) f[cell_weight(fan.charts[j], a, b, t)] += 1;
    }
    return mf;
}

inline HilbertMultifunction hilbert_multifunction(const Fan& fan, const MultiStaircase& Z,
                                                  const Subtorus& t) {
    return hilbert_multifunction(fan, Z, t, classify_fixed_locus(fan, t));
}

struct UnsupportedSupport : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Decomposition of a line-supported fixed subscheme into curvilinear pieces.
// pi merges both endpoints; blocks are (piece length n_j, count d_j) with
// n_1 > n_2 > ...; l_at_first[j] of the d_j pieces sit at the line's first
// endpoint chart.
struct LineBlocks {
    Partition pi;
    std::vector<std::pair<int, int>> blocks;
    std::vector<int> l_at_first;
};

// Piece lengths contributed by one endpoint staircase: transverse column
// heights. At chart_a the transverse coordinate is u, at chart_b it is v.
inline Partition line_piece_lengths(const Fan& fan, int line, int endpoint_chart,
                                    const Staircase& e) {
    const Line& l = fan.lines.at(line);
    if (e.empty()) return Partition();
    if (endpoint_chart == l.chart_a) return e.transpose().column_profile();
    if (endpoint_chart == l.chart_b) return e.column_profile();
    throw std::invalid_argument("line_piece_lengths: chart is not an endpoint");
}

inline LineBlocks line_blocks(const Fan& fan, const MultiStaircase& Z, int line) {
    const Line& l = fan.lines.at(line);
    for (int j = 0; j < fan.size(); ++j)
        if (j != l.chart_a && j != l.chart_b && !Z.chart[j].empty())
            throw UnsupportedSupport("line_blocks: point has support off the line");
    int second = l.chart_a == l.first_chart ? l.chart_b : l.chart_a;
    Partition first_parts = line_piece_lengths(fan, line, l.first_chart, Z.chart[l.first_chart]);
    Partition second_parts = line_piece_lengths(fan, line, second, Z.chart[second]);
    std::vector<int> merged = first_parts.parts;
    merged.insert(merged.end(), second_parts.parts.begin(), second_parts.parts.end());
    std::sort(merged.rbegin(), merged.rend());
    LineBlocks out;
    out.pi = Partition(merged);
    for (std::size_t i = 0; i < merged.size();) {
        std::size_t j = i;
        while (j < merged.size() && merged[j] == merged[i]) ++j;
        out.blocks.push_back({merged[i], static_cast<int>(j - i)});
        int cnt = 0;
        for (int p : first_parts.parts)
            if (p == merged[i]) ++cnt;
        out.l_at_first.push_back(cnt);
        i = j;
    }
    return out;
}

// Inverse of line_blocks for torus-fixed configurations: all pieces at the
// torus-fixed endpoints.
inline MultiStaircase staircases_from_blocks(const Fan& fan, int line,
                                             const std::vector<std::pair<int, int>>& blocks,
                                             const std::vector<int>& l_at_first) {
    const Line& l = fan.lines.at(line);
    int second = l.chart_a == l.first_chart ? l.chart_b : l.chart_a;
    std::vector<int> first_parts, second_parts;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        for (int i = 0; i < l_at_first[j]; ++i) first_parts.push_back(blocks[j].first);
        for (int i = 0; i < blocks[j].second - l_at_first[j]; ++i)
            second_parts.push_back(blocks[j].first);
    }
    auto build = [&](int chart, std::vector<int> parts) -> Staircase {
        std::sort(parts.rbegin(), parts.rend());
        Staircase s(parts);
        return chart == l.chart_a ? s.transpose() : s;
    };
    MultiStaircase Z;
    Z.chart.resize(fan.size());
    Z.chart[l.first_chart] = build(l.first_chart, first_parts);
    Z.chart[second] = build(second, second_parts);
    return Z;
}

}  // namespace equichow
