#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "equichow/spoly.hpp"

namespace equichow {

struct FanError : std::runtime_error {
    enum class Kind { NotPrimitive, NotSmooth, NotComplete };
    Kind kind;
    FanError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Affine chart of the toric surface: the dual basis of the cone spanned by
// rays (rho_j, rho_{j+1}); u pairs to 1 with rho_{j+1}, v pairs to 1 with rho_j.
struct Chart {
    int index = 0;
    Character u, v;
};

// Invariant curve V(rho_{j+1}) joining the fixed points of charts j and j+1.
struct Line {
    int index = 0;        // j
    int chart_a = 0;      // j
    int chart_b = 0;      // (j+1) mod r
    int wall_ray = 0;     // (j+1) mod r
    int first_chart = 0;  // min(chart_a, chart_b): the endpoint used for block counts
};

// One-dimensional subtorus, stored as a primitive cocharacter with the first
// nonzero coordinate positive.
struct Subtorus {
    Cocharacter w;

    static Subtorus canonical(Cocharacter w) {
        if (w.is_zero()) throw std::invalid_argument("Subtorus: zero cocharacter");
        long long g = gcd_ll(w.w1, w.w2);
        w.w1 /= g;
        w.w2 /= g;
        long long lead = w.w1 != 0 ? w.w1 : w.w2;
        if (lead < 0) {
            w.w1 = -w.w1;
            w.w2 = -w.w2;
        }
        return Subtorus{w};
    }
    friend bool operator==(const Subtorus& a, const Subtorus& b) { return a.w == b.w; }
    friend bool operator<(const Subtorus& a, const Subtorus& b) { return a.w < b.w; }
    std::string str() const { return w.str(); }
};

struct FixedLocusShape {
    std::vector<int> pfix;  // isolated fixed charts
    std::vector<int> lfix;  // indices of pointwise-fixed lines
};

// Fan of a smooth complete toric surface. Rays are primitive, pairwise
// distinct, in counterclockwise cyclic order; chart j is the cone on
// (ray j, ray j+1).
struct Fan {
    std::string name = "X";
    std::vector<Cocharacter> rays;
    std::vector<Chart> charts;
    std::vector<Line> lines;

    int size() const { return static_cast<int>(rays.size()); }
    int next(int j) const { return (j + 1) % size(); }
    int prev(int j) const { return (j + size() - 1) % size(); }
};

namespace detail {
inline long long ray_det(Cocharacter a, Cocharacter b) { return a.w1 * b.w2 - a.w2 * b.w1; }

// exact counterclockwise angle comparison, angles in [0, 2*pi)
inline bool angle_less(Cocharacter a, Cocharacter b) {
    auto half = [](Cocharacter v) { return (v.w2 > 0 || (v.w2 == 0 && v.w1 > 0)) ? 0 : 1; };
    if (half(a) != half(b)) return half(a) < half(b);
    return ray_det(a, b) > 0;
}
}  // namespace detail

inline Fan build_fan(const std::vector<std::pair<long long, long long>>& ray_list,
                     std::string name = "X") {
    if (ray_list.size() < 3)
        throw FanError(FanError::Kind::NotComplete, "fan needs at least 3 rays");
    Fan fan;
    fan.name = std::move(name);
    for (auto [x, y] : ray_list) fan.rays.push_back({x, y});
    const int r = fan.size();
    for (int i = 0; i < r; ++i) {
        Cocharacter v = fan.rays[i];
        if (v.is_zero() || gcd_ll(v.w1, v.w2) != 1)
            throw FanError(FanError::Kind::NotPrimitive,
                           "ray " + std::to_string(i + 1) + " = " + v.str() + " is not primitive");
        for (int j = 0; j < i; ++j)
            if (fan.rays[j] == v)
                throw FanError(FanError::Kind::NotComplete,
                               "rays " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                   " coincide");
    }
    for (int i = 0; i < r; ++i) {
        Cocharacter a = fan.rays[i], b = fan.rays[fan.next(i)];
        long long det = detail::ray_det(a, b);
        if (det != 1 && det != -1)
            throw FanError(FanError::Kind::NotSmooth,
                           "cone on rays (" + std::to_string(i + 1) + "," +
                               std::to_string(fan.next(i) + 1) + ") = (" + a.str() + "," + b.str() +
                               ") has determinant " + std::to_string(det));
        if (det != 1)
            throw FanError(FanError::Kind::NotComplete,
                           "rays (" + std::to_string(i + 1) + "," + std::to_string(fan.next(i) + 1) +
                               ") are not in counterclockwise order");
    }
    int descents = 0;
    for (int i = 0; i < r; ++i)
        if (!detail::angle_less(fan.rays[i], fan.rays[fan.next(i)])) ++descents;
    if (descents != 1)
        throw FanError(FanError::Kind::NotComplete, "rays do not wind around the plane exactly once");

    for (int j = 0; j < r; ++j) {
        Cocharacter rj = fan.rays[j], rn = fan.rays[fan.next(j)];
        // dual basis: u_j orthogonal to rho_j, v_j orthogonal to rho_{j+1}; det = +1
        Chart c;
        c.index = j;
        c.u = Character{-rj.w2, rj.w1};
        c.v = Character{rn.w2, -rn.w1};
        fan.charts.push_back(c);
        Line l;
        l.index = j;
        l.chart_a = j;
        l.chart_b = fan.next(j);
        l.wall_ray = fan.next(j);
        l.first_chart = std::min(l.chart_a, l.chart_b);
        fan.lines.push_back(l);
    }
    return fan;
}

inline const Chart& chart_basis(const Fan& fan, int chart) { return fan.charts.at(chart); }

// Character of the along-line coordinate of the given endpoint chart; the two
// endpoints of a line give exact negatives.
inline Character line_character(const Fan& fan, int line, int endpoint_chart) {
    const Line& l = fan.lines.at(line);
    if (endpoint_chart == l.chart_a) return fan.charts[l.chart_a].v;
    if (endpoint_chart == l.chart_b) return fan.charts[l.chart_b].u;
    throw std::invalid_argument("line_character: chart is not an endpoint of the line");
}

inline FixedLocusShape classify_fixed_locus(const Fan& fan, const Subtorus& t) {
    FixedLocusShape shape;
    std::vector<bool> on_line(fan.rays.size(), false);
    for (const Line& l : fan.lines) {
        Cocharacter rho = fan.rays[l.wall_ray];
        bool fixed = (rho == t.w) || (Cocharacter{-rho.w1, -rho.w2} == t.w);
        if (fixed) {
            shape.lfix.push_back(l.index);
            on_line[l.chart_a] = on_line[l.chart_b] = true;
        }
    }
    for (int j = 0; j < fan.size(); ++j)
        if (!on_line[j]) shape.pfix.push_back(j);
    return shape;
}

inline Fan fan_p2() { return build_fan({{1, 0}, {0, 1}, {-1, -1}}, "P2"); }
inline Fan fan_p1xp1() { return build_fan({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, "P1xP1"); }
inline Fan fan_hirzebruch1() { return build_fan({{1, 0}, {0, 1}, {-1, 1}, {0, -1}}, "F1"); }

}  // namespace equichow
