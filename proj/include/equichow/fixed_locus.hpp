#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "equichow/fan.hpp"
#include "equichow/spoly.hpp"
#include "equichow/staircase.hpp"

namespace equichow {

struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};
struct ZeroWeight : std::logic_error {
    using std::logic_error::logic_error;
};
struct InfiniteGradedPiece : std::logic_error {
    using std::logic_error::logic_error;
};

// Fixed points with their tangent characters, shared by everything downstream.
// `flip` globally negates the tangent weight convention (used by the
// convention-drift checks; all derived data must be equivalent).
struct FixedPointTable {
    Fan fan;
    int d = 0;
    bool flip = false;
    std::vector<MultiStaircase> points;
    std::vector<std::string> ids;
    std::vector<std::vector<Character>> tangent;

    FixedPointTable(Fan f, int length, bool flip_convention = false)
        : fan(std::move(f)), d(length), flip(flip_convention) {
        points = enumerate_fixed_points(fan, d);
        ids.reserve(points.size());
        tangent.reserve(points.size());
        for (const auto& z : points) {
            ids.push_back(z.id(fan));
            tangent.push_back(tangent_characters(fan, z, flip));
        }
    }
    int npoints() const { return static_cast<int>(points.size()); }
    int index_of(const MultiStaircase& z) const {
        auto it = std::lower_bound(points.begin(), points.end(), z);
        if (it == points.end() || !(*it == z))
            throw std::invalid_argument("FixedPointTable: unknown point");
        return static_cast<int>(it - points.begin());
    }
};

// Subtori annihilating some tangent character somewhere; only these impose
// congruences.
inline std::vector<Subtorus> relevant_subtori(const FixedPointTable& table) {
    std::set<Subtorus> seen;
    for (const auto& chars : table.tangent)
        for (Character chi : chars) {
            if (chi.is_zero()) throw ZeroWeight("relevant_subtori: zero tangent character");
            seen.insert(Subtorus::canonical({-chi.c2, chi.c1}));
        }
    return {seen.begin(), seen.end()};
}

struct Factor {
    enum class Kind { ReducedPoint, GradedHilb, LineBlocks };
    Kind kind = Kind::ReducedPoint;
    int chart = -1;  // ReducedPoint, GradedHilb
    int line = -1;   // LineBlocks
    WeightFunction hilbert;                                // GradedHilb
    std::map<long long, std::vector<Character>> pieces;   // GradedHilb: full graded pieces
    Partition pi;                                          // LineBlocks
    std::vector<std::pair<int, int>> blocks;               // LineBlocks (n_j, d_j)
    Character line_chi;                                    // along-line character, first endpoint
    int dimension = 0;
};

// Location of one fixed point inside one factor.
struct FactorCoordinate {
    std::map<long long, std::vector<Character>> selected;  // GradedHilb: quotient monomials
    std::vector<int> l;                                    // LineBlocks occupations
    friend bool operator<(const FactorCoordinate& a, const FactorCoordinate& b) {
        if (a.selected != b.selected) return a.selected < b.selected;
        return a.l < b.l;
    }
    friend bool operator==(const FactorCoordinate& a, const FactorCoordinate& b) {
        return a.selected == b.selected && a.l == b.l;
    }
};

struct FixedComponent {
    Subtorus w;
    HilbertMultifunction multifunction;
    std::vector<Factor> factors;
    std::vector<int> points;  // global indices, canonical order
    std::vector<std::vector<FactorCoordinate>> coords;
    std::vector<SPoly> euler;
    std::vector<std::vector<Character>> euler_factors;
    int dimension = 0;

    int local_index(int global) const {
        for (std::size_t i = 0; i < points.size(); ++i)
            if (points[i] == global) return static_cast<int>(i);
        return -1;
    }
};

namespace detail {

// All monomials of the chart with the given weight under w. Finite exactly
// when the two coordinate weights are nonzero of equal sign.
inline std::vector<Character> graded_piece(const Chart& chart, const Subtorus& w, long long n) {
    long long wu = pairing(chart.u, w.w), wv = pairing(chart.v, w.w);
    if (wu == 0 || wv == 0 || (wu > 0) != (wv > 0))
        throw InfiniteGradedPiece("graded_piece: weights " + std::to_string(wu) + "," +
                                  std::to_string(wv) + " span an infinite piece");
    std::vector<Character> out;
    for (long long a = 0;; ++a) {
        long long rest = n - a * wu;
        if (wu > 0 && rest < 0) break;
        if (wu < 0 && rest > 0) break;
        if (rest % wv == 0 && rest / wv >= 0)
            out.push_back(a * chart.u + (rest / wv) * chart.v);
    }
    return out;
}

}  // namespace detail

// Irreducible components of the w-fixed locus, discovered by grouping the
// torus-fixed points by Hilbert multifunction.
inline std::vector<FixedComponent> components(const FixedPointTable& table, const Subtorus& w) {
    const Fan& fan = table.fan;
    FixedLocusShape shape = classify_fixed_locus(fan, w);
    std::map<HilbertMultifunction, std::vector<int>> groups;
    for (int i = 0; i < table.npoints(); ++i)
        groups[hilbert_multifunction(fan, table.points[i], w, shape)].push_back(i);

    std::vector<FixedComponent> out;
    for (auto& [mf, members] : groups) {
        FixedComponent c;
        c.w = w;
        c.multifunction = mf;
        c.points = members;

        // invariant tangent dimension and Euler data, constant across the component
        c.dimension = -1;
        for (int idx : members) {
            std::vector<Character> ann;
            for (Character chi : table.tangent[idx])
                if (pairing(chi, w.w) == 0) ann.push_back(chi);
            if (c.dimension < 0) c.dimension = static_cast<int>(ann.size());
            if (c.dimension != static_cast<int>(ann.size()))
                throw InternalInconsistency("component: invariant tangent dimension varies at " +
                                            table.ids[idx]);
            SPoly e(1);
            for (Character chi : ann) {
                if (chi.is_zero()) throw ZeroWeight("component: zero invariant character");
                e = e * linear_form(chi);
            }
            c.euler.push_back(std::move(e));
            c.euler_factors.push_back(std::move(ann));
        }
        if (c.dimension == 0 && members.size() != 1)
            throw InternalInconsistency("component: zero-dimensional with several points");
        if (members.size() >= 2 && c.dimension < 1)
            throw InternalInconsistency("component: multiple points need positive dimension");

        // factors in ComponentRef order
        for (const auto& [ref, fn] : mf.at) {
            Factor f;
            if (!ref.is_line) {
                const int chart_idx = ref.index;
                const Chart& chart = fan.charts[chart_idx];
                // local invariant dimension at this chart
                int local_dim = -1;
                for (int idx : members) {
                    auto loc = tangent_characters(table.points[idx].chart[chart_idx], chart,
                                                  table.flip);
                    int n = 0;
                    for (Character chi : loc)
                        if (pairing(chi, w.w) == 0) ++n;
                    if (local_dim < 0) local_dim = n;
                    if (local_dim != n)
                        throw InternalInconsistency("component: local dimension varies at chart " +
                                                    std::to_string(chart_idx + 1));
                }
                long long wu = pairing(chart.u, w.w), wv = pairing(chart.v, w.w);
                if (wu == 0 || wv == 0)
                    throw InternalInconsistency("component: chart off the fixed line has a zero weight");
                if ((wu > 0) != (wv > 0) && local_dim != 0)
                    throw InternalInconsistency(
                        "component: opposite-sign chart weights with nonzero local dimension");
                if (local_dim == 0) {
                    f.kind = Factor::Kind::ReducedPoint;
                    f.chart = chart_idx;
                    f.dimension = 0;
                } else {
                    f.kind = Factor::Kind::GradedHilb;
                    f.chart = chart_idx;
                    f.hilbert = fn;
                    f.dimension = local_dim;
                    for (const auto& [weight, mult] : fn) {
                        auto piece = detail::graded_piece(chart, w, weight);
                        if (static_cast<int>(piece.size()) < mult)
                            throw InternalInconsistency("component: graded piece smaller than mass");
                        f.pieces[weight] = std::move(piece);
                    }
                }
            } else {
                const int line_idx = ref.index;
                const Line& line = fan.lines[line_idx];
                f.kind = Factor::Kind::LineBlocks;
                f.line = line_idx;
                f.line_chi = line_character(fan, line_idx, line.first_chart);
                bool first = true;
                for (int idx : members) {
                    MultiStaircase restricted;
                    restricted.chart.assign(fan.size(), Staircase());
                    restricted.chart[line.chart_a] = table.points[idx].chart[line.chart_a];
                    restricted.chart[line.chart_b] = table.points[idx].chart[line.chart_b];
                    LineBlocks lb = line_blocks(fan, restricted, line_idx);
                    if (first) {
                        f.pi = lb.pi;
                        f.blocks = lb.blocks;
                        first = false;
                    } else if (!(f.pi == lb.pi)) {
                        throw InternalInconsistency("component: line partition varies at " +
                                                    table.ids[idx]);
                    }
                }
                f.dimension = 0;
                for (auto [n, dn] : f.blocks) {
                    (void)n;
                    f.dimension += dn;
                }
            }
            c.factors.push_back(std::move(f));
        }

        int dim_sum = 0;
        for (const Factor& f : c.factors) dim_sum += f.dimension;
        if (dim_sum != c.dimension)
            throw InternalInconsistency("component: factor dimensions sum to " +
                                        std::to_string(dim_sum) + " but tangent dimension is " +
                                        std::to_string(c.dimension));

        // per-point factor coordinates
        for (int idx : members) {
            std::vector<FactorCoordinate> per_factor;
            for (const Factor& f : c.factors) {
                FactorCoordinate fc;
                if (f.kind == Factor::Kind::LineBlocks) {
                    const Line& line = fan.lines[f.line];
                    MultiStaircase restricted;
                    restricted.chart.assign(fan.size(), Staircase());
                    restricted.chart[line.chart_a] = table.points[idx].chart[line.chart_a];
                    restricted.chart[line.chart_b] = table.points[idx].chart[line.chart_b];
                    fc.l = line_blocks(fan, restricted, f.line).l_at_first;
                } else {
                    const Chart& chart = fan.charts[f.chart];
                    for (auto [a, b] : table.points[idx].chart[f.chart].cells()) {
                        Character chi = static_cast<long long>(a) * chart.u +
                                        static_cast<long long>(b) * chart.v;
                        fc.selected[pairing(chi, w.w)].push_back(chi);
                    }
                    for (auto& [weight, chars] : fc.selected) std::sort(chars.begin(), chars.end());
                }
                per_factor.push_back(std::move(fc));
            }
            c.coords.push_back(std::move(per_factor));
        }

        // the component is a product of its factors: coordinate counts multiply
        long long combos = 1;
        for (std::size_t fi = 0; fi < c.factors.size(); ++fi) {
            std::set<FactorCoordinate> distinct;
            for (const auto& pc : c.coords) distinct.insert(pc[fi]);
            combos *= static_cast<long long>(distinct.size());
        }
        if (combos != static_cast<long long>(members.size()))
            throw InternalInconsistency("component: points do not form a product of factors");

        out.push_back(std::move(c));
    }
    return out;
}

inline std::vector<FixedComponent> components(const Fan& fan, int d, const Subtorus& w) {
    FixedPointTable table(fan, d);
    return components(table, w);
}

inline const std::vector<SPoly>& component_euler(const FixedComponent& c) { return c.euler; }

}  // namespace equichow
