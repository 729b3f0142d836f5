#pragma once

#include <array>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "equichow/chow.hpp"
#include "equichow/report.hpp"

namespace equichow {

// Lattice symmetry of the plane fan: an integral character-lattice map that
// permutes the fan's charts. Used to spell out the symmetric orbit of the
// reference relations.
struct PlaneSymmetry {
    long long m[2][2] = {{1, 0}, {0, 1}};  // character map, column action
    std::vector<int> chart_perm;

    Character apply(Character chi) const {
        return {m[0][0] * chi.c1 + m[0][1] * chi.c2, m[1][0] * chi.c1 + m[1][1] * chi.c2};
    }
    Cocharacter apply_ray(Cocharacter w) const {
        // inverse transpose, determinant is +-1
        long long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        long long a = m[1][1] / det, b = -m[1][0] / det, c = -m[0][1] / det, d = m[0][0] / det;
        return {a * w.w1 + b * w.w2, c * w.w1 + d * w.w2};
    }
    friend bool operator<(const PlaneSymmetry& x, const PlaneSymmetry& y) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (x.m[i][j] != y.m[i][j]) return x.m[i][j] < y.m[i][j];
        return false;
    }
    static PlaneSymmetry compose(const PlaneSymmetry& f, const PlaneSymmetry& g, const Fan& fan) {
        PlaneSymmetry h;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                h.m[i][j] = 0;
                for (int k = 0; k < 2; ++k) h.m[i][j] += f.m[i][k] * g.m[k][j];
            }
        h.derive_chart_perm(fan);
        return h;
    }
    void derive_chart_perm(const Fan& fan) {
        chart_perm.assign(static_cast<std::size_t>(fan.size()), -1);
        for (int j = 0; j < fan.size(); ++j) {
            Cocharacter r1 = apply_ray(fan.rays[static_cast<std::size_t>(j)]);
            Cocharacter r2 = apply_ray(fan.rays[static_cast<std::size_t>(fan.next(j))]);
            for (int p = 0; p < fan.size(); ++p) {
                Cocharacter s1 = fan.rays[static_cast<std::size_t>(p)];
                Cocharacter s2 = fan.rays[static_cast<std::size_t>(fan.next(p))];
                if ((r1 == s1 && r2 == s2) || (r1 == s2 && r2 == s1)) chart_perm[static_cast<std::size_t>(j)] = p;
            }
            if (chart_perm[static_cast<std::size_t>(j)] < 0)
                throw InternalInconsistency("PlaneSymmetry: map does not permute the fan");
        }
    }
    MultiStaircase apply(const Fan& fan, const MultiStaircase& z) const {
        std::vector<std::map<int, std::set<int>>> cells(static_cast<std::size_t>(fan.size()));
        for (int j = 0; j < fan.size(); ++j) {
            const Chart& src = fan.charts[static_cast<std::size_t>(j)];
            int p = chart_perm[static_cast<std::size_t>(j)];
            const Chart& dst = fan.charts[static_cast<std::size_t>(p)];
            long long det = dst.u.c1 * dst.v.c2 - dst.u.c2 * dst.v.c1;
            for (auto [a, b] : z.chart[static_cast<std::size_t>(j)].cells()) {
                Character chi = apply(static_cast<long long>(a) * src.u +
                                      static_cast<long long>(b) * src.v);
                long long na = (chi.c1 * dst.v.c2 - chi.c2 * dst.v.c1) / det;
                long long nb = (dst.u.c1 * chi.c2 - dst.u.c2 * chi.c1) / det;
                if (na < 0 || nb < 0)
                    throw InternalInconsistency("PlaneSymmetry: image cell left the first quadrant");
                cells[static_cast<std::size_t>(p)][static_cast<int>(na)].insert(static_cast<int>(nb));
            }
        }
        MultiStaircase out;
        out.chart.resize(static_cast<std::size_t>(fan.size()));
        for (int p = 0; p < fan.size(); ++p) {
            std::vector<int> heights;
            for (auto& [a, bs] : cells[static_cast<std::size_t>(p)]) {
                if (a != static_cast<int>(heights.size()))
                    throw InternalInconsistency("PlaneSymmetry: image is not a staircase");
                heights.push_back(static_cast<int>(bs.size()));
            }
            out.chart[static_cast<std::size_t>(p)] = Staircase(heights);
        }
        return out;
    }
};

// The full symmetry group of the reference plane generated by the two
// coordinate exchanges.
inline std::vector<PlaneSymmetry> plane_symmetries(const Fan& p2) {
    PlaneSymmetry id;
    id.derive_chart_perm(p2);
    PlaneSymmetry s12;  // t1 -> 1/t1, t2 -> t2/t1
    s12.m[0][0] = -1;
    s12.m[0][1] = -1;
    s12.m[1][0] = 0;
    s12.m[1][1] = 1;
    s12.derive_chart_perm(p2);
    PlaneSymmetry s23;  // exchange t1 and t2
    s23.m[0][0] = 0;
    s23.m[0][1] = 1;
    s23.m[1][0] = 1;
    s23.m[1][1] = 0;
    s23.derive_chart_perm(p2);
    std::set<PlaneSymmetry> group{id, s12, s23};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<PlaneSymmetry> cur(group.begin(), group.end());
        for (const auto& f : cur)
            for (const auto& g : cur)
                if (group.insert(PlaneSymmetry::compose(f, g, p2)).second) grew = true;
    }
    return {group.begin(), group.end()};
}

struct VerifyItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    bool pass = true;
    std::vector<VerifyItem> items;

    void add(std::string name, bool ok, std::string detail = "") {
        pass &= ok;
        items.push_back({std::move(name), ok, std::move(detail)});
    }
    Json to_json() const {
        Json j;
        j["pass"] = pass;
        Json arr = Json::array();
        for (const VerifyItem& it : items) {
            Json e;
            e["name"] = it.name;
            e["pass"] = it.pass;
            if (!it.detail.empty()) e["detail"] = it.detail;
            arr.push_back(std::move(e));
        }
        j["checks"] = arr;
        return j;
    }
};

namespace refexample {

struct NamedRelation {
    std::string name;
    std::map<std::string, long long> coeffs;
    std::vector<std::pair<Character, int>> modulus;  // linear factor, multiplicity
};

inline std::vector<NamedRelation> reference_relations() {
    const Character t1{1, 0}, t2{0, 1}, u{1, -1};  // u = t1 - t2
    return {
        {"a + a13 - d - d13 = 0 (t2^2)", {{"A", 1}, {"A13", 1}, {"D", -1}, {"D13", -1}}, {{t2, 2}}},
        {"d - d13 = 0 (t2)", {{"D", 1}, {"D13", -1}}, {{t2, 1}}},
        {"a - a13 = 0 (t2)", {{"A", 1}, {"A13", -1}}, {{t2, 1}}},
        {"a - b = 0 (2t1 - t2)", {{"A", 1}, {"B", -1}}, {{Character{2, -1}, 1}}},
        {"b - b13 = 0 (t2)", {{"B", 1}, {"B13", -1}}, {{t2, 1}}},
        {"-b + 3c - 3c12 + b12 = 0 (t1^3)",
         {{"B", -1}, {"C", 3}, {"C12", -3}, {"B12", 1}},
         {{t1, 3}}},
        {"-b + c + c12 - b12 = 0 (t1^2)",
         {{"B", -1}, {"C", 1}, {"C12", 1}, {"B12", -1}},
         {{t1, 2}}},
        {"3b - c + c12 - 3b12 = 0 (t1)",
         {{"B", 3}, {"C", -1}, {"C12", 1}, {"B12", -3}},
         {{t1, 1}}},
        {"b - b23 = 0 (t2 - t1)", {{"B", 1}, {"B23", -1}}, {{u, 1}}},
        {"c - d + c23 - d23 = 0 ((t1 - t2)^2)",
         {{"C", 1}, {"D", -1}, {"C23", 1}, {"D23", -1}},
         {{u, 2}}},
        {"c + d - c23 - d23 = 0 (t1 - t2)",
         {{"C", 1}, {"D", 1}, {"C23", -1}, {"D23", -1}},
         {{u, 1}}},
        {"c23 - d23 = 0 (t1 - t2)", {{"C23", 1}, {"D23", -1}}, {{u, 1}}},
        {"c - c13 = 0 (t2)", {{"C", 1}, {"C13", -1}}, {{t2, 1}}},
        {"d - 2e + d12 = 0 (t1^2)", {{"D", 1}, {"E", -2}, {"D12", 1}}, {{t1, 2}}},
        {"d - d12 = 0 (t1)", {{"D", 1}, {"D12", -1}}, {{t1, 1}}},
    };
}

// reference relevance array, labels read as cocharacters (a, b)
inline std::map<std::string, std::map<Cocharacter, int>> reference_array() {
    return {
        {"A", {{{1, 0}, 2}, {{0, 1}, 2}, {{2, 1}, 1}, {{1, 2}, 1}}},
        {"B", {{{1, 0}, 1}, {{0, 1}, 3}, {{1, 1}, 1}, {{1, 2}, 1}}},
        {"C", {{{1, 0}, 1}, {{0, 1}, 3}, {{1, 1}, 2}}},
        {"D", {{{1, 0}, 2}, {{0, 1}, 2}, {{1, 1}, 2}}},
        {"E", {{{1, 0}, 2}, {{0, 1}, 2}, {{1, 1}, 2}}},
    };
}

struct OrbitRelation {
    std::vector<std::pair<int, long long>> coeffs;  // (global point, constant)
    std::vector<std::pair<Character, int>> modulus;
    std::string origin;
};

}  // namespace refexample

// Verifies the full worked example: the plane at length 3. Checks the
// relevance array per orbit representative, the 15 reference relation
// families with their symmetric orbit against the computed ring, degreewise
// equality with the solution space of the relation system, and a seeded ring
// closure sample. The sampling seed comes from EQUICHOW_SEED when set.
inline VerifyReport verify_paper_example(int jobs = 1) {
    VerifyReport report;
    Fan p2 = fan_p2();
    EquivariantChow ring(p2, 3, jobs);
    const auto& table = ring.table();
    report.add("fixed points of the length-3 plane", table.npoints() == 22,
               "count = " + std::to_string(table.npoints()));

    // base points and their symmetric images
    auto mk = [&](std::vector<std::vector<int>> heights) {
        MultiStaircase z;
        for (auto& h : heights) z.chart.push_back(Staircase(std::move(h)));
        z.chart.resize(p2.size());
        return z;
    };
    std::map<std::string, MultiStaircase> base{{"A", mk({{2, 1}})},
                                               {"B", mk({{3}})},
                                               {"C", mk({{2}, {1}})},
                                               {"D", mk({{2}, {}, {1}})},
                                               {"E", mk({{1}, {1}, {1}})}};
    auto syms = plane_symmetries(p2);
    PlaneSymmetry s12, s13, s23;
    {
        // recover the three transpositions by their chart permutations
        for (const auto& g : syms) {
            if (g.chart_perm == std::vector<int>{1, 0, 2}) s12 = g;
            if (g.chart_perm == std::vector<int>{2, 1, 0}) s13 = g;
            if (g.chart_perm == std::vector<int>{0, 2, 1} &&
                g.apply(Character{1, 0}) == Character{0, 1})
                s23 = g;
        }
    }
    report.add("symmetry group of the plane has order 6", syms.size() == 6,
               "order = " + std::to_string(syms.size()));

    std::map<std::string, int> named;
    for (const auto& [name, z] : base) named[name] = table.index_of(z);
    for (const auto& [name, z] : base) {
        named[name + "12"] = table.index_of(s12.apply(p2, z));
        named[name + "13"] = table.index_of(s13.apply(p2, z));
        named[name + "23"] = table.index_of(s23.apply(p2, z));
    }

    // (i) relevance array: subtorus set and invariant dimensions per
    // representative; labels (a,b) match the printed array as literal
    // cocharacters
    auto fixture = refexample::reference_array();
    for (const auto& [name, want] : fixture) {
        std::map<Cocharacter, int> got;
        for (Character chi : table.tangent[static_cast<std::size_t>(named[name])])
            got[Subtorus::canonical({-chi.c2, chi.c1}).w] += 1;
        bool same = got == want;
        std::multiset<int> got_dims, want_dims;
        for (auto& [w, m] : got) got_dims.insert(m);
        for (auto& [w, m] : want) want_dims.insert(m);
        report.add("relevance array at " + name + " (labels as cocharacters)", same);
        report.add("relevance dimensions at " + name, got_dims == want_dims);
    }

    // the narrative component: points A, A13, D, D13 under t^(1,0) with Euler
    // classes t2^2, t2^2, -t2^2, -t2^2
    {
        bool ok = false;
        std::string detail;
        for (std::size_t s = 0; s < ring.subtori().size(); ++s) {
            if (!(ring.subtori()[s].w == Cocharacter{1, 0})) continue;
            for (const FixedComponent& c : ring.components_by_subtorus()[s]) {
                if (c.local_index(named["A"]) < 0) continue;
                std::set<int> pts(c.points.begin(), c.points.end());
                ok = pts == std::set<int>{named["A"], named["A13"], named["D"], named["D13"]};
                SPoly t2sq = SPoly::monomial(0, 2);
                ok &= c.euler[static_cast<std::size_t>(c.local_index(named["A"]))] == t2sq;
                ok &= c.euler[static_cast<std::size_t>(c.local_index(named["A13"]))] == t2sq;
                ok &= c.euler[static_cast<std::size_t>(c.local_index(named["D"]))] ==
                      Rational(-1) * t2sq;
                ok &= c.euler[static_cast<std::size_t>(c.local_index(named["D13"]))] ==
                      Rational(-1) * t2sq;
                detail = "dimension " + std::to_string(c.dimension);
            }
        }
        report.add("component {A, A13, D, D13} under t^(1,0) with Euler classes +-t2^2", ok,
                   detail);
    }

    // (ii) the reference relations and their symmetric orbit
    std::vector<refexample::OrbitRelation> orbit;
    {
        std::set<std::pair<std::vector<std::pair<int, long long>>, std::string>> seen;
        for (const auto& rel : refexample::reference_relations()) {
            for (const PlaneSymmetry& g : syms) {
                refexample::OrbitRelation r;
                r.origin = rel.name;
                for (const auto& [label, coef] : rel.coeffs) {
                    int src = named.at(label);
                    MultiStaircase img = g.apply(p2, table.points[static_cast<std::size_t>(src)]);
                    r.coeffs.push_back({table.index_of(img), coef});
                }
                std::sort(r.coeffs.begin(), r.coeffs.end());
                SPoly mod(1);
                for (auto [chi, mult] : rel.modulus) {
                    Character img = g.apply(chi);
                    long long gq = gcd_ll(img.c1, img.c2);
                    img = {img.c1 / gq, img.c2 / gq};
                    if ((img.c1 != 0 ? img.c1 : img.c2) < 0) img = -img;
                    r.modulus.push_back({img, mult});
                    mod = mod * linear_form(img).pow(mult);
                }
                std::sort(r.modulus.begin(), r.modulus.end(),
                          [](auto& x, auto& y) { return x.first < y.first; });
                if (seen.insert({r.coeffs, mod.str()}).second) orbit.push_back(std::move(r));
            }
        }
    }
    report.add("symmetric orbit of the 15 relation families",
               orbit.size() >= 15, "distinct relations = " + std::to_string(orbit.size()));

    auto relation_holds_globally = [&](const refexample::OrbitRelation& r, const PointTuple& t) {
        SPoly sum;
        for (auto [p, coef] : r.coeffs)
            sum += Rational(coef) * t.at[static_cast<std::size_t>(p)];
        std::vector<Character> factors;
        for (auto [chi, mult] : r.modulus)
            for (int i = 0; i < mult; ++i) factors.push_back(chi);
        return divide_exact(sum, factors).has_value();
    };

    const std::vector<int> expected_dims{1, 4, 12, 26, 45, 66, 88};
    bool all_relations_hold = true;
    std::string failing;
    for (int k = 0; k <= 6; ++k) {
        for (const PointTuple& t : ring.graded_basis(k).tuples())
            for (const auto& r : orbit)
                if (!relation_holds_globally(r, t)) {
                    all_relations_hold = false;
                    if (failing.empty()) failing = r.origin + " at degree " + std::to_string(k);
                }
    }
    report.add("every reference relation (with its orbit) holds on the computed ring",
               all_relations_hold, failing);

    // (iii) degreewise solution space of the reference system
    for (int k = 0; k <= 6; ++k) {
        const std::size_t ncols = tuple_coords(table.npoints(), k);
        QMat constraints;
        for (const auto& r : orbit) {
            for (auto [chi, mult] : r.modulus) {
                // divisibility by chi^mult: the mult low-order coefficients of
                // sum_q coef_q alpha_q along chi must vanish
                QMat rows(static_cast<std::size_t>(mult), QVec(ncols, Rational(0)));
                for (int a = k; a >= 0; --a) {
                    SPoly mono = SPoly::monomial(a, k - a);
                    auto locs = low_order_coeffs(mono, chi, mult, k);
                    for (int j = 0; j < mult; ++j) {
                        if (locs[static_cast<std::size_t>(j)].is_zero()) continue;
                        for (auto [p, coef] : r.coeffs)
                            rows[static_cast<std::size_t>(j)][tuple_col(k, p, a)] +=
                                Rational(coef) * locs[static_cast<std::size_t>(j)];
                    }
                }
                for (auto& row : rows) constraints.push_back(std::move(row));
            }
        }
        QMat sol = nullspace(std::move(constraints), ncols);
        std::size_t dim_solution = sol.size();
        const GradedSubspace& v = ring.graded_basis(k);
        bool dims_ok = static_cast<int>(dim_solution) == expected_dims[static_cast<std::size_t>(k)] &&
                       v.dim() == dim_solution;
        report.add("degree " + std::to_string(k) + ": solution space and computed ring dimensions",
                   dims_ok,
                   "solution = " + std::to_string(dim_solution) +
                       ", computed = " + std::to_string(v.dim()) +
                       ", expected = " + std::to_string(expected_dims[static_cast<std::size_t>(k)]));
        // containment: computed basis satisfies the whole system
        bool contained = true;
        for (const PointTuple& t : v.tuples())
            for (const auto& r : orbit) contained &= relation_holds_globally(r, t);
        report.add("degree " + std::to_string(k) + ": computed basis satisfies the system",
                   contained);
    }

    // sampled ring closure; EQUICHOW_SEED pins the sample
    {
        unsigned long long seed = 0x5eed5eedULL;
        if (const char* env = std::getenv("EQUICHOW_SEED")) seed = std::strtoull(env, nullptr, 10);
        std::mt19937_64 rng(seed);
        std::vector<PointTuple> pool;
        for (int k = 0; k <= 3; ++k)
            for (const PointTuple& t : ring.graded_basis(k).tuples()) pool.push_back(t);
        bool closed = true;
        for (int iter = 0; iter < 25 && closed; ++iter) {
            const PointTuple& x = pool[rng() % pool.size()];
            const PointTuple& y = pool[rng() % pool.size()];
            closed = ring.membership(x * y).member;
        }
        report.add("sampled products of ring elements stay in the ring", closed,
                   "seed = " + std::to_string(seed));
    }
    return report;
}

}  // namespace equichow
