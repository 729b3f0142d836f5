// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "equichow/chow.hpp"
#include "equichow/verify.hpp"
#include "oracles.hpp"

using namespace equichow;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    double limit_seconds;
    std::chrono::steady_clock::time_point start;
    bool ok = true;
    std::string detail;

    Criterion(std::string n, double limit) : name(std::move(n)), limit_seconds(limit) {
        start = std::chrono::steady_clock::now();
    }
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
    void finish() {
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (limit_seconds > 0 && secs > limit_seconds) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + std::string("time limit exceeded");
        }
        std::printf("[%s] %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", name.c_str(), secs,
                    detail.empty() ? "" : ("  -- " + detail).c_str());
        if (!ok) ++failures;
    }
};

MultiStaircase ms(const Fan& fan, std::vector<std::vector<int>> heights) {
    MultiStaircase z;
    for (auto& h : heights) z.chart.push_back(Staircase(std::move(h)));
    z.chart.resize(fan.size());
    return z;
}

void criterion1_relevance_array() {
    Criterion c("criterion 1: relevance array of the worked plane example", 10.0);
    Fan p2 = fan_p2();
    FixedPointTable table(p2, 3);
    std::map<std::string, std::multiset<int>> want{{"A", {2, 2, 1, 1}},
                                                   {"B", {1, 3, 1, 1}},
                                                   {"C", {1, 3, 2}},
                                                   {"D", {2, 2, 2}},
                                                   {"E", {2, 2, 2}}};
    std::map<std::string, MultiStaircase> reps{{"A", ms(p2, {{2, 1}})},
                                               {"B", ms(p2, {{3}})},
                                               {"C", ms(p2, {{2}, {1}})},
                                               {"D", ms(p2, {{2}, {}, {1}})},
                                               {"E", ms(p2, {{1}, {1}, {1}})}};
    auto fixture = refexample::reference_array();
    for (const auto& [name, z] : reps) {
        std::map<Cocharacter, int> got;
        for (Character chi : table.tangent[static_cast<std::size_t>(table.index_of(z))])
            got[Subtorus::canonical({-chi.c2, chi.c1}).w] += 1;
        std::multiset<int> dims;
        for (auto& [w, m] : got) dims.insert(m);
        c.expect(dims == want[name], "dimension multiset at " + name);
        c.expect(got == fixture[name], "labeled subtorus array at " + name);
    }
    c.finish();
}

void criterion2_relation_system() {
    Criterion c("criterion 2: relation system of the worked plane example", 60.0);
    VerifyReport rep = verify_paper_example();
    for (const VerifyItem& item : rep.items)
        c.expect(item.pass, item.name + (item.detail.empty() ? "" : " [" + item.detail + "]"));
    c.finish();
}

void criterion3_betti_cross_validation() {
    Criterion c("criterion 3: Betti numbers against the generating function", 30.0);
    struct Case {
        Fan fan;
        int dmax;
    };
    std::vector<Case> cases{{fan_p2(), 4}, {fan_p1xp1(), 3}, {fan_hirzebruch1(), 3}};
    for (const Case& cs : cases) {
        int b2 = cs.fan.size() - 2;
        auto rows = gottsche_poincare(1, b2, 1, cs.dmax);
        for (int d = 0; d <= cs.dmax; ++d) {
            EquivariantChow ring(cs.fan, d);
            auto betti = ring.betti_bb();
            c.expect(betti == rows[static_cast<std::size_t>(d)],
                     cs.fan.name + " d=" + std::to_string(d));
        }
    }
    EquivariantChow p2d2(fan_p2(), 2);
    c.expect(p2d2.betti_bb() == std::vector<long long>{1, 2, 3, 2, 1}, "P2 d=2 spot value");
    EquivariantChow p2d3(fan_p2(), 3);
    c.expect(p2d3.betti_bb() == std::vector<long long>{1, 2, 5, 6, 5, 2, 1}, "P2 d=3 spot value");
    EquivariantChow qd2(fan_p1xp1(), 2);
    c.expect(qd2.betti_bb() == std::vector<long long>{1, 3, 6, 3, 1}, "P1xP1 d=2 spot value");
    c.finish();
}

void criterion4_d1_degeneration() {
    Criterion c("criterion 4: length-1 ring is the piecewise polynomial space", 30.0);
    for (const Fan& fan : {fan_p2(), fan_p1xp1(), fan_hirzebruch1()}) {
        EquivariantChow ring(fan, 1);
        for (int k = 0; k <= 3; ++k) {
            GradedSubspace expect = oracles::piecewise_polynomials(ring.table(), k);
            c.expect(ring.graded_basis(k).basis == expect.basis,
                     fan.name + " degree " + std::to_string(k));
        }
    }
    EquivariantChow p2(fan_p2(), 1);
    ChowPresentation pres = p2.chow_presentation(3);
    c.expect(pres.dims == std::vector<int>{1, 1, 1, 0}, "A*(P2) graded dimensions");
    bool hh_nonzero = false, hhh_zero = true;
    for (const auto& prod : pres.products) {
        if (prod.deg_a == 1 && prod.deg_b == 1)
            hh_nonzero = !prod.coeffs.empty() && !prod.coeffs[0].is_zero();
        if (prod.deg_a + prod.deg_b == 3) hhh_zero &= prod.coeffs.empty();
    }
    c.expect(hh_nonzero, "h*h nonzero");
    c.expect(hhh_zero, "h*h*h lands in the vanishing degree");
    c.finish();
}

void criterion5_freeness_and_duality() {
    Criterion c("criterion 5: freeness and duality of the computed rings", 0.0);
    struct Case {
        Fan fan;
        int dmax_betti;
        int dmax_freeness;
    };
    // The d=4 plane ring is exact but slow; EQUICHOW_STRESS=1 runs it too.
    bool stress = std::getenv("EQUICHOW_STRESS") != nullptr;
    std::vector<Case> cases{{fan_p2(), 4, stress ? 4 : 3}, {fan_p1xp1(), 3, 3},
                            {fan_hirzebruch1(), 3, 3}};
    for (const Case& cs : cases) {
        for (int d = 1; d <= cs.dmax_betti; ++d) {
            EquivariantChow ring(cs.fan, d);
            auto b = ring.betti_bb();
            long long total = 0;
            for (long long x : b) total += x;
            c.expect(total == ring.table().npoints(),
                     cs.fan.name + " d=" + std::to_string(d) + ": Betti sum");
            bool symmetric = true;
            for (std::size_t k = 0; k < b.size(); ++k)
                symmetric &= b[k] == b[b.size() - 1 - k];
            c.expect(symmetric, cs.fan.name + " d=" + std::to_string(d) + ": Betti symmetry");
            if (d <= cs.dmax_freeness) {
                for (int k = 0; k <= 2 * d; ++k) {
                    long long expectdim = 0;
                    for (int j = 0; j <= std::min<int>(k, 2 * d); ++j)
                        expectdim += b[static_cast<std::size_t>(j)] * (k - j + 1);
                    c.expect(static_cast<long long>(ring.graded_basis(k).dim()) == expectdim,
                             cs.fan.name + " d=" + std::to_string(d) + " k=" + std::to_string(k) +
                                 ": freeness count");
                }
            }
        }
    }
    c.finish();
}

void criterion6_tangent_weights() {
    Criterion c("criterion 6: tangent characters and the Hom-space oracle", 30.0);
    for (const Fan& fan : {fan_p2(), fan_p1xp1()}) {
        for (int d = 1; d <= 3; ++d) {
            FixedPointTable table(fan, d);
            for (int i = 0; i < table.npoints(); ++i) {
                const auto& chars = table.tangent[static_cast<std::size_t>(i)];
                bool ok = static_cast<int>(chars.size()) == 2 * d;
                for (Character chi : chars) ok &= !chi.is_zero();
                c.expect(ok, fan.name + " " + table.ids[static_cast<std::size_t>(i)]);
                if (!ok) break;
            }
        }
    }
    Fan p2 = fan_p2();
    for (int n = 1; n <= 4; ++n)
        for (const Partition& p : partitions_of(n))
            for (const Chart& chart : p2.charts) {
                auto fast = tangent_characters(Staircase(p.parts), chart);
                auto slow = oracles::hom_tangent_characters(Staircase(p.parts), chart);
                std::sort(fast.begin(), fast.end());
                std::sort(slow.begin(), slow.end());
                c.expect(fast == slow, "oracle mismatch at staircase " + p.str());
            }
    c.finish();
}

void criterion7_ring_closure() {
    Criterion c("criterion 7: 100 seeded random products stay in the ring", 0.0);
    EquivariantChow ring(fan_p2(), 3);
    std::vector<PointTuple> pool;
    for (int k = 0; k <= 2; ++k)
        for (const PointTuple& t : ring.graded_basis(k).tuples()) pool.push_back(t);
    std::mt19937_64 rng(0x5eed5eedULL);
    SPoly t1 = SPoly::monomial(1, 0), t2 = SPoly::monomial(0, 1);
    auto random_combination = [&]() {
        // sum of two basis elements scaled by random degree-one forms
        PointTuple acc(pool[0].size());
        for (int parts = 0; parts < 2; ++parts) {
            SPoly s1 = Rational(static_cast<long long>(rng() % 5) - 2) * t1 +
                       Rational(static_cast<long long>(rng() % 5) - 2) * t2;
            acc = acc + s1 * pool[rng() % pool.size()];
        }
        return acc;
    };
    int checked = 0;
    for (int iter = 0; iter < 100; ++iter) {
        PointTuple x = random_combination();
        PointTuple y = random_combination();
        c.expect(ring.membership(x).member && ring.membership(y).member,
                 "factor escaped at iteration " + std::to_string(iter));
        PointTuple xy = x * y;
        bool member = ring.membership(xy).member;
        c.expect(member, "product escaped at iteration " + std::to_string(iter));
        ++checked;
        if (!member) break;
    }
    c.expect(checked == 100 || !c.ok, "completed all samples");
    c.finish();
}

void criterion8_full_pipeline() {
    Criterion c("criterion 8: full plane pipeline at length 3", 60.0);
    EquivariantChow ring(fan_p2(), 3);
    c.expect(ring.table().npoints() == 22, "fixed point count");
    int relations = 0;
    for (const auto& per : ring.systems_by_subtorus())
        for (const auto& sys : per) relations += static_cast<int>(sys.relations.size());
    c.expect(relations > 0, "congruence relations emitted");
    auto betti = ring.betti_bb();
    c.expect(betti == std::vector<long long>{1, 2, 5, 6, 5, 2, 1}, "Betti numbers");
    ChowPresentation pres = ring.chow_presentation();
    c.expect(pres.dims == std::vector<int>{1, 2, 5, 6, 5, 2, 1}, "quotient dimensions");
    long long total = 0;
    for (int x : pres.dims) total += x;
    c.expect(total == 22, "dimension sum");
    c.expect(!pres.products.empty(), "structure constants computed");
    // the product pairing into the top degree is perfect
    auto coeff_on_top = [&](int da, int ia, int db, int ib) -> Rational {
        if (da > db || (da == db && ia > ib)) {
            std::swap(da, db);
            std::swap(ia, ib);
        }
        for (const auto& p : pres.products)
            if (p.deg_a == da && p.idx_a == ia && p.deg_b == db && p.idx_b == ib)
                return p.coeffs.empty() ? Rational() : p.coeffs[0];
        return Rational();
    };
    for (int k = 0; k <= pres.cap; ++k) {
        int nk = pres.dims[static_cast<std::size_t>(k)];
        QMat pairing(static_cast<std::size_t>(nk), QVec(static_cast<std::size_t>(nk)));
        for (int i = 0; i < nk; ++i)
            for (int j = 0; j < nk; ++j)
                pairing[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    coeff_on_top(k, i, pres.cap - k, j);
        c.expect(rank(pairing) == static_cast<std::size_t>(nk),
                 "top pairing degenerate at degree " + std::to_string(k));
    }
    c.finish();
}

}  // namespace

int main() {
    criterion1_relevance_array();
    criterion2_relation_system();
    criterion3_betti_cross_validation();
    criterion4_d1_degeneration();
    criterion5_freeness_and_duality();
    criterion6_tangent_weights();
    criterion7_ring_closure();
    criterion8_full_pipeline();
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
