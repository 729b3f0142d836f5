#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "equichow/fixed_locus.hpp"
#include "equichow/qlinalg.hpp"

namespace equichow {

struct RankMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

// Homogeneous class on a component, given by its values at the component's
// fixed points (local order).
struct Generator {
    int degree = 0;
    std::vector<SPoly> values;
};

struct GeneratorSet {
    std::vector<Generator> gens;  // always contains the all-ones tuple first
};

// One congruence: sum_q coeffs[q] * alpha_q == 0 modulo the modulus. Stored
// with primitive integer coefficients and the modulus as a monic-content
// product of canonical-sign linear factors.
struct Relation {
    std::vector<SPoly> coeffs;                         // local point order
    std::vector<std::pair<Character, int>> mod_factors;  // canonical, multiplicity
    SPoly modulus;
};

struct CongruenceSystem {
    std::vector<Relation> relations;
};

namespace detail {

// elementary symmetric polynomials of the linear forms of chars: c[0..n]
inline std::vector<SPoly> elementary_symmetric(const std::vector<Character>& chars) {
    std::vector<SPoly> c{SPoly(1)};
    for (Character chi : chars) {
        SPoly x = linear_form(chi);
        c.push_back(SPoly());
        for (std::size_t j = c.size() - 1; j >= 1; --j) c[j] = c[j] + x * c[j - 1];
    }
    return c;
}

// generators of one factor, as evaluation rules indexed by factor coordinates
struct FactorGenerator {
    int degree = 0;
    std::map<long long, Partition> lambda;  // GradedHilb: weight -> partition
    std::vector<int> powers;                // LineBlocks: per-block exponent
};

inline std::vector<FactorGenerator> factor_generators(const Factor& f) {
    std::vector<FactorGenerator> out;
    if (f.kind == Factor::Kind::ReducedPoint) {
        out.push_back({});
        return out;
    }
    if (f.kind == Factor::Kind::LineBlocks) {
        std::vector<int> m(f.blocks.size(), 0);
        auto rec = [&](auto&& self, std::size_t j, int deg) -> void {
            if (j == f.blocks.size()) {
                FactorGenerator g;
                g.degree = deg;
                g.powers = m;
                out.push_back(std::move(g));
                return;
            }
            for (int e = 0; e <= f.blocks[j].second; ++e) {
                m[j] = e;
                self(self, j + 1, deg + e);
            }
            m[j] = 0;
        };
        rec(rec, 0, 0);
        return out;
    }
    // GradedHilb: one Schur partition per weight, inside the
    // (dim piece - H) x H box
    std::vector<long long> weights;
    std::vector<std::vector<Partition>> choices;
    for (const auto& [n, mult] : f.hilbert) {
        int dim = static_cast<int>(f.pieces.at(n).size());
        weights.push_back(n);
        choices.push_back(partitions_in_box(dim - mult, mult));
    }
    std::map<long long, Partition> cur;
    auto rec = [&](auto&& self, std::size_t j, int deg) -> void {
        if (j == weights.size()) {
            FactorGenerator g;
            g.degree = deg;
            g.lambda = cur;
            out.push_back(std::move(g));
            return;
        }
        for (const Partition& lam : choices[j]) {
            if (lam.parts.empty())
                cur.erase(weights[j]);
            else
                cur[weights[j]] = lam;
            self(self, j + 1, deg + lam.size());
        }
        cur.erase(weights[j]);
    };
    rec(rec, 0, 0);
    return out;
}

inline SPoly evaluate_factor_generator(const Factor& f, const FactorGenerator& g,
                                       const FactorCoordinate& coord) {
    if (f.kind == Factor::Kind::ReducedPoint) return SPoly(1);
    if (f.kind == Factor::Kind::LineBlocks) {
        SPoly v(1);
        for (std::size_t j = 0; j < f.blocks.size(); ++j) {
            if (g.powers[j] == 0) continue;
            auto [n, dj] = f.blocks[j];
            (void)n;
            long long l = coord.l[j];
            long long r = dj - l;
            long long scale = l * (l + 1) / 2 - r * (r + 1) / 2;
            SPoly cj = Rational(scale) * linear_form(f.line_chi);
            v = v * cj.pow(g.powers[j]);
        }
        return v;
    }
    SPoly v(1);
    for (const auto& [n, lam] : g.lambda) {
        const auto& selected = coord.selected.at(n);
        int rows = static_cast<int>(f.pieces.at(n).size()) - static_cast<int>(selected.size());
        v = v * schur_det(lam.parts, elementary_symmetric(selected), rows);
    }
    return v;
}

}  // namespace detail

// All products of one generator per factor, evaluated at the component's
// points; literal duplicates pruned, the all-ones tuple kept first.
inline GeneratorSet component_generators(const FixedComponent& c) {
    std::vector<std::vector<detail::FactorGenerator>> per_factor;
    for (const Factor& f : c.factors) per_factor.push_back(detail::factor_generators(f));

    GeneratorSet out;
    std::set<std::vector<SPoly>> seen;
    std::vector<std::size_t> choice(c.factors.size(), 0);
    auto emit = [&]() {
        Generator g;
        for (std::size_t fi = 0; fi < c.factors.size(); ++fi)
            g.degree += per_factor[fi][choice[fi]].degree;
        g.values.reserve(c.points.size());
        for (std::size_t pi = 0; pi < c.points.size(); ++pi) {
            SPoly v(1);
            for (std::size_t fi = 0; fi < c.factors.size(); ++fi)
                v = v * detail::evaluate_factor_generator(c.factors[fi], per_factor[fi][choice[fi]],
                                                          c.coords[pi][fi]);
            if (!v.is_homogeneous_of_degree(g.degree))
                throw InternalInconsistency("component_generators: non-homogeneous value");
            g.values.push_back(std::move(v));
        }
        if (seen.insert(g.values).second) out.gens.push_back(std::move(g));
    };
    if (c.factors.empty()) {
        Generator one;
        one.values.assign(c.points.size(), SPoly(1));
        out.gens.push_back(std::move(one));
        return out;
    }
    auto rec = [&](auto&& self, std::size_t fi) -> void {
        if (fi == c.factors.size()) {
            emit();
            return;
        }
        for (choice[fi] = 0; choice[fi] < per_factor[fi].size(); ++choice[fi]) self(self, fi + 1);
        choice[fi] = 0;
    };
    rec(rec, 0);
    return out;
}

inline GeneratorSet grassmann_factor_generators(const Factor& f, const FixedComponent& c,
                                                std::size_t factor_index) {
    GeneratorSet out;
    for (const auto& g : detail::factor_generators(f)) {
        Generator gen;
        gen.degree = g.degree;
        for (std::size_t pi = 0; pi < c.points.size(); ++pi)
            gen.values.push_back(detail::evaluate_factor_generator(f, g, c.coords[pi][factor_index]));
        out.gens.push_back(std::move(gen));
    }
    return out;
}
inline GeneratorSet line_factor_generators(const Factor& f, const FixedComponent& c,
                                           std::size_t factor_index) {
    return grassmann_factor_generators(f, c, factor_index);
}

// Bott pairing sum_p alpha_p g_p / e_p, computed as one exact division of
// sum_p alpha_p g_p prod_{q != p} e_q by all Euler factors.
inline std::optional<SPoly> bott_pairing(const FixedComponent& c, const std::vector<SPoly>& alpha,
                                         const std::vector<SPoly>& g) {
    const std::size_t n = c.points.size();
    std::vector<SPoly> prefix(n + 1, SPoly(1)), suffix(n + 1, SPoly(1));
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * c.euler[i];
    for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] * c.euler[i];
    SPoly numer;
    for (std::size_t i = 0; i < n; ++i) numer += alpha[i] * g[i] * prefix[i] * suffix[i + 1];
    std::vector<Character> all_factors;
    for (const auto& fs : c.euler_factors) all_factors.insert(all_factors.end(), fs.begin(), fs.end());
    return divide_exact(numer, all_factors);
}

// One relation per generator; common linear-factor content cancelled from the
// coefficients and the modulus, trivial relations dropped.
inline CongruenceSystem congruence_system(const FixedComponent& c, const GeneratorSet& gens) {
    CongruenceSystem sys;
    const std::size_t n = c.points.size();
    std::vector<SPoly> prefix(n + 1, SPoly(1)), suffix(n + 1, SPoly(1));
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * c.euler[i];
    for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] * c.euler[i];

    std::map<Character, int> full_modulus;
    for (const auto& fs : c.euler_factors)
        for (Character chi : fs) {
            Character canon = chi;
            long long lead = canon.c1 != 0 ? canon.c1 : canon.c2;
            if (lead < 0) canon = -canon;
            long long g = gcd_ll(canon.c1, canon.c2);
            canon = Character{canon.c1 / g, canon.c2 / g};
            full_modulus[canon] += 1;
        }

    std::set<std::pair<std::vector<SPoly>, SPoly>> seen;
    for (const Generator& g : gens.gens) {
        Relation rel;
        for (std::size_t i = 0; i < n; ++i)
            rel.coeffs.push_back(g.values[i] * prefix[i] * suffix[i + 1]);

        bool all_zero = true;
        for (const SPoly& p : rel.coeffs)
            if (!p.is_zero()) all_zero = false;
        if (all_zero) continue;

        std::map<Character, int> mod = full_modulus;
        for (auto& [factor, mult] : mod) {
            int cancel = 0;
            while (cancel < mult) {
                std::vector<SPoly> reduced;
                bool ok = true;
                for (const SPoly& p : rel.coeffs) {
                    auto q = divide_by_linear_form(p, factor);
                    if (!q) {
                        ok = false;
                        break;
                    }
                    reduced.push_back(std::move(*q));
                }
                if (!ok) break;
                rel.coeffs = std::move(reduced);
                ++cancel;
            }
            mult -= cancel;
        }
        int remaining = 0;
        for (auto& [factor, mult] : mod) {
            if (mult > 0) rel.mod_factors.push_back({factor, mult});
            remaining += mult;
        }
        if (remaining == 0) continue;  // unit modulus
        rel.modulus = SPoly(1);
        for (auto [factor, mult] : rel.mod_factors)
            rel.modulus = rel.modulus * linear_form(factor).pow(mult);

        // scale coefficients to a primitive integer vector, leading sign positive
        BigInt num_gcd(0), den_lcm(1);
        for (const SPoly& p : rel.coeffs)
            for (const auto& [e, coef] : p.terms()) {
                num_gcd = BigInt::gcd(num_gcd, coef.num());
                den_lcm = den_lcm / BigInt::gcd(den_lcm, coef.den()) * coef.den();
            }
        Rational scale(den_lcm, num_gcd);
        if (scale.sign() < 0) scale = -scale;
        for (SPoly& p : rel.coeffs) p = scale * p;
        for (const SPoly& p : rel.coeffs) {
            if (p.is_zero()) continue;
            if (p.terms().rbegin()->second.sign() < 0)
                for (SPoly& q : rel.coeffs) q = Rational(-1) * q;
            break;
        }
        if (seen.insert({rel.coeffs, rel.modulus}).second) sys.relations.push_back(std::move(rel));
    }
    return sys;
}

inline bool relation_holds(const Relation& rel, const std::vector<SPoly>& alpha_local) {
    SPoly sum;
    for (std::size_t i = 0; i < rel.coeffs.size(); ++i) sum += rel.coeffs[i] * alpha_local[i];
    std::vector<Character> factors;
    for (auto [chi, mult] : rel.mod_factors)
        for (int i = 0; i < mult; ++i) factors.push_back(chi);
    return divide_exact(sum, factors).has_value();
}

struct MembershipResult {
    bool member = true;
    int subtorus = -1, component = -1, relation = -1;
};

// Poincare coefficients of the length-0..d punctual Hilbert schemes of a
// surface with even Betti numbers (b0, b2, b4): row j lists b_{2k}(H^j),
// k = 0..2j.
inline std::vector<std::vector<long long>> gottsche_poincare(int b0, int b2, int b4, int d) {
    // series in q with polynomial coefficients in y = z^2, truncated at q^d
    std::vector<std::vector<long long>> series(d + 1);
    series[0] = {1};
    auto mul_geometric = [&](int k, int e) {
        // multiply by (1 - y^e q^k)^{-1}
        for (int n = k; n <= d; ++n) {
            const auto src = series[n - k];
            auto& dst = series[n];
            if (dst.size() < src.size() + e) dst.resize(src.size() + e, 0);
            for (std::size_t i = 0; i < src.size(); ++i) dst[i + e] += src[i];
        }
    };
    for (int k = 1; k <= d; ++k) {
        for (int i = 0; i < b0; ++i) mul_geometric(k, k - 1);
        for (int i = 0; i < b2; ++i) mul_geometric(k, k);
        for (int i = 0; i < b4; ++i) mul_geometric(k, k + 1);
    }
    for (int j = 0; j <= d; ++j) series[j].resize(2 * j + 1, 0);
    return series;
}

namespace detail {
inline void run_indexed(int n, int jobs, const std::function<void(int)>& body) {
    if (jobs <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    int workers = std::min(jobs, n);
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&]() {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
        });
    for (auto& th : pool) th.join();
}
}  // namespace detail

struct ChowPresentation {
    int cap = 0;
    std::vector<int> dims;                        // dim A^k, k = 0..cap
    std::vector<int> equivariant_dims;            // dim A_T^k
    std::vector<std::vector<PointTuple>> basis;   // chosen lifts per degree
    struct Product {
        int deg_a = 0, idx_a = 0, deg_b = 0, idx_b = 0;
        std::vector<Rational> coeffs;  // over basis[deg_a + deg_b]
    };
    std::vector<Product> products;
};

// Full localization pipeline for one (fan, d): fixed points, relevant
// subtori, component data, generators, congruence systems, graded bases of
// the equivariant ring, Betti numbers, and the ordinary ring presentation.
class EquivariantChow {
public:
    EquivariantChow(Fan fan, int d, int jobs = 1, bool flip_convention = false)
        : table_(std::move(fan), d, flip_convention), jobs_(std::max(1, jobs)) {
        subtori_ = relevant_subtori(table_);
        comps_.resize(subtori_.size());
        gens_.resize(subtori_.size());
        systems_.resize(subtori_.size());
        detail::run_indexed(static_cast<int>(subtori_.size()), jobs_, [&](int s) {
            comps_[s] = components(table_, subtori_[s]);
            for (const FixedComponent& c : comps_[s]) {
                gens_[s].push_back(component_generators(c));
                systems_[s].push_back(congruence_system(c, gens_[s].back()));
            }
        });
    }

    const Fan& fan() const { return table_.fan; }
    int d() const { return table_.d; }
    const FixedPointTable& table() const { return table_; }
    const std::vector<Subtorus>& subtori() const { return subtori_; }
    const std::vector<std::vector<FixedComponent>>& components_by_subtorus() const { return comps_; }
    const std::vector<std::vector<GeneratorSet>>& generators_by_subtorus() const { return gens_; }
    const std::vector<std::vector<CongruenceSystem>>& systems_by_subtorus() const { return systems_; }

    // degree-k slice of the module of one subtorus: direct sum over components
    GradedSubspace subtorus_slice(int s, int k) const {
        const int npts = table_.npoints();
        QMat global_rows;
        for (std::size_t ci = 0; ci < comps_[s].size(); ++ci) {
            const FixedComponent& c = comps_[s][ci];
            const int local_pts = static_cast<int>(c.points.size());
            QMat local;
            for (const Generator& g : gens_[s][ci].gens) {
                if (g.degree > k) continue;
                int mdeg = k - g.degree;
                for (int a = mdeg; a >= 0; --a) {
                    SPoly mono = SPoly::monomial(a, mdeg - a);
                    PointTuple t(static_cast<std::size_t>(local_pts));
                    for (int i = 0; i < local_pts; ++i)
                        t.at[static_cast<std::size_t>(i)] = mono * g.values[static_cast<std::size_t>(i)];
                    local.push_back(flatten_tuple(t, k));
                }
            }
            rref(local);
            for (const QVec& row : local) {
                QVec g(tuple_coords(npts, k), Rational(0));
                for (int i = 0; i < local_pts; ++i)
                    for (int col = 0; col <= k; ++col)
                        g[static_cast<std::size_t>(c.points[static_cast<std::size_t>(i)]) *
                              (k + 1) +
                          static_cast<std::size_t>(col)] =
                            row[static_cast<std::size_t>(i) * (k + 1) +
                                static_cast<std::size_t>(col)];
                global_rows.push_back(std::move(g));
            }
        }
        // component blocks have disjoint point support; sorting by pivot yields RREF
        std::sort(global_rows.begin(), global_rows.end(), [](const QVec& x, const QVec& y) {
            std::size_t px = 0, py = 0;
            while (px < x.size() && x[px].is_zero()) ++px;
            while (py < y.size() && y[py].is_zero()) ++py;
            return px < py;
        });
        return GradedSubspace{npts, k, std::move(global_rows)};
    }

    const GradedSubspace& graded_basis(int k) const {
        auto it = cache_.find(k);
        if (it != cache_.end()) return it->second;
        GradedSubspace v;
        if (subtori_.empty()) {
            QMat id;
            std::size_t nc = tuple_coords(table_.npoints(), k);
            for (std::size_t i = 0; i < nc; ++i) {
                QVec row(nc, Rational(0));
                row[i] = Rational(1);
                id.push_back(std::move(row));
            }
            v = GradedSubspace{table_.npoints(), k, std::move(id)};
        } else {
            std::vector<GradedSubspace> slices(subtori_.size());
            detail::run_indexed(static_cast<int>(subtori_.size()), jobs_,
                                [&](int s) { slices[s] = subtorus_slice(s, k); });
            v = slices[0];
            for (std::size_t s = 1; s < slices.size(); ++s) v = graded_intersect(v, slices[s]);
        }
        return cache_.emplace(k, std::move(v)).first->second;
    }

    MembershipResult membership(const PointTuple& alpha) const {
        for (std::size_t s = 0; s < subtori_.size(); ++s) {
            MembershipResult r = membership_for_subtorus(alpha, static_cast<int>(s));
            if (!r.member) return r;
        }
        return {};
    }
    MembershipResult membership_for_subtorus(const PointTuple& alpha, int s) const {
        for (std::size_t ci = 0; ci < comps_[s].size(); ++ci) {
            const FixedComponent& c = comps_[s][ci];
            std::vector<SPoly> local;
            for (int p : c.points) local.push_back(alpha.at[static_cast<std::size_t>(p)]);
            const CongruenceSystem& sys = systems_[s][ci];
            for (std::size_t ri = 0; ri < sys.relations.size(); ++ri)
                if (!relation_holds(sys.relations[ri], local))
                    return {false, s, static_cast<int>(ci), static_cast<int>(ri)};
        }
        return {};
    }

    // Bialynicki-Birula cell counts for a generic cocharacter; computed for two
    // choices and cross-checked.
    std::vector<long long> betti_bb() const {
        long long m1 = 1, m2 = 1;
        for (const auto& chars : table_.tangent)
            for (Character chi : chars) {
                m1 = std::max(m1, std::llabs(chi.c1) + 1);
                m2 = std::max(m2, std::llabs(chi.c2) + 1);
            }
        auto count = [&](Cocharacter lambda) {
            std::vector<long long> b(2 * table_.d + 1, 0);
            for (const auto& chars : table_.tangent) {
                int pos = 0;
                for (Character chi : chars) {
                    long long v = pairing(chi, lambda);
                    if (v == 0) throw InternalInconsistency("betti_bb: cocharacter not generic");
                    if (v > 0) ++pos;
                }
                b[pos] += 1;
            }
            return b;
        };
        auto b1 = count({1, m1});
        auto b2 = count({m2, 1});
        if (b1 != b2) throw InternalInconsistency("betti_bb: choice of cocharacter leaked");
        return b1;
    }

    ChowPresentation chow_presentation(int cap = -1) const {
        if (cap < 0) cap = 2 * table_.d;
        ChowPresentation out;
        out.cap = cap;
        out.dims.resize(cap + 1, 0);
        out.equivariant_dims.resize(cap + 1, 0);
        out.basis.resize(cap + 1);
        std::vector<QMat> wall(cap + 1);  // RREF of S_1 * V_{k-1}
        for (int k = 0; k <= cap; ++k) {
            const GradedSubspace& v = graded_basis(k);
            out.equivariant_dims[k] = static_cast<int>(v.dim());
            QMat w_rows;
            if (k > 0) {
                const GradedSubspace& prev = graded_basis(k - 1);
                auto piv = v.pivot_cols();
                for (const PointTuple& x : prev.tuples()) {
                    for (SPoly var : {SPoly::monomial(1, 0), SPoly::monomial(0, 1)}) {
                        PointTuple y = var * x;
                        QVec row = flatten_tuple(y, k);
                        if (!in_rowspace(v.basis, piv, row))
                            throw RankMismatch("chow: S_1 * A_T^{k-1} escapes A_T^k");
                        w_rows.push_back(std::move(row));
                    }
                }
            }
            rref(w_rows);
            // lifts: basis vectors of V_k that extend the span of W_k, first wins
            EchelonAccumulator acc;
            for (const QVec& row : w_rows) acc.add(row);
            for (const QVec& row : v.basis)
                if (acc.add(row)) out.basis[k].push_back(unflatten_tuple(row, table_.npoints(), k));
            out.dims[k] = static_cast<int>(out.basis[k].size());
            if (out.dims[k] != static_cast<int>(v.dim() - w_rows.size()))
                throw RankMismatch("chow: lift count disagrees with dimension drop");
            wall[k] = std::move(w_rows);
        }
        // structure constants: reduce pointwise products modulo the wall space
        std::vector<std::optional<SpanSolver>> solver(cap + 1);
        auto solver_for = [&](int k) -> const SpanSolver& {
            if (!solver[k]) {
                QMat rows;
                for (const PointTuple& lift : out.basis[k]) rows.push_back(flatten_tuple(lift, k));
                for (const QVec& wrow : wall[k]) rows.push_back(wrow);
                solver[k].emplace(rows);
            }
            return *solver[k];
        };
        for (int ka = 0; ka <= cap; ++ka)
            for (int kb = ka; kb <= cap - ka; ++kb)
                for (std::size_t ia = 0; ia < out.basis[ka].size(); ++ia)
                    for (std::size_t ib = (ka == kb ? ia : 0); ib < out.basis[kb].size(); ++ib) {
                        PointTuple prod = out.basis[ka][ia] * out.basis[kb][ib];
                        int k = ka + kb;
                        auto sol = solver_for(k).express(flatten_tuple(prod, k));
                        if (!sol) throw RankMismatch("chow: product escapes the computed ring");
                        ChowPresentation::Product rec;
                        rec.deg_a = ka;
                        rec.idx_a = static_cast<int>(ia);
                        rec.deg_b = kb;
                        rec.idx_b = static_cast<int>(ib);
                        rec.coeffs.assign(sol->begin(),
                                          sol->begin() + static_cast<long>(out.basis[k].size()));
                        out.products.push_back(std::move(rec));
                    }
        return out;
    }

private:
    FixedPointTable table_;
    int jobs_ = 1;
    std::vector<Subtorus> subtori_;
    std::vector<std::vector<FixedComponent>> comps_;
    std::vector<std::vector<GeneratorSet>> gens_;
    std::vector<std::vector<CongruenceSystem>> systems_;
    mutable std::map<int, GradedSubspace> cache_;
};

}  // namespace equichow
