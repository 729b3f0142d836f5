#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "equichow/chow.hpp"
#include "json.hpp"

namespace equichow {

using Json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fan input file: {"rays": [[1,0],[0,1],[-1,-1]], "name": "P2"}; rays in
// counterclockwise cyclic order.
inline Fan load_fan_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open fan file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError("fan file " + path + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("rays") || !j["rays"].is_array())
        throw InputError("fan file " + path + ": expected an object with a \"rays\" array");
    std::vector<std::pair<long long, long long>> rays;
    for (const auto& r : j["rays"]) {
        if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer())
            throw InputError("fan file " + path + ": each ray must be a pair of integers");
        rays.push_back({r[0].get<long long>(), r[1].get<long long>()});
    }
    std::string name = j.value("name", std::string("X"));
    return build_fan(rays, name);
}

inline Json fan_json(const Fan& fan) {
    Json j;
    j["name"] = fan.name;
    Json rays = Json::array();
    for (const Cocharacter& r : fan.rays) rays.push_back({r.w1, r.w2});
    j["rays"] = rays;
    return j;
}

inline Json tuple_json(const EquivariantChow& ring, const PointTuple& t) {
    Json j = Json::object();
    for (int p = 0; p < ring.table().npoints(); ++p) {
        const SPoly& v = t.at[static_cast<std::size_t>(p)];
        if (!v.is_zero()) j[ring.table().ids[static_cast<std::size_t>(p)]] = v.str();
    }
    return j;
}

inline Json fixed_points_json(const EquivariantChow& ring) {
    Json arr = Json::array();
    for (int p = 0; p < ring.table().npoints(); ++p) {
        Json e;
        e["id"] = ring.table().ids[static_cast<std::size_t>(p)];
        Json stair = Json::array();
        for (const Staircase& s : ring.table().points[static_cast<std::size_t>(p)].chart)
            stair.push_back(s.heights);
        e["staircases"] = stair;
        arr.push_back(std::move(e));
    }
    return arr;
}

inline Json factor_json(const Fan& fan, const Factor& f) {
    Json j;
    switch (f.kind) {
        case Factor::Kind::ReducedPoint:
            j["kind"] = "reduced-point";
            j["chart"] = f.chart + 1;
            break;
        case Factor::Kind::GradedHilb: {
            j["kind"] = "graded-hilbert";
            j["chart"] = f.chart + 1;
            Json h = Json::object();
            for (auto [w, m] : f.hilbert) h[std::to_string(w)] = m;
            j["hilbert"] = h;
            break;
        }
        case Factor::Kind::LineBlocks: {
            j["kind"] = "line-blocks";
            const Line& l = fan.lines[static_cast<std::size_t>(f.line)];
            j["line"] = {std::min(l.chart_a, l.chart_b) + 1, std::max(l.chart_a, l.chart_b) + 1};
            j["partition"] = f.pi.parts;
            Json blocks = Json::array();
            for (auto [n, d] : f.blocks) blocks.push_back({n, d});
            j["blocks"] = blocks;
            break;
        }
    }
    j["dimension"] = f.dimension;
    return j;
}

inline Json components_json(const EquivariantChow& ring, bool with_generators,
                            bool with_relations) {
    Json subtori = Json::array();
    const auto& ids = ring.table().ids;
    for (std::size_t s = 0; s < ring.subtori().size(); ++s) {
        Json sj;
        sj["cocharacter"] = {ring.subtori()[s].w.w1, ring.subtori()[s].w.w2};
        Json comps = Json::array();
        for (std::size_t ci = 0; ci < ring.components_by_subtorus()[s].size(); ++ci) {
            const FixedComponent& c = ring.components_by_subtorus()[s][ci];
            Json cj;
            Json pts = Json::array();
            for (int p : c.points) pts.push_back(ids[static_cast<std::size_t>(p)]);
            cj["points"] = pts;
            cj["dimension"] = c.dimension;
            Json factors = Json::array();
            for (const Factor& f : c.factors) factors.push_back(factor_json(ring.fan(), f));
            cj["factors"] = factors;
            Json euler = Json::object();
            for (std::size_t i = 0; i < c.points.size(); ++i)
                euler[ids[static_cast<std::size_t>(c.points[i])]] = c.euler[i].str();
            cj["euler"] = euler;
            if (with_generators) {
                Json gens = Json::array();
                for (const Generator& g : ring.generators_by_subtorus()[s][ci].gens) {
                    Json gj;
                    gj["degree"] = g.degree;
                    Json vals = Json::object();
                    for (std::size_t i = 0; i < c.points.size(); ++i)
                        vals[ids[static_cast<std::size_t>(c.points[i])]] = g.values[i].str();
                    gj["values"] = vals;
                    gens.push_back(std::move(gj));
                }
                cj["generators"] = gens;
            }
            if (with_relations) {
                Json rels = Json::array();
                for (const Relation& r : ring.systems_by_subtorus()[s][ci].relations) {
                    Json rj;
                    Json co = Json::object();
                    for (std::size_t i = 0; i < c.points.size(); ++i)
                        if (!r.coeffs[i].is_zero())
                            co[ids[static_cast<std::size_t>(c.points[i])]] = r.coeffs[i].str();
                    rj["coefficients"] = co;
                    rj["modulus"] = r.modulus.str();
                    rels.push_back(std::move(rj));
                }
                cj["relations"] = rels;
            }
            comps.push_back(std::move(cj));
        }
        sj["components"] = comps;
        subtori.push_back(std::move(sj));
    }
    return subtori;
}

inline Json basis_json(const EquivariantChow& ring, int cap) {
    Json arr = Json::array();
    for (int k = 0; k <= cap; ++k) {
        const GradedSubspace& v = ring.graded_basis(k);
        Json e;
        e["degree"] = k;
        e["dimension"] = v.dim();
        Json tuples = Json::array();
        for (const PointTuple& t : v.tuples()) tuples.push_back(tuple_json(ring, t));
        e["tuples"] = tuples;
        arr.push_back(std::move(e));
    }
    return arr;
}

inline Json chow_json(const EquivariantChow& ring, int cap) {
    ChowPresentation pres = ring.chow_presentation(cap);
    Json j;
    j["dims"] = pres.dims;
    auto betti = ring.betti_bb();
    j["betti"] = betti;
    j["equivariant_dims"] = pres.equivariant_dims;
    Json basis = Json::array();
    for (int k = 0; k <= pres.cap; ++k) {
        Json deg = Json::array();
        for (const PointTuple& t : pres.basis[static_cast<std::size_t>(k)])
            deg.push_back(tuple_json(ring, t));
        basis.push_back(std::move(deg));
    }
    j["basis"] = basis;
    Json prods = Json::array();
    for (const auto& p : pres.products) {
        Json pj;
        pj["a"] = {p.deg_a, p.idx_a};
        pj["b"] = {p.deg_b, p.idx_b};
        Json coeffs = Json::array();
        for (const Rational& c : p.coeffs) coeffs.push_back(c.str());
        pj["coefficients"] = coeffs;
        prods.push_back(std::move(pj));
    }
    j["structure_constants"] = prods;
    return j;
}

// --- plain-text rendering -------------------------------------------------

inline std::string text_of(const Json& j, int indent = 0) {
    std::ostringstream os;
    std::string pad(static_cast<std::size_t>(indent), ' ');
    auto inline_scalars = [](const Json& arr) {
        std::ostringstream s;
        for (std::size_t i = 0; i < arr.size(); ++i) s << (i ? ", " : "") << arr[i].dump();
        return s.str();
    };
    auto is_scalar_array = [](const Json& arr) {
        for (const auto& e : arr)
            if (e.is_object() || e.is_array()) return false;
        return true;
    };
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it->is_array() && is_scalar_array(*it)) {
                os << pad << it.key() << ": [" << inline_scalars(*it) << "]\n";
            } else if (it->is_object() || it->is_array()) {
                os << pad << it.key() << ":\n" << text_of(*it, indent + 2);
            } else {
                os << pad << it.key() << ": " << it->dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        if (is_scalar_array(j)) {
            os << pad << "[" << inline_scalars(j) << "]\n";
        } else {
            for (const auto& e : j) {
                std::string body = text_of(e, indent + 2);
                // hoist the first line onto the dash
                std::string head = pad + "- ";
                std::size_t skip = static_cast<std::size_t>(indent) + 2;
                os << head << (body.size() > skip ? body.substr(skip) : body);
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
    return os.str();
}

}  // namespace equichow
