#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "coble/covariants.hpp"
#include "coble/plane_config.hpp"

namespace coble {

// Ordered maps keep serialized output byte-stable.
using Json = nlohmann::ordered_json;

inline Json polynomial_to_json(const Polynomial& p) {
    Json j;
    j["vars"] = p.ring()->vars;
    if (p.ring()->laurent) j["laurent"] = true;
    Json terms = Json::array();
    for (auto& [e, c] : p.terms()) {
        Json t;
        t["e"] = e;
        t["c"] = Json::array({c.get_num().get_str(), c.get_den().get_str()});
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline Polynomial polynomial_from_json(const Json& j) {
    bool laurent = j.value("laurent", false);
    RingPtr ring = make_ring(j.at("vars").get<std::vector<std::string>>(), laurent);
    Polynomial p(ring);
    for (auto& t : j.at("terms")) {
        Exp e = t.at("e").get<Exp>();
        Rat num = rat_from_string(t.at("c")[0].get<std::string>());
        Rat den = rat_from_string(t.at("c")[1].get<std::string>());
        p += Polynomial::monomial(ring, e, num / den);
    }
    return p;
}

inline Json subsystems_to_json(const Lattice& lat,
                               const std::string& type,
                               const std::vector<RootSubsystem>& subs) {
    Json j;
    j["lattice"] = {{"d", lat.degree()}, {"n", lat.n()}};
    j["type"] = type;
    Json arr = Json::array();
    for (auto& s : subs) {
        Json roots = Json::array();
        for (RootIndex r : s.roots) roots.push_back(lat.root(r));
        arr.push_back(std::move(roots));
    }
    j["subsystems"] = std::move(arr);
    return j;
}

inline std::vector<RootSubsystem> subsystems_from_json(const Lattice& lat,
                                                       const Json& j) {
    if (j.at("lattice").at("n").get<int>() != lat.n())
        throw std::invalid_argument("subsystems_from_json: lattice mismatch");
    std::vector<RootSubsystem> out;
    for (auto& entry : j.at("subsystems")) {
        RootSubsystem s;
        for (auto& coords : entry)
            s.roots.push_back(lat.index_of(coords.get<Vec>()));
        std::sort(s.roots.begin(), s.roots.end());
        for (RootIndex r : s.roots)
            if (lat.positive(r)) s.positive.push_back(r);
        s.type = classify_simple_system(lat, extract_simple_roots(lat, s.roots));
        out.push_back(std::move(s));
    }
    return out;
}

inline Json coble_space_to_json(const CobleSpace& cs) {
    Json j;
    j["d"] = cs.d;
    j["degree"] = cs.covariant_degree();
    j["count"] = cs.covariants.size();
    j["dimension"] = cs.dimension;
    Json arr = Json::array();
    for (auto& c : cs.covariants) {
        Json e;
        e["poly"] = polynomial_to_json(c.poly);
        Json prov;
        if (c.source) {
            Json roots = Json::array();
            for (RootIndex r : c.source->roots)
                roots.push_back(cs.lattice->root(r));
            prov["subsystem"] = std::move(roots);
            prov["cartan_type"] = c.source->type.str();
        } else {
            prov["word"] = c.word;
        }
        Json factors = Json::array();
        for (RootIndex r : c.roots) factors.push_back(cs.lattice->root(r));
        prov["factor_roots"] = std::move(factors);
        e["provenance"] = std::move(prov);
        arr.push_back(std::move(e));
    }
    j["covariants"] = std::move(arr);
    return j;
}

// Configuration files: {"points": [[x, y, z], ...]} with rationals either
// as numbers or "p/q" strings.
inline PointConfig<Rat> config_from_json(const Json& j) {
    PointConfig<Rat> pts;
    for (auto& p : j.at("points")) {
        if (p.size() != 3)
            throw std::invalid_argument("config: points need 3 coordinates");
        Point3<Rat> q;
        for (int i = 0; i < 3; ++i) {
            if (p[i].is_string()) q[i] = rat_from_string(p[i].get<std::string>());
            else if (p[i].is_number_integer()) q[i] = Rat(p[i].get<long>());
            else throw std::invalid_argument("config: bad coordinate");
        }
        bool all_zero = sgn(q[0]) == 0 && sgn(q[1]) == 0 && sgn(q[2]) == 0;
        if (all_zero) throw std::invalid_argument("config: zero point");
        pts.push_back(std::move(q));
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t k = i + 1; k < pts.size(); ++k) {
            bool prop = true;
            for (int a = 0; a < 3 && prop; ++a)
                for (int b = a + 1; b < 3 && prop; ++b)
                    if (pts[i][a] * pts[k][b] != pts[i][b] * pts[k][a])
                        prop = false;
            if (prop)
                throw std::invalid_argument("config: repeated point");
        }
    return pts;
}

inline Json config_to_json(const PointConfig<Rat>& pts) {
    Json j;
    Json arr = Json::array();
    for (auto& p : pts)
        arr.push_back(Json::array(
            {to_string(p[0]), to_string(p[1]), to_string(p[2])}));
    j["points"] = std::move(arr);
    return j;
}

inline Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    Json j;
    in >> j;
    return j;
}

inline void save_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace coble
