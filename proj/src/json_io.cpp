#include "ndeg/json_io.hpp"

#include <stdexcept>

namespace ndeg {

json to_json_subset(Subset s) {
    json out = json::array();
    for (int i : members(s)) out.push_back(i + 1);
    return out;
}

Subset subset_from_json(const json& j) {
    Subset s = 0;
    for (const auto& x : j) s |= 1u << (x.get<int>() - 1);
    return s;
}

json to_json_face(const std::vector<IVec>& vertices) {
    json out = json::array();
    for (const auto& v : vertices) out.push_back(v);
    return out;
}

namespace {

const char* kind_name(Atom::Kind k) {
    switch (k) {
        case Atom::Kind::Unit:
            return "unit";
        case Atom::Kind::Torus:
            return "torus";
        default:
            return "smooth";
    }
}

}  // namespace

json to_json(const Atom& a) {
    json j = {{"kind", kind_name(a.kind)}, {"label", atom_label(a)}};
    if (a.kind == Atom::Kind::Unit) return j;
    j["J"] = to_json_subset(a.J);
    if (a.kind == Atom::Kind::Smooth) return j;
    j["face"] = to_json_face(a.face);
    j["eps"] = a.eps;
    if (a.has_rel) j["relTag"] = to_json_subset(a.rel);
    if (a.weight_mod > 0) j["weights"] = {{"residues", a.weights}, {"modulus", a.weight_mod}};
    return j;
}

Atom atom_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "unit") return unit_atom();
    if (kind == "smooth") return smooth_atom(subset_from_json(j.at("J")));
    if (kind != "torus") throw std::invalid_argument("unknown atom kind: " + kind);
    Atom a = torus_atom(j.at("face").get<std::vector<IVec>>(), subset_from_json(j.at("J")), j.at("eps").get<int>());
    if (j.contains("relTag")) {
        a.has_rel = true;
        a.rel = subset_from_json(j["relTag"]);
    }
    if (j.contains("weights")) {
        a.weights = j["weights"].at("residues").get<IVec>();
        a.weight_mod = j["weights"].at("modulus").get<long>();
    }
    return a;
}

json to_json(const GClass& c) {
    json terms = json::array();
    for (const auto& [a, p] : c.terms) {
        json coeff = json::object();
        for (const auto& [e, k] : p) coeff[std::to_string(e)] = k;
        terms.push_back({{"atom", to_json(a)}, {"coeff", coeff}});
    }
    return {{"terms", terms}, {"text", to_string(c)}};
}

GClass gclass_from_json(const json& j) {
    GClass c;
    for (const auto& t : j.at("terms")) {
        Atom a = atom_from_json(t.at("atom"));
        for (const auto& [e, k] : t.at("coeff").items()) c.add(a, std::stol(e), k.get<long long>());
    }
    return c;
}

json to_json(const FracPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p)
        out.push_back({{"num", e.get_num().get_si()}, {"den", e.get_den().get_si()}, {"coeff", c}});
    return out;
}

json to_json(const FaceDesc& f) {
    return {{"vertices", to_json_face(f.vertices)},
            {"recession", to_json_subset(f.recession)},
            {"dim", f.dim},
            {"support", to_json_subset(f.supp)},
            {"compact", f.compact()},
            {"normal", f.normal}};
}

json to_json(const NewtonPolyhedron& G) {
    json facets = json::array();
    for (const auto& F : G.facets) facets.push_back({{"normal", F.normal}, {"offset", F.offset}});
    json faces = json::array();
    for (const auto& f : G.faces) faces.push_back(to_json(f));
    return {{"ambient", to_json_subset(G.ambient)},
            {"vertices", to_json_face(G.vertices)},
            {"facets", facets},
            {"faces", faces}};
}

json to_json(const ProbeReport& r) {
    json faces = json::array();
    for (const auto& v : r.faces) {
        json e = {{"face", to_json_face(v.face.vertices)}, {"verdict", v.verdict}, {"exact", v.exact}};
        if (v.witness_prime) e["prime"] = v.witness_prime;
        faces.push_back(e);
    }
    return {{"primes", r.primes}, {"nondegenerate", r.nondegenerate}, {"exact", r.exact}, {"faces", faces}};
}

json to_json(const Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json e = {{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}};
        if (!c.data.is_null()) e["data"] = c.data;
        checks.push_back(e);
    }
    return {{"status", status_name(r.status())}, {"checks", checks}};
}

json to_json(const StratumInfo& s) {
    json j = {{"J", to_json_subset(s.key.J)}, {"n", s.key.n}, {"J_tilde", to_json_subset(s.Jt)}, {"empty", s.empty}};
    json a = json::array();
    for (int i : members(s.key.J)) a.push_back(s.key.a[i]);
    j["a"] = a;
    if (s.Jt) {
        j["face"] = to_json_face(s.gamma.vertices);
        j["ell"] = s.ell;
        j["k"] = s.k;
    }
    if (!s.empty) {
        j["dim"] = s.dim;
        j["class"] = to_json(s.cls);
    }
    return j;
}

}  // namespace ndeg
