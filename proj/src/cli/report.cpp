#include "normclass/cli/report.hpp"

namespace normclass {

Json to_json(const ProjPoint& p) { return Json(p.coordinate_strings()); }

Json to_json(const ChowClass& c) {
    Json j = Json::object();
    for (const auto& [name, coeff] : c.nonzero_terms()) j[name] = coeff;
    return j;
}

Json to_json(const Census& c) {
    Json j;
    auto counts = [](const std::map<unsigned, unsigned>& m) {
        Json o = Json::object();
        for (const auto& [k, n] : m) o[std::to_string(k)] = n;
        return o;
    };
    j["d"] = c.d;
    j["m_star"] = counts(c.m_star);
    j["m_tilde"] = counts(c.m_tilde);
    j["kappa_star"] = c.kappa_star;
    j["kappa_tilde"] = c.kappa_tilde;
    j["c_inf"] = c.c_inf;
    Json points = Json::array();
    for (const auto& p : c.points) {
        Json e;
        e["point"] = to_json(p.point);
        e["role"] = p.role;
        e["kind"] = to_string(p.cls.kind);
        e["multiplicity"] = p.cls.multiplicity;
        e["on_umbilic"] = p.on_umbilic;
        points.push_back(std::move(e));
    }
    j["points"] = std::move(points);
    j["unresolved"] = c.unresolved;
    if (c.unresolved.empty())
        j["closed_form_value"] = closed_form_value(c);
    else
        j["closed_form_value"] = nullptr;
    return j;
}

Json to_json(const NormalClassReport& r) {
    Json j;
    j["input"] = r.f.to_string();
    j["degree"] = r.degree;
    j["reduced"] = r.reduced;
    j["d_H"] = r.d_h;
    j["polar_degree"] = r.polar_degree;
    j["bezout"] = r.bezout;
    Json points = Json::array();
    for (const auto& p : r.base_points) {
        Json e;
        e["point"] = to_json(p.point);
        e["tag"] = to_string(p.tag);
        e["multiplicity"] = p.multiplicity;
        points.push_back(std::move(e));
    }
    j["base_points"] = std::move(points);
    j["residual"] = r.residual;
    j["normal_class"] = r.normal_class;
    j["schubert"] = {{"sigma2", r.schubert[ChowClass::S2]}, {"sigma11", r.schubert[ChowClass::S11]}};
    j["certified"] = true;
    j["seeds_used"] = {r.seeds_used.first, r.seeds_used.second};
    return j;
}

Json to_json(const CurveReport& r) {
    Json j;
    j["input"] = r.g.to_string();
    j["degree"] = r.d;
    j["d_dual"] = r.d_dual;
    j["omega_inf"] = r.infinity.omega;
    j["mu_I"] = r.infinity.mu_i;
    j["mu_J"] = r.infinity.mu_j;
    j["normal_class"] = r.c_formula;
    if (r.c_direct)
        j["normal_class_direct"] = *r.c_direct;
    else
        j["normal_class_direct"] = nullptr;
    j["certified"] = true;
    j["seeds_used"] = {r.seeds_used.first, r.seeds_used.second};
    return j;
}

} // namespace normclass
