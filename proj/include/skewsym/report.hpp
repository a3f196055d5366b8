#pragma once

#include "skewsym/brute_force.hpp"
#include "skewsym/classify.hpp"
#include "skewsym/parse.hpp"
#include "skewsym/pipeline.hpp"
#include "skewsym/render.hpp"
#include "skewsym/symmetry_element.hpp"
#include "skewsym/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace skewsym {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "skewsym-report/1";

inline Json turn_to_json(const RationalTurn& t) { return Json::array({t.k, t.m}); }

inline Json turn_pair_to_json(const TurnPair& t) {
    return Json::array({turn_to_json(t.first), turn_to_json(t.second)});
}

inline Json lattice_to_json(const IntLattice2& L) {
    Json basis = Json::array();
    for (const Vec2& v : L.basis()) basis.push_back(Json::array({v[0], v[1]}));
    return Json{{"rank", L.rank()}, {"basis", basis}};
}

inline Json group_to_json(const SymmetryGroup& g) {
    Json j;
    switch (g.kind) {
        case SymmetryGroup::Kind::FullTorus:
            j["kind"] = "full_torus";
            break;
        case SymmetryGroup::Kind::OneDimFamily:
            j["kind"] = "one_dim_family";
            j["character"] = Json::array({g.char_vec[0], g.char_vec[1]});
            j["torsion"] = g.torsion;
            break;
        case SymmetryGroup::Kind::Finite:
            j["kind"] = "finite";
            j["order"] = g.order();
            j["invariant_factors"] = Json::array({g.d1, g.d2});
            j["generators"] = Json::array();
            if (g.d1 > 1) j["generators"].push_back(turn_pair_to_json(g.gen1));
            j["generators"].push_back(turn_pair_to_json(g.gen2));
            if (g.order() <= 64) {
                Json els = Json::array();
                for (const TurnPair& t : g.elements()) els.push_back(turn_pair_to_json(t));
                j["elements"] = els;
            }
            break;
    }
    j["lattice"] = lattice_to_json(g.lattice);
    j["presentation"] = g.str();
    return j;
}

inline Json status_to_json(const Status& s) {
    Json j;
    j["kind"] = s.kind == Status::Kind::Exact           ? "exact"
                : s.kind == Status::Kind::BoundsPair    ? "bounds_pair"
                                                        : "candidate_upper_bound";
    switch (s.just) {
        case Status::Justification::CorI: j["hypothesis"] = "normal form, q not divisible by a nonconstant polynomial in z"; break;
        case Status::Justification::CorII: j["hypothesis"] = "normal form and b_d = z^l"; break;
        case Status::Justification::CorIII: j["hypothesis"] = "p = z^delta and b_d = z^l"; break;
        case Status::Justification::TypeIIIBound: j["hypothesis"] = "lower and upper bounds coincide"; break;
        default: break;
    }
    j["description"] = s.str();
    return j;
}

inline Json scale_to_json(const ScaleSpec& s) {
    Json j;
    j["exponent"] = s.exponent;
    j["target"] = s.target.str();
    if (s.exact) j["exact"] = s.exact->str();
    j["numeric"] = Json::array({s.numeric.real(), s.numeric.imag()});
    return j;
}

inline Json normalization_to_json(const NormalizedSkew& nf) {
    Json j;
    j["already_normal_form"] = nf.already_normal;
    j["zeta"] = nf.cent.zeta.str();
    j["zeta_z"] = nf.cent.zeta_z.str();
    j["p_translated"] = nf.p_norm.str();
    j["laurent_ok"] = nf.laurent_ok;
    if (nf.laurent_ok) j["q_translated"] = nf.q_norm.str();
    else {
        Json coeffs = Json::array();
        for (int m = 0; m <= nf.d; ++m)
            coeffs.push_back(nf.q_coeffs[std::size_t(m)].str());
        j["q_w_coefficients"] = coeffs;
    }
    j["c1"] = scale_to_json(nf.c1);
    j["c2"] = scale_to_json(nf.c2);
    auto [r1, r2] = nf.scale_residuals();
    j["scale_equation_residuals"] = Json::array({r1, r2});
    return j;
}

inline Json conditions_to_json(const ConditionSet& cs) {
    Json j;
    auto vecs = [](const std::vector<Vec2>& vs) {
        Json a = Json::array();
        for (const Vec2& v : vs) a.push_back(Json::array({v[0], v[1]}));
        return a;
    };
    j["base_vectors"] = vecs(cs.base);
    j["fiber_vectors"] = vecs(cs.fiber);
    j["mstar"] = Json::array({Json::array({cs.mstar[0][0], cs.mstar[0][1]}),
                              Json::array({cs.mstar[1][0], cs.mstar[1][1]})});
    j["lattice"] = lattice_to_json(cs.lattice);
    // stability certificate: the image of each basis vector is a member
    Json witness = Json::array();
    for (const Vec2& v : cs.lattice.basis()) {
        Vec2 mv{cs.mstar[0][0] * v[0] + cs.mstar[0][1] * v[1],
                cs.mstar[1][0] * v[0] + cs.mstar[1][1] * v[1]};
        witness.push_back(Json{{"vector", Json::array({v[0], v[1]})},
                               {"image", Json::array({mv[0], mv[1]})},
                               {"member", cs.lattice.contains(mv)}});
    }
    j["mstar_stability"] = witness;
    return j;
}

inline Json input_to_json(const MapExpression& expr, const SkewProduct& f) {
    Json j;
    j["source"] = expr.source;
    j["canonical"] = expr.str();
    j["p"] = f.p.str();
    j["q"] = f.q.str();
    j["delta"] = f.delta;
    j["d"] = f.d;
    j["l"] = f.l;
    j["nondegenerate"] = f.nondegenerate;
    return j;
}

inline Json analysis_to_json(const SymmetryAnalysis& a) {
    Json j;
    j["sigma_p"] = Json{{"infinite", a.sigma_p.infinite},
                        {"order", a.sigma_p.infinite ? Json(nullptr) : Json(a.sigma_p.order)},
                        {"center", a.sigma_p.center.str()}};
    if (a.conditions) j["conditions"] = conditions_to_json(*a.conditions);
    j["group"] = group_to_json(a.group);
    j["status"] = status_to_json(a.status);
    if (a.lower) j["lower_bound"] = group_to_json(*a.lower);
    j["numeric_verification_advised"] = a.numeric_advice;
    return j;
}

inline Json classification_to_json(const ClassificationReport& rep) {
    Json j;
    j["type"] = to_string(rep.tag);
    j["group_uncertain"] = rep.uncertain;
    if (rep.witness) {
        j["witness"] = Json{{"r", rep.witness->r},
                            {"s", rep.witness->s},
                            {"base_map", rep.witness->base_w.str("w")},
                            {"base_exact", rep.witness->base_exact},
                            {"pi", "(z^" + std::to_string(rep.witness->r) + ", z^" +
                                       std::to_string(rep.witness->s) + "*w)"}};
    }
    if (rep.sigma_factor_order) j["finite_factor_order"] = *rep.sigma_factor_order;
    Json shape;
    shape["shape"] = rep.shape.shape;
    if (!rep.shape.julia_of.empty()) shape["julia_of"] = rep.shape.julia_of;
    if (!rep.shape.radius.empty()) shape["radius"] = rep.shape.radius;
    if (rep.shape.shape == "rotated_family")
        shape["s_over_r"] = Json::array({rep.shape.s, rep.shape.r});
    if (rep.shape.phi_constant_checked) shape["phi_constant_on_samples"] = rep.shape.phi_constant;
    j["julia_shape"] = shape;
    j["compactness"] = to_string(rep.compactness);
    return j;
}

inline Json verify_to_json(const SymmetryCheck& c, const std::string& label) {
    return Json{{"element", label},
                {"pass", c.pass},
                {"max_deviation", c.max_deviation},
                {"tol", c.tol},
                {"fibers", c.fibers},
                {"samples", c.samples},
                {"seed", c.seed}};
}

} // namespace skewsym
