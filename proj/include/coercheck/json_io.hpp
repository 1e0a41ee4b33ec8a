#pragma once

#include <json.hpp>

#include <string>

#include "coercheck/barycentric.hpp"
#include "coercheck/certify.hpp"
#include "coercheck/newton.hpp"
#include "coercheck/oracle.hpp"
#include "coercheck/polynomial.hpp"
#include "coercheck/version.hpp"

namespace coercheck {

using Json = nlohmann::ordered_json;

inline Json to_json(const Exponent& e) {
  Json arr = Json::array();
  for (int v : e.entries()) arr.push_back(v);
  return arr;
}

inline Json to_json(const ExponentSet& set) {
  Json arr = Json::array();
  for (const Exponent& e : set) arr.push_back(to_json(e));
  return arr;
}

inline Json to_json(const BarycentricMap& map) {
  Json entries = Json::array();
  for (const auto& [alpha_star, entry] : map.entries) {
    Json support = Json::array(), weights = Json::array();
    for (std::size_t i = 0; i < entry.support.size(); ++i) {
      support.push_back(to_json(entry.support[i]));
      weights.push_back(rational_to_string(entry.weights[i]));
    }
    entries.push_back({{"alpha_star", to_json(alpha_star)},
                       {"support", support},
                       {"weights", weights}});
  }
  Json out;
  out["seed"] = map.seed ? Json(*map.seed) : Json(nullptr);
  out["entries"] = entries;
  return out;
}

inline Json to_json(const Interval& interval) {
  return {{"lo", interval.lo().to_string()}, {"hi", interval.hi().to_string()}};
}

inline Json analysis_to_json(const Polynomial& f, const NewtonAnalysis& analysis,
                             const BarycentricMap& map) {
  Json out;
  out["n_vars"] = f.n_vars();
  out["vars"] = f.var_names();
  out["polynomial"] = f.render();
  out["support"] = to_json(f.support());
  out["V0"] = to_json(analysis.v0);
  out["V"] = to_json(analysis.v);
  out["D"] = to_json(analysis.d);
  out["R"] = to_json(analysis.r);
  out["c1"] = analysis.c1;
  out["c2"] = analysis.c2;
  out["c3"] = analysis.c3;
  out["gem_regular"] = analysis.gem_regular;
  Json essential = Json::array();
  for (const auto& [axis, e] : analysis.v_ess)
    essential.push_back({{"axis", axis}, {"alpha", to_json(e)}});
  out["v_ess"] = essential;
  out["barycentric_map"] = to_json(map);
  return out;
}

inline Json certificate_to_json(const Certificate& cert) {
  Json witness = Json::object();
  if (cert.failed_condition) witness["failed_condition"] = *cert.failed_condition;
  if (cert.h_alpha) {
    Json table = Json::array();
    for (const auto& [alpha, h] : cert.h_alpha->h)
      table.push_back({{"alpha", to_json(alpha)},
                       {"h", rational_to_string(h)},
                       {"margin", rational_to_string(cert.h_alpha->margin.at(alpha))}});
    witness["h_alpha_table"] = table;
  }
  if (cert.ratio_sum) {
    Json sum = to_json(cert.ratio_sum->ratio_sum);
    if (cert.ratio_sum->exact) sum["exact"] = rational_to_string(*cert.ratio_sum->exact);
    sum["status"] = to_string(cert.ratio_sum->status);
    witness["ratio_sum"] = sum;
  }
  if (cert.weights) {
    Json weights = Json::array();
    for (const auto& [alpha_star, omega] : cert.weights->weights)
      weights.push_back({{"alpha_star", to_json(alpha_star)},
                         {"omega", rational_to_string(omega)}});
    witness["weights"] = weights;
    witness["epsilon"] = rational_to_string(cert.weights->epsilon);
  }
  if (cert.circuit) {
    Json circuit;
    circuit["case"] = cert.circuit->detail;
    if (cert.circuit->theta) {
      circuit["theta"] = to_json(cert.circuit->theta->value());
      if (cert.circuit->theta->exact)
        circuit["theta"]["exact"] = rational_to_string(*cert.circuit->theta->exact);
    }
    witness["circuit"] = circuit;
  }
  if (cert.map) witness["map"] = to_json(*cert.map);

  Json out;
  out["verdict"] = to_string(cert.verdict);
  out["theorem"] = cert.theorem == TheoremId::None ? Json(nullptr) : Json(to_string(cert.theorem));
  out["exact"] = cert.exact;
  out["witness"] = witness;
  out["meta"] = {{"precision_bits", cert.precision_bits}, {"tool_version", kToolVersion}};
  return out;
}

inline Json to_json(const RadialProfile& profile) {
  return {{"radii", profile.radii}, {"minima", profile.minima}};
}

}  // namespace coercheck
