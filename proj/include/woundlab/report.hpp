#pragma once

#include <json.hpp>

#include "woundlab/hassewitt.hpp"
#include "woundlab/russell.hpp"
#include "woundlab/torsor.hpp"

namespace woundlab {

// nlohmann::json keeps object keys sorted, which together with the canonical
// value formatting makes identical inputs emit byte-identical JSON.
using Json = nlohmann::json;

/// Stable-key JSON trees. All numeric values are exact integers; field and
/// function values are canonical expression strings.

template <class K>
Json classification_json(const RussellEquation<K>& r, const Classification& cls) {
  Json j;
  j["p"] = r.p;
  j["n"] = r.n;
  j["m"] = r.m();
  Json coeffs = Json::array();
  for (auto& a : r.a) coeffs.push_back(a.to_string());
  j["coeffs"] = coeffs;
  j["classification"] = cls.to_string();
  j["splitting_degree"] = splitting_degree(r);
  if (!cls.reason.empty()) j["reason"] = cls.reason;
  return j;
}

template <class K>
Json compactification_json(const RussellEquation<K>& r, const CompactificationReport<K>& rep) {
  Json j;
  j["p"] = rep.p;
  j["n"] = rep.n;
  j["m"] = rep.m;
  Json coeffs = Json::array();
  for (auto& a : r.a) coeffs.push_back(a.to_string());
  j["coeffs"] = coeffs;
  j["classification"] = classify(r).to_string();
  j["genus"] = rep.arithmetic_genus;
  j["regular"] = rep.regular;
  j["weights"] = Json::array({rep.w0, rep.w1, rep.w2});
  j["degree"] = rep.degree;
  j["boundary_degree"] = rep.boundary_degree;
  j["canonical_twist"] = rep.canonical_twist;
  Json monos = Json::array();
  for (auto& mono : rep.monomials) {
    Json mj;
    mj["coeff"] = mono.coeff.to_string();
    mj["t0"] = mono.e0;
    mj["t1"] = mono.e1;
    mj["t2"] = mono.e2;
    monos.push_back(mj);
  }
  j["monomials"] = monos;
  return j;
}

Json torsor_json(const NormalForm& nf, bool with_trace);
Json cohomology_json(const CohomologyReport& rep);

}  // namespace woundlab
