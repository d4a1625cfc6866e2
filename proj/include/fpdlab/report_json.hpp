// JSON serialization of reports. Canonical output: keys are sorted by the
// underlying object map, every number is an integer, polynomials and
// rationals appear as exact strings, so identical runs produce identical
// bytes.
#pragma once

#include <json.hpp>

#include "fpdlab/complex.hpp"
#include "fpdlab/config.hpp"
#include "fpdlab/grade.hpp"
#include "fpdlab/verify.hpp"

namespace fpdlab {

using json = nlohmann::json;

/// Ranks and differential matrices (row-major, canonical polynomial text).
template <class F>
json complex_json(const FreeComplex<F>& C) {
  json j;
  j["ranks"] = C.ranks;
  json diffs = json::array();
  for (const auto& d : C.diffs) {
    json mat;
    mat["rows"] = d.mat.rows;
    mat["cols"] = d.mat.cols;
    json entries = json::array();
    for (const auto& e : d.mat.a) entries.push_back(poly_str(C.ring, e));
    mat["entries"] = entries;
    diffs.push_back(mat);
  }
  j["differentials"] = diffs;
  return j;
}

inline json config_json(const RunConfig& cfg) {
  json j;
  j["power-cap"] = cfg.power_cap;
  j["grade-bound"] = cfg.grade_bound;
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  j["budget"] = cfg.basis_cap;
  j["assume-maximal"] = cfg.assume_maximal;
  j["equidimensional"] = cfg.equidimensional;
  j["exhaustive"] = cfg.exhaustive;
  return j;
}

inline json grade_value_json(const GradeValue& v) {
  if (v.finite) return json(v.value);
  json j;
  j["infinite-up-to-bound"] = v.bound;
  return j;
}

template <class F>
json grade_report_json(const GradeReport<F>& rep) {
  json j;
  j["kind"] = grade_kind_name(rep.kind);
  j["value"] = grade_value_json(rep.value);
  j["probed-range"] = json::array({0, rep.probe_hi});
  j["method"] = rep.method;
  if (rep.kind == GradeKind::regseq) {
    j["seed"] = rep.seed;
    json seq = json::array();
    for (const auto& p : rep.sequence)
      seq.push_back(poly_str(rep.ring, p));
    j["witness"] = json{{"type", "regular-sequence"}, {"sequence", seq}};
  } else if (rep.cocycle) {
    const auto& w = *rep.cocycle;
    json entries = json::array();
    for (const auto& p : w.entries) entries.push_back(poly_str(rep.ring, p));
    json wj;
    wj["type"] = "cocycle";
    wj["degree"] = w.degree;
    wj["power"] = w.power;
    wj["copies"] = w.copies;
    wj["entries"] = entries;
    j["witness"] = wj;
  } else {
    j["witness"] = json{{"type", "none"}};
  }
  if (rep.kind == GradeKind::cech || rep.kind == GradeKind::local) {
    json trace = json::array();
    for (const auto& [t, v] : rep.stabilization)
      trace.push_back(json::array({t, grade_value_json(v)}));
    j["stabilization"] = trace;
    j["stabilized"] = rep.stabilized;
  }
  if (rep.ext_index) j["ext-index"] = *rep.ext_index;
  return j;
}

template <class F>
json labeled_reports_json(
    const std::vector<std::pair<std::string, GradeReport<F>>>& reports) {
  json arr = json::array();
  for (const auto& [label, rep] : reports) {
    json item;
    item["label"] = label;
    item["report"] = grade_report_json(rep);
    arr.push_back(item);
  }
  return arr;
}

template <class F>
json verification_report_json(const VerificationReport<F>& rep) {
  json j;
  j["theorem-id"] = rep.theorem_id;
  j["instance"] = rep.instance;
  j["verdict"] = verdict_name(rep.verdict);
  j["reason"] = rep.reason;
  j["lhs"] = labeled_reports_json(rep.lhs);
  j["rhs"] = labeled_reports_json(rep.rhs);
  json vals = json::object();
  for (const auto& [k, v] : rep.values) vals[k] = v;
  j["values"] = vals;
  return j;
}

template <class F>
json fpd_estimate_json(const FpdEstimate<F>& est) {
  json j;
  j["estimate"] = grade_value_json(est.estimate);
  j["lower-bound-only"] = est.lower_bound_only;
  j["per-ideal"] = labeled_reports_json(est.per_ideal);
  json certs = json::array();
  for (std::size_t i = 0; i < est.certified.verdicts.size(); ++i)
    certs.push_back(maximal_verdict_name(est.certified.verdicts[i]));
  j["certification"] = certs;
  return j;
}

}  // namespace fpdlab
