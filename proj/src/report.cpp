#include "gentropy/report.hpp"

namespace gentropy {

Json to_json(const Distribution& p) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) arr.push_back(p[i]);
  return arr;
}

Json to_json(const Params& params) {
  Json obj = Json::object();
  for (const auto& [k, v] : params) obj[k] = v;
  return obj;
}

Json to_json(const ScanReport& r) {
  Json doc;
  doc["entropy"] = r.entropy;
  doc["params"] = to_json(r.params);
  doc["law"] = r.law;
  doc["seed"] = r.seed;
  doc["n_pairs"] = r.n_pairs;
  doc["w_min"] = r.w_range.lo;
  doc["w_max"] = r.w_range.hi;
  doc["max_residual"] = r.max_residual;
  doc["mean_residual"] = r.mean_residual;
  doc["worst_pA"] = to_json(r.worst_a);
  doc["worst_pB"] = to_json(r.worst_b);
  doc["pass"] = r.pass;
  doc["tolerance"] = r.tolerance;
  return doc;
}

Json to_json(const BilinearFit& fit) {
  Json doc;
  doc["a0"] = fit.a0;
  doc["a1"] = fit.a1;
  doc["a2"] = fit.a2;
  doc["a3"] = fit.a3;
  doc["rms_residual"] = fit.rms_residual;
  doc["max_residual"] = fit.max_residual;
  doc["n_samples"] = fit.n_samples;
  doc["condition_flag"] = fit.condition_flag;
  return doc;
}

Json to_json(const AxiomResiduals& r) {
  Json doc;
  doc["comm_max"] = r.comm_max;
  doc["id_max"] = r.id_max;
  doc["assoc_max"] = r.assoc_max;
  return doc;
}

Json to_json(const WeakCheck& r) {
  Json doc;
  doc["max_residual"] = r.max_residual;
  doc["worst_w"] = r.worst_w;
  doc["worst_w2"] = r.worst_w2;
  return doc;
}

Json to_json(const SkReport& r) {
  Json doc;
  doc["expansibility_max"] = r.expansibility_max;
  doc["maximality_violations"] = r.maximality_violations;
  doc["n_samples"] = r.n_samples;
  return doc;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace gentropy
