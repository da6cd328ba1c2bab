#include "sonc/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace sonc {

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  throw DomainError("BadJson", "expected an integer or a \"p/q\" string");
}

Json rat_to_json(const Rat& r) { return r.str(); }

RatVec ratvec_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("BadJson", "expected an array of rationals");
  RatVec v;
  for (const Json& x : j) v.push_back(rat_from_json(x));
  return v;
}

Json ratvec_to_json(const RatVec& v) {
  Json a = Json::array();
  for (const Rat& r : v) a.push_back(rat_to_json(r));
  return a;
}

SupportSet support_from_json(const Json& j) {
  if (!j.contains("n") || !j.contains("points")) throw DomainError("BadJson", "support needs \"n\" and \"points\"");
  int n = j.at("n").get<int>();
  std::vector<Point> pts;
  for (const Json& p : j.at("points")) pts.push_back(ratvec_from_json(p));
  return SupportSet(n, std::move(pts));
}

Json support_to_json(const SupportSet& A) {
  Json j;
  j["n"] = A.n;
  Json pts = Json::array();
  for (const Point& p : A.points) pts.push_back(ratvec_to_json(p));
  j["points"] = pts;
  return j;
}

WeightVector weights_from_json(const Json& j, std::size_t expected_len) {
  RatVec w;
  if (j.is_array())
    w = ratvec_from_json(j);
  else if (j.contains("weights"))
    w = ratvec_from_json(j.at("weights"));
  else
    throw DomainError("BadJson", "weights: expected an array or {\"weights\": [...]}");
  if (w.size() != expected_len) throw DomainError("BadWeights", "weight vector length must be d+1");
  return WeightVector{std::move(w)};
}

Json weights_to_json(const WeightVector& w) {
  Json j;
  j["weights"] = ratvec_to_json(w.w);
  return j;
}

ExponentialSum expsum_from_json(const Json& j) {
  SupportSet A = support_from_json(j.at("support"));
  if (j.value("mode", "exact") == std::string("float")) {
    std::vector<double> c;
    for (const Json& x : j.at("coeffs")) c.push_back(x.get<double>());
    return ExponentialSum(std::move(A), std::move(c));
  }
  return ExponentialSum(std::move(A), ratvec_from_json(j.at("coeffs")));
}

Json expsum_to_json(const ExponentialSum& f) {
  Json j;
  j["support"] = support_to_json(f.support);
  if (f.exact) {
    j["coeffs"] = ratvec_to_json(f.coeffs);
  } else {
    j["mode"] = "float";
    j["coeffs"] = f.fcoeffs;
  }
  return j;
}

SoncDecomposition decomposition_from_json(const SupportSet& A, const Json& j) {
  SoncDecomposition dec;
  std::vector<Circuit> circuits = enumerate_circuits(A);
  for (const Json& term : j.value("terms", Json::array())) {
    std::vector<std::size_t> supp;
    for (const Json& x : term.at("circuit")) supp.push_back(x.get<std::size_t>());
    std::sort(supp.begin(), supp.end());
    const Circuit* found = nullptr;
    for (const Circuit& c : circuits)
      if (c.support == supp) found = &c;
    if (!found) throw DomainError("BadJson", "term support is not a circuit of A");
    Rat t = rat_from_json(term.at("t"));
    ToricPoint z(ratvec_from_json(term.at("z")));
    dec.terms.push_back(Agiform(A, *found, t, z));
  }
  for (const Json& m : j.value("monomials", Json::array()))
    dec.monomials.emplace_back(m.at(0).get<std::size_t>(), rat_from_json(m.at(1)));
  return dec;
}

Json decomposition_to_json(const SoncDecomposition& dec) {
  Json j;
  Json terms = Json::array();
  for (const Agiform& g : dec.terms) {
    Json t;
    t["circuit"] = g.circuit.support;
    t["t"] = rat_to_json(g.t);
    if (g.toric)
      t["z"] = ratvec_to_json(g.z.z);
    else
      t["w"] = ratvec_to_json(g.w);
    terms.push_back(std::move(t));
  }
  j["terms"] = terms;
  Json mons = Json::array();
  for (const auto& [idx, v] : dec.monomials) mons.push_back(Json::array({idx, rat_to_json(v)}));
  j["monomials"] = mons;
  return j;
}

Json subdivision_to_json(const RegularSubdivision& sub) {
  Json j;
  Json cells = Json::array();
  for (const SubCell& c : sub.cells) {
    Json jc;
    jc["points"] = c.points;
    jc["on"] = c.on;
    cells.push_back(std::move(jc));
  }
  j["cells"] = cells;
  j["dim"] = sub.dim;
  if (sub.witness) j["witness"] = ratvec_to_json(sub.witness->w);
  return j;
}

Json sonc_complex_to_json(const SoncComplex& g) {
  Json cells = Json::array();
  for (const ComplexFace& f : g.cells) {
    Json jf;
    jf["points"] = f.points;
    jf["dim"] = f.dim;
    cells.push_back(std::move(jf));
  }
  Json j;
  j["cells"] = cells;
  Json maxc = Json::array();
  for (const ComplexFace& f : g.maximal_cells()) maxc.push_back(f.points);
  j["maximal_cells"] = maxc;
  return j;
}

Json tropical_to_json(const TropicalComplex& M) {
  Json j;
  Json vs = Json::array();
  for (const RatVec& v : M.vertices) vs.push_back(ratvec_to_json(v));
  j["vertices"] = vs;
  Json cells = Json::array();
  for (const TropCell& c : M.cells) {
    Json jc;
    jc["indicator"] = c.indicator;
    jc["dim"] = c.dim;
    Json cv = Json::array();
    for (const RatVec& v : c.vertices) cv.push_back(ratvec_to_json(v));
    jc["vertices"] = cv;
    Json cr = Json::array();
    for (const RatVec& r : c.rays) cr.push_back(ratvec_to_json(r));
    jc["rays"] = cr;
    cells.push_back(std::move(jc));
  }
  j["cells"] = cells;
  Json lin = Json::array();
  for (const RatVec& l : M.lineality) lin.push_back(ratvec_to_json(l));
  j["lineality"] = lin;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("FileError", "cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

}  // namespace sonc
