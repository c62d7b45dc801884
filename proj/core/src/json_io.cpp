#include "ischur/json_io.hpp"

#include <stdexcept>

namespace ischur {

Json laurent_to_json(const LaurentPoly& p) {
  Json out = Json::object();
  for (const auto& [exp, coeff] : p.coeffs())
    out[std::to_string(exp)] = coeff.str();
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object())
    throw std::invalid_argument("laurent: expected an object of exp -> coeff");
  LaurentPoly p;
  for (const auto& [key, val] : j.items()) {
    int exp = 0;
    try {
      exp = std::stoi(key);
    } catch (const std::exception&) {
      throw std::invalid_argument("laurent: bad exponent key '" + key + "'");
    }
    Int c;
    try {
      c = val.is_string() ? Int(val.get<std::string>())
                          : Int(val.get<long long>());
    } catch (const std::exception&) {
      throw std::invalid_argument("laurent: bad coefficient at exponent " +
                                  key);
    }
    p += LaurentPoly::monomial(c, exp);
  }
  return p;
}

Json matrix_to_json(const ThetaMatrix& a) {
  Json rows = Json::array();
  for (int i = 1; i <= a.dim(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= a.dim(); ++j) row.push_back(a.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

ThetaMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("matrix: expected a nonempty array of rows");
  const std::size_t d = j.size();
  if (d % 2 != 0)
    throw std::invalid_argument("matrix: dimension must be even");
  std::vector<std::vector<int>> rows;
  rows.reserve(d);
  for (const Json& row : j) {
    if (!row.is_array() || row.size() != d)
      throw std::invalid_argument("matrix: expected square rows");
    std::vector<int> r;
    r.reserve(d);
    for (const Json& x : row) {
      if (!x.is_number_integer())
        throw std::invalid_argument("matrix: entries must be integers");
      r.push_back(x.get<int>());
    }
    rows.push_back(std::move(r));
  }
  return ThetaMatrix::from_rows(static_cast<int>(d) / 2, rows);
}

Json schur_to_json(const SchurElement& x) {
  Json out = Json::object();
  out["n"] = x.n();
  out["r"] = x.r();
  Json terms = Json::array();
  for (const auto& [a, c] : x.terms()) {
    Json t = Json::object();
    t["matrix"] = matrix_to_json(a);
    t["coeff"] = laurent_to_json(c);
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

Json tensor_to_json(const TensorVector& x) {
  Json out = Json::object();
  out["n"] = x.n();
  out["r"] = x.r();
  Json terms = Json::array();
  for (const auto& [idx, c] : x.terms()) {
    Json t = Json::object();
    t["index"] = idx;
    t["coeff"] = laurent_to_json(c);
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

Json params_to_json(const SuiteParams& p) {
  Json out = Json::object();
  out["n"] = p.n;
  out["r"] = p.r;
  out["mmax"] = p.mmax;
  out["jbox"] = p.jbox;
  out["amax"] = p.amax;
  out["rset"] = p.rset;
  out["perturb"] = p.perturb;
  return out;
}

Json report_to_json(const SuiteReport& rep) {
  Json out = Json::object();
  out["suite"] = rep.suite;
  out["params"] = params_to_json(rep.params);
  out["cases"] = rep.cases;
  out["failed"] = rep.failed;
  Json fs = Json::array();
  for (const CaseFailure& f : rep.failures) {
    Json jf = Json::object();
    jf["input"] = f.input;
    jf["lhs"] = f.lhs;
    jf["rhs"] = f.rhs;
    fs.push_back(std::move(jf));
  }
  out["failures"] = std::move(fs);
  out["ok"] = rep.ok();
  out["wall_ms"] = rep.wall_ms;
  return out;
}

std::vector<int> int_vector_from_json(const Json& j) {
  if (!j.is_array())
    throw std::invalid_argument("expected a JSON array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (const Json& x : j) {
    if (!x.is_number_integer())
      throw std::invalid_argument("expected integer array entries");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace ischur
