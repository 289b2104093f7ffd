#include "genus1/json_io.hpp"

namespace g1 {

json scalar_to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const Field& f, const json& j) {
  if (j.is_number_integer()) return Scalar(f, j.get<long>());
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  fail("invalid-argument", "scalar must be an integer or a string literal");
}

json poly_to_json(const Poly& p) {
  json a = json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(scalar_to_json(p.coeff(i)));
  return a;
}

Poly poly_from_json(const Field& f, const json& j) {
  if (!j.is_array()) fail("invalid-argument", "polynomial must be a coefficient array");
  std::vector<Scalar> c;
  for (const auto& e : j) c.push_back(scalar_from_json(f, e));
  return Poly(f, std::move(c));
}

json laurent_matrix_to_json(const LaurentMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int jc = 0; jc < m.cols(); ++jc) {
      json terms = json::object();
      for (const auto& [e, c] : m.at(i, jc).terms()) terms[std::to_string(e)] = scalar_to_json(c);
      row.push_back(terms);
    }
    rows.push_back(row);
  }
  return rows;
}

LaurentMatrix laurent_matrix_from_json(const Field& f, const json& j) {
  if (!j.is_array() || j.empty()) fail("invalid-argument", "matrix must be a nonempty array of rows");
  int rows = static_cast<int>(j.size());
  int cols = static_cast<int>(j.at(0).size());
  LaurentMatrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const auto& row = j.at(static_cast<size_t>(i));
    if (static_cast<int>(row.size()) != cols) fail("invalid-argument", "ragged matrix rows");
    for (int c = 0; c < cols; ++c) {
      const auto& cell = row.at(static_cast<size_t>(c));
      if (!cell.is_object()) fail("invalid-argument", "entries must map exponents to coefficients");
      LaurentPoly p(f);
      for (auto it = cell.begin(); it != cell.end(); ++it) {
        int e = 0;
        try {
          e = std::stoi(it.key());
        } catch (...) {
          fail("invalid-argument", "exponent keys must be integers: " + it.key());
        }
        p.set(e, p.coeff(e) + scalar_from_json(f, it.value()));
      }
      m.at(i, c) = p;
    }
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(i, c)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Field& f, const json& j) {
  if (!j.is_array() || j.empty()) fail("invalid-argument", "matrix must be a nonempty array of rows");
  int rows = static_cast<int>(j.size());
  int cols = static_cast<int>(j.at(0).size());
  Matrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const auto& row = j.at(static_cast<size_t>(i));
    if (static_cast<int>(row.size()) != cols) fail("invalid-argument", "ragged matrix rows");
    for (int c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(f, row.at(static_cast<size_t>(c)));
  }
  return m;
}

json charge_to_json(const Charge& c) { return json{{"rank", c.rank}, {"degree", c.degree}}; }

json descriptor_to_json(const Descriptor& d) {
  json j;
  if (std::holds_alternative<BandDescriptor>(d)) {
    const auto& b = std::get<BandDescriptor>(d);
    j["kind"] = "band";
    j["curve"] = json{{"cycle", b.n}};
    j["d"] = b.d;
    j["m"] = b.m;
    j["p"] = poly_to_json(b.p);
  } else {
    const auto& s = std::get<StringDescriptor>(d);
    j["kind"] = "string";
    j["curve"] = json{{"cycle", s.n}};
    j["d"] = s.d;
    if (s.n > 1) j["f"] = s.f;  // no choice of start component on E_1
  }
  return j;
}

namespace {

int cycle_size(const json& j) {
  if (!j.contains("curve") || !j.at("curve").contains("cycle"))
    fail("invalid-argument", "descriptor needs \"curve\": {\"cycle\": n}");
  return j.at("curve").at("cycle").get<int>();
}

}  // namespace

Descriptor descriptor_from_json(const Field& f, const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    fail("invalid-argument", "descriptor must be an object with a \"kind\"");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "band") {
    auto d = j.at("d").get<std::vector<int>>();
    int m = j.value("m", 1);
    Poly p = j.contains("p") ? poly_from_json(f, j.at("p"))
                             : Poly::linear_minus(scalar_from_json(f, j.at("lambda")));
    return BandDescriptor(cycle_size(j), std::move(d), m, std::move(p));
  }
  if (kind == "string") {
    auto d = j.at("d").get<std::vector<int>>();
    return StringDescriptor(cycle_size(j), std::move(d), j.value("f", 1), f);
  }
  fail("invalid-argument", "unknown descriptor kind: " + kind);
}

json module_to_json(const TorsionModuleDescriptor& t) {
  json j;
  j["kind"] = "module";
  j["family"] = t.family == TorsionModuleDescriptor::Family::M ? "M" : "N";
  j["n"] = t.n;
  j["m"] = t.m;
  if (t.family == TorsionModuleDescriptor::Family::M) j["lambda"] = scalar_to_json(t.lambda);
  return j;
}

TorsionModuleDescriptor module_from_json(const Field& f, const json& j) {
  std::string family = j.at("family").get<std::string>();
  int n = j.at("n").get<int>(), m = j.at("m").get<int>();
  if (family == "M")
    return TorsionModuleDescriptor::make_m(n, m, scalar_from_json(f, j.at("lambda")));
  if (family == "N") return TorsionModuleDescriptor::make_n(n, m, f);
  fail("invalid-argument", "module family must be M or N");
}

json nodal_triple_to_json(const NodalTriple& t) {
  json j;
  j["kind"] = "nodal-triple";
  j["curve"] = json{{"cycle", t.n()}};
  j["node_cols"] = t.node_cols();
  json comps = json::array();
  for (const auto& c : t.comps()) {
    comps.push_back(json{{"rows", c.row_degrees},
                         {"at_zero", matrix_to_json(c.at_zero)},
                         {"at_infinity", matrix_to_json(c.at_infty)}});
  }
  j["components"] = comps;
  return j;
}

NodalTriple nodal_triple_from_json(const Field& f, const json& j) {
  NodalTriple t(f, cycle_size(j));
  t.node_cols() = j.at("node_cols").get<std::vector<int>>();
  for (const auto& c : j.at("components")) {
    t.comps().push_back(NodalComponent{c.at("rows").get<std::vector<int>>(),
                                       matrix_from_json(f, c.at("at_zero")),
                                       matrix_from_json(f, c.at("at_infinity"))});
  }
  t.validate();
  return t;
}

json cuspidal_triple_to_json(const CuspidalTriple& t) {
  json j;
  j["kind"] = "cuspidal-triple";
  j["rows"] = t.row_degrees;
  j["i0"] = matrix_to_json(t.i0);
  j["i_eps"] = matrix_to_json(t.ieps);
  return j;
}

CuspidalTriple cuspidal_triple_from_json(const Field& f, const json& j) {
  CuspidalTriple t(f, j.at("rows").get<std::vector<int>>(), matrix_from_json(f, j.at("i0")),
                   matrix_from_json(f, j.at("i_eps")));
  t.validate();
  return t;
}

json decomposition_to_json(const DecompositionResult& r) {
  json summands = json::array();
  for (const auto& [d, mult] : r.summands)
    summands.push_back(json{{"descriptor", descriptor_to_json(d)},
                            {"multiplicity", mult},
                            {"charge", charge_to_json(charge_of(d))}});
  return json{{"summands", summands}, {"total_charge", charge_to_json(r.total())}};
}

}  // namespace g1
