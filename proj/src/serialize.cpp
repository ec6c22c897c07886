#include "gz/serialize.hpp"

#include "gz/error.hpp"

namespace gz {

namespace {

template <class F>
auto guarded(const char* what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  return j;
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const ComplexList& v) {
  Json out = Json::array();
  for (Complex z : v) out.push_back(to_json(z));
  return out;
}

Json to_json(const Polynomial& p) { return to_json(p.coefficients()); }

Json to_json(const GZCoordinates& c) {
  Json out;
  out["n"] = c.n;
  out["basis"] = to_string(c.basis);
  out["values"] = to_json(c.values);
  return out;
}

Json to_json(const GZGroupElement& g) {
  Json out;
  out["n"] = g.n;
  out["params"] = to_json(g.params);
  out["restricted"] = g.restricted;
  return out;
}

Json to_json(const StratumSignature& s) {
  Json out = Json::array();
  for (const auto& r : s.roots) {
    Json e;
    e["root"] = to_json(r.root);
    e["multiplicities"] = r.multiplicities;
    out.push_back(std::move(e));
  }
  return out;
}

Json to_json(const VnPoint& p) {
  Json out;
  out["B"] = to_json(p.B);
  out["b"] = to_json(p.b);
  return out;
}

Json to_json(const CotangentPoint& x) {
  Json out;
  out["g"] = to_json(x.g);
  out["B"] = to_json(x.B);
  return out;
}

Json to_json(const MatricialData& f) {
  Json out;
  out["k"] = f.k.k;
  auto list = [](const std::vector<Matrix>& ms) {
    Json a = Json::array();
    for (const Matrix& m : ms) a.push_back(to_json(m));
    return a;
  };
  out["B_minus"] = list(f.B_minus);
  out["B_plus"] = list(f.B_plus);
  out["g"] = list(f.g);
  Json uw = Json::array();
  for (const UWPair& p : f.uw) {
    Json e;
    e["i"] = p.i;
    e["u"] = to_json(p.u);
    e["w"] = to_json(p.w);
    uw.push_back(std::move(e));
  }
  out["uw"] = std::move(uw);
  return out;
}

Json to_json(const LaxPath& path) {
  Json out;
  out["grid"] = path.grid;
  Json alpha = Json::array();
  Json beta = Json::array();
  for (const Matrix& m : path.alpha) alpha.push_back(to_json(m));
  for (const Matrix& m : path.beta) beta.push_back(to_json(m));
  out["alpha"] = std::move(alpha);
  out["beta"] = std::move(beta);
  return out;
}

Json to_json(const verify::VerificationReport& r) {
  Json out;
  out["test"] = r.test;
  out["samples"] = r.samples;
  out["max_defect"] = r.max_defect;
  out["tolerance"] = r.tolerance;
  out["pass"] = r.pass;
  return out;
}

Complex complex_from_json(const Json& j) {
  return guarded("complex", [&] {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
      return Complex(j[0].get<double>(), j[1].get<double>());
    throw ParseError("complex numbers must be [re, im] or a real number");
  });
}

Matrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    array(j, "matrix");
    const auto rows = static_cast<Eigen::Index>(j.size());
    if (rows == 0) return Matrix(0, 0);
    const auto cols = static_cast<Eigen::Index>(array(j[0], "matrix row").size());
    Matrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
      const Json& row = array(j[static_cast<std::size_t>(r)], "matrix row");
      if (static_cast<Eigen::Index>(row.size()) != cols) throw ParseError("matrix rows have different lengths");
      for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
    }
    return m;
  });
}

ComplexList complex_list_from_json(const Json& j) {
  array(j, "complex list");
  ComplexList out;
  for (const Json& e : j) out.push_back(complex_from_json(e));
  return out;
}

Vector vector_from_json(const Json& j) {
  const ComplexList v = complex_list_from_json(j);
  Vector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

Polynomial polynomial_from_json(const Json& j) { return Polynomial(complex_list_from_json(j)); }

GZCoordinates gz_coordinates_from_json(const Json& j) {
  return guarded("gz coordinates", [&] {
    GZCoordinates c;
    c.n = field(j, "n").get<int>();
    try {
      c.basis = basis_from_string(field(j, "basis").get<std::string>());
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
    c.values = complex_list_from_json(field(j, "values"));
    if (c.n < 1 || static_cast<int>(c.values.size()) != gz_count(c.n))
      throw ParseError("gz coordinates: values must have length n(n+1)/2");
    return c;
  });
}

GZGroupElement group_element_from_json(const Json& j, int n) {
  return guarded("group element", [&] {
    if (j.is_object()) {
      GZGroupElement g;
      g.n = j.contains("n") ? j.at("n").get<int>() : n;
      g.params = complex_list_from_json(field(j, "params"));
      g.restricted = j.value("restricted", false);
      if (g.n != n || static_cast<int>(g.params.size()) != gz_count(n))
        throw ParseError("group element: params must have length n(n+1)/2 for the matrix size");
      return g;
    }
    GZGroupElement g = GZGroupElement::zero(n);
    for (const Json& e : array(j, "group element")) {
      const GZIndex idx{field(e, "m").get<int>(), field(e, "i").get<int>()};
      if (idx.i < 1 || idx.i > idx.m || idx.m > n) throw ParseError("group element: index out of range");
      g[idx] += complex_from_json(field(e, "z"));
    }
    return g;
  });
}

StratumSignature stratum_signature_from_json(const Json& j) {
  return guarded("stratum signature", [&] {
    StratumSignature s;
    for (const Json& e : array(j, "stratum signature"))
      s.roots.push_back({complex_from_json(field(e, "root")), field(e, "multiplicities").get<std::vector<int>>()});
    return s;
  });
}

VnPoint vn_point_from_json(const Json& j) {
  return guarded("V_n point", [&] { return VnPoint{matrix_from_json(field(j, "B")), vector_from_json(field(j, "b"))}; });
}

CotangentPoint cotangent_point_from_json(const Json& j) {
  return guarded("cotangent point",
                 [&] { return CotangentPoint{matrix_from_json(field(j, "g")), matrix_from_json(field(j, "B"))}; });
}

MatricialData matricial_from_json(const Json& j) {
  return guarded("matricial data", [&] {
    MatricialData f;
    f.k.k = field(j, "k").get<std::vector<int>>();
    if (f.k.k.empty()) throw ParseError("matricial data: k must be nonempty");
    for (int v : f.k.k)
      if (v < 0) throw ParseError("matricial data: degrees must be nonnegative");
    auto list = [](const Json& a) {
      std::vector<Matrix> out;
      for (const Json& m : array(a, "matrix list")) out.push_back(matrix_from_json(m));
      return out;
    };
    f.B_minus = list(field(j, "B_minus"));
    f.B_plus = list(field(j, "B_plus"));
    f.g = list(field(j, "g"));
    if (j.contains("uw"))
      for (const Json& e : array(j.at("uw"), "uw"))
        f.uw.push_back({field(e, "i").get<int>(), vector_from_json(field(e, "u")), vector_from_json(field(e, "w"))});
    return f;
  });
}

LaxPath lax_path_from_json(const Json& j) {
  return guarded("Lax path", [&] {
    LaxPath path;
    path.grid = field(j, "grid").get<std::vector<double>>();
    for (const Json& m : array(field(j, "alpha"), "alpha")) path.alpha.push_back(matrix_from_json(m));
    for (const Json& m : array(field(j, "beta"), "beta")) path.beta.push_back(matrix_from_json(m));
    return path;
  });
}

verify::VerificationReport report_from_json(const Json& j) {
  return guarded("verification report", [&] {
    verify::VerificationReport r;
    r.test = field(j, "test").get<std::string>();
    r.samples = field(j, "samples").get<int>();
    r.max_defect = field(j, "max_defect").get<double>();
    r.tolerance = field(j, "tolerance").get<double>();
    r.pass = field(j, "pass").get<bool>();
    return r;
  });
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace gz
