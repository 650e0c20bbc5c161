#include "trsk/json_io.hpp"

namespace trsk {

namespace {

Rat rat_from_string(const std::string& text) {
  if (text.empty()) fail(Errc::InvalidArgument, "empty rational literal");
  try {
    size_t slash = text.find('/');
    if (slash == std::string::npos) return Rat(Int(text));
    return Rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::InvalidArgument, "bad rational literal '" + text + "'");
  }
}

Algebra algebra_from_json(const Json& j) {
  std::string name = j.value("algebra", "");
  if (name == "rational") return Algebra::Rational;
  if (name == "maxplus") return Algebra::MaxPlus;
  fail(Errc::InvalidArgument, "algebra field must be \"rational\" or \"maxplus\"");
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  if (s.algebra() == Algebra::Rational) return s.str();
  const Rat& v = s.payload();
  if (denominator(v) == 1) {
    Int num = numerator(v);
    if (num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max())
      return static_cast<std::int64_t>(num);
  }
  return s.str();
}

Scalar scalar_from_json(const Json& j, Algebra alg) {
  Rat v;
  if (j.is_string()) {
    v = rat_from_string(j.get<std::string>());
  } else if (j.is_number_integer()) {
    v = Rat(j.get<std::int64_t>());
  } else {
    fail(Errc::InvalidArgument, "scalar must be an integer or a \"num/den\" string");
  }
  return alg == Algebra::Rational ? Scalar::from_rational(v) : Scalar::max_plus(v);
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 1; i <= m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"algebra", to_string(m.algebra())}, {"rows", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j) {
  Algebra alg = algebra_from_json(j);
  if (!j.contains("rows") || !j["rows"].is_array())
    fail(Errc::InvalidArgument, "matrix needs a \"rows\" array");
  const Json& rows = j["rows"];
  int m = static_cast<int>(rows.size());
  int n = m == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix x(alg, m, n);
  for (int i = 1; i <= m; ++i) {
    if (static_cast<int>(rows[i - 1].size()) != n)
      fail(Errc::InvalidArgument, "ragged matrix rows");
    for (int jj = 1; jj <= n; ++jj) x.at(i, jj) = scalar_from_json(rows[i - 1][jj - 1], alg);
  }
  return x;
}

Json tableau_to_json(const TableauContent& t) {
  Json rows = Json::array();
  for (int i = 1; i <= t.rows(); ++i) {
    Json row = Json::array();
    for (int j = i; j <= t.n(); ++j) row.push_back(scalar_to_json(t.entry(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"algebra", to_string(t.algebra())}, {"n", t.n()}, {"rows", std::move(rows)}};
}

TableauContent tableau_from_json(const Json& j) {
  Algebra alg = algebra_from_json(j);
  if (!j.contains("rows") || !j["rows"].is_array())
    fail(Errc::InvalidArgument, "tableau needs a \"rows\" array");
  const Json& rows = j["rows"];
  int n;
  if (j.contains("n"))
    n = j["n"].get<int>();
  else if (!rows.empty())
    n = static_cast<int>(rows[0].size());
  else
    fail(Errc::InvalidArgument, "empty tableau needs an explicit \"n\"");
  TableauContent t(alg, n);
  for (int i = 1; i <= static_cast<int>(rows.size()); ++i) {
    const Json& row = rows[i - 1];
    RowVector full(n, Scalar::one(alg));
    int expected = n - i + 1;
    if (static_cast<int>(row.size()) == expected) {
      for (int k = 0; k < expected; ++k) full[i - 1 + k] = scalar_from_json(row[k], alg);
    } else if (static_cast<int>(row.size()) == n) {
      for (int k = 0; k < n; ++k) full[k] = scalar_from_json(row[k], alg);
    } else {
      fail(Errc::InvalidArgument, "tableau row " + std::to_string(i) + " has bad length");
    }
    t.push_row(std::move(full));
  }
  return t;
}

Json pair_to_json(const TableauPair& p) {
  Json shape = Json::array();
  for (const Scalar& s : p.U.shape()) shape.push_back(scalar_to_json(s));
  return Json{{"U", tableau_to_json(p.U)}, {"V", tableau_to_json(p.V)}, {"shape", std::move(shape)}};
}

TableauPair pair_from_json(const Json& j) {
  if (!j.contains("U") || !j.contains("V")) fail(Errc::InvalidArgument, "pair needs U and V");
  return {tableau_from_json(j["U"]), tableau_from_json(j["V"])};
}

Json report_to_json(const CheckReport& r) {
  Json items = Json::array();
  for (const CheckItem& it : r.items) {
    Json o{{"relation", it.relation}, {"pass", it.pass}};
    if (!it.lhs.empty()) o["lhs"] = it.lhs;
    if (!it.rhs.empty()) o["rhs"] = it.rhs;
    items.push_back(std::move(o));
  }
  return Json{{"pass", r.all_pass()}, {"checks", std::move(items)}};
}

std::string canonical_dump(const Json& j) { return j.dump(); }

}  // namespace trsk
