#include "klk/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "klk/errors.hpp"

namespace klk {

using json = nlohmann::ordered_json;

namespace {

json scalar_json(const Scalar& x) {
  json terms = json::array();
  for (const auto& [key, c] : x.terms())
    terms.push_back(json{{"pi", key.first}, {"lambda", key.second}, {"coeff", to_string(c)}});
  return json{{"terms", terms}};
}

Rational rational_field(const json& j) {
  if (!j.is_string()) throw ParseError("rational must be a string \"a/b\"", 0);
  return parse_rational(j.get<std::string>());
}

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) throw ParseError(std::string("missing integer field '") + key + "'", 0);
  return j.at(key).get<int>();
}

Scalar scalar_of(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) throw ParseError("scalar needs a 'terms' array", 0);
  Scalar::Terms terms;
  for (const auto& t : j.at("terms")) {
    int pi = int_field(t, "pi"), lam = int_field(t, "lambda");
    if (lam < 0) throw ParseError("negative lambda power", 0);
    if (!t.contains("coeff")) throw ParseError("missing 'coeff'", 0);
    Rational c = rational_field(t.at("coeff"));
    if (c == 0) continue;
    auto [it, inserted] = terms.emplace(Scalar::Key{pi, lam}, c);
    if (!inserted) throw ParseError("repeated scalar term", 0);
  }
  return Scalar::from_terms(terms);
}

template <class F>
auto parse_with(std::string_view text, F&& f) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), static_cast<long>(e.byte));
  }
  try {
    return f(j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("unexpected JSON shape: ") + e.what(), 0);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), 0);
  }
}

json coords_json(const std::map<Index, Scalar>& coords, bool monomial) {
  json arr = json::array();
  for (const auto& [idx, c] : coords) {
    if (monomial)
      arr.push_back(json{{"s", idx.first}, {"t", idx.second}, {"value", scalar_json(c)}});
    else
      arr.push_back(json{{"k", idx.first}, {"p", idx.second}, {"value", scalar_json(c)}});
  }
  return arr;
}

std::map<Index, Scalar> coords_of(const json& arr, bool monomial) {
  if (!arr.is_array()) throw ParseError("'coords' must be an array", 0);
  std::map<Index, Scalar> out;
  for (const auto& e : arr) {
    Index idx = monomial ? Index{int_field(e, "s"), int_field(e, "t")} : Index{int_field(e, "k"), int_field(e, "p")};
    Scalar v = scalar_of(e.at("value"));
    if (v.is_zero()) continue;
    if (!out.emplace(idx, v).second) throw ParseError("repeated coordinate", 0);
  }
  return out;
}

}  // namespace

std::string to_json(const Scalar& x) { return scalar_json(x).dump(); }

Scalar scalar_from_json(std::string_view text) {
  return parse_with(text, [](const json& j) { return scalar_of(j); });
}

std::string to_json(const DoubleForm& x) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> keys;
  std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> vals;
  for (const auto& [key, c] : x.entries()) vals.emplace(std::pair{mask_to_indices(key.first), mask_to_indices(key.second)}, c);
  json entries = json::array();
  for (const auto& [key, c] : vals) entries.push_back(json{{"I", key.first}, {"J", key.second}, {"c", to_string(c)}});
  return json{{"n", x.n()}, {"p", x.p()}, {"q", x.q()}, {"entries", entries}}.dump();
}

DoubleForm double_form_from_json(std::string_view text) {
  return parse_with(text, [](const json& j) {
    DoubleForm f(int_field(j, "n"), int_field(j, "p"), int_field(j, "q"));
    for (const auto& e : j.at("entries")) {
      auto I = e.at("I").get<std::vector<int>>();
      auto J = e.at("J").get<std::vector<int>>();
      if (static_cast<int>(I.size()) != f.p() || static_cast<int>(J.size()) != f.q())
        throw ParseError("entry arity differs from the form type", 0);
      if (f.get(I, J) != 0) throw ParseError("repeated entry", 0);
      f.set(I, J, rational_field(e.at("c")));
    }
    return f;
  });
}

std::string to_json(const GradedPoly& x) {
  json terms = json::array();
  for (const auto& [key, c] : x.terms()) terms.push_back(json{{"s", key.first}, {"t", key.second}, {"c", to_string(c)}});
  return json{{"terms", terms}}.dump();
}

GradedPoly graded_poly_from_json(std::string_view text) {
  return parse_with(text, [](const json& j) {
    GradedPoly p;
    for (const auto& t : j.at("terms")) {
      int a = int_field(t, "s"), b = int_field(t, "t");
      if (a < 0 || b < 0) throw ParseError("negative exponent", 0);
      p.add(a, b, rational_field(t.at("c")));
    }
    return p;
  });
}

std::string to_json(const FlatValuation& x) {
  return json{{"n", x.n}, {"basis", basis_name(x.basis)}, {"coords", coords_json(x.coords, x.basis == FlatBasis::Monomial)}}
      .dump();
}

FlatValuation flat_valuation_from_json(std::string_view text) {
  return parse_with(text, [](const json& j) {
    FlatValuation x;
    x.n = int_field(j, "n");
    if (x.n < 1) throw ParseError("n must be positive", 0);
    x.basis = parse_flat_basis(j.at("basis").get<std::string>());
    x.coords = coords_of(j.at("coords"), x.basis == FlatBasis::Monomial);
    for (const auto& [idx, c] : x.coords) {
      bool ok = x.basis == FlatBasis::Monomial ? idx.first >= 0 && idx.second >= 0 && 2 * idx.first + idx.second <= 2 * x.n
                                               : valid_mu_index(x.n, idx.first, idx.second);
      if (!ok) throw ParseError("coordinate index out of range", 0);
    }
    return x;
  });
}

std::string to_json(const CurvedValuation& x) {
  return json{{"n", x.n}, {"basis", basis_name(x.basis)}, {"coords", coords_json(x.coords, false)}}.dump();
}

CurvedValuation curved_valuation_from_json(std::string_view text) {
  return parse_with(text, [](const json& j) {
    CurvedValuation x;
    x.n = int_field(j, "n");
    x.basis = parse_curved_basis(j.at("basis").get<std::string>());
    x.coords = coords_of(j.at("coords"), false);
    for (const auto& [idx, c] : x.coords)
      if (!valid_mu_index(x.n, idx.first, idx.second)) throw ParseError("coordinate index out of range", 0);
    return x;
  });
}

std::string to_json(const CurvElement& x) {
  json arr = json::array();
  for (const auto& [key, c] : x.coords)
    arr.push_back(json{{"basis", kind_name(key.kind)}, {"k", key.k}, {"q", key.q}, {"value", scalar_json(c)}});
  return json{{"n", x.n}, {"coords", arr}}.dump();
}

CurvElement curv_element_from_json(std::string_view text) {
  return parse_with(text, [](const json& j) {
    CurvElement x;
    x.n = int_field(j, "n");
    for (const auto& e : j.at("coords")) {
      CurvKey key{parse_curv_kind(e.at("basis").get<std::string>()), int_field(e, "k"), int_field(e, "q")};
      if (!valid_curv_key(x.n, key)) throw ParseError("curvature index out of range", 0);
      if (x.coords.count(key)) throw ParseError("repeated coordinate", 0);
      x.add(key, scalar_of(e.at("value")));
    }
    return x;
  });
}

std::string to_json(const ValTensor& x) {
  json arr = json::array();
  for (const auto& [key, c] : x.coords)
    arr.push_back(json{{"left", {key.first.first, key.first.second}},
                       {"right", {key.second.first, key.second.second}},
                       {"value", scalar_json(c)}});
  return json{{"n", x.n}, {"left_basis", x.left}, {"right_basis", x.right}, {"coords", arr}}.dump();
}

std::string to_json(const CurvValTensor& x) {
  json arr = json::array();
  for (const auto& [key, c] : x.coords)
    arr.push_back(json{{"curv", {{"basis", kind_name(key.first.kind)}, {"k", key.first.k}, {"q", key.first.q}}},
                       {"mu", {key.second.first, key.second.second}},
                       {"value", scalar_json(c)}});
  return json{{"n", x.n}, {"coords", arr}}.dump();
}

std::string matrix_to_csv(const RMatrix& m) {
  std::ostringstream out;
  out << "row,col,value\n";
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out << i << ',' << j << ',' << to_string(m[i][j]) << '\n';
  return out.str();
}

RMatrix matrix_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  long lineno = 0;
  std::map<std::pair<std::size_t, std::size_t>, Rational> cells;
  std::size_t rows = 0, cols = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "row,col,value") continue;
    std::istringstream ls(line);
    std::string a, b, v;
    if (!std::getline(ls, a, ',') || !std::getline(ls, b, ',') || !std::getline(ls, v))
      throw ParseError("expected row,col,value", lineno);
    try {
      std::size_t i = std::stoul(a), j = std::stoul(b);
      cells[{i, j}] = parse_rational(v);
      rows = std::max(rows, i + 1);
      cols = std::max(cols, j + 1);
    } catch (const std::logic_error&) {
      throw ParseError("bad matrix cell", lineno);
    } catch (const ParseError&) {
      throw ParseError("bad rational", lineno);
    }
  }
  RMatrix m = zero_matrix(rows, cols);
  if (cells.size() != rows * cols) throw ParseError("matrix has missing cells", lineno);
  for (const auto& [ij, c] : cells) m[ij.first][ij.second] = c;
  return m;
}

}  // namespace klk
