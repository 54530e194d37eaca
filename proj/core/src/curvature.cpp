#include "klk/curvature.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "klk/errors.hpp"
#include "klk/serialize.hpp"

namespace klk {

std::string kind_name(CurvKind k) { return k == CurvKind::Delta ? "Delta" : "N"; }

CurvKind parse_curv_kind(const std::string& s) {
  if (s == "Delta") return CurvKind::Delta;
  if (s == "N") return CurvKind::N;
  throw ParseError("unknown curvature basis symbol '" + s + "'", 0);
}

bool valid_delta_index(int n, int k, int q) { return valid_mu_index(n, k, q); }

bool valid_N_index(int n, int k, int q) {
  return k > 0 && k < 2 * n && q >= std::max(0, k - n + 1) && 2 * q <= k - 1;
}

bool valid_curv_key(int n, const CurvKey& key) {
  return key.kind == CurvKind::Delta ? valid_delta_index(n, key.k, key.q) : valid_N_index(n, key.k, key.q);
}

std::vector<CurvKey> CurvIndexSet::all() const {
  std::vector<CurvKey> out;
  for (const auto& [k, q] : delta) out.push_back({CurvKind::Delta, k, q});
  for (const auto& [k, q] : N) out.push_back({CurvKind::N, k, q});
  return out;
}

int curv_dim(int n, int k) {
  if (k < 0 || k > 2 * n) return 0;
  if (k == 2 * n) return 1;
  return std::min(k, 2 * n - k - 1) + 1;
}

CurvIndexSet curv_basis(int n) {
  if (n < 1) throw DomainError("Curv^{U(n)} needs n >= 1");
  CurvIndexSet s;
  s.n = n;
  for (int k = 0; k <= 2 * n; ++k) {
    int count = 0;
    for (int q = 0; 2 * q <= k; ++q) {
      if (valid_delta_index(n, k, q)) {
        s.delta.emplace_back(k, q);
        ++count;
      }
      if (valid_N_index(n, k, q)) {
        s.N.emplace_back(k, q);
        ++count;
      }
    }
    if (count != curv_dim(n, k))
      throw ConsistencyError("Curv basis has " + std::to_string(count) + " elements in degree " + std::to_string(k));
  }
  return s;
}

void CurvElement::add(const CurvKey& key, const Scalar& c) {
  if (c.is_zero()) return;
  if (!valid_curv_key(n, key)) throw DomainError("invalid curvature measure index");
  auto [it, inserted] = coords.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coords.erase(it);
  }
}

Scalar CurvElement::coeff(const CurvKey& key) const {
  auto it = coords.find(key);
  return it == coords.end() ? Scalar() : it->second;
}

CurvElement& CurvElement::operator+=(const CurvElement& o) {
  if (o.n != n) throw DimensionError("curvature measures on different spaces");
  for (const auto& [k, c] : o.coords) add(k, c);
  return *this;
}

CurvElement& CurvElement::operator*=(const Scalar& c) {
  if (c.is_zero()) coords.clear();
  for (auto& [k, v] : coords) v *= c;
  return *this;
}

CurvElement operator+(CurvElement a, const CurvElement& b) { return a += b; }
CurvElement operator-(CurvElement a, const CurvElement& b) {
  CurvElement nb = b;
  nb *= Scalar(-1L);
  return a += nb;
}
CurvElement operator*(const Scalar& c, CurvElement a) { return a *= c; }

CurvElement curv_delta(int n, int k, int q) {
  if (!valid_delta_index(n, k, q)) throw DomainError("invalid Delta index");
  CurvElement x{n, {}};
  x.add({CurvKind::Delta, k, q}, Scalar(1L));
  return x;
}

CurvElement curv_N(int n, int k, int q) {
  if (!valid_N_index(n, k, q)) throw DomainError("invalid N index");
  CurvElement x{n, {}};
  x.add({CurvKind::N, k, q}, Scalar(1L));
  return x;
}

CurvElement curv_B(int n, int k, int q) { return curv_delta(n, k, q) - curv_N(n, k, q); }

FlatValuation glob_flat(const CurvElement& x) {
  FlatValuation out{x.n, FlatBasis::Mu, {}};
  for (const auto& [key, c] : x.coords)
    if (key.kind == CurvKind::Delta) out.add({key.k, key.q}, c);
  return out;
}

CurvedValuation glob_curved(const CurvElement& x) {
  CurvedValuation out{x.n, CurvedBasis::MuLambda, {}};
  for (const auto& [key, c] : x.coords) {
    if (key.kind == CurvKind::Delta) out.add({key.k, key.q}, c);
    if (valid_mu_index(x.n, key.k + 2, key.q + 1))
      out.add({key.k + 2, key.q + 1}, Scalar::monomial(Rational(-(key.q + 1)), -1, 1) * c);
  }
  return out;
}

namespace {

Scalar scaled_derivative(const PowerSeries2& s, int i, int j, int r) {
  Rational d = s.derivative_at_zero(i, j);
  if (d == 0) return Scalar();
  if (i + j < r) throw ConsistencyError("curvature transfer coefficient with a negative lambda power");
  return Scalar::monomial(d, r - i - j, i + j - r);
}

// f_{l,q} * (1 - eta)^{-1} * eta^{eta_shift}, rational part
PowerSeries2 h_series(int l, int q, int eta_shift, int order) {
  int r = l / 2, eps = l % 2;
  Rational pre = Rational(binomial(r, q)) / Rational(factorial(r));
  Rational half = make_rational(1, 2);
  std::vector<AffineFactor> f{{1, 1, Rational(-r - eps + q) - half}, {0, 1, Rational(-r) - half - 1}};
  PowerSeries2 s = series_expand(f, r - q, q + eta_shift, order);
  s *= pre;
  return s;
}

}  // namespace

CurvElement R_lambda_delta(int n, int l, int q) {
  if (!valid_delta_index(n, l, q)) throw DomainError("invalid Delta index");
  int r = l / 2, eps = l % 2;
  PowerSeries2 h = h_series(l, q, 0, (2 * n - eps) / 2);
  CurvElement out{n, {}};
  for (const auto& [key, c] : h.coeffs()) {
    auto [i, j] = key;
    int K = 2 * (i + j) + eps;
    if (valid_delta_index(n, K, j)) out.add({CurvKind::Delta, K, j}, scaled_derivative(h, i, j, r));
  }
  return out;
}

CurvElement R_lambda_N(int n, int l, int q) {
  if (!valid_N_index(n, l, q)) throw DomainError("invalid N index");
  int r = l / 2, eps = l % 2;
  int order = (2 * n - eps) / 2;
  CurvElement out{n, {}};
  PowerSeries2 eh = h_series(l, q, 1, order);
  for (const auto& [key, c] : eh.coeffs()) {
    auto [i, j] = key;
    int K = 2 * (i + j) + eps;
    if (valid_delta_index(n, K, j)) out.add({CurvKind::Delta, K, j}, scaled_derivative(eh, i, j, r));
  }
  // (1 - eta) h_{l,q} = f_{l,q}
  PowerSeries2 f = r_mu_series(l, q, order);
  for (const auto& [key, c] : f.coeffs()) {
    auto [i, j] = key;
    int K = 2 * (i + j) + eps;
    if (valid_N_index(n, K, j)) {
      out.add({CurvKind::N, K, j}, scaled_derivative(f, i, j, r));
    } else if (K == 2 * j && K < 2 * n) {
      throw ConsistencyError("nonzero coefficient on N_{2p,p}");
    }
  }
  return out;
}

CurvElement lk_measure(int n, int k) {
  if (k < 0 || k > 2 * n) throw DomainError("Lipschitz-Killing degree out of range");
  CurvElement out{n, {}};
  for (const auto& [kk, p] : mu_indices(n, k)) out.add({CurvKind::Delta, kk, p}, Scalar(1L));
  return out;
}

// ---- module table ----

ModuleTable::ModuleTable(int n, std::map<std::string, std::map<CurvKey, CurvElement>> actions)
    : n_(n), actions_(std::move(actions)) {
  for (const auto& [g, m] : actions_)
    if (g != "t" && g != "sigma") throw ModuleUnavailableError("unknown generator '" + g + "'");
}

CurvElement ModuleTable::act(const std::string& generator, const CurvElement& x) const {
  if (x.n != n_) throw DimensionError("module table is for a different n");
  CurvElement out{n_, {}};
  auto g = actions_.find(generator);
  if (g == actions_.end()) {
    if (generator != "t" && generator != "sigma") throw DomainError("unknown generator '" + generator + "'");
    return out;
  }
  for (const auto& [key, c] : x.coords) {
    auto it = g->second.find(key);
    if (it == g->second.end()) continue;
    CurvElement img = it->second;
    img *= c;
    out += img;
  }
  return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line, long lineno) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (quoted) throw ParseError("unterminated quote", lineno);
  out.push_back(cur);
  return out;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

int parse_int_field(const std::string& s, long lineno) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw ParseError("bad integer '" + s + "'", lineno);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("bad integer '" + s + "'", lineno);
  }
}

int generator_degree(const std::string& g) { return g == "t" ? 1 : 2; }

}  // namespace

ModuleTable ModuleTable::from_csv(const std::string& text) {
  try {
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    int n = 0;
    std::map<std::string, std::map<CurvKey, CurvElement>> actions;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      if (line[0] == '#') {
        auto pos = line.find("n=");
        if (pos != std::string::npos) n = parse_int_field(line.substr(pos + 2), lineno);
        continue;
      }
      if (line.rfind("generator,", 0) == 0) continue;
      if (n < 1) throw ParseError("missing '# n=<N>' header before data", lineno);
      auto f = split_csv_line(line, lineno);
      if (f.size() != 8) throw ParseError("expected 8 fields, got " + std::to_string(f.size()), lineno);
      const std::string& g = f[0];
      if (g != "t" && g != "sigma") throw ParseError("unknown generator '" + g + "'", lineno);
      CurvKey in_key{parse_curv_kind(f[1]), parse_int_field(f[2], lineno), parse_int_field(f[3], lineno)};
      CurvKey out_key{parse_curv_kind(f[4]), parse_int_field(f[5], lineno), parse_int_field(f[6], lineno)};
      if (!valid_curv_key(n, in_key) || !valid_curv_key(n, out_key))
        throw ParseError("index out of range", lineno);
      if (out_key.k != in_key.k + generator_degree(g))
        throw ParseError("row is not degree additive", lineno);
      Scalar c = scalar_from_json(f[7]);
      auto [it, inserted] = actions[g].try_emplace(in_key, CurvElement{n, {}});
      it->second.add(out_key, c);
    }
    if (n < 1) throw ParseError("missing '# n=<N>' header", lineno);
    return ModuleTable(n, std::move(actions));
  } catch (const ParseError& e) {
    throw ModuleUnavailableError(std::string("module table: ") + e.what() + " (line " + std::to_string(e.location) + ")");
  } catch (const Error& e) {
    throw ModuleUnavailableError(std::string("module table: ") + e.what());
  }
}

ModuleTable ModuleTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModuleUnavailableError("cannot open module table '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return from_csv(buf.str());
}

std::string ModuleTable::to_csv() const {
  std::ostringstream out;
  out << "# n=" << n_ << "\n";
  out << "generator,inBasis,inK,inQ,outBasis,outK,outQ,coefficient\n";
  for (const auto& [g, m] : actions_)
    for (const auto& [in_key, img] : m)
      for (const auto& [out_key, c] : img.coords)
        out << g << ',' << kind_name(in_key.kind) << ',' << in_key.k << ',' << in_key.q << ','
            << kind_name(out_key.kind) << ',' << out_key.k << ',' << out_key.q << ',' << csv_quote(to_json(c))
            << "\n";
  return out.str();
}

void ModuleTable::validate() const {
  auto fail = [](const std::string& what, const CurvKey& key) {
    throw ModuleUnavailableError("module table: " + what + " at " + kind_name(key.kind) + "_{" +
                                 std::to_string(key.k) + "," + std::to_string(key.q) + "}");
  };
  FlatValuation t = flat_monomial(n_, 0, 1, FlatBasis::Mu);
  FlatValuation s = flat_monomial(n_, 1, 0, FlatBasis::Mu);
  GradedPoly rel1 = f_poly(n_ + 1), rel2 = f_poly(n_ + 2);
  auto apply_poly = [&](const GradedPoly& p, const CurvElement& x) {
    CurvElement out{n_, {}};
    for (const auto& [key, c] : p.terms()) {
      CurvElement y = x;
      for (int i = 0; i < key.first; ++i) y = act("sigma", y);
      for (int i = 0; i < key.second; ++i) y = act("t", y);
      y *= Scalar(c);
      out += y;
    }
    return out;
  };
  for (const auto& key : curv_basis(n_).all()) {
    CurvElement x{n_, {}};
    x.add(key, Scalar(1L));
    CurvElement tx = act("t", x), sx = act("sigma", x);
    for (const auto& [k, c] : tx.coords)
      if (k.k != key.k + 1) fail("t is not degree additive", key);
    for (const auto& [k, c] : sx.coords)
      if (k.k != key.k + 2) fail("sigma is not degree additive", key);
    if (act("t", sx) != act("sigma", tx)) fail("generators do not commute", key);
    if (glob_flat(tx) != val_multiply(t, glob_flat(x))) fail("t action is not glob compatible", key);
    if (glob_flat(sx) != val_multiply(s, glob_flat(x))) fail("sigma action is not glob compatible", key);
    if (!apply_poly(rel1, x).is_zero() || !apply_poly(rel2, x).is_zero()) fail("relations do not act as zero", key);
  }
}

std::optional<ModuleTable> module_table_from_env(std::string* warning) {
  const char* path = std::getenv("KLK_MODULE_TABLE");
  if (!path || !*path) {
    if (warning) *warning = "KLK_MODULE_TABLE not set";
    return std::nullopt;
  }
  try {
    ModuleTable t = ModuleTable::load(path);
    t.validate();
    return t;
  } catch (const ModuleUnavailableError& e) {
    if (warning) *warning = e.what();
    return std::nullopt;
  }
}

ModuleTable synthetic_module_table(int n) {
  std::map<std::string, std::map<CurvKey, CurvElement>> actions;
  FlatValuation gens[2] = {flat_monomial(n, 0, 1, FlatBasis::Mu), flat_monomial(n, 1, 0, FlatBasis::Mu)};
  const char* names[2] = {"t", "sigma"};
  for (int g = 0; g < 2; ++g)
    for (const auto& key : curv_basis(n).all()) {
      if (key.kind != CurvKind::Delta) continue;
      FlatValuation img = val_multiply(gens[g], mu_element(n, key.k, key.q));
      CurvElement lift{n, {}};
      for (const auto& [idx, c] : img.coords) lift.add({CurvKind::Delta, idx.first, idx.second}, c);
      if (!lift.is_zero()) actions[names[g]].emplace(key, lift);
    }
  return ModuleTable(n, std::move(actions));
}

CurvElement module_multiply(const FlatValuation& phi, const CurvElement& x, const ModuleTable& table) {
  if (phi.n != table.n() || x.n != table.n()) throw DimensionError("module product on different spaces");
  CurvElement out{x.n, {}};
  for (const auto& [key, c] : basis_convert(phi, FlatBasis::Monomial).coords) {
    CurvElement y = x;
    for (int i = 0; i < key.first; ++i) y = table.act("sigma", y);
    for (int i = 0; i < key.second; ++i) y = table.act("t", y);
    y *= c;
    out += y;
  }
  return out;
}

void CurvValTensor::add(const CurvKey& a, const Index& b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coords.emplace(std::pair{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coords.erase(it);
  }
}

CurvValTensor semi_local_kbar(const CurvElement& x, const ModuleTable& table) {
  const auto& P = pd_pairing(x.n);
  std::size_t D = P.basis.size();
  CurvValTensor out{x.n, {}};
  // sum_j (b_j . x) (x) pd^{-1}(b_j^*), pd^{-1}(b_j^*) = sum_i (P^{-1})_{ji} b_i
  for (std::size_t j = 0; j < D; ++j) {
    CurvElement bx = module_multiply(mu_element(x.n, P.basis[j].first, P.basis[j].second), x, table);
    for (const auto& [key, c] : bx.coords)
      for (std::size_t i = 0; i < D; ++i)
        if (!P.inverse[j][i].is_zero()) out.add(key, P.basis[i], c * P.inverse[j][i]);
  }
  return out;
}

}  // namespace klk
