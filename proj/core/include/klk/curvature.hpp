#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klk/space_forms.hpp"
#include "klk/valuations.hpp"

namespace klk {

enum class CurvKind { Delta = 0, N = 1 };
std::string kind_name(CurvKind k);  // "Delta" / "N"
CurvKind parse_curv_kind(const std::string& s);

struct CurvKey {
  CurvKind kind;
  int k;
  int q;
  auto operator<=>(const CurvKey&) const = default;
};

bool valid_delta_index(int n, int k, int q);  // same range as mu_{k,q}
bool valid_N_index(int n, int k, int q);      // 0 < k < 2n, max(0,k-n+1) <= q <= (k-1)/2
bool valid_curv_key(int n, const CurvKey& key);

struct CurvIndexSet {
  int n = 0;
  std::vector<Index> delta;
  std::vector<Index> N;
  std::vector<CurvKey> all() const;  // Delta first, then N
};
CurvIndexSet curv_basis(int n);
int curv_dim(int n, int k);  // min(k, 2n-k-1)+1 for k < 2n, 1 at k = 2n

struct CurvElement {
  int n = 0;
  std::map<CurvKey, Scalar> coords;

  void add(const CurvKey& key, const Scalar& c);
  Scalar coeff(const CurvKey& key) const;
  bool is_zero() const { return coords.empty(); }
  CurvElement& operator+=(const CurvElement& o);
  CurvElement& operator*=(const Scalar& c);
  friend bool operator==(const CurvElement& a, const CurvElement& b) { return a.n == b.n && a.coords == b.coords; }
  friend bool operator!=(const CurvElement& a, const CurvElement& b) { return !(a == b); }
};
CurvElement operator+(CurvElement a, const CurvElement& b);
CurvElement operator-(CurvElement a, const CurvElement& b);
CurvElement operator*(const Scalar& c, CurvElement a);

CurvElement curv_delta(int n, int k, int q);
CurvElement curv_N(int n, int k, int q);
CurvElement curv_B(int n, int k, int q);  // Delta - N

FlatValuation glob_flat(const CurvElement& x);
CurvedValuation glob_curved(const CurvElement& x);

// R_lambda(Delta_{l,q}) and R_lambda(N_{l,q}) in the Delta/N basis.
CurvElement R_lambda_delta(int n, int l, int q);
CurvElement R_lambda_N(int n, int l, int q);
CurvElement lk_measure(int n, int k);

// Structure constants of Val^{U(n)} (x) Curv^{U(n)} -> Curv^{U(n)} for the
// generators t and sigma (flat s) on the Delta/N basis.
class ModuleTable {
 public:
  ModuleTable(int n, std::map<std::string, std::map<CurvKey, CurvElement>> actions);

  // CSV with a leading "# n=<N>" line; rows
  // generator,inBasis,inK,inQ,outBasis,outK,outQ,coefficientScalarJSON.
  // Throws ModuleUnavailableError on malformed or inconsistent data.
  static ModuleTable from_csv(const std::string& text);
  static ModuleTable load(const std::string& path);
  std::string to_csv() const;

  int n() const { return n_; }
  CurvElement act(const std::string& generator, const CurvElement& x) const;
  // Degree additivity, commuting generators, relations acting as zero and
  // glob compatibility on every basis element. Throws ModuleUnavailableError.
  void validate() const;

 private:
  int n_;
  std::map<std::string, std::map<CurvKey, CurvElement>> actions_;
};

// Table named by KLK_MODULE_TABLE, validated. Returns nullopt and fills
// `warning` when the variable is unset or the table is unusable.
std::optional<ModuleTable> module_table_from_env(std::string* warning = nullptr);

// Glob-compatible test fixture: phi . x = Lift(phi . glob(x)) with
// Lift(mu_{k,q}) = Delta_{k,q}. Not the geometric module structure.
ModuleTable synthetic_module_table(int n);

CurvElement module_multiply(const FlatValuation& phi, const CurvElement& x, const ModuleTable& table);

// Element of Curv (x) Val, the right factor in mu coordinates.
struct CurvValTensor {
  int n = 0;
  std::map<std::pair<CurvKey, Index>, Scalar> coords;
  void add(const CurvKey& a, const Index& b, const Scalar& c);
  friend bool operator==(const CurvValTensor& a, const CurvValTensor& b) { return a.n == b.n && a.coords == b.coords; }
};

// (id (x) pd^{-1}) o (adjoint of the module action)
CurvValTensor semi_local_kbar(const CurvElement& x, const ModuleTable& table);

}  // namespace klk
