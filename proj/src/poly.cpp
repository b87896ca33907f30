#include "jordantype/poly.hpp"

#include <cctype>
#include <functional>
#include <set>

namespace jt {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

int RingSpec::max_weight() const {
  int w = 1;
  for (std::size_t i = 0; i < nvars(); ++i) w = std::max(w, weight(i));
  return w;
}

bool RingSpec::standard_weights() const {
  for (std::size_t i = 0; i < nvars(); ++i)
    if (weight(i) != 1) return false;
  return true;
}

void RingSpec::validate() const {
  if (variables.empty()) throw Error(ErrorCode::InvalidSpec, "ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (!valid_identifier(v)) throw Error(ErrorCode::InvalidSpec, "bad variable name \"" + v + "\"");
    if (!seen.insert(upper(v)).second)
      throw Error(ErrorCode::InvalidSpec, "variable \"" + v + "\" repeated (names are compared ignoring case)");
  }
  if (!weights.empty()) {
    if (weights.size() != variables.size())
      throw Error(ErrorCode::InvalidSpec, "weights and variables differ in length");
    for (int w : weights)
      if (w < 1) throw Error(ErrorCode::InvalidSpec, "weights must be positive");
  }
  if (mode == RingMode::Local && !standard_weights())
    throw Error(ErrorCode::InvalidSpec, "local mode uses the standard m-adic order; weights must all be 1");
}

int RingSpec::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (variables[i] == name) return static_cast<int>(i);
  return -1;
}

int weighted_degree(const Monomial& m, const RingSpec& ring) {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += ring.weight(i) * m[i];
  return d;
}

int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial out(b);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= a[i];
  return out;
}

Monomial unit_monomial(std::size_t nvars, std::size_t var) {
  Monomial m(nvars, 0);
  m[var] = 1;
  return m;
}

bool grevlex_greater(const Monomial& a, const Monomial& b, const RingSpec& ring) {
  int da = weighted_degree(a, ring), db = weighted_degree(b, ring);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

std::vector<Monomial> monomials_of_degree(const RingSpec& ring, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  const std::size_t n = ring.nvars();
  Monomial cur(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i + 1 == n) {
      if (remaining % ring.weight(i) == 0) {
        cur[i] = remaining / ring.weight(i);
        out.push_back(cur);
      }
      return;
    }
    for (int e = remaining / ring.weight(i); e >= 0; --e) {
      cur[i] = e;
      rec(i + 1, remaining - e * ring.weight(i));
    }
    cur[i] = 0;
  };
  if (n == 0) {
    if (degree == 0) out.push_back(cur);
    return out;
  }
  rec(0, degree);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return grevlex_greater(a, b, ring); });
  return out;
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, int bound) {
  RingSpec standard;
  standard.variables.assign(nvars, "v");
  std::vector<Monomial> out;
  for (int d = 0; d <= bound; ++d) {
    auto piece = monomials_of_degree(standard, d);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return out;
}

std::vector<Monomial> divisors(const Monomial& m) {
  std::vector<Monomial> out{Monomial(m.size(), 0)};
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::size_t count = out.size();
    for (std::size_t k = 0; k < count; ++k) {
      for (int e = 1; e <= m[i]; ++e) {
        Monomial d = out[k];
        d[i] = e;
        out.push_back(std::move(d));
      }
    }
  }
  return out;
}

std::string render_monomial(const Monomial& m, const RingSpec& ring, bool dual) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += dual ? upper(ring.variables[i]) : ring.variables[i];
    if (m[i] > 1) out += dual ? "^[" + std::to_string(m[i]) + "]" : "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace jt
