#include "jordantype/tensor_cg.hpp"

#include <algorithm>
#include <utility>

#include "jordantype/algebra.hpp"
#include "jordantype/error.hpp"
#include "jordantype/jordan.hpp"

namespace jt {

namespace {

void require_positive(int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::InvalidArgs, "block sizes must be positive");
}

}  // namespace

Partition cg_block(int m, int n) {
  require_positive(m, n);
  if (m > n) std::swap(m, n);
  std::vector<int> parts;
  for (int k = 1; k <= m; ++k) parts.push_back(n + m + 1 - 2 * k);
  return Partition(std::move(parts));
}

Partition cg_general(const Partition& p, const Partition& q) {
  std::vector<int> parts;
  for (int d : p.parts())
    for (int f : q.parts()) {
      const Partition block = cg_block(d, f);
      parts.insert(parts.end(), block.parts().begin(), block.parts().end());
    }
  return Partition::from_unsorted(std::move(parts));
}

int cg_kernel_dimension(const Partition& p, const Partition& q) {
  int total = 0;
  for (int d : p.parts())
    for (int f : q.parts()) total += std::min(d, f);
  return total;
}

JordanDegreeType cg_degree(int m, int s, int n, int t) {
  require_positive(m, n);
  if (s < 0 || t < 0) throw Error(ErrorCode::InvalidArgs, "degrees must be nonnegative");
  if (m > n) {
    std::swap(m, n);
    std::swap(s, t);
  }
  std::vector<DegreeString> out;
  for (int k = 1; k <= m; ++k) out.push_back({n + m + 1 - 2 * k, s + t + k - 1});
  return JordanDegreeType(std::move(out));
}

Partition modular_lambda(int m, int n, std::uint32_t p) {
  require_positive(m, n);
  Field<Residue> f = Field<Residue>::from_spec(FieldSpec::prime_field(p));
  RingSpec ring;
  ring.variables = {"x", "y"};
  ring.field = f.spec();
  std::vector<Poly<Residue>> gens{Poly<Residue>::monomial({m, 0}, f.one()),
                                  Poly<Residue>::monomial({0, n}, f.one())};
  auto a = build_graded(ring, gens, f);
  return jordan_type(a, a.linear_form({f.one(), f.one()}));
}

Partition modular_ci_type(const std::vector<int>& exponents, std::uint32_t p, const SamplingPlan& plan) {
  if (exponents.empty()) throw Error(ErrorCode::InvalidArgs, "need at least one exponent");
  Field<Residue> f = Field<Residue>::from_spec(FieldSpec::prime_field(p));
  RingSpec ring;
  ring.field = f.spec();
  std::vector<Poly<Residue>> gens;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 1) throw Error(ErrorCode::InvalidArgs, "exponents must be positive");
    ring.variables.push_back("x" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    Monomial mono(exponents.size(), 0);
    mono[i] = exponents[i];
    gens.push_back(Poly<Residue>::monomial(mono, f.one()));
  }
  auto a = build_graded(ring, gens, f);
  if (a.dim() == 1) return Partition{1};
  SamplingPlan linear = plan;
  linear.subspace = Subspace::linear();
  return generic_jordan_type(a, linear).type;
}

std::string DeviationVector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < epsilon.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(epsilon[i]);
  }
  return out + ")";
}

DeviationVector deviation(int m, int n, std::uint32_t p) {
  require_positive(m, n);
  if (m > n) std::swap(m, n);
  Partition lambda = modular_lambda(m, n, p);
  if (lambda.size() != m)
    throw Error(ErrorCode::InternalInconsistency,
                "lambda(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(p) + ") = " +
                    lambda.str() + " does not have m parts");
  DeviationVector d{m, n, p, {}};
  for (int part : lambda.parts()) d.epsilon.push_back(part - n);
  return d;
}

std::vector<int> negative_reverse(const std::vector<int>& e) {
  std::vector<int> out(e.rbegin(), e.rend());
  for (int& x : out) x = -x;
  return out;
}

bool standardness_predicted(int m, int n, std::uint32_t p) {
  require_positive(m, n);
  const long r = n % static_cast<long>(p);
  if (r == 0) return false;
  for (long k = 1; k <= m; ++k)
    if ((r - k) % static_cast<long>(p) == 0 || (r + k) % static_cast<long>(p) == 0) return false;
  return true;
}

std::vector<LambdaRow> lambda_table(int m_max, int n_max, const std::vector<std::uint32_t>& primes,
                                    unsigned workers) {
  std::vector<LambdaRow> rows;
  for (int m = 1; m <= m_max; ++m)
    for (int n = m; n <= n_max; ++n)
      for (auto p : primes) rows.push_back({m, n, p, {}, {}});
  parallel_for(rows.size(), workers, [&](std::size_t i) {
    auto d = deviation(rows[i].m, rows[i].n, rows[i].p);
    rows[i].epsilon = d.epsilon;
    std::vector<int> parts;
    for (int e : d.epsilon) parts.push_back(e + rows[i].n);
    rows[i].lambda = Partition(std::move(parts));
  });
  return rows;
}

}  // namespace jt
