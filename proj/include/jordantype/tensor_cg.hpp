#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jordantype/jordan.hpp"
#include "jordantype/partition.hpp"

namespace jt {

// [m] (x) [n] in characteristic 0: (n+m-1, n+m-3, ..., n-m+1).
Partition cg_block(int m, int n);

// Sum of cg_block(d_i, f_j) over the parts of p and q.
Partition cg_general(const Partition& p, const Partition& q);
// dim Ker of z (x) 1 + 1 (x) w: sum of min(d_i, f_j).
int cg_kernel_dimension(const Partition& p, const Partition& q);

// Degree-tagged blocks of m_s (x) n_t: (n+m+1-2k) starting in degree
// s+t+k-1 for k = 1..min(m,n).
JordanDegreeType cg_degree(int m, int s, int n, int t);

// Jordan type of x+y on F_p[x,y]/(x^m, y^n).
Partition modular_lambda(int m, int n, std::uint32_t p);

// Generic linear Jordan type of F_p[x_1..x_r]/(x_1^m_1, ..., x_r^m_r) by
// sampling; for two factors modular_lambda gives the exact value.
Partition modular_ci_type(const std::vector<int>& exponents, std::uint32_t p, const SamplingPlan& plan);

struct DeviationVector {
  int m = 0;
  int n = 0;
  std::uint32_t p = 0;
  std::vector<int> epsilon;  // lambda(m,n,p) - (n,...,n), m entries

  std::string str() const;
};

DeviationVector deviation(int m, int n, std::uint32_t p);

// Negated reversal of a deviation vector.
std::vector<int> negative_reverse(const std::vector<int>& e);

// Sufficient condition for lambda(m,n,p) = cg_block(m,n): n mod p avoids
// 0 and +-1, ..., +-m.
bool standardness_predicted(int m, int n, std::uint32_t p);

struct LambdaRow {
  int m;
  int n;
  std::uint32_t p;
  Partition lambda;
  std::vector<int> epsilon;
};

// All (m, n, p) with 1 <= m <= m_max, m <= n <= n_max, p in primes, in that
// nesting order.
std::vector<LambdaRow> lambda_table(int m_max, int n_max, const std::vector<std::uint32_t>& primes,
                                    unsigned workers = 1);

}  // namespace jt
