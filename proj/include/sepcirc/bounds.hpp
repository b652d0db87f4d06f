#pragma once

#include <string>
#include <vector>

#include "sepcirc/common.hpp"

namespace sepcirc {

// All logarithms are base 2. Calculators throw PreconditionError on
// out-of-range parameters.

/// Parameter bundle for the bound calculators, as accepted by the CLI.
struct BoundQuery {
  int n = 1;
  int m = 1;
  int L = 1;
  double k = 2;
  double lambda = 0.5;
  double lambda0 = 0.0;
  int d = 2;
  int q = 1;
  double theta = 2.0;
  double delta = 0.0;
  double c = 1.0;
};

/// (n + m + L) log(c (n + L)): log of the abstract-circuit count bound.
double log_count_bound(int n, int m, int L, double c);

/// max(2^n / n, 2^n (1 - lambda) / log k).
double lower_bound_lambda(int n, double k, double lambda);

/// 2^n / min(n, d log k).
double lower_bound_ddim(int n, double k, int d);

/// Two-sided asymptote of the Shannon function for d-dimensional
/// rectangular circuits; same expression as lower_bound_ddim.
double asymptotic_rect(int n, double k, int d);

/// max(2^n / n, 2^n (1 - lambda0) / log k) for 0 <= lambda0 < 1.
double corollary2_bound(int n, double k, double lambda0);

/// Per-piece sizes, outgoing wire counts and input/output counts.
struct PartitionTuples {
  std::vector<double> p;
  std::vector<double> s;
  std::vector<double> u;
};

/// Logs of the four factors bounding the number of computable functions.
struct LogNBreakdown {
  double a1 = 0.0;  // (L + 1) log theta - log(theta - 1)
  double a2 = 0.0;  // (n + m) log L
  double a3 = 0.0;  // (delta L / log k) log 3
  double a4 = 0.0;  // sum over pieces of (p + s + u) log(c (p + s + u))
  double total = 0.0;
  /// The customary form that drops -log(theta - 1); it is only an upper
  /// bound for theta >= 2.
  double displayed = 0.0;
};

LogNBreakdown log_N_rhs(int n, int m, int L, double k, double lambda, double theta, double delta,
                        const PartitionTuples& partition, double c);

struct Leml5Breakdown {
  double r = 0.0;          // (k log k)^d_exp
  double main = 0.0;       // L log r
  double boundary = 0.0;   // (b L / log k) log(q k r)
  double m_log_m = 0.0;    // M log M
  double linear = 0.0;     // (log c + 2)(L + b L / log k + M)
  double total = 0.0;
};

/// Explicit pre-asymptotic bound on sum log Z(p_i, s_i + u_i) for tuples
/// with p in K(r, L), s in K(q k r, b L / log k) and sum u <= M.
Leml5Breakdown leml5_rhs(double L, double M, double k, double d_exp, double b, double c, double q = 1.0);

}  // namespace sepcirc
