#include "sepcirc/bounds.hpp"

#include <cmath>
#include <sstream>

namespace sepcirc {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw PreconditionError(what);
}

double check_k(double k) {
  require(k >= 2.0, "k must be >= 2 so that log k > 0");
  return std::log2(k);
}

}  // namespace

double log_count_bound(int n, int m, int L, double c) {
  require(c > 0.0, "log_count_bound: c must be > 0");
  require(n >= 0 && L >= 0, "log_count_bound: n and L must be >= 0");
  require(m >= 1, "log_count_bound: m must be >= 1");
  const int exponent = n + m + L;
  if (n + L == 0) throw PreconditionError("log_count_bound: n + L = 0 with a positive exponent");
  return exponent * std::log2(c * (n + L));
}

double lower_bound_lambda(int n, double k, double lambda) {
  require(n >= 1, "lower_bound_lambda: n must be >= 1");
  require(lambda > 0.0 && lambda < 1.0, "lower_bound_lambda: lambda must lie in (0, 1)");
  const double log_k = check_k(k);
  const double size = std::ldexp(1.0, n);
  return std::max(size / n, size * (1.0 - lambda) / log_k);
}

double lower_bound_ddim(int n, double k, int d) {
  require(n >= 1, "lower_bound_ddim: n must be >= 1");
  require(d >= 2, "lower_bound_ddim: d must be >= 2");
  const double log_k = check_k(k);
  return std::ldexp(1.0, n) / std::min(static_cast<double>(n), d * log_k);
}

double asymptotic_rect(int n, double k, int d) { return lower_bound_ddim(n, k, d); }

double corollary2_bound(int n, double k, double lambda0) {
  require(n >= 1, "corollary2_bound: n must be >= 1");
  require(lambda0 >= 0.0 && lambda0 < 1.0, "corollary2_bound: lambda0 must lie in [0, 1)");
  const double log_k = check_k(k);
  const double size = std::ldexp(1.0, n);
  return std::max(size / n, size * (1.0 - lambda0) / log_k);
}

LogNBreakdown log_N_rhs(int n, int m, int L, double k, double lambda, double theta, double delta,
                        const PartitionTuples& partition, double c) {
  require(n >= 0 && m >= 1 && L >= 0, "log_N_rhs: needs n >= 0, m >= 1, L >= 0");
  require(lambda > 0.0 && lambda < 1.0, "log_N_rhs: lambda must lie in (0, 1)");
  require(theta > 1.0, "log_N_rhs: theta must be > 1");
  require(delta >= 0.0, "log_N_rhs: delta must be >= 0");
  require(c > 0.0, "log_N_rhs: c must be > 0");
  require(k >= 1.0, "log_N_rhs: k must be >= 1");
  if (L == 0) throw PreconditionError("log_N_rhs: log L is undefined for L = 0");
  const auto& pt = partition;
  require(pt.p.size() == pt.s.size() && pt.p.size() == pt.u.size(), "log_N_rhs: partition tuples differ in length");

  LogNBreakdown out;
  out.a1 = (L + 1) * std::log2(theta) - std::log2(theta - 1.0);
  out.a2 = (n + m) * std::log2(static_cast<double>(L));
  if (delta > 0.0) out.a3 = delta * L / check_k(k) * std::log2(3.0);
  for (std::size_t i = 0; i < pt.p.size(); ++i) {
    require(pt.p[i] >= 0.0 && pt.s[i] >= 0.0 && pt.u[i] >= 0.0, "log_N_rhs: partition entries must be >= 0");
    const double x = pt.p[i] + pt.s[i] + pt.u[i];
    if (x > 0.0) out.a4 += x * std::log2(c * x);
  }
  out.total = out.a1 + out.a2 + out.a3 + out.a4;
  out.displayed = (L + 1) * std::log2(theta) + out.a2 + out.a3 + out.a4;
  return out;
}

Leml5Breakdown leml5_rhs(double L, double M, double k, double d_exp, double b, double c, double q) {
  require(k >= 4.0, "leml5_rhs: k must be >= 4");
  require(L >= 0.0 && M >= 0.0, "leml5_rhs: L and M must be >= 0");
  require(d_exp > 0.0, "leml5_rhs: d_exp must be > 0");
  require(b >= 0.0 && c > 0.0 && q >= 1.0, "leml5_rhs: needs b >= 0, c > 0 and q >= 1");
  const double log_k = std::log2(k);
  Leml5Breakdown out;
  out.r = std::pow(k * log_k, d_exp);
  out.main = L * std::log2(out.r);
  out.boundary = b * L / log_k * std::log2(q * k * out.r);
  out.m_log_m = xlog2x(M);
  out.linear = (std::log2(c) + 2.0) * (L + b * L / log_k + M);
  out.total = out.main + out.boundary + out.m_log_m + out.linear;
  return out;
}

}  // namespace sepcirc
