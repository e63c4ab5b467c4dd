#include "spexkm/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "spexkm/errors.hpp"

namespace spexkm {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void multiply(const Graph& g, const std::vector<double>& x, std::vector<double>& out) {
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    const auto r = g.row(u);
    double acc = 0.0;
    for (std::size_t w = 0; w < r.size(); ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        acc += x[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
        bits &= bits - 1;
      }
    }
    out[u] = acc;
  }
}

double secular(const PartSizes& parts, double x) {
  double f = -1.0;
  for (int p : parts) f += p / (x + p);
  return f;
}

double secular_slope(const PartSizes& parts, double x) {
  double d = 0.0;
  for (int p : parts) d -= p / ((x + p) * (x + p));
  return d;
}

}  // namespace

SpectralResult spectral_radius_dense(const Graph& g, double tol) {
  const int n = g.order();
  if (n < 1) throw DomainError("spectral_radius_dense: graph has no vertices");
  if (!(tol > 0)) throw DomainError("spectral_radius_dense: tolerance must be positive");

  const auto size = static_cast<std::size_t>(n);
  std::vector<double> x(size, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> ax(size);
  SpectralResult result;
  double residual2 = 0.0;
  for (long it = 1; it <= kDenseIterationCap; ++it) {
    multiply(g, x, ax);
    const double lambda = std::inner_product(x.begin(), x.end(), ax.begin(), 0.0);
    residual2 = 0.0;
    double residual_inf = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
      const double r = std::abs(ax[i] - lambda * x[i]);
      residual2 += r * r;
      residual_inf = std::max(residual_inf, r);
    }
    residual2 = std::sqrt(residual2);
    // floating-point floor of the matrix-vector product
    const double floor = 64.0 * kEps * (lambda + 1.0) * std::sqrt(static_cast<double>(n));
    if (residual2 <= std::max(tol, floor)) {
      result.lambda = lambda;
      result.perron = x;
      result.residual = residual_inf;
      result.iterations = it;
      return result;
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
      x[i] += ax[i];
      norm += x[i] * x[i];
    }
    norm = std::sqrt(norm);
    for (auto& v : x) v /= norm;
  }
  throw NumericalError("spectral_radius_dense: no convergence within iteration cap", residual2);
}

double multipartite_lambda(const PartSizes& parts, double tol) {
  if (!(tol > 0)) throw DomainError("multipartite_lambda: tolerance must be positive");
  if (parts.count() < 2) return 0.0;
  double lo = 0.0;
  double hi = static_cast<double>(parts.order() - 1);
  if (secular(parts, hi) >= 0.0) return hi;  // K_n
  if (!(secular(parts, lo) > 0.0)) throw std::logic_error("multipartite_lambda: bracket failure");

  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (secular(parts, mid) > 0.0 ? lo : hi) = mid;
  }
  // Newton polish, kept inside the bracket
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    const double f = secular(parts, x);
    if (f == 0.0) return x;
    (f > 0.0 ? lo : hi) = x;
    double next = x - f / secular_slope(parts, x);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - x);
    x = next;
    if (step <= tol || hi - lo <= tol) break;
  }
  return x;
}

double multipartite_charpoly_eval(const PartSizes& parts, double x) {
  const long long n = parts.order();
  const int k = parts.count();
  double prod = 1.0;
  for (int p : parts) prod *= x + p;
  double sum = 0.0;
  for (int i = 0; i < k; ++i) {
    double term = parts[i];
    for (int j = 0; j < k; ++j)
      if (j != i) term *= x + parts[j];
    sum += term;
  }
  return std::pow(x, static_cast<double>(n - k)) * (prod - sum);
}

QuotientMatrix quotient_matrix(const Graph& g, const std::vector<std::vector<Vertex>>& blocks) {
  const int n = g.order();
  const int k = static_cast<int>(blocks.size());
  std::vector<int> block_of(static_cast<std::size_t>(n), -1);
  std::vector<VertexSet> sets;
  sets.reserve(blocks.size());
  for (int b = 0; b < k; ++b) {
    if (blocks[b].empty()) throw DomainError("quotient_matrix: block " + std::to_string(b) + " is empty");
    VertexSet s(n);
    for (Vertex v : blocks[b]) {
      if (v < 0 || v >= n) throw DomainError("quotient_matrix: vertex " + std::to_string(v) + " out of range");
      if (block_of[v] != -1) throw DomainError("quotient_matrix: vertex " + std::to_string(v) + " in two blocks");
      block_of[v] = b;
      s.insert(v);
    }
    sets.push_back(std::move(s));
  }
  for (Vertex v = 0; v < n; ++v)
    if (block_of[v] == -1) throw DomainError("quotient_matrix: vertex " + std::to_string(v) + " in no block");

  QuotientMatrix q;
  q.blocks = blocks;
  q.size = k;
  q.entries.assign(static_cast<std::size_t>(k) * k, 0.0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      int expected = -1;
      for (Vertex v : blocks[i]) {
        VertexSet hood = g.neighbors(v);
        hood &= sets[j];
        const int count = hood.size();
        if (expected == -1) {
          expected = count;
        } else if (count != expected) {
          throw DomainError("quotient_matrix: partition not equitable: vertex " + std::to_string(v) + " has " +
                            std::to_string(count) + " neighbours in block " + std::to_string(j) + ", block " +
                            std::to_string(i) + " expects " + std::to_string(expected));
        }
      }
      q.entries[static_cast<std::size_t>(i) * k + j] = expected;
    }
  }
  return q;
}

double perron_root(const QuotientMatrix& q, double tol) {
  const int k = q.size;
  if (k < 1 || k > 64) throw DomainError("perron_root: matrix order must be in [1, 64]");
  if (q.entries.size() != static_cast<std::size_t>(k) * k) throw DomainError("perron_root: entry count mismatch");
  if (std::any_of(q.entries.begin(), q.entries.end(), [](double e) { return e < 0; }))
    throw DomainError("perron_root: matrix must be nonnegative");
  if (!(tol > 0)) throw DomainError("perron_root: tolerance must be positive");

  std::vector<double> x(static_cast<std::size_t>(k), 1.0);
  std::vector<double> y(x.size());
  double gap = std::numeric_limits<double>::infinity();
  for (long it = 0; it < kDenseIterationCap; ++it) {
    for (int i = 0; i < k; ++i) {
      double acc = 0.0;
      for (int j = 0; j < k; ++j) acc += q.at(i, j) * x[j];
      y[i] = acc;
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = 0; i < k; ++i) {
      if (!(x[i] > 0)) throw NumericalError("perron_root: iterate lost positivity (reducible matrix?)", gap);
      lo = std::min(lo, y[i] / x[i]);
      hi = std::max(hi, y[i] / x[i]);
    }
    gap = hi - lo;
    const double floor = 16.0 * kEps * std::max(1.0, hi) * k;
    if (gap <= std::max(tol * std::max(1.0, hi), floor)) return 0.5 * (lo + hi);
    double top = 0.0;
    for (int i = 0; i < k; ++i) {
      y[i] += x[i];
      top = std::max(top, y[i]);
    }
    for (int i = 0; i < k; ++i) x[i] = y[i] / top;
  }
  throw NumericalError("perron_root: no convergence within iteration cap", gap);
}

QuotientMatrix join_family_quotient(const PartSizes& b_parts, int a, int a1) {
  if (b_parts.count() < 1) throw DomainError("join_family_quotient: need at least one B part");
  if (a < 0 || a1 < 1) throw DomainError("join_family_quotient: need a >= 0 and a1 >= 1");
  const int nb = b_parts.count();
  const bool with_a = a > 0;
  const int size = nb + (with_a ? 2 : 1);
  QuotientMatrix q;
  q.size = size;
  q.entries.assign(static_cast<std::size_t>(size) * size, 0.0);
  auto set = [&](int i, int j, double v) { q.entries[static_cast<std::size_t>(i) * size + j] = v; };
  const int ia = nb;                      // Ã
  const int i1 = with_a ? nb + 1 : nb;    // A_1
  for (int i = 0; i < nb; ++i) {
    for (int j = 0; j < nb; ++j)
      if (j != i) set(i, j, b_parts[j]);
    if (with_a) set(i, ia, a);
    set(i, i1, a1);
  }
  for (int j = 0; j < nb; ++j) {
    if (with_a) set(ia, j, b_parts[j]);
    set(i1, j, b_parts[j]);
  }
  set(i1, i1, a1 - 1);
  return q;
}

double join_family_lambda(const PartSizes& b_parts, int a, int a1, double tol) {
  if (a < 1 || a1 < 1) throw DomainError("join_family_lambda: need a >= 1 and a1 >= 1");
  return perron_root(join_family_quotient(b_parts, a, a1), tol);
}

double h_eval(double lambda, int a, int a1) {
  return lambda * lambda + (a + 1.0) * lambda + static_cast<double>(a) * (1.0 - a1);
}

double f0_eval(double lambda, const PartSizes& b_parts, int a, int a1) {
  const double h = h_eval(lambda, a, a1);
  const double scale = lambda * lambda + (a + 1.0) * std::abs(lambda) + static_cast<double>(a) * (a1 + 1.0) + 1.0;
  if (std::abs(h) <= 1e-14 * scale) throw DomainError("f0_eval: pole at a root of h");
  double f = -lambda * (lambda + 1.0 - a1) / h;
  for (int b : b_parts) {
    if (std::abs(b + lambda) <= 1e-14 * (b + std::abs(lambda)))
      throw DomainError("f0_eval: pole at -b_i");
    f += b / (b + lambda);
  }
  return f;
}

}  // namespace spexkm
