#include "zhuc2/affine_voa.hpp"

#include <numeric>
#include <string>

namespace zhuc2::affine {

Integer affine_zhu_dim(const lie::RootSystem& system, int k) {
  if (k < 1) throw std::invalid_argument("level must be positive");
  Integer s = 0;
  for (const auto& w : lie::level_weights(system, k)) {
    const Integer d = lie::weyl_dim(system, w);
    s += d * d;
  }
  return s;
}

namespace {

long n_ality(const lie::DominantWeight& w) {
  long t = 0;
  for (std::size_t i = 0; i < w.labels.size(); ++i) t += static_cast<long>(i + 1) * w.labels[i];
  return t;
}

long mod(long a, long n) { return ((a % n) + n) % n; }

}  // namespace

GradedModuleList slN_c2_grade(int n, int k, int m) {
  if (n < 2 || k < 1 || m < 0) throw std::invalid_argument("slN_c2_grade: need N >= 2, k >= 1, m >= 0");
  const lie::RootSystem system('A', n - 1);
  GradedModuleList out;
  out.grade = m;
  for (const auto& w : lie::level_weights(system, k)) {
    const long sum = std::accumulate(w.labels.begin(), w.labels.end(), 0L);
    const long w0 = k - sum;
    const long t = n_ality(w);
    const bool in_plus = w0 >= 0 && mod(t - m, n) == 0 && t <= m && n * w0 + t >= m;
    const bool in_minus = w0 >= 1 && mod(t - (m - 1), n) == 0 && t <= m - 1 && n * w0 + t >= m;
    if (!in_plus && !in_minus) continue;
    const Integer d = lie::weyl_dim(system, w);
    if (in_plus) {
      out.plus.push_back({w, d});
      out.dim += d * d;
    }
    if (in_minus) {
      out.minus.push_back({w, d});
      out.dim -= d * d;
    }
  }
  return out;
}

SlNC2Total slN_c2_total(int n, int k) {
  SlNC2Total out;
  out.n = n;
  out.k = k;
  out.zhu_dim = affine_zhu_dim(lie::RootSystem('A', n - 1), k);
  std::string problem;
  for (int m = 0; m <= n * k; ++m) {
    auto g = slN_c2_grade(n, k, m);
    if (g.dim < 0 && problem.empty()) problem = "negative dimension at grade " + std::to_string(m);
    out.total += g.dim;
    out.per_grade.push_back(std::move(g));
  }
  for (int m = n * k + 1; m <= n * k + n; ++m) {
    const auto g = slN_c2_grade(n, k, m);
    if ((!g.plus.empty() || !g.minus.empty()) && problem.empty())
      problem = "nonzero module list at grade " + std::to_string(m) + " beyond N k";
  }
  out.matches_zhu = out.total == out.zhu_dim;
  if (problem.empty() && !out.matches_zhu)
    problem = "total " + out.total.str() + " differs from Zhu dimension " + out.zhu_dim.str();
  if (!problem.empty()) throw ConjectureViolation(problem, out);
  return out;
}

Sl2CharacterSpec::Sl2CharacterSpec(int level) : k(level), a(level, level), b(level, level) {
  if (level < 1) throw std::invalid_argument("level must be positive");
  for (int i = 1; i <= level; ++i)
    for (int j = 1; j <= level; ++j) {
      a(i - 1, j - 1) = std::min(i, j);
      b(i - 1, j - 1) = std::max(i + j - level, 0);
    }
}

TruncatedSeries sl2_refined_character(int k, int truncation) {
  const Sl2CharacterSpec spec(k);
  TruncatedSeries out(truncation);

  // Variables ordered e_1..e_k, h_1..h_k, f_1..f_k. The exponent
  // eAe + hAh + fAf + eBh + hBf has non-negative coefficients and grows with
  // every variable, so partial sums prune the search exactly.
  const int vars = 3 * k;
  Eigen::MatrixXi form = Eigen::MatrixXi::Zero(vars, vars);  // upper-triangular coefficients
  auto add = [&](int i, int j, int c) {
    if (i <= j) form(i, j) += c;
    else form(j, i) += c;
  };
  for (int block = 0; block < 3; ++block)
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) add(block * k + i, block * k + j, spec.a(i, j));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      add(i, k + j, spec.b(i, j));          // e B h
      add(k + i, 2 * k + j, spec.b(i, j));  // h B f
    }

  std::vector<int> n(static_cast<std::size_t>(vars), 0);
  auto exponent_delta = [&](int v, int value) {
    // Exponent increase from setting n[v] = value when variables > v are 0.
    long d = static_cast<long>(form(v, v)) * value * value;
    for (int u = 0; u < v; ++u) d += static_cast<long>(form(u, v)) * n[static_cast<std::size_t>(u)] * value;
    return d;
  };

  auto emit = [&](long exponent) {
    long degree = 0;
    long charge = 0;
    for (int i = 0; i < k; ++i) {
      const long w = i + 1;
      const long e = n[static_cast<std::size_t>(i)];
      const long h = n[static_cast<std::size_t>(k + i)];
      const long f = n[static_cast<std::size_t>(2 * k + i)];
      degree += w * (e + h + f);
      charge += w * (e - f);
    }
    const int room = truncation - static_cast<int>(exponent);
    TruncatedSeries denom = TruncatedSeries::one(room);
    for (int v = 0; v < vars; ++v)
      if (n[static_cast<std::size_t>(v)] > 0) denom = denom * inv_pochhammer(n[static_cast<std::size_t>(v)], room);
    const LaurentPoly zpart = LaurentPoly::monomial(static_cast<int>(2 * charge));
    for (const auto& [key, c] : denom.terms())
      out.add(key.q + static_cast<int>(exponent), static_cast<int>(degree), zpart * c);
  };

  auto rec = [&](auto&& self, int v, long exponent) -> void {
    if (v == vars) {
      emit(exponent);
      return;
    }
    for (int value = 0;; ++value) {
      const long e = exponent + exponent_delta(v, value);
      if (e > truncation) break;
      n[static_cast<std::size_t>(v)] = value;
      self(self, v + 1, e);
    }
    n[static_cast<std::size_t>(v)] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

LaurentPoly sl2_character(int a) {
  LaurentPoly p;
  for (int e = -a; e <= a; e += 2) p += LaurentPoly::monomial(e);
  return p;
}

LaurentPoly sl2_c2_closed_form(int k, int m) {
  if (k < 1 || m < 0) throw std::invalid_argument("sl2_c2_closed_form: need k >= 1, m >= 0");
  LaurentPoly out;
  if (m > 2 * k) return out;
  for (int a = 0; a <= std::min(m, 2 * k - m); ++a) {
    const LaurentPoly chi = sl2_character(a);
    const LaurentPoly sq = chi * chi;
    if ((m + a) % 2 == 0) out += sq;
    else out -= sq;
  }
  return out;
}

std::vector<LaurentPoly> sl2_c2_from_character(int k, int truncation) {
  const auto c2 = sl2_refined_character(k, truncation).extract([](int q, int t) { return q == t; });
  std::vector<LaurentPoly> out(static_cast<std::size_t>(truncation) + 1);
  for (const auto& [key, c] : c2.terms()) out[static_cast<std::size_t>(key.q)] += c;
  return out;
}

}  // namespace zhuc2::affine
