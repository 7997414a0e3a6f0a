#include "zhuc2/lattice_voa.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <map>

namespace zhuc2 {

// ---------------------------------------------------------------- monomials

const MonomialCache::Degree& MonomialCache::degree(int m, std::size_t max_monomials) {
  std::lock_guard lock(mutex_);
  if (m > 255) throw ResourceLimit("monomial degree above 255");
  while (static_cast<int>(degrees_.size()) <= m) {
    const int d = static_cast<int>(degrees_.size());
    const Integer expected = binomial(variables_ + d - 1, d);
    if (expected > Integer(max_monomials))
      throw ResourceLimit("degree " + std::to_string(d) + " needs " + expected.str() +
                          " monomials, cap is " + std::to_string(max_monomials));
    auto deg = std::make_unique<Degree>();
    if (d == 0) {
      last_monomials_.assign(1, std::vector<std::uint8_t>(static_cast<std::size_t>(variables_), 0));
      deg->size = 1;
    } else {
      std::map<std::vector<std::uint8_t>, std::uint32_t> index;
      for (const auto& mono : last_monomials_)
        for (int j = 0; j < variables_; ++j) {
          auto next = mono;
          next[static_cast<std::size_t>(j)] += 1;
          index.emplace(std::move(next), 0);
        }
      std::vector<std::vector<std::uint8_t>> current;
      current.reserve(index.size());
      for (auto& [mono, idx] : index) {
        idx = static_cast<std::uint32_t>(current.size());
        current.push_back(mono);
      }
      deg->size = current.size();
      deg->up.assign(static_cast<std::size_t>(variables_), std::vector<std::uint32_t>(last_monomials_.size()));
      for (std::size_t i = 0; i < last_monomials_.size(); ++i)
        for (int j = 0; j < variables_; ++j) {
          auto next = last_monomials_[i];
          next[static_cast<std::size_t>(j)] += 1;
          deg->up[static_cast<std::size_t>(j)][i] = index.at(next);
        }
      last_monomials_ = std::move(current);
    }
    degrees_.push_back(std::move(deg));
  }
  return *degrees_[static_cast<std::size_t>(m)];
}

namespace {

using Row = EchelonBasis::Row;

Row multiply_by_variable(const Row& row, const MonomialCache::Degree& next, int j) {
  Row out(next.size, Integer(0));
  const auto& map = next.up[static_cast<std::size_t>(j)];
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0) out[map[i]] = row[i];
  return out;
}

Row expand_power(const PowerGenerator& g, MonomialCache& cache, std::size_t max_monomials) {
  Row row(1, Integer(1));
  for (int k = 1; k <= g.exponent; ++k) {
    const auto& next = cache.degree(k, max_monomials);
    Row out(next.size, Integer(0));
    for (Eigen::Index j = 0; j < g.form.size(); ++j) {
      if (g.form(j) == 0) continue;
      const auto& map = next.up[static_cast<std::size_t>(j)];
      const Integer c = g.form(j);
      for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) out[map[i]] += c * row[i];
    }
    row = std::move(out);
  }
  return row;
}

}  // namespace

QuotientDims power_ideal_quotient(int variables, const GeneratorSource& generators_of_degree,
                                  const QuotientCaps& caps, bool allow_truncation, MonomialCache* cache) {
  MonomialCache local(variables);
  MonomialCache& monomials = cache ? *cache : local;
  if (monomials.variables() != variables) throw std::invalid_argument("monomial cache has wrong variable count");

  QuotientDims out;
  for (const auto& g : generators_of_degree(0))
    if (g.exponent == 0) return out;  // the unit is in the ideal
  out.dims.push_back(1);

  // I_m = sum_j x_j I_{m-1} + span(generators of degree m).
  std::vector<Row> previous;
  for (int m = 1;; ++m) {
    if (m > caps.max_degree) {
      if (allow_truncation) {
        out.complete = false;
        return out;
      }
      throw ResourceLimit("quotient still nonzero at degree " + std::to_string(caps.max_degree) +
                          " (max_degree cap)");
    }
    const auto& deg = monomials.degree(m, caps.max_monomials);
    EchelonBasis ideal(deg.size);
    for (const Row& r : previous) {
      for (int j = 0; j < variables && !ideal.full(); ++j) ideal.insert(multiply_by_variable(r, deg, j));
      if (ideal.full()) break;
    }
    for (const auto& g : generators_of_degree(m)) {
      if (ideal.full()) break;
      if (g.exponent != m) throw std::logic_error("generator source returned the wrong degree");
      ideal.insert(expand_power(g, monomials, caps.max_monomials));
    }
    const auto dim = static_cast<std::int64_t>(deg.size - ideal.rank());
    if (dim == 0) return out;
    out.dims.push_back(dim);
    previous = ideal.rows();
  }
}

// ------------------------------------------------------------ small vectors

namespace {

/// Nonzero vectors up to `bound`, one per +- pair (first nonzero coordinate
/// positive), ordered by norm then lexicographically.
std::vector<GammaPool::Entry> half_shell(const Lattice& lattice, Coord bound,
                                         std::size_t max_enumeration = kUnlimited) {
  std::vector<GammaPool::Entry> out;
  for (auto& v : enumerate_vectors(lattice, bound, max_enumeration)) {
    if (v.norm == 0) continue;
    Eigen::Index i = 0;
    while (v.coords(i) == 0) ++i;
    if (v.coords(i) < 0) continue;
    CoordVector paired = lattice.gram64() * v.coords;
    out.push_back({std::move(v), std::move(paired)});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const GammaPool::Entry& a, const GammaPool::Entry& b) { return a.gamma.norm < b.gamma.norm; });
  return out;
}

bool passes_small_test(const std::vector<GammaPool::Entry>& gammas, const CoordVector& alpha, Coord alpha_norm) {
  for (const auto& g : gammas) {
    if (g.gamma.norm >= alpha_norm) break;  // Cauchy-Schwarz covers the rest
    const Coord p = g.paired.dot(alpha);
    if (p > g.gamma.norm || -p > g.gamma.norm) return false;
  }
  return true;
}

Coord even_floor(const Rational& r) {
  Coord v = to_int64(floor_rational(r));
  if (v % 2 != 0) v -= 1;
  return v;
}

}  // namespace

GammaPool::Snapshot GammaPool::ensure(Coord bound) {
  std::lock_guard lock(mutex_);
  if (bound > bound_) {
    const Coord target = std::max(bound, 2 * std::max<Coord>(bound_, 1));
    entries_ = std::make_shared<const std::vector<Entry>>(half_shell(lattice_, target, max_enumeration_));
    bound_ = target;
  }
  return entries_;
}

Coord power_exponent(const Lattice& lattice, const CoordVector& gamma, const CoordVector& alpha) {
  const Coord gg = lattice.norm(gamma);
  const Coord ga = lattice.pairing(gamma, alpha);
  return std::max<Coord>(0, 1 + gg - (ga < 0 ? -ga : ga));
}

bool is_small(const Lattice& lattice, const CoordVector& alpha) {
  const Coord a = lattice.norm(alpha);
  if (a == 0) return true;
  return passes_small_test(half_shell(lattice, a), alpha, a);
}

SmallVectorSet small_vectors(const Lattice& lattice, std::size_t max_enumeration) {
  SmallVectorSet out;
  if (lattice.rank() == 0) {
    out.vectors.push_back({CoordVector(0), 0});
    return out;
  }
  // alpha in S_L iff alpha/2 lies in the Voronoi cell of 0, so
  // alpha.alpha <= 4 * (covering radius)^2.
  const Coord bound = even_floor(4 * covering_radius_bound(lattice));
  out.verified_bound = bound;
  const auto gammas = half_shell(lattice, bound, max_enumeration);
  for (auto& v : enumerate_vectors(lattice, bound, max_enumeration))
    if (passes_small_test(gammas, v.coords, v.norm)) out.vectors.push_back(std::move(v));
  return out;
}

// ------------------------------------------------------- graded quotients

std::int64_t GradedDimension::total() const {
  std::int64_t s = 0;
  for (auto d : dims) s += d;
  return s;
}

Coord generator_norm_bound(int degree, Coord alpha_norm) {
  // g(t) = 1 + t - sqrt(t a) is convex with g(0) = 1, so {t : g(t) <= m} is
  // an interval starting at 0.
  auto exceeds = [&](Coord t) {
    const Integer lhs = Integer(t) + 1 - degree;
    return lhs > 0 && lhs * lhs > Integer(t) * alpha_norm;
  };
  Coord t = 0;
  while (!exceeds(t + 2)) t += 2;
  return t;
}

GradedDimension graded_quotient_dims(const Lattice& lattice, const LatticeVector& alpha, const QuotientCaps& caps,
                                     GammaPool* pool, MonomialCache* cache) {
  GammaPool local_pool(lattice, caps.max_enumeration);
  GammaPool& gammas = pool ? *pool : local_pool;
  const Coord a = alpha.norm;
  {
    const auto shell = gammas.ensure(std::max<Coord>(a, 2));
    if (!passes_small_test(*shell, alpha.coords, a))
      throw NotSmall("vector is not in S_L (some gamma has |gamma.alpha| > gamma.gamma)");
  }

  GradedDimension out;
  out.alpha_norm = a;
  auto source = [&](int m) {
    std::vector<PowerGenerator> gens;
    if (m == 0) return gens;
    const Coord bound = generator_norm_bound(m, a);
    out.generator_bound = std::max(out.generator_bound, bound);
    const auto shell = gammas.ensure(bound);
    for (const auto& g : *shell) {
      if (g.gamma.norm > bound) break;
      const Coord p = g.paired.dot(alpha.coords);
      const Coord d = 1 + g.gamma.norm - (p < 0 ? -p : p);
      if (d == m) gens.push_back({g.gamma.coords, static_cast<int>(d)});
    }
    return gens;
  };
  out.dims = power_ideal_quotient(static_cast<int>(lattice.rank()), source, caps, false, cache).dims;
  return out;
}

// ------------------------------------------------------------------ totals

C2Result c2_dim_lattice(const Lattice& lattice, const QuotientCaps& caps) {
  const auto small = small_vectors(lattice, caps.max_enumeration);
  GammaPool pool(lattice, caps.max_enumeration);
  MonomialCache cache(static_cast<int>(lattice.rank()));

  // alpha and -alpha have isomorphic quotients (gamma -> -gamma).
  std::vector<std::size_t> canonical;
  std::map<std::vector<Coord>, std::size_t> slot;
  for (std::size_t i = 0; i < small.vectors.size(); ++i) {
    const auto& c = small.vectors[i].coords;
    Eigen::Index k = 0;
    while (k < c.size() && c(k) == 0) ++k;
    if (k == c.size() || c(k) > 0) {
      slot.emplace(std::vector<Coord>(c.data(), c.data() + c.size()), canonical.size());
      canonical.push_back(i);
    }
  }
  std::vector<GradedDimension> results(canonical.size());
  detail::parallel_for(canonical.size(), caps.threads, [&](std::size_t i) {
    results[i] = graded_quotient_dims(lattice, small.vectors[canonical[i]], caps, &pool, &cache);
  });

  C2Result out;
  for (const auto& v : small.vectors) {
    CoordVector key = v.coords;
    Eigen::Index k = 0;
    while (k < key.size() && key(k) == 0) ++k;
    if (k < key.size() && key(k) < 0) key = -key;
    const auto& graded = results[slot.at(std::vector<Coord>(key.data(), key.data() + key.size()))];
    out.total += graded.total();
    out.per_alpha.push_back({v, graded});
  }
  return out;
}

Integer zhu_dim_lattice(const Lattice& lattice) {
  Integer s = 0;
  for (const auto& c : discriminant_cosets(lattice)) s += c.min_count * c.min_count;
  return s;
}

Integer c2_lower_bound(const Lattice& lattice) {
  const auto s = summary(lattice);
  const long n = static_cast<long>(lattice.rank());
  Rational bound = 0;
  for (long m = 0; m <= s.mu + 1; ++m) bound += Rational(binomial(n + m - 1, m));
  bound += (Rational(n) - Rational(1, 2)) * Rational(s.count);
  if (!is_integral(bound)) throw std::logic_error("C2 lower bound is not an integer");
  return numerator(bound);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NonAnomalous: return "NonAnomalous";
    case Verdict::Anomalous: return "Anomalous";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

VerdictRecord anomaly_verdict(const Lattice& lattice, Effort effort, const QuotientCaps& caps) {
  VerdictRecord rec;
  rec.lattice = lattice.name();
  rec.zhu_dim = zhu_dim_lattice(lattice);
  rec.c2_lower_bound = c2_lower_bound(lattice);
  const bool bound_decides = rec.c2_lower_bound > rec.zhu_dim;

  if (effort == Effort::Full) {
    try {
      auto c2 = c2_dim_lattice(lattice, caps);
      rec.c2_dim = c2.total;
      rec.small_vector_count = c2.per_alpha.size();
      rec.per_alpha = std::move(c2.per_alpha);
    } catch (const ResourceLimit& e) {
      rec.diagnostics = std::string("C2 computation stopped: ") + e.what();
    }
  }

  if (rec.c2_dim) {
    rec.verdict = *rec.c2_dim > rec.zhu_dim ? Verdict::Anomalous : Verdict::NonAnomalous;
    if (*rec.c2_dim < rec.zhu_dim)
      rec.diagnostics = "C2 dimension below Zhu dimension; the spanning set for C2(V_L) is suspect";
  } else {
    rec.verdict = bound_decides ? Verdict::Anomalous : Verdict::Unknown;
  }
  return rec;
}

}  // namespace zhuc2
