#include "zhuc2/lie.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

namespace zhuc2::lie {

namespace {

struct RootLess {
  bool operator()(const Root& a, const Root& b) const {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
  }
};

void link(RatMatrix& f, int i, int j, const Rational& value) {
  f(i, j) = value;
  f(j, i) = value;
}

RatMatrix simple_form(char family, int r) {
  RatMatrix f = RatMatrix::Zero(r, r);
  switch (family) {
    case 'A':
      for (int i = 0; i < r; ++i) f(i, i) = 2;
      for (int i = 0; i + 1 < r; ++i) link(f, i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i < r; ++i) f(i, i) = 2;
      f(r - 1, r - 1) = 1;
      for (int i = 0; i + 1 < r; ++i) link(f, i, i + 1, -1);
      break;
    case 'C':
      for (int i = 0; i < r; ++i) f(i, i) = 1;
      f(r - 1, r - 1) = 2;
      for (int i = 0; i + 2 < r; ++i) link(f, i, i + 1, Rational(-1, 2));
      link(f, r - 2, r - 1, -1);
      break;
    case 'D':
      for (int i = 0; i < r; ++i) f(i, i) = 2;
      for (int i = 0; i + 2 < r; ++i) link(f, i, i + 1, -1);
      link(f, r - 3, r - 1, -1);
      break;
    case 'E':
      for (int i = 0; i < r; ++i) f(i, i) = 2;
      link(f, 0, 2, -1);
      link(f, 1, 3, -1);
      for (int i = 2; i + 1 < r; ++i) link(f, i, i + 1, -1);
      break;
    case 'F':
      f(0, 0) = 2;
      f(1, 1) = 2;
      f(2, 2) = 1;
      f(3, 3) = 1;
      link(f, 0, 1, -1);
      link(f, 1, 2, -1);
      link(f, 2, 3, Rational(-1, 2));
      break;
    case 'G':
      f(0, 0) = Rational(2, 3);
      f(1, 1) = 2;
      link(f, 0, 1, -1);
      break;
    default:
      break;
  }
  return f;
}

bool valid_type(char family, int r) {
  switch (family) {
    case 'A': return r >= 1;
    case 'B': return r >= 2;
    case 'C': return r >= 2;
    case 'D': return r >= 4;
    case 'E': return r >= 6 && r <= 8;
    case 'F': return r == 4;
    case 'G': return r == 2;
    default: return false;
  }
}

}  // namespace

RootSystem::RootSystem(char family, int rank) : family_(family), rank_(rank) {
  if (!valid_type(family, rank))
    throw std::invalid_argument("unknown simple Lie algebra " + std::string(1, family) + std::to_string(rank));
  form_ = simple_form(family, rank);
  cartan_.resize(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      const Rational c = 2 * form_(i, j) / form_(i, i);
      cartan_(i, j) = static_cast<int>(to_int64(numerator(c)));
    }

  // Closure of the simple roots: beta + alpha_j is a root iff the
  // alpha_j-string through beta extends upward (q = p - <beta, alpha_j^vee> > 0).
  std::set<Root, RootLess> known;
  std::vector<Root> layer;
  for (int i = 0; i < rank; ++i) {
    Root r = Root::Zero(rank);
    r(i) = 1;
    layer.push_back(r);
    known.insert(r);
  }
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end(), RootLess{});
    positive_.insert(positive_.end(), layer.begin(), layer.end());
    std::set<Root, RootLess> next;
    for (const Root& beta : layer) {
      for (int j = 0; j < rank; ++j) {
        int p = 0;
        Root down = beta;
        for (;;) {
          down(j) -= 1;
          if (down(j) < 0 || !known.count(down)) break;
          ++p;
        }
        int pairing = 0;  // <beta, alpha_j^vee>
        for (int i = 0; i < rank; ++i) pairing += beta(i) * cartan_(j, i);
        if (p - pairing > 0) {
          Root up = beta;
          up(j) += 1;
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    known.insert(next.begin(), next.end());
  }

  const Root& theta = highest_root();
  comarks_.resize(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) {
    const Rational a = theta(i) * form_(i, i) / 2;
    comarks_[static_cast<std::size_t>(i)] = static_cast<int>(to_int64(numerator(a)));
  }
}

RootSystem RootSystem::parse(std::string_view spec) {
  if (spec.size() < 2) throw std::invalid_argument("bad algebra spec: " + std::string(spec));
  const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(spec[0])));
  int rank = 0;
  auto [ptr, ec] = std::from_chars(spec.data() + 1, spec.data() + spec.size(), rank);
  if (ec != std::errc{} || ptr != spec.data() + spec.size())
    throw std::invalid_argument("bad algebra spec: " + std::string(spec));
  return RootSystem(family, rank);
}

std::string RootSystem::name() const { return std::string(1, family_) + std::to_string(rank_); }

Rational RootSystem::root_norm(const Root& r) const {
  const RatVector v = r.cast<Rational>();
  return v.dot(form_ * v);
}

Integer weyl_dim(const RootSystem& system, const DominantWeight& w) {
  const int r = system.rank();
  if (static_cast<int>(w.labels.size()) != r)
    throw std::invalid_argument("weight has " + std::to_string(w.labels.size()) + " labels, expected " +
                                std::to_string(r));
  for (long l : w.labels)
    if (l < 0) throw std::invalid_argument("weight has a negative Dynkin label");

  // (lambda, alpha^vee) = sum_i c_i (alpha_i, alpha_i) / (alpha, alpha) * lambda_i.
  Rational num = 1;
  Rational den = 1;
  for (const Root& alpha : system.positive_roots()) {
    const Rational len = system.root_norm(alpha);
    Rational top = 0;
    Rational bottom = 0;
    for (int i = 0; i < r; ++i) {
      if (alpha(i) == 0) continue;
      const Rational weight = Rational(alpha(i)) * system.form()(i, i) / len;
      top += weight * (w.labels[static_cast<std::size_t>(i)] + 1);
      bottom += weight;
    }
    num *= top;
    den *= bottom;
  }
  const Rational d = num / den;
  if (!is_integral(d)) throw std::logic_error("Weyl dimension is not an integer");
  return numerator(d);
}

std::vector<DominantWeight> level_weights(const RootSystem& system, int k) {
  std::vector<DominantWeight> out;
  if (k < 0) return out;
  const auto& a = system.comarks();
  const std::size_t r = a.size();
  std::vector<long> labels(r, 0);
  auto rec = [&](auto&& self, std::size_t i, long budget) -> void {
    if (i == r) {
      out.push_back({labels});
      return;
    }
    for (long v = 0; v * a[i] <= budget; ++v) {
      labels[i] = v;
      self(self, i + 1, budget - v * a[i]);
    }
    labels[i] = 0;
  };
  rec(rec, 0, k);
  return out;
}

}  // namespace zhuc2::lie
