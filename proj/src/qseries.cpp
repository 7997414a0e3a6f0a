#include "zhuc2/qseries.hpp"

#include <sstream>

namespace zhuc2 {

LaurentPoly LaurentPoly::monomial(int exponent, Integer c) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

Integer LaurentPoly::coeff(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

Integer LaurentPoly::at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

void LaurentPoly::add_term(int e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea + eb, ca * cb);
  return out;
}

bool LaurentPoly::is_palindromic() const {
  for (const auto& [e, c] : coeffs_)
    if (coeff(-e) != c) return false;
  return true;
}

std::string LaurentPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Integer mag = abs(c);
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "z";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

TruncatedSeries::TruncatedSeries(int truncation) : truncation_(truncation) {
  if (truncation < 0) throw std::invalid_argument("truncation must be non-negative");
}

TruncatedSeries TruncatedSeries::one(int truncation) { return term(truncation, 0, 0, Integer(1)); }

TruncatedSeries TruncatedSeries::term(int truncation, int q, int t, LaurentPoly coeff) {
  TruncatedSeries s(truncation);
  s.add(q, t, coeff);
  return s;
}

LaurentPoly TruncatedSeries::coeff(int q, int t) const {
  auto it = terms_.find({q, t});
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void TruncatedSeries::add(int q, int t, const LaurentPoly& coeff) {
  if (q > truncation_ || coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{q, t}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.truncation_ != truncation_) throw TruncationMismatch("series truncations differ");
  for (const auto& [k, c] : o.terms_) add(k.q, k.t, c);
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.truncation_ != b.truncation_) throw TruncationMismatch("series truncations differ");
  TruncatedSeries out(a.truncation_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      if (ka.q + kb.q > a.truncation_) break;  // keys are ordered by q first
      out.add(ka.q + kb.q, ka.t + kb.t, ca * cb);
    }
  return out;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries TruncatedSeries::extract(const std::function<bool(int, int)>& keep) const {
  TruncatedSeries out(truncation_);
  for (const auto& [k, c] : terms_)
    if (keep(k.q, k.t)) out.terms_.emplace(k, c);
  return out;
}

std::vector<Integer> TruncatedSeries::at_unit() const {
  std::vector<Integer> out(static_cast<std::size_t>(truncation_) + 1, Integer(0));
  for (const auto& [k, c] : terms_) out[static_cast<std::size_t>(k.q)] += c.at_one();
  return out;
}

TruncatedSeries pochhammer(int n, int truncation) {
  TruncatedSeries out = TruncatedSeries::one(truncation);
  for (int j = 1; j <= n && j <= truncation; ++j) {
    TruncatedSeries factor = TruncatedSeries::one(truncation);
    factor.add(j, 0, Integer(-1));
    out = out * factor;
  }
  return out;
}

TruncatedSeries inv_pochhammer(int n, int truncation) {
  if (n < 0) throw std::invalid_argument("inv_pochhammer: n must be non-negative");
  // Partitions into parts <= n, counted by the usual coin-change recurrence.
  std::vector<Integer> c(static_cast<std::size_t>(truncation) + 1, Integer(0));
  c[0] = 1;
  for (int part = 1; part <= n && part <= truncation; ++part)
    for (int i = part; i <= truncation; ++i)
      c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - part)];
  TruncatedSeries out(truncation);
  for (int i = 0; i <= truncation; ++i) out.add(i, 0, c[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace zhuc2
