#include "qes/univariate.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace qes {

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UPoly::coeff(int k) const {
  return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(k)] : Rational(0);
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double UPoly::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
  return UPoly(std::move(out));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return leading().inverse() * *this;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("UPoly::divmod: division by zero polynomial");
  std::vector<Rational> remainder = coeffs_;
  const int dd = divisor.degree();
  std::vector<Rational> quotient(static_cast<std::size_t>(std::max(0, degree() - dd + 1)));
  const Rational lead_inv = divisor.leading().inverse();
  for (int k = degree(); k >= dd; --k) {
    const Rational factor = remainder[static_cast<std::size_t>(k)] * lead_inv;
    if (factor.is_zero()) continue;
    quotient[static_cast<std::size_t>(k - dd)] = factor;
    for (int j = 0; j <= dd; ++j)
      remainder[static_cast<std::size_t>(k - dd + j)] -= factor * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(quotient)), UPoly(std::move(remainder))};
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << c << ')';
    if (k == 1) os << '*' << var;
    else if (k > 1) os << '*' << var << '^' << k;
  }
  return os.str();
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
  return UPoly(std::move(out));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UPoly(std::move(out));
}

UPoly operator*(const Rational& s, const UPoly& a) {
  std::vector<Rational> out = a.coeffs_;
  for (auto& c : out) c *= s;
  return UPoly(std::move(out));
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p;
  return p.divmod(gcd(p, p.derivative())).first;
}

SturmSequence::SturmSequence(const UPoly& p) {
  chain_.push_back(p);
  if (p.degree() <= 0) return;
  chain_.push_back(p.derivative());
  while (!chain_.back().is_zero() && chain_.back().degree() > 0) {
    const auto& prev = chain_[chain_.size() - 2];
    UPoly r = prev.divmod(chain_.back()).second;
    if (r.is_zero()) break;
    chain_.push_back(Rational(-1) * r);
  }
}

int SturmSequence::variations(const Rational& x) const {
  int count = 0;
  int previous = 0;
  for (const auto& p : chain_) {
    const int s = p(x).sign();
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++count;
    previous = s;
  }
  return count;
}

int SturmSequence::count(const Rational& a, const Rational& b) const {
  return variations(a) - variations(b);
}

namespace {

// Picks a split point strictly inside (lo, hi) where p does not vanish.
Rational nonroot_split(const UPoly& p, const Rational& lo, const Rational& hi) {
  static const std::array<Rational, 5> fractions{Rational(1, 2), Rational(3, 7), Rational(4, 7), Rational(2, 5), Rational(3, 5)};
  for (const auto& f : fractions) {
    Rational mid = lo + (hi - lo) * f;
    if (!p(mid).is_zero()) return mid;
  }
  throw std::logic_error("nonroot_split: polynomial vanishes at every probe");
}

void refine(const UPoly& p, RootInterval& interval, const Rational& tolerance) {
  if (interval.lower == interval.upper) return;
  int sign_lo = p(interval.lower).sign();
  while (true) {
    Rational magnitude = std::max(interval.lower.abs(), interval.upper.abs());
    if (magnitude < Rational(1)) magnitude = Rational(1);
    if (interval.width() <= tolerance * magnitude) return;
    Rational mid = (interval.lower + interval.upper) * Rational(1, 2);
    const int s = p(mid).sign();
    if (s == 0) {
      interval.lower = interval.upper = mid;
      return;
    }
    if (s == sign_lo) {
      interval.lower = mid;
    } else {
      interval.upper = mid;
    }
    sign_lo = p(interval.lower).sign();
  }
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const UPoly& p, const Rational& relative_tolerance) {
  std::vector<RootInterval> roots;
  if (p.degree() <= 0) return roots;
  const UPoly q = squarefree_part(p);
  const SturmSequence sturm(q);

  // Cauchy bound: every root has |t| < 1 + max |a_k / a_n|.
  Rational bound(0);
  for (int k = 0; k < q.degree(); ++k) bound = std::max(bound, (q.coeff(k) / q.leading()).abs());
  bound += Rational(1);

  std::vector<std::pair<Rational, Rational>> pending{{-bound, bound}};
  while (!pending.empty()) {
    auto [lo, hi] = pending.back();
    pending.pop_back();
    const int n = sturm.count(lo, hi);
    if (n == 0) continue;
    if (n == 1) {
      roots.push_back({lo, hi});
      continue;
    }
    const Rational mid = nonroot_split(q, lo, hi);
    pending.emplace_back(lo, mid);
    pending.emplace_back(mid, hi);
  }
  for (auto& r : roots) refine(q, r, relative_tolerance);
  std::sort(roots.begin(), roots.end(), [](const RootInterval& a, const RootInterval& b) { return a.lower < b.lower; });
  return roots;
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  UPoly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UPoly basis = UPoly::constant(Rational(1));
    Rational denominator(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * UPoly({-xs[j], Rational(1)});
      denominator *= xs[i] - xs[j];
    }
    out = out + (ys[i] / denominator) * basis;
  }
  return out;
}

UPoly characteristic_polynomial(const Matrix<Rational>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("characteristic_polynomial: matrix not square");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = Rational(1);
  Matrix<Rational> m(n, n);
  const auto identity = Matrix<Rational>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * identity;
    const Matrix<Rational> am = a * m;
    Rational trace(0);
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / Rational(static_cast<long>(k));
  }
  return UPoly(std::move(c));
}

}  // namespace qes
