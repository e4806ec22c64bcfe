#include "spectra/roots.hpp"

#include <algorithm>
#include <cmath>

#include "spectra/errors.hpp"

namespace spectra {

namespace {

std::vector<ExactPolynomial> sturm_sequence(const ExactPolynomial& p) {
  std::vector<ExactPolynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    ExactPolynomial q, r;
    seq[seq.size() - 2].divmod(seq.back(), q, r);
    if (r.is_zero()) break;
    seq.push_back(r * Rational(-1));
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int variations(const std::vector<ExactPolynomial>& seq, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& s : seq) {
    int v = s.sign_at(x);
    if (v == 0) continue;
    if (last != 0 && v != last) ++count;
    last = v;
  }
  return count;
}

Rational cauchy_bound(const ExactPolynomial& p) {
  Rational m(0);
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = abs(p.coeff(k) / p.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

struct Isolator {
  std::vector<ExactPolynomial> seq;
  const ExactPolynomial& p;

  int count(const Rational& lo, const Rational& hi) const {
    return variations(seq, lo) - variations(seq, hi);
  }

  double refine(Rational lo, Rational hi) const {
    if (p.sign_at(hi) == 0) return hi.get_d();
    for (int it = 0; it < 400; ++it) {
      double dlo = lo.get_d(), dhi = hi.get_d();
      if (dhi - dlo <= 1e-15 * std::max(1.0, std::max(std::fabs(dlo), std::fabs(dhi)))) break;
      Rational mid = (lo + hi) / 2;
      if (p.sign_at(mid) == 0) return mid.get_d();
      if (count(lo, mid) == 1) hi = mid; else lo = mid;
    }
    return Rational((lo + hi) / 2).get_d();
  }

  void isolate(const Rational& lo, const Rational& hi, int n, std::vector<double>& out) const {
    if (n <= 0) return;
    if (n == 1) {
      out.push_back(refine(lo, hi));
      return;
    }
    Rational mid = (lo + hi) / 2;
    int left = count(lo, mid);
    isolate(lo, mid, left, out);
    isolate(mid, hi, n - left, out);
  }
};

std::vector<double> distinct_roots(const ExactPolynomial& sqfree) {
  std::vector<double> out;
  if (sqfree.degree() < 1) return out;
  Isolator iso{sturm_sequence(sqfree), sqfree};
  Rational b = cauchy_bound(sqfree);
  Rational lo = -b, hi = b;
  iso.isolate(lo, hi, iso.count(lo, hi), out);
  return out;
}

}  // namespace

std::vector<ExactPolynomial> squarefree_decomposition(const ExactPolynomial& p) {
  // Yun's algorithm.
  std::vector<ExactPolynomial> out;
  if (p.degree() < 1) return out;
  ExactPolynomial f = p.monic();
  ExactPolynomial fp = f.derivative();
  ExactPolynomial a = gcd(f, fp);
  ExactPolynomial q, r;
  f.divmod(a, q, r);
  ExactPolynomial b = q;
  fp.divmod(a, q, r);
  ExactPolynomial c = q;
  ExactPolynomial d = c - b.derivative();
  while (b.degree() >= 1) {
    ExactPolynomial g = gcd(b, d);
    out.push_back(g);
    b.divmod(g, q, r);
    b = q;
    d.divmod(g, q, r);
    c = q;
    d = c - b.derivative();
  }
  return out;
}

int sturm_count(const ExactPolynomial& squarefree, const Rational& lo, const Rational& hi) {
  auto seq = sturm_sequence(squarefree);
  return variations(seq, lo) - variations(seq, hi);
}

std::vector<double> real_roots(const ExactPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "real_roots of the zero polynomial");
  std::vector<double> out;
  auto parts = squarefree_decomposition(p);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (double r : distinct_roots(parts[k]))
      for (std::size_t j = 0; j <= k; ++j) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> real_roots(const RealPolynomial& p) { return real_roots(p.to_exact()); }

int count_real_roots(const ExactPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "count_real_roots of the zero polynomial");
  int n = 0;
  auto parts = squarefree_decomposition(p);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].degree() < 1) continue;
    Rational b = cauchy_bound(parts[k]);
    n += static_cast<int>(k + 1) * sturm_count(parts[k], -b, b);
  }
  return n;
}

}  // namespace spectra
