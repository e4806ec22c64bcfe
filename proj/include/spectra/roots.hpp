#pragma once

#include <vector>

#include "spectra/exact.hpp"
#include "spectra/polynomial.hpp"

namespace spectra {

// Square-free factors by multiplicity: result[k] has all roots of multiplicity k+1.
std::vector<ExactPolynomial> squarefree_decomposition(const ExactPolynomial& p);

// Number of distinct real roots in (lo, hi] of a square-free polynomial.
int sturm_count(const ExactPolynomial& squarefree, const Rational& lo, const Rational& hi);

// All real roots with multiplicity, ascending. Count is exact; locations are
// refined to about 1e-14 relative. Throws ZeroPolynomial.
std::vector<double> real_roots(const ExactPolynomial& p);
std::vector<double> real_roots(const RealPolynomial& p);

// Exact number of real roots counted with multiplicity.
int count_real_roots(const ExactPolynomial& p);

}  // namespace spectra
