#ifndef NCPH_ARRANGEMENT_HPP
#define NCPH_ARRANGEMENT_HPP

// The reflection arrangement: rays, the rational bound lambda', the generic
// vector v and chambers wC with the bounded-slice test.

#include <vector>

#include "ncph/coxeter.hpp"
#include "ncph/report.hpp"
#include "ncph/rootorder.hpp"

namespace ncph {

// One-dimensional flats, each as a spanning vector in the simple-root basis
// with first nonzero coordinate 1. Sorted by vector_key. Rank 1 has none.
std::vector<Vector> enumerate_rays(const CoxeterSystem& system, const ReflectionSet& t);

// Largest p/q with q <= max_denominator and (p/q)^2 <= min (r.rho)^2 / (r.r)
// over rays r and roots rho with r.rho != 0. When no such p/q is positive,
// the largest 2^-k below the minimum. 1 when there are no rays.
Rational lambda_bound(const CoxeterSystem& system, const ReflectionSet& t, const std::vector<Vector>& rays,
                      int max_denominator = 64);

struct GenericVector {
  Vector v;
  Rational lambda;
  Scalar a;  // 1 + 1/lambda
};

// v = tau_1 + a tau_2 + ... + a^{n-1} tau_n. Throws InvariantViolation if
// some ray is orthogonal to v.
GenericVector generic_vector(const CoxeterSystem& system, const std::vector<Vector>& tau, const Rational& lambda,
                             const std::vector<Vector>& rays);

// (r.v)^2 >= lambda^2 (r.r) and r.v != 0 for every ray.
CheckReport check_generic(const CoxeterSystem& system, const GenericVector& gv, const std::vector<Vector>& rays);

struct Chamber {
  ElementId w = 0;
  std::vector<Vector> rays;  // w omega_1, ..., w omega_n
  Vector interior;           // w (omega_1 + ... + omega_n)
  std::vector<int> signs;    // sign of t.roots[j] . interior
  bool bounded_slice = false;
};

// True iff v . x > 0 for every extreme ray x. Throws InvariantViolation on a
// zero inner product.
bool bounded_slice(const CoxeterSystem& system, const Chamber& chamber, const Vector& v);

// All |W| chambers in element order.
std::vector<Chamber> enumerate_chambers(const CoxeterGroup& group, const ReflectionSet& t, const Vector& v);

std::size_t bounded_slice_count(const std::vector<Chamber>& chambers);

// Sign vectors are nonzero and pairwise distinct, extreme rays are arrangement
// rays, and a bounded-slice chamber's antipode -wC is not bounded-slice.
CheckReport check_chambers(const CoxeterGroup& group, const std::vector<Chamber>& chambers,
                           const std::vector<Vector>& rays);

}  // namespace ncph

#endif  // NCPH_ARRANGEMENT_HPP
