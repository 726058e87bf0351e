#include "ncph/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "ncph/error.hpp"

namespace ncph {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rational(const std::vector<Integer>& f) {
  RatPoly out(f.begin(), f.end());
  trim(out);
  return out;
}

RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

// Remainder of a / b; b nonzero.
RatPoly remainder(RatPoly a, const RatPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Rational eval(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

int sign_q(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

int sign_changes(const std::vector<RatPoly>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = sign_q(eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

// Lagrange interpolation through (xs[i], ys[i]).
RatPoly interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
  std::size_t k = xs.size();
  RatPoly result(k, Rational(0));
  for (std::size_t i = 0; i < k; ++i) {
    RatPoly basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      RatPoly next(basis.size() + 1, Rational(0));
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= basis[t] * Rational(xs[j]);
      }
      basis = std::move(next);
      denom *= Rational(xs[i] - xs[j]);
    }
    for (std::size_t t = 0; t < basis.size(); ++t) result[t] += basis[t] * Rational(ys[i]) / denom;
  }
  trim(result);
  return result;
}

// Interval Horner evaluation of a coordinate polynomial over [lo, hi].
std::pair<Rational, Rational> enclose(std::span<const Rational> c, const Rational& lo,
                                      const Rational& hi) {
  Rational a = c.back();
  Rational b = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    Rational p1 = a * lo, p2 = a * hi, p3 = b * lo, p4 = b * hi;
    Rational mn = std::min({p1, p2, p3, p4});
    Rational mx = std::max({p1, p2, p3, p4});
    a = mn + c[i];
    b = mx + c[i];
  }
  return {a, b};
}

}  // namespace

namespace poly {

Rational evaluate(const std::vector<Integer>& f, const Rational& x) {
  return eval(to_rational(f), x);
}

int count_real_roots(const std::vector<Integer>& f, const Rational& lo, const Rational& hi) {
  RatPoly p0 = to_rational(f);
  if (p0.size() < 2) return 0;
  std::vector<RatPoly> seq{p0, derivative(p0)};
  while (seq.back().size() > 1) {
    RatPoly r = remainder(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& x : r) x = -x;
    seq.push_back(std::move(r));
  }
  return sign_changes(seq, lo) - sign_changes(seq, hi);
}

bool is_irreducible(const std::vector<Integer>& f_in) {
  std::vector<Integer> f = f_in;
  while (!f.empty() && f.back() == 0) f.pop_back();
  if (f.size() < 2) return false;
  int deg = static_cast<int>(f.size()) - 1;
  if (deg == 1) return true;
  RatPoly fr = to_rational(f);

  // Sample points with small nonzero |f(x)| keep the divisor search short.
  std::vector<std::pair<Integer, Integer>> samples;
  for (long x = -12; x <= 12; ++x) {
    Rational v = eval(fr, Rational(x));
    if (v == 0) return false;  // rational (integer) root
    samples.emplace_back(abs(v.get_num()), Integer(x));
  }
  std::sort(samples.begin(), samples.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  for (int k = 1; k <= deg / 2; ++k) {
    std::vector<Integer> xs, fx;
    for (int i = 0; i <= k; ++i) {
      xs.push_back(samples[static_cast<std::size_t>(i)].second);
      fx.push_back(eval(fr, Rational(xs.back())).get_num());
    }
    std::vector<std::vector<Integer>> choices;
    for (int i = 0; i <= k; ++i) {
      std::vector<Integer> opts;
      for (const auto& d : divisors(fx[static_cast<std::size_t>(i)])) {
        opts.push_back(d);
        if (i > 0) opts.push_back(-d);  // g and -g are equivalent
      }
      choices.push_back(std::move(opts));
    }
    std::vector<std::size_t> idx(choices.size(), 0);
    while (true) {
      std::vector<Integer> ys;
      for (std::size_t i = 0; i < idx.size(); ++i) ys.push_back(choices[i][idx[i]]);
      RatPoly g = interpolate(xs, ys);
      if (static_cast<int>(g.size()) - 1 == k &&
          std::all_of(g.begin(), g.end(), [](const Rational& q) { return q.get_den() == 1; }) &&
          remainder(fr, g).empty()) {
        return false;
      }
      std::size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
      if (pos == idx.size()) break;
    }
  }
  return true;
}

}  // namespace poly

FieldPtr NumberField::rationals() {
  static const FieldPtr q = [] {
    auto* f = new NumberField();
    f->degree_ = 1;
    f->poly_ = {Integer(-1), Integer(1)};
    f->lo_ = f->fine_lo_ = 0;
    f->hi_ = f->fine_hi_ = 2;
    f->theta_approx_ = 1.0;
    return FieldPtr(f);
  }();
  return q;
}

FieldPtr NumberField::create(std::vector<Integer> minimal_polynomial, Rational lo,
                             Rational hi, int refinement_depth) {
  while (!minimal_polynomial.empty() && minimal_polynomial.back() == 0)
    minimal_polynomial.pop_back();
  if (minimal_polynomial.size() < 2)
    throw AlgebraError("minimal polynomial must have degree >= 1");
  if (minimal_polynomial.front() == 0)
    throw AlgebraError("minimal polynomial has zero constant term; theta = 0 is not a generator");
  if (!(lo < hi)) throw AlgebraError("isolating interval must satisfy lo < hi");
  if (!poly::is_irreducible(minimal_polynomial))
    throw AlgebraError("minimal polynomial is reducible over the rationals");
  if (poly::evaluate(minimal_polynomial, lo) == 0 || poly::evaluate(minimal_polynomial, hi) == 0)
    throw AlgebraError("isolating interval endpoint is a root");
  int roots = poly::count_real_roots(minimal_polynomial, lo, hi);
  if (roots != 1) {
    std::ostringstream os;
    os << "isolating interval contains " << roots << " roots, expected exactly 1";
    throw AlgebraError(os.str());
  }
  if (refinement_depth < 1) throw AlgebraError("refinement depth must be positive");

  auto* f = new NumberField();
  FieldPtr out(f);
  f->poly_ = std::move(minimal_polynomial);
  f->degree_ = static_cast<int>(f->poly_.size()) - 1;
  f->lo_ = lo;
  f->hi_ = hi;
  f->depth_ = refinement_depth;

  RatPoly fr = to_rational(f->poly_);
  if (f->degree_ == 1) {
    Rational root = -fr[0] / fr[1];
    f->fine_lo_ = f->fine_hi_ = root;
    f->theta_approx_ = root.get_d();
    return out;
  }

  Rational a = lo, b = hi;
  int sa = sign_q(eval(fr, a));
  const Rational target_width = Rational(1, 1) / Rational(Integer(1) << 64);
  while (b - a > target_width) {
    Rational m = (a + b) / 2;
    int sm = sign_q(eval(fr, m));
    if (sm == sa) {
      a = m;
    } else {
      b = m;
    }
  }
  f->fine_lo_ = a;
  f->fine_hi_ = b;
  f->fine_lo_sign_ = sa;
  f->theta_approx_ = Rational((a + b) / 2).get_d();

  const int d = f->degree_;
  // theta^d = -(a_0 + ... + a_{d-1} theta^{d-1}) / a_d
  std::vector<Rational> top(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) top[static_cast<std::size_t>(i)] = -fr[static_cast<std::size_t>(i)] / fr[static_cast<std::size_t>(d)];
  f->powers_.push_back(top);
  for (int k = d + 1; k <= 2 * d - 2; ++k) {
    const auto& prev = f->powers_.back();
    std::vector<Rational> next(static_cast<std::size_t>(d), Rational(0));
    for (int i = 0; i + 1 < d; ++i) next[static_cast<std::size_t>(i + 1)] = prev[static_cast<std::size_t>(i)];
    for (int i = 0; i < d; ++i) next[static_cast<std::size_t>(i)] += prev[static_cast<std::size_t>(d - 1)] * top[static_cast<std::size_t>(i)];
    f->powers_.push_back(std::move(next));
  }
  return out;
}

int NumberField::sign_of(std::span<const Rational> c) const {
  bool all_zero = std::all_of(c.begin(), c.end(), [](const Rational& q) { return q == 0; });
  if (all_zero) return 0;
  if (degree_ == 1) return sign_q(c[0]);
  std::size_t top = c.size();
  while (top > 0 && c[top - 1] == 0) --top;
  if (top == 1) return sign_q(c[0]);
  auto coeffs = c.first(top);

  RatPoly fr = to_rational(poly_);
  Rational a = fine_lo_, b = fine_hi_;
  for (int step = 0; step < depth_; ++step) {
    auto [lo, hi] = enclose(coeffs, a, b);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    Rational m = (a + b) / 2;
    int sm = sign_q(eval(fr, m));
    if (sm == 0) throw AlgebraError("minimal polynomial vanishes at a rational point");
    if (sm == fine_lo_sign_) {
      a = m;
    } else {
      b = m;
    }
  }
  throw AlgebraError("sign refinement depth exceeded");
}

double NumberField::approximate(std::span<const Rational> c) const {
  double acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * theta_approx_ + c[i].get_d();
  return acc;
}

bool NumberField::same_as(const NumberField& other) const {
  if (this == &other) return true;
  if (degree_ != other.degree_ || poly_ != other.poly_) return false;
  // Same polynomial; same root iff the isolating intervals overlap.
  return !(fine_hi_ < other.fine_lo_ || other.fine_hi_ < fine_lo_);
}

std::string NumberField::describe() const {
  if (this == rationals().get()) return "Q";
  std::ostringstream os;
  os << "Q[t]/(";
  bool first = true;
  for (std::size_t i = poly_.size(); i-- > 0;) {
    if (poly_[i] == 0) continue;
    if (!first) os << (poly_[i] > 0 ? " + " : " - ");
    else if (poly_[i] < 0) os << "-";
    Integer a = abs(poly_[i]);
    if (a != 1 || i == 0) os << a;
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  os << "), t in (" << lo_ << ", " << hi_ << ")";
  return os.str();
}

}  // namespace ncph
