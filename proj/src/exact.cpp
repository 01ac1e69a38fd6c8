#include "ratsurf/exact.hpp"

#include <sstream>
#include <utility>

namespace ratsurf {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

RatVector to_rational(const IntVector& v) {
  RatVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return RatPoly(std::move(c));
}

namespace {

void require_square(std::size_t r, std::size_t c, const char* what) {
  if (r != c) throw InvalidArgument(std::string(what) + ": matrix is not square");
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  require_square(m.rows(), m.cols(), "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<Integer> leading_principal_minors(const IntMatrix& m) {
  require_square(m.rows(), m.cols(), "leading_principal_minors");
  const std::size_t n = m.rows();
  std::vector<Integer> minors;
  minors.reserve(n);
  IntMatrix a = m;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(a(k, k));
    if (a(k, k) == 0) {
      // Elimination without pivoting stalls; finish with independent determinants.
      for (std::size_t r = k + 2; r <= n; ++r) {
        IntMatrix block(r, r);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) block(i, j) = m(i, j);
        minors.push_back(determinant(block));
      }
      return minors;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return minors;
}

RatMatrix inverse(const RatMatrix& m) {
  require_square(m.rows(), m.cols(), "inverse");
  const std::size_t n = m.rows();
  RatMatrix a = m, inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col) == 0) ++p;
    if (p == n) throw DegenerateError("inverse: singular matrix");
    if (p != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(p, j));
        std::swap(inv(col, j), inv(p, j));
      }
    const Rational piv = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= piv;
      inv(col, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (a(col, j) != 0) a(i, j) -= f * a(col, j);
        if (inv(col, j) != 0) inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

RatVector solve(const RatMatrix& a, const RatVector& b) { return inverse(a).apply(b); }

RatDivision divide(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw InvalidArgument("polynomial division by zero");
  std::vector<Rational> r = num.coeffs();
  const int dd = den.degree();
  if (num.degree() < dd) return {RatPoly{}, num};
  std::vector<Rational> q(static_cast<std::size_t>(num.degree() - dd + 1), Rational(0));
  const Rational lead = den.leading();
  for (int i = num.degree(); i >= dd; --i) {
    const Rational f = r[static_cast<std::size_t>(i)] / lead;
    q[static_cast<std::size_t>(i - dd)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(i - dd + j)] -= f * den.coeffs()[static_cast<std::size_t>(j)];
  }
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

IntDivision divide(const IntPoly& num, const IntPoly& den) {
  auto rd = divide(to_rational(num), to_rational(den));
  auto to_int = [](const RatPoly& p) {
    std::vector<Integer> c;
    for (const auto& x : p.coeffs()) {
      if (denominator(x) != 1) throw InvalidArgument("integer polynomial division is not exact over Z");
      c.push_back(numerator(x));
    }
    return IntPoly(std::move(c));
  };
  return {to_int(rd.quotient), to_int(rd.remainder)};
}

namespace {

RatPoly make_monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  std::vector<Rational> c = p.coeffs();
  const Rational lead = c.back();
  for (auto& x : c) x /= lead;
  return RatPoly(std::move(c));
}

}  // namespace

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divide(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.is_zero()) throw InvalidArgument("squarefree_part of zero polynomial");
  const RatPoly g = gcd(p, p.derivative());
  return make_monic(divide(p, g).quotient);
}

namespace {

template <class T>
Poly<T> berkowitz(const Matrix<T>& a) {
  require_square(a.rows(), a.cols(), "char_poly");
  const std::size_t n = a.rows();
  if (n == 0) return Poly<T>{T(1)};
  // p holds coefficients highest degree first.
  std::vector<T> p{T(1), -a(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<T> t(r + 2, T(0));
    t[0] = T(1);
    t[1] = -a(r, r);
    std::vector<T> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
    for (std::size_t m = 0; m < r; ++m) {
      T acc(0);
      for (std::size_t i = 0; i < r; ++i)
        if (a(r, i) != 0 && v[i] != 0) acc += a(r, i) * v[i];
      t[m + 2] = -acc;
      if (m + 1 < r) {
        std::vector<T> nv(r, T(0));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j)
            if (a(i, j) != 0 && v[j] != 0) nv[i] += a(i, j) * v[j];
        v = std::move(nv);
      }
    }
    std::vector<T> np(r + 2, T(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j)
        if (t[i - j] != 0 && p[j] != 0) np[i] += t[i - j] * p[j];
    p = std::move(np);
  }
  std::reverse(p.begin(), p.end());
  return Poly<T>(std::move(p));
}

}  // namespace

IntPoly char_poly(const IntMatrix& m) { return berkowitz(m); }
RatPoly char_poly(const RatMatrix& m) { return berkowitz(m); }

IntPoly cyclotomic(unsigned d) {
  if (d == 0) throw InvalidArgument("cyclotomic index must be positive");
  // Product formula over divisors with the Moebius function.
  auto mobius = [](unsigned m) {
    int sign = 1;
    for (unsigned p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      m /= p;
      if (m % p == 0) return 0;
      sign = -sign;
    }
    if (m > 1) sign = -sign;
    return sign;
  };
  IntPoly num{Integer(1)}, den{Integer(1)};
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e) continue;
    const int mu = mobius(d / e);
    if (mu == 0) continue;
    IntPoly f = IntPoly::monomial(Integer(1), e) - IntPoly{Integer(1)};
    (mu > 0 ? num : den) = (mu > 0 ? num : den) * f;
  }
  return divide(num, den).quotient;
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

std::string to_string(const IntPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Integer c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (c != 1 || i == 0) os << c;
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

int sign_changes(const IntPoly& p) {
  int changes = 0, last = 0;
  for (const auto& c : p.coeffs()) {
    const int s = c.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace ratsurf
