#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "hz/extension.hpp"
#include "hz/field.hpp"
#include "hz/hensel_transforms.hpp"
#include "hz/polynomial.hpp"
#include "hz/rational.hpp"

namespace hz::test {

inline Rational q(long n, long d = 1) { return Rational(n, d); }

inline Polynomial poly(FieldPtr f, std::initializer_list<Rational> coeffs) {
  std::vector<Element> out(coeffs.begin(), coeffs.end());
  return Polynomial(std::move(f), std::move(out));
}

inline Polynomial poly(FieldPtr f, std::initializer_list<Element> coeffs) {
  return Polynomial(std::move(f), std::vector<Element>(coeffs));
}

// X^2 - X + 25/196 over Q with v_5.
inline Polynomial worked_t(FieldPtr f) { return poly(f, {q(25, 196), q(-1), q(1)}); }

inline Integer ipow(long p, unsigned long n) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), n);
  return out;
}

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  // num/den with |num|, den <= bound.
  Rational rational(long bound) {
    const long num = uniform(-bound, bound);
    const long den = uniform(1, bound);
    return Rational(num, den);
  }

  // Nonzero rational whose numerator and denominator are prime to p.
  Rational unit(long p, long bound) {
    for (;;) {
      const long num = uniform(-bound, bound);
      const long den = uniform(1, bound);
      if (num % p != 0 && den % p != 0) return Rational(num, den);
    }
  }

  // p-integral rational, possibly zero.
  Rational integral(long p, long bound) {
    if (uniform(0, 5) == 0) return Rational(0);
    return unit(p, bound) * Rational(ipow(p, static_cast<unsigned long>(uniform(0, 2))));
  }

  // Rational of valuation >= 1 (zero allowed).
  Rational in_maximal_ideal(long p, long bound) {
    if (uniform(0, 6) == 0) return Rational(0);
    return unit(p, bound) * Rational(ipow(p, static_cast<unsigned long>(uniform(1, 3))));
  }

  SpecialPoly special(FieldPtr f, long p, std::size_t d, long bound = 50) {
    std::vector<Element> c;
    for (std::size_t i = 0; i + 1 < d; ++i) c.emplace_back(in_maximal_ideal(p, bound));
    c.emplace_back(Rational(-1));
    c.emplace_back(Rational(1));
    return SpecialPoly::validate(Polynomial(std::move(f), std::move(c)));
  }

  // Random polynomial of degree <= max_degree with p-integral rational coefficients.
  Polynomial integral_poly(FieldPtr f, long p, std::size_t max_degree, long bound = 30) {
    std::vector<Element> c;
    const auto deg = static_cast<std::size_t>(uniform(0, static_cast<long>(max_degree)));
    for (std::size_t i = 0; i <= deg; ++i) c.emplace_back(integral(p, bound));
    return Polynomial(std::move(f), std::move(c));
  }

  Polynomial rational_poly(FieldPtr f, std::size_t max_degree, long bound) {
    std::vector<Element> c;
    const auto deg = static_cast<std::size_t>(uniform(0, static_cast<long>(max_degree)));
    for (std::size_t i = 0; i <= deg; ++i) c.emplace_back(rational(bound));
    return Polynomial(std::move(f), std::move(c));
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace hz::test
