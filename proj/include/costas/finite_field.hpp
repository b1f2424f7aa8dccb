#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "costas/errors.hpp"

namespace costas {

class FieldElement;

/**
 * Exact arithmetic in GF(p^m). Elements are canonical integer codes in
 * [0, q): the code is the base-p evaluation of the coefficient sequence of
 * the representative polynomial. For m > 1 the field is constructed as
 * GF(p)[x] modulo the lexicographically smallest monic irreducible
 * polynomial of degree m (coefficients compared from the high degree down),
 * so codes are reproducible across runs.
 *
 * Multiplication goes through exponent/log tables built once at
 * construction; instances are immutable afterwards and safe to share
 * between threads.
 */
class FiniteField {
 public:
  explicit FiniteField(std::int64_t p, int m = 1);

  std::int64_t characteristic() const { return p_; }
  int degree() const { return m_; }
  std::int64_t order() const { return q_; }

  /// Reduction polynomial, constant term first, monic; {0, 1} (= x) for m = 1.
  const std::vector<std::int64_t>& modulus() const { return modulus_; }

  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t sub(std::int64_t a, std::int64_t b) const;
  std::int64_t neg(std::int64_t a) const;
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t inverse(std::int64_t a) const;  // ZeroArgumentError on 0
  std::int64_t pow(std::int64_t a, std::int64_t e) const;

  std::int64_t element_order(std::int64_t a) const;  // ZeroArgumentError on 0
  bool is_primitive(std::int64_t a) const;

  /// The reference generator used by the internal tables (smallest primitive code).
  std::int64_t generator() const { return generator_; }

  /// All elements of multiplicative order q-1; exactly phi(q-1) of them.
  std::vector<std::int64_t> primitive_elements() const;

  /// Exponent e in [0, q-2] with base^e = x. base must be primitive, x nonzero.
  std::int64_t discrete_log(std::int64_t base, std::int64_t x) const;

  /// All ordered pairs (a, b) of primitive elements with a + b = 1.
  std::vector<std::pair<std::int64_t, std::int64_t>> primitive_pairs_summing_to_one() const;

  FieldElement element(std::int64_t rep) const;
  bool same_field(const FiniteField& other) const;

 private:
  void check_rep(std::int64_t a) const;

  std::int64_t p_;
  int m_;
  std::int64_t q_;
  std::vector<std::int64_t> modulus_;
  std::int64_t generator_ = 0;
  std::vector<std::int64_t> exp_;  // exp_[k] = generator^k for k in [0, q-2]
  std::vector<std::int64_t> log_;  // log_[x] for x in [1, q-1]; log_[0] unused
};

/// Value-semantics wrapper over a field code; operations check field identity.
class FieldElement {
 public:
  FieldElement(const FiniteField& field, std::int64_t rep);

  std::int64_t rep() const { return rep_; }
  const FiniteField& field() const { return *field_; }

  FieldElement operator+(const FieldElement& other) const;
  FieldElement operator-(const FieldElement& other) const;
  FieldElement operator*(const FieldElement& other) const;
  FieldElement operator/(const FieldElement& other) const;
  FieldElement pow(std::int64_t e) const;

  bool operator==(const FieldElement& other) const;
  bool operator!=(const FieldElement& other) const { return !(*this == other); }

 private:
  const FiniteField* field_;
  std::int64_t rep_;
};

FiniteField make_field(std::int64_t p, int m = 1);

}  // namespace costas
