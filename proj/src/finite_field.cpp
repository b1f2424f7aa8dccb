#include "costas/finite_field.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "costas/numtheory.hpp"

namespace costas {

namespace {

using Poly = std::vector<std::int64_t>;  // coefficients, constant term first

constexpr std::int64_t kMaxFieldOrder = std::int64_t{1} << 22;

Poly code_to_poly(std::int64_t code, std::int64_t p, int m) {
  Poly out(m, 0);
  for (int i = 0; i < m; ++i) {
    out[i] = code % p;
    code /= p;
  }
  return out;
}

std::int64_t poly_to_code(const Poly& poly, std::int64_t p) {
  std::int64_t code = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    code = code * p + *it;
  }
  return code;
}

int poly_degree(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] != 0) return i;
  }
  return -1;
}

// Remainder of a modulo b (b nonzero), coefficients in GF(p).
Poly poly_rem(Poly a, const Poly& b, std::int64_t p) {
  int db = poly_degree(b);
  std::int64_t lead_inv = mod_inverse(b[db], p);
  for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
    std::int64_t factor = a[da] * lead_inv % p;
    int shift = da - db;
    for (int i = 0; i <= db; ++i) {
      a[i + shift] = ((a[i + shift] - factor * b[i]) % p + p) % p;
    }
  }
  return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& modulus, std::int64_t p) {
  Poly prod(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  Poly rem = poly_rem(std::move(prod), modulus, p);
  rem.resize(modulus.size() - 1);
  return rem;
}

bool poly_is_irreducible(const Poly& f, std::int64_t p) {
  int deg = poly_degree(f);
  if (deg < 1) return false;
  if (f[0] == 0) return deg == 1;  // divisible by x
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (int d = 1; 2 * d <= deg; ++d) {
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::int64_t code = 0; code < count; ++code) {
      Poly div = code_to_poly(code, p, d + 1);
      div[d] = 1;
      Poly rem = poly_rem(f, div, p);
      if (poly_degree(rem) < 0) return false;
    }
  }
  return true;
}

// Smallest monic irreducible of degree m over GF(p), comparing coefficient
// sequences from the highest degree down (leading coefficient fixed at 1).
Poly smallest_irreducible(std::int64_t p, int m) {
  std::int64_t count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  for (std::int64_t rank = 0; rank < count; ++rank) {
    // rank encodes (c_{m-1}, ..., c_0) with c_{m-1} most significant
    Poly f(m + 1, 0);
    f[m] = 1;
    std::int64_t r = rank;
    for (int i = 0; i < m; ++i) {
      f[i] = r % p;
      r /= p;
    }
    if (poly_is_irreducible(f, p)) return f;
  }
  throw Error("no irreducible polynomial found");  // unreachable: they always exist
}

}  // namespace

FiniteField::FiniteField(std::int64_t p, int m) : p_(p), m_(m) {
  if (!is_prime(p)) {
    throw NotPrimeError("field characteristic must be prime, got " + std::to_string(p));
  }
  if (m < 1) {
    throw Error("extension degree must be at least 1");
  }
  q_ = 1;
  for (int i = 0; i < m; ++i) {
    q_ *= p;
    if (q_ > kMaxFieldOrder) throw Error("field order exceeds supported range");
  }

  if (m_ == 1) {
    modulus_ = {0, 1};
  } else {
    modulus_ = smallest_irreducible(p_, m_);
  }

  // Locate the smallest primitive element by direct order checks, using slow
  // polynomial arithmetic, then freeze the exp/log tables.
  auto factors = prime_factors(q_ - 1);
  auto slow_mul = [this](std::int64_t a, std::int64_t b) {
    if (m_ == 1) return a * b % p_;
    return poly_to_code(
        poly_mul_mod(code_to_poly(a, p_, m_), code_to_poly(b, p_, m_), modulus_, p_), p_);
  };
  auto slow_pow = [&](std::int64_t a, std::int64_t e) {
    std::int64_t result = 1, base = a;
    while (e > 0) {
      if (e & 1) result = slow_mul(result, base);
      base = slow_mul(base, base);
      e >>= 1;
    }
    return result;
  };
  for (std::int64_t cand = 1; cand < q_; ++cand) {
    bool primitive = true;
    for (std::int64_t f : factors) {
      if (slow_pow(cand, (q_ - 1) / f) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = cand;
      break;
    }
  }

  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  std::int64_t value = 1;
  for (std::int64_t k = 0; k < q_ - 1; ++k) {
    exp_[k] = value;
    log_[value] = k;
    value = slow_mul(value, generator_);
  }
}

void FiniteField::check_rep(std::int64_t a) const {
  if (a < 0 || a >= q_) {
    throw Error("element code " + std::to_string(a) + " outside field of order " +
                std::to_string(q_));
  }
}

std::int64_t FiniteField::add(std::int64_t a, std::int64_t b) const {
  check_rep(a);
  check_rep(b);
  if (m_ == 1) return (a + b) % p_;
  // digit-wise addition in base p, no carries
  std::int64_t out = 0, scale = 1;
  for (int i = 0; i < m_; ++i) {
    out += (a % p_ + b % p_) % p_ * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

std::int64_t FiniteField::neg(std::int64_t a) const {
  check_rep(a);
  if (m_ == 1) return (p_ - a) % p_;
  std::int64_t out = 0, scale = 1;
  for (int i = 0; i < m_; ++i) {
    out += (p_ - a % p_) % p_ * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

std::int64_t FiniteField::sub(std::int64_t a, std::int64_t b) const { return add(a, neg(b)); }

std::int64_t FiniteField::mul(std::int64_t a, std::int64_t b) const {
  check_rep(a);
  check_rep(b);
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

std::int64_t FiniteField::inverse(std::int64_t a) const {
  check_rep(a);
  if (a == 0) throw ZeroArgumentError("zero has no multiplicative inverse");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::int64_t FiniteField::pow(std::int64_t a, std::int64_t e) const {
  check_rep(a);
  if (a == 0) {
    if (e < 0) throw ZeroArgumentError("zero raised to a negative power");
    return e == 0 ? 1 : 0;
  }
  std::int64_t length = q_ - 1;
  std::int64_t reduced = e % length;
  if (reduced < 0) reduced += length;
  return exp_[log_[a] * reduced % length];
}

std::int64_t FiniteField::element_order(std::int64_t a) const {
  check_rep(a);
  if (a == 0) throw ZeroArgumentError("zero has no multiplicative order");
  std::int64_t length = q_ - 1;
  std::int64_t k = log_[a];
  return length / std::gcd(k == 0 ? length : k, length);
}

bool FiniteField::is_primitive(std::int64_t a) const {
  check_rep(a);
  if (a == 0) return false;
  return element_order(a) == q_ - 1;
}

std::vector<std::int64_t> FiniteField::primitive_elements() const {
  std::vector<std::int64_t> out;
  for (std::int64_t x = 1; x < q_; ++x) {
    if (is_primitive(x)) out.push_back(x);
  }
  return out;
}

std::int64_t FiniteField::discrete_log(std::int64_t base, std::int64_t x) const {
  check_rep(base);
  check_rep(x);
  if (x == 0) throw ZeroArgumentError("discrete logarithm of zero");
  if (!is_primitive(base)) {
    throw NotPrimitiveError("discrete_log base " + std::to_string(base) + " is not primitive");
  }
  std::int64_t length = q_ - 1;
  // base = g^s with gcd(s, q-1) = 1, so log_base(x) = log_g(x) * s^{-1}.
  std::int64_t s_inv = mod_inverse(log_[base] == 0 ? 1 : log_[base], length);
  return log_[x] * s_inv % length;
}

std::vector<std::pair<std::int64_t, std::int64_t>> FiniteField::primitive_pairs_summing_to_one()
    const {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t a : primitive_elements()) {
    std::int64_t b = sub(1 % q_, a);
    if (b != 0 && is_primitive(b)) out.emplace_back(a, b);
  }
  return out;
}

FieldElement FiniteField::element(std::int64_t rep) const { return FieldElement(*this, rep); }

bool FiniteField::same_field(const FiniteField& other) const {
  return this == &other || (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_);
}

FieldElement::FieldElement(const FiniteField& field, std::int64_t rep)
    : field_(&field), rep_(rep) {
  if (rep < 0 || rep >= field.order()) {
    throw Error("element code " + std::to_string(rep) + " outside field of order " +
                std::to_string(field.order()));
  }
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field().same_field(b.field())) {
    throw FieldMismatchError("elements belong to different fields");
  }
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& other) const {
  require_same_field(*this, other);
  return FieldElement(*field_, field_->add(rep_, other.rep_));
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
  require_same_field(*this, other);
  return FieldElement(*field_, field_->sub(rep_, other.rep_));
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
  require_same_field(*this, other);
  return FieldElement(*field_, field_->mul(rep_, other.rep_));
}

FieldElement FieldElement::operator/(const FieldElement& other) const {
  require_same_field(*this, other);
  return FieldElement(*field_, field_->mul(rep_, field_->inverse(other.rep_)));
}

FieldElement FieldElement::pow(std::int64_t e) const {
  return FieldElement(*field_, field_->pow(rep_, e));
}

bool FieldElement::operator==(const FieldElement& other) const {
  return field_->same_field(other.field()) && rep_ == other.rep_;
}

FiniteField make_field(std::int64_t p, int m) { return FiniteField(p, m); }

}  // namespace costas
