#include "costas/generators.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "costas/numtheory.hpp"

namespace costas {

namespace {

struct MethodInfo {
  Method method;
  std::string_view name;
};

constexpr std::array<MethodInfo, 15> kMethods = {{
    {Method::W1exp, "w1exp"},
    {Method::W1log, "w1log"},
    {Method::W2, "w2"},
    {Method::W3, "w3"},
    {Method::G2, "g2"},
    {Method::G3, "g3"},
    {Method::G4, "g4"},
    {Method::G4star, "g4star"},
    {Method::G4dstar, "g4dstar"},
    {Method::G5star, "g5star"},
    {Method::G0, "g0"},
    {Method::G1, "g1"},
    {Method::W0, "w0"},
    {Method::RW0, "rw0"},
    {Method::RG1, "rg1"},
}};

FiniteField welch_field(const ConstructionSpec& spec) {
  if (spec.m != 1) throw Error("Welch constructions work over prime fields (m = 1)");
  return FiniteField(spec.p, 1);
}

void require_primitive(const FiniteField& F, std::int64_t x, const char* role) {
  if (x < 0 || x >= F.order() || !F.is_primitive(x)) {
    throw NotPrimitiveError(std::string(role) + " " + std::to_string(x) +
                            " is not a primitive element of GF(" + std::to_string(F.order()) +
                            ")");
  }
}

void require_order_positive(std::int64_t order, Method method) {
  if (order <= 0) {
    throw FieldTooSmallError(std::string(method_name(method)) +
                             ": field too small, resulting order would be " +
                             std::to_string(order));
  }
}

// f(i) = alpha^(i-1+c) over GF(p), a bijection on [p-1].
Permutation build_w1exp(const FiniteField& F, std::int64_t alpha, std::int64_t c) {
  const std::int64_t p = F.order();
  std::vector<int> values(p - 1);
  std::int64_t x = F.pow(alpha, c);
  for (std::int64_t i = 0; i < p - 1; ++i) {
    values[i] = static_cast<int>(x);
    x = F.mul(x, alpha);
  }
  return Permutation(std::move(values));
}

// f(i) solves alpha^f(i) + beta^i = 1 in GF(q), a bijection on [q-2].
Permutation build_g2(const FiniteField& F, std::int64_t alpha, std::int64_t beta) {
  const std::int64_t q = F.order();
  std::vector<int> values(q - 2);
  std::int64_t beta_pow = beta;
  for (std::int64_t i = 1; i <= q - 2; ++i) {
    values[i - 1] = static_cast<int>(F.discrete_log(alpha, F.sub(1, beta_pow)));
    beta_pow = F.mul(beta_pow, beta);
  }
  return Permutation(std::move(values));
}

// Removes the given columns and their values, renumbering the rest in order.
Permutation remove_columns(const Permutation& g, const std::vector<int>& cols) {
  const int n = g.size();
  std::vector<char> col_removed(n + 1, 0), val_removed(n + 1, 0);
  for (int c : cols) {
    col_removed[c] = 1;
    val_removed[g(c)] = 1;
  }
  std::vector<int> val_rank(n + 1, 0);
  int rank = 0;
  for (int v = 1; v <= n; ++v) {
    if (!val_removed[v]) val_rank[v] = ++rank;
  }
  std::vector<int> out;
  out.reserve(n - cols.size());
  for (int j = 1; j <= n; ++j) {
    if (!col_removed[j]) out.push_back(val_rank[g(j)]);
  }
  return Permutation(std::move(out));
}

void require_pin(const Permutation& g, int col, std::int64_t value, Method method) {
  if (g(col) != value) {
    throw ConditionUnmetError(std::string(method_name(method)) + ": expected g(" +
                              std::to_string(col) + ") = " + std::to_string(value) +
                              ", found " + std::to_string(g(col)));
  }
}

GenerationOutcome outcome(Permutation f, bool verified, const ConstructionSpec& spec) {
  return GenerationOutcome{std::move(f), verified, spec.method, spec};
}

}  // namespace

std::string_view method_name(Method m) {
  for (const auto& info : kMethods) {
    if (info.method == m) return info.name;
  }
  return "?";
}

std::optional<Method> method_from_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto& info : kMethods) {
    if (info.name == lower) return info.method;
  }
  return std::nullopt;
}

GenerationOutcome welch_generate(const ConstructionSpec& spec) {
  FiniteField F = welch_field(spec);
  const std::int64_t p = F.order();

  if (spec.method == Method::W3) {
    if (!F.is_primitive(2 % p)) {
      throw W3NotApplicableError("2 is not a primitive root mod " + std::to_string(p));
    }
    require_order_positive(p - 3, Method::W3);
    Permutation g = build_w1exp(F, 2, 0);
    require_pin(g, 1, 1, Method::W3);
    require_pin(g, 2, 2, Method::W3);
    return outcome(remove_columns(g, {1, 2}), true, spec);
  }

  require_primitive(F, spec.alpha, "alpha");

  if (spec.method == Method::W2) {
    // c = 0 forced so that g(1) = 1.
    require_order_positive(p - 2, Method::W2);
    Permutation g = build_w1exp(F, spec.alpha, 0);
    require_pin(g, 1, 1, Method::W2);
    return outcome(remove_columns(g, {1}), true, spec);
  }

  if (spec.c < 0 || spec.c > p - 2) {
    throw BadShiftError("W1 shift c = " + std::to_string(spec.c) + " outside [0, " +
                        std::to_string(p - 2) + "]");
  }
  Permutation f = build_w1exp(F, spec.alpha, spec.c);
  switch (spec.method) {
    case Method::W1exp:
      return outcome(std::move(f), true, spec);
    case Method::W1log:
      return outcome(f.inverse(), true, spec);
    default:
      throw Error("welch_generate: unsupported method");
  }
}

GenerationOutcome golomb_generate(const ConstructionSpec& spec) {
  FiniteField F(spec.p, spec.m);
  const std::int64_t q = F.order();
  const std::int64_t one = 1 % q;

  std::int64_t alpha = spec.alpha;
  std::int64_t beta = (spec.method == Method::G4dstar) ? spec.alpha : spec.beta;
  require_primitive(F, alpha, "alpha");
  require_primitive(F, beta, "beta");

  auto sum_is_one = [&](std::int64_t a, std::int64_t b) { return F.add(a, b) == one; };

  switch (spec.method) {
    case Method::G2:
      require_order_positive(q - 2, Method::G2);
      return outcome(build_g2(F, alpha, beta), true, spec);

    case Method::G3: {
      if (!sum_is_one(alpha, beta)) {
        throw ConditionUnmetError("g3 requires alpha + beta = 1");
      }
      require_order_positive(q - 3, Method::G3);
      Permutation g = build_g2(F, alpha, beta);
      require_pin(g, 1, 1, Method::G3);
      return outcome(remove_columns(g, {1}), true, spec);
    }

    case Method::G4: {
      if (spec.p != 2) throw ConditionUnmetError("g4 requires characteristic 2");
      if (!sum_is_one(alpha, beta)) {
        throw ConditionUnmetError("g4 requires alpha + beta = 1");
      }
      require_order_positive(q - 4, Method::G4);
      Permutation g = build_g2(F, alpha, beta);
      require_pin(g, 1, 1, Method::G4);
      require_pin(g, 2, 2, Method::G4);
      return outcome(remove_columns(g, {1, 2}), true, spec);
    }

    case Method::G4star: {
      if (spec.p <= 2) throw ConditionUnmetError("g4star requires odd characteristic");
      if (!sum_is_one(alpha, beta) || !sum_is_one(F.mul(alpha, alpha), F.inverse(beta))) {
        throw ConditionUnmetError("g4star requires alpha + beta = 1 and alpha^2 + beta^-1 = 1");
      }
      require_order_positive(q - 4, Method::G4star);
      Permutation g = build_g2(F, alpha, beta);
      require_pin(g, 1, 1, Method::G4star);
      require_pin(g, 2, q - 2, Method::G4star);
      return outcome(remove_columns(g, {1, 2}), true, spec);
    }

    case Method::G4dstar: {
      if (spec.p <= 2) throw ConditionUnmetError("g4dstar requires odd characteristic");
      if (!sum_is_one(alpha, F.mul(alpha, alpha))) {
        throw ConditionUnmetError("g4dstar requires alpha + alpha^2 = 1");
      }
      require_order_positive(q - 4, Method::G4dstar);
      Permutation g = build_g2(F, alpha, alpha);
      require_pin(g, 1, 2, Method::G4dstar);
      require_pin(g, 2, 1, Method::G4dstar);
      return outcome(remove_columns(g, {1, 2}), true, spec);
    }

    case Method::G5star: {
      if (!sum_is_one(alpha, beta) || !sum_is_one(F.mul(alpha, alpha), F.inverse(beta))) {
        throw ConditionUnmetError("g5star requires alpha + beta = 1 and alpha^2 + beta^-1 = 1");
      }
      require_order_positive(q - 5, Method::G5star);
      Permutation g = build_g2(F, alpha, beta);
      require_pin(g, 1, 1, Method::G5star);
      require_pin(g, 2, q - 2, Method::G5star);
      require_pin(g, static_cast<int>(q - 2), 2, Method::G5star);
      return outcome(remove_columns(g, {1, 2, static_cast<int>(q - 2)}), true, spec);
    }

    default:
      throw Error("golomb_generate: unsupported method");
  }
}

GenerationOutcome emergent_generate(const ConstructionSpec& spec) {
  switch (spec.method) {
    case Method::W0: {
      FiniteField F = welch_field(spec);
      const std::int64_t p = F.order();
      require_primitive(F, spec.alpha, "alpha");
      if (spec.c < 0 || spec.c > p - 2) {
        throw BadShiftError("W0 shift c = " + std::to_string(spec.c) + " outside [0, " +
                            std::to_string(p - 2) + "]");
      }
      Permutation g = build_w1exp(F, spec.alpha, spec.c);
      std::vector<int> values(p);
      values[0] = 1;
      for (std::int64_t i = 2; i <= p; ++i) values[i - 1] = g(static_cast<int>(i) - 1) + 1;
      Permutation f(std::move(values));
      const bool ok = is_costas(f);
      return outcome(std::move(f), ok, spec);
    }

    case Method::RW0: {
      FiniteField F = welch_field(spec);
      const std::int64_t p = F.order();
      require_primitive(F, spec.alpha, "alpha");
      if (spec.c < 0 || spec.c > p - 2) {
        throw BadShiftError("RW0 shift c = " + std::to_string(spec.c) + " outside [0, " +
                            std::to_string(p - 2) + "]");
      }
      if (spec.t < 2 || spec.t > p - 1) {
        throw BadShiftError("RW0 shift t = " + std::to_string(spec.t) + " outside [2, " +
                            std::to_string(p - 1) + "]");
      }
      Permutation g = build_w1exp(F, spec.alpha, spec.c);
      std::vector<int> values(p);
      for (std::int64_t i = 1; i <= p - 1; ++i) {
        values[i - 1] = static_cast<int>((g(static_cast<int>(i)) + spec.t - 1) % p + 1);
      }
      values[p - 1] = static_cast<int>(spec.t);
      Permutation f(std::move(values));
      const bool ok = is_costas(f);
      return outcome(std::move(f), ok, spec);
    }

    case Method::G1:
    case Method::G0: {
      FiniteField F(spec.p, spec.m);
      const std::int64_t q = F.order();
      require_primitive(F, spec.alpha, "alpha");
      require_primitive(F, spec.beta, "beta");
      require_order_positive(q - 2, spec.method);
      Permutation g = build_g2(F, spec.alpha, spec.beta);
      const bool both_corners = spec.method == Method::G0;
      const std::int64_t n = both_corners ? q : q - 1;
      std::vector<int> values(n);
      values[0] = 1;
      for (std::int64_t i = 2; i <= q - 1; ++i) values[i - 1] = g(static_cast<int>(i) - 1) + 1;
      if (both_corners) values[q - 1] = static_cast<int>(q);
      Permutation f(std::move(values));
      const bool ok = is_costas(f);
      return outcome(std::move(f), ok, spec);
    }

    case Method::RG1: {
      FiniteField F(spec.p, spec.m);
      const std::int64_t q = F.order();
      require_primitive(F, spec.alpha, "alpha");
      require_primitive(F, spec.beta, "beta");
      require_order_positive(q - 2, Method::RG1);
      if (spec.t1 < 2 || spec.t1 > q - 2 || spec.t2 < 2 || spec.t2 > q - 2) {
        throw BadShiftError("RG1 shifts must lie in [2, " + std::to_string(q - 2) + "]");
      }
      Permutation g = build_g2(F, spec.alpha, spec.beta);
      // Column shift by t1 and row shift by t2 of the array padded with one
      // blank row and column; the freed cell (t2, t1) gets the new dot.
      std::vector<int> values(q - 1);
      for (std::int64_t i = 1; i <= q - 1; ++i) {
        if (i == spec.t1) {
          values[i - 1] = static_cast<int>(spec.t2);
          continue;
        }
        std::int64_t src = (i - spec.t1 - 1 + 2 * (q - 1)) % (q - 1) + 1;
        values[i - 1] = static_cast<int>((g(static_cast<int>(src)) + spec.t2 - 1) % (q - 1) + 1);
      }
      Permutation f(std::move(values));
      const bool ok = is_costas(f);
      return outcome(std::move(f), ok, spec);
    }

    default:
      throw Error("emergent_generate: unsupported method");
  }
}

GenerationOutcome generate(const ConstructionSpec& spec) {
  switch (spec.method) {
    case Method::W1exp:
    case Method::W1log:
    case Method::W2:
    case Method::W3:
      return welch_generate(spec);
    case Method::G2:
    case Method::G3:
    case Method::G4:
    case Method::G4star:
    case Method::G4dstar:
    case Method::G5star:
      return golomb_generate(spec);
    default:
      return emergent_generate(spec);
  }
}

int method_order(Method method, std::int64_t p, int m) {
  std::int64_t q = 1;
  for (int i = 0; i < m; ++i) q *= p;
  switch (method) {
    case Method::W1exp:
    case Method::W1log:
      return static_cast<int>(q - 1);
    case Method::W2:
      return static_cast<int>(q - 2);
    case Method::W3:
      return static_cast<int>(q - 3);
    case Method::G2:
      return static_cast<int>(q - 2);
    case Method::G3:
      return static_cast<int>(q - 3);
    case Method::G4:
    case Method::G4star:
    case Method::G4dstar:
      return static_cast<int>(q - 4);
    case Method::G5star:
      return static_cast<int>(q - 5);
    case Method::G1:
    case Method::RG1:
      return static_cast<int>(q - 1);
    case Method::G0:
      return static_cast<int>(q);
    case Method::W0:
    case Method::RW0:
      return static_cast<int>(q);
  }
  return 0;
}

std::vector<ConstructionSpec> family_specs(Method method, std::int64_t p, int m) {
  std::vector<ConstructionSpec> specs;
  if (method_order(method, p, m) <= 0) return specs;

  const bool welch = method == Method::W1exp || method == Method::W1log ||
                     method == Method::W2 || method == Method::W3 || method == Method::W0 ||
                     method == Method::RW0;
  if (welch && m != 1) return specs;

  FiniteField F(p, m);
  const std::int64_t q = F.order();
  auto primitives = F.primitive_elements();
  const std::int64_t one = 1 % q;

  ConstructionSpec base;
  base.method = method;
  base.p = p;
  base.m = m;

  switch (method) {
    case Method::W1exp:
    case Method::W1log:
      for (std::int64_t a : primitives) {
        for (std::int64_t c = 0; c <= q - 2; ++c) {
          ConstructionSpec s = base;
          s.alpha = a;
          s.c = c;
          specs.push_back(s);
        }
      }
      break;

    case Method::W2:
      for (std::int64_t a : primitives) {
        ConstructionSpec s = base;
        s.alpha = a;
        specs.push_back(s);
      }
      break;

    case Method::W3:
      if (F.is_primitive(2 % q)) specs.push_back(base);
      break;

    case Method::G2:
      for (std::int64_t a : primitives) {
        for (std::int64_t b : primitives) {
          ConstructionSpec s = base;
          s.alpha = a;
          s.beta = b;
          specs.push_back(s);
        }
      }
      break;

    case Method::G3:
    case Method::G4:
    case Method::G4star:
    case Method::G5star:
      if (method == Method::G4 && p != 2) break;
      if ((method == Method::G4star) && p == 2) break;
      for (std::int64_t a : primitives) {
        std::int64_t b = F.sub(one, a);
        if (b == 0 || !F.is_primitive(b)) continue;
        if ((method == Method::G4star || method == Method::G5star) &&
            F.add(F.mul(a, a), F.inverse(b)) != one) {
          continue;
        }
        ConstructionSpec s = base;
        s.alpha = a;
        s.beta = b;
        specs.push_back(s);
      }
      break;

    case Method::G4dstar:
      if (p == 2) break;
      for (std::int64_t a : primitives) {
        if (F.add(a, F.mul(a, a)) != one) continue;
        ConstructionSpec s = base;
        s.alpha = a;
        s.beta = a;
        specs.push_back(s);
      }
      break;

    case Method::W0:
      for (std::int64_t a : primitives) {
        for (std::int64_t c = 0; c <= q - 2; ++c) {
          ConstructionSpec s = base;
          s.alpha = a;
          s.c = c;
          specs.push_back(s);
        }
      }
      break;

    case Method::RW0:
      for (std::int64_t a : primitives) {
        for (std::int64_t c = 0; c <= q - 2; ++c) {
          for (std::int64_t t = 2; t <= q - 1; ++t) {
            ConstructionSpec s = base;
            s.alpha = a;
            s.c = c;
            s.t = t;
            specs.push_back(s);
          }
        }
      }
      break;

    case Method::G1:
    case Method::G0:
      for (std::int64_t a : primitives) {
        for (std::int64_t b : primitives) {
          ConstructionSpec s = base;
          s.alpha = a;
          s.beta = b;
          specs.push_back(s);
        }
      }
      break;

    case Method::RG1:
      for (std::int64_t a : primitives) {
        for (std::int64_t b : primitives) {
          for (std::int64_t t1 = 2; t1 <= q - 2; ++t1) {
            for (std::int64_t t2 = 2; t2 <= q - 2; ++t2) {
              ConstructionSpec s = base;
              s.alpha = a;
              s.beta = b;
              s.t1 = t1;
              s.t2 = t2;
              specs.push_back(s);
            }
          }
        }
      }
      break;
  }
  return specs;
}

namespace {

bool is_heuristic(Method method) {
  switch (method) {
    case Method::G0:
    case Method::G1:
    case Method::W0:
    case Method::RW0:
    case Method::RG1:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::vector<Permutation> enumerate_family(Method method, std::int64_t p, int m) {
  std::vector<Permutation> out;
  for (const ConstructionSpec& spec : family_specs(method, p, m)) {
    GenerationOutcome result = generate(spec);
    if (is_heuristic(method) && !result.verified) continue;
    out.push_back(std::move(result.permutation));
  }
  std::sort(out.begin(), out.end());
  if (method != Method::W1exp && method != Method::W1log) {
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

std::vector<Permutation> w1_family(std::int64_t p) {
  std::vector<Permutation> family = enumerate_family(Method::W1exp, p);
  std::vector<Permutation> logs = enumerate_family(Method::W1log, p);
  family.insert(family.end(), std::make_move_iterator(logs.begin()),
                std::make_move_iterator(logs.end()));
  return family;
}

std::vector<Permutation> family_at_order(Method method, int n) {
  std::int64_t q = 0;
  switch (method) {
    case Method::W1exp:
    case Method::W1log:
    case Method::G1:
    case Method::RG1:
      q = n + 1;
      break;
    case Method::W2:
    case Method::G2:
      q = n + 2;
      break;
    case Method::W3:
    case Method::G3:
      q = n + 3;
      break;
    case Method::G4:
    case Method::G4star:
    case Method::G4dstar:
      q = n + 4;
      break;
    case Method::G5star:
      q = n + 5;
      break;
    case Method::G0:
    case Method::W0:
    case Method::RW0:
      q = n;
      break;
  }
  auto decomposition = prime_power(q);
  if (!decomposition) return {};
  auto [p, m] = *decomposition;
  const bool welch = method == Method::W1exp || method == Method::W1log ||
                     method == Method::W2 || method == Method::W3 || method == Method::W0 ||
                     method == Method::RW0;
  if (welch && m != 1) return {};
  return enumerate_family(method, p, m);
}

}  // namespace costas
