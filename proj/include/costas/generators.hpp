#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "costas/finite_field.hpp"
#include "costas/permutation.hpp"

namespace costas {

/**
 * Construction methods. The Welch group works over prime fields, the Golomb
 * group over arbitrary GF(q). W1exp/W1log/W2/G2/G3/G4 are generated (the
 * Costas property follows from the construction); W3/G4star/G4dstar/G5star
 * are predictably emergent (extra identities on the primitive roots are
 * required); G0/G1/W0/RW0/RG1 are unpredictably emergent dot-addition and
 * shift heuristics whose output must be verified explicitly.
 */
enum class Method {
  W1exp,
  W1log,
  W2,
  W3,
  G2,
  G3,
  G4,
  G4star,
  G4dstar,
  G5star,
  G0,
  G1,
  W0,
  RW0,
  RG1,
};

std::string_view method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

/// Parameter block; only the fields relevant to the method are read.
struct ConstructionSpec {
  Method method = Method::W1exp;
  std::int64_t p = 0;  // prime characteristic
  int m = 1;           // extension degree (q = p^m)
  std::int64_t alpha = 0;
  std::int64_t beta = 0;  // field element codes
  std::int64_t c = 0;     // W1 column shift, in [0, p-2]
  std::int64_t t = 0;     // RW0 row shift, in [2, p-1]
  std::int64_t t1 = 0;    // RG1 column shift, in [2, q-2]
  std::int64_t t2 = 0;    // RG1 row shift, in [2, q-2]
};

struct GenerationOutcome {
  Permutation permutation;
  bool verified = false;  // by theorem for generated methods, by check for heuristics
  Method method = Method::W1exp;
  ConstructionSpec parameters;
};

GenerationOutcome welch_generate(const ConstructionSpec& spec);    // W1exp W1log W2 W3
GenerationOutcome golomb_generate(const ConstructionSpec& spec);   // G2 G3 G4 G4* G4** G5*
GenerationOutcome emergent_generate(const ConstructionSpec& spec); // G0 G1 W0 RW0 RG1
GenerationOutcome generate(const ConstructionSpec& spec);          // dispatch on spec.method

/**
 * Every array the method produces over the field of order p^m (all
 * admissible alpha/beta/c/t combinations). For W1 this is the exponential
 * half followed by the logarithmic half, each internally duplicate-free;
 * the two halves are kept separate even at p <= 5 where they overlap, so
 * the total count is always 2(p-1)phi(p-1). For the other methods the
 * result is deduplicated (conjugate generator pairs of an extension field
 * yield equal G2 arrays). Heuristic methods contribute only the candidates
 * that pass verification.
 */
std::vector<Permutation> enumerate_family(Method method, std::int64_t p, int m = 1);

/// The combined Welch family: exponential half followed by logarithmic half.
std::vector<Permutation> w1_family(std::int64_t p);

/// Parameter specs behind enumerate_family, in the same order.
std::vector<ConstructionSpec> family_specs(Method method, std::int64_t p, int m = 1);

/// The method's output set restricted to order n, or empty when no p^m fits.
std::vector<Permutation> family_at_order(Method method, int n);

/// Resulting array order for the method over GF(p^m).
int method_order(Method method, std::int64_t p, int m = 1);

}  // namespace costas
