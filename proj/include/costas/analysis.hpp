#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "costas/finite_field.hpp"
#include "costas/generators.hpp"
#include "costas/permutation.hpp"

namespace costas {

struct CycleDecomposition {
  // Each cycle starts at its minimum element; cycles sorted by that minimum.
  std::vector<std::vector<int>> cycles;
  std::uint64_t order = 1;  // least common multiple of the cycle lengths
};

CycleDecomposition cycle_structure(const Permutation& f);

std::set<int> fixed_points(const Permutation& f);

struct RootCount {
  std::int64_t raw = 0;            // all roots of x^r + x = 1 in GF(q)
  std::int64_t excluding_one = 0;  // roots other than x = 1 (the G2 diagonal count)
};

/// Number of roots of x^r + x = 1 in GF(q); requires gcd(r, q-1) = 1.
RootCount count_roots_power(const FiniteField& field, std::int64_t r);  // GcdViolationError

/// Number of i in [p-1] with i = C * alpha^i (mod p); alpha must be primitive.
std::int64_t count_roots_exp(std::int64_t p, std::int64_t c_residue, std::int64_t alpha);

struct ParityCensus {
  int ee = 0;  // row and column both even
  int eo = 0;  // row even, column odd
  int oe = 0;  // row odd, column even
  int oo = 0;  // row and column both odd
};

ParityCensus parity_census(const Permutation& f);

/// f(i) + f(i + n/2) = n + 1 for all i in [n/2]; defined for even order only.
bool is_anti_reflective(const Permutation& f);  // OddOrderError

/// The congruence f(mu+i) - f(mu-i) = i*(f(mu+1) - f(mu-1)) (mod q-1) with
/// mu = (q-1)/2, which every G2 array over an odd-characteristic GF(q)
/// satisfies. f must have order q-2 and q must be odd.
bool g2_necessary_property(const Permutation& f, std::int64_t q);  // OrderMismatchError

/// True iff all n cyclic shifts of the domain keep the Costas property.
bool is_single_periodic(const Permutation& f);

/// Reads f as a permutation of {0..n-1} (values and indices shifted down by
/// one) and tests the modular distinct-difference property: for every k,
/// the values f(i+k) - f(i) mod (n+1), with i+k taken mod n, are distinct.
bool is_circular_costas(const Permutation& f);

/// Append a blank row; every row-cyclic shift must keep all difference
/// vectors distinct.
bool welch_shift_stability(const Permutation& f);

/// Append a blank row and column; every combined row/column cyclic shift
/// must keep all difference vectors distinct.
bool golomb_shift_stability(const Permutation& f);

/// The two order-(n+2) extensions sharing the shifted interior of f and
/// carrying opposite corner dots; returned iff both are Costas.
std::optional<std::pair<Permutation, Permutation>> find_twins(const Permutation& f);

struct SubPermutation {
  int a1 = 0, b1 = 1;  // index progression a1 + b1*i
  int a2 = 0, b2 = 1;  // value progression a2 + b2*i
  int length = 0;
  Permutation g;
};

/// All arithmetic-progression index/value pairs S1, S2 with f(S1) = S2 and
/// the induced permutation g(i) = (f(a1 + b1*i) - a2) / b2. Steps are
/// bounded by n/2 and lengths below min_length are suppressed.
std::vector<SubPermutation> find_subpermutations(const Permutation& f, int min_length = 3);

struct FamilyOverlap {
  Method first;
  Method second;
  std::size_t first_size = 0;
  std::size_t second_size = 0;
  std::size_t common = 0;
};

/// Pairwise intersections of every construction family applicable at order n.
std::vector<FamilyOverlap> family_disjointness(int n);

}  // namespace costas
