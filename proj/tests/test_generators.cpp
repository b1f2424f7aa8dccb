#include <doctest.h>

#include <algorithm>
#include <set>

#include "costas/analysis.hpp"
#include "costas/finite_field.hpp"
#include "costas/generators.hpp"
#include "costas/numtheory.hpp"

using namespace costas;

namespace {

ConstructionSpec spec_of(Method method, std::int64_t p, int m = 1, std::int64_t alpha = 0,
                         std::int64_t beta = 0, std::int64_t c = 0) {
  ConstructionSpec spec;
  spec.method = method;
  spec.p = p;
  spec.m = m;
  spec.alpha = alpha;
  spec.beta = beta;
  spec.c = c;
  return spec;
}

}  // namespace

TEST_CASE("exponential Welch") {
  CHECK(welch_generate(spec_of(Method::W1exp, 11, 1, 2)).permutation ==
        Permutation({1, 2, 4, 8, 5, 10, 9, 7, 3, 6}));
  CHECK(welch_generate(spec_of(Method::W1exp, 5, 1, 2)).permutation ==
        Permutation({1, 2, 4, 3}));
  CHECK_THROWS_AS(welch_generate(spec_of(Method::W1exp, 7, 1, 4)), NotPrimitiveError);
  CHECK_THROWS_AS(welch_generate(spec_of(Method::W1exp, 5, 1, 2, 0, 7)), BadShiftError);

  SUBCASE("logarithmic variant is the inverse") {
    auto exp = welch_generate(spec_of(Method::W1exp, 13, 1, 2, 0, 3)).permutation;
    auto log = welch_generate(spec_of(Method::W1log, 13, 1, 2, 0, 3)).permutation;
    CHECK(log == exp.inverse());
  }
}

TEST_CASE("corner-stripped Welch variants") {
  // W2 strips the (1,1) dot of W1(p, alpha, 0), so the order drops to p-2.
  auto w2 = welch_generate(spec_of(Method::W2, 5, 1, 2));
  CHECK(w2.permutation.size() == 3);
  CHECK(w2.permutation == Permutation({1, 3, 2}));  // from [1,2,4,3]

  auto w3 = welch_generate(spec_of(Method::W3, 5));
  CHECK(w3.permutation == Permutation({2, 1}));

  CHECK_THROWS_AS(welch_generate(spec_of(Method::W3, 7)), W3NotApplicableError);  // ord(2)=3
  CHECK_THROWS_AS(welch_generate(spec_of(Method::W3, 3)), FieldTooSmallError);
}

TEST_CASE("Golomb G2") {
  CHECK(golomb_generate(spec_of(Method::G2, 5, 1, 2, 2)).permutation == Permutation({2, 1, 3}));

  SUBCASE("GF(4) with the generator as both roots") {
    auto out = golomb_generate(spec_of(Method::G2, 2, 2, 2, 2));
    CHECK(out.permutation.size() == 2);
    CHECK(is_costas(out.permutation));
    CHECK(out.permutation == Permutation({2, 1}));
  }

  CHECK_THROWS_AS(golomb_generate(spec_of(Method::G2, 2, 1, 1, 1)), FieldTooSmallError);
  CHECK_THROWS_AS(golomb_generate(spec_of(Method::G2, 5, 1, 4, 2)), NotPrimitiveError);
}

TEST_CASE("Golomb corner variants") {
  auto g3 = golomb_generate(spec_of(Method::G3, 5, 1, 3, 3));
  CHECK(g3.permutation == Permutation({2, 1}));  // G2(5,3,3) = [1,3,2] minus its corner

  CHECK_THROWS_AS(golomb_generate(spec_of(Method::G3, 5, 1, 2, 2)), ConditionUnmetError);
  CHECK_THROWS_AS(golomb_generate(spec_of(Method::G4, 5, 1, 3, 3)), ConditionUnmetError);

  SUBCASE("G4 in characteristic 2") {
    FiniteField F(2, 3);
    bool found = false;
    for (std::int64_t a : F.primitive_elements()) {
      const std::int64_t b = F.sub(1, a);
      if (!F.is_primitive(b)) continue;
      auto out = golomb_generate(spec_of(Method::G4, 2, 3, a, b));
      CHECK(out.permutation.size() == 4);
      CHECK(is_costas(out.permutation));
      found = true;
    }
    CHECK(found);
  }

  SUBCASE("G4star at q=5: alpha=beta=3 satisfies both identities") {
    auto out = golomb_generate(spec_of(Method::G4star, 5, 1, 3, 3));
    CHECK(out.permutation == Permutation({1}));
  }

  SUBCASE("G5star needs q-5 positive") {
    CHECK_THROWS_AS(golomb_generate(spec_of(Method::G5star, 5, 1, 3, 3)), FieldTooSmallError);
  }

  SUBCASE("G4dstar at q=11: alpha=7 has alpha+alpha^2=1") {
    auto out = golomb_generate(spec_of(Method::G4dstar, 11, 1, 7));
    CHECK(out.permutation.size() == 7);
    CHECK(is_costas(out.permutation));
  }
}

TEST_CASE("generated families verify at small q") {
  for (Method method : {Method::W1exp, Method::W1log, Method::W2, Method::W3, Method::G2,
                        Method::G3, Method::G4, Method::G4star, Method::G4dstar,
                        Method::G5star}) {
    for (std::int64_t q = 2; q <= 32; ++q) {
      auto decomposition = prime_power(q);
      if (!decomposition) continue;
      for (const ConstructionSpec& spec : family_specs(method, decomposition->first,
                                                       decomposition->second)) {
        auto out = generate(spec);
        CAPTURE(method_name(method));
        CAPTURE(q);
        CHECK(out.verified);
        CHECK(is_costas(out.permutation));
      }
    }
  }
}

TEST_CASE("emergent constructions") {
  SUBCASE("G1 over GF(4) builds an order-3 candidate") {
    auto out = emergent_generate(spec_of(Method::G1, 2, 2, 2, 2));
    CHECK(out.permutation.size() == 3);
    CHECK(out.verified == is_costas(out.permutation));
  }

  SUBCASE("W0 sweep finds a Costas hit at p=31") {
    bool hit = false;
    for (const ConstructionSpec& spec : family_specs(Method::W0, 31)) {
      if (emergent_generate(spec).verified) {
        hit = true;
        break;
      }
    }
    CHECK(hit);
  }

  SUBCASE("RW0 sweep finds a hit at p=29") {
    bool hit = false;
    for (const ConstructionSpec& spec : family_specs(Method::RW0, 29)) {
      if (emergent_generate(spec).verified) {
        hit = true;
        break;
      }
    }
    CHECK(hit);
  }

  SUBCASE("every verified emergent candidate is a bijection that checks out") {
    for (Method method : {Method::G0, Method::G1, Method::W0, Method::RW0, Method::RG1}) {
      for (std::int64_t q = 4; q <= 13; ++q) {
        auto decomposition = prime_power(q);
        if (!decomposition) continue;
        for (const ConstructionSpec& spec :
             family_specs(method, decomposition->first, decomposition->second)) {
          auto out = emergent_generate(spec);
          CHECK(out.verified == is_costas(out.permutation));
        }
      }
    }
  }

  SUBCASE("shift ranges are enforced") {
    ConstructionSpec rw0 = spec_of(Method::RW0, 7, 1, 3);
    rw0.t = 1;
    CHECK_THROWS_AS(emergent_generate(rw0), BadShiftError);
    ConstructionSpec rg1 = spec_of(Method::RG1, 7, 1, 3, 3);
    rg1.t1 = 6;  // q-2 = 5 is the maximum
    rg1.t2 = 2;
    CHECK_THROWS_AS(emergent_generate(rg1), BadShiftError);
  }
}

TEST_CASE("family cardinalities") {
  CHECK(w1_family(11).size() == 80);  // 2 * 10 * phi(10)
  CHECK(w1_family(5).size() == 16);
  CHECK(w1_family(3).size() == 4);  // candidates before dedup

  SUBCASE("deduplicated counts from the oracle") {
    auto family3 = w1_family(3);
    std::set<Permutation> dedup3(family3.begin(), family3.end());
    CHECK(dedup3.size() == 2);
    auto family5 = w1_family(5);
    std::set<Permutation> dedup5(family5.begin(), family5.end());
    CHECK(dedup5.size() == 12);  // exponential and logarithmic halves overlap at p=5
  }

  CHECK(enumerate_family(Method::G2, 3, 2).size() == 8);    // phi(8)^2 / 2
  CHECK(enumerate_family(Method::G2, 2, 4).size() == 16);   // phi(15)^2 / 4
  CHECK(enumerate_family(Method::G2, 11, 1).size() == 16);  // phi(10)^2

  SUBCASE("the G2 formula phi^2(q-1)/m holds for q up to 32") {
    for (std::int64_t q = 4; q <= 32; ++q) {
      auto decomposition = prime_power(q);
      if (!decomposition) continue;
      const auto [p, m] = *decomposition;
      const std::int64_t phi = euler_phi(q - 1);
      CHECK(static_cast<std::int64_t>(enumerate_family(Method::G2, p, m).size()) ==
            phi * phi / m);
    }
  }
}

TEST_CASE("structural properties of Welch arrays") {
  SUBCASE("anti-reflective symmetry and single periodicity") {
    for (std::int64_t p : {5, 7, 11, 13}) {
      for (const Permutation& f : enumerate_family(Method::W1exp, p)) {
        CHECK(is_anti_reflective(f));
        CHECK(is_single_periodic(f));
      }
    }
  }

  SUBCASE("exponential and logarithmic halves disjoint and asymmetric for p > 5") {
    for (std::int64_t p : {7, 11}) {
      auto exp_half = enumerate_family(Method::W1exp, p);
      auto log_half = enumerate_family(Method::W1log, p);
      std::vector<Permutation> common;
      std::set_intersection(exp_half.begin(), exp_half.end(), log_half.begin(), log_half.end(),
                            std::back_inserter(common));
      CHECK(common.empty());
      for (const Permutation& f : exp_half) CHECK_FALSE(is_symmetric(f));
      for (const Permutation& f : log_half) CHECK_FALSE(is_symmetric(f));
    }
  }

  SUBCASE("cyclic domain shifts stay inside the exponential family") {
    auto family = enumerate_family(Method::W1exp, 11);
    std::set<Permutation> members(family.begin(), family.end());
    for (const Permutation& f : family) {
      const int n = f.size();
      std::vector<int> shifted(n);
      for (int s = 0; s < n; ++s) {
        for (int i = 0; i < n; ++i) shifted[i] = f((i + s) % n + 1);
        CHECK(members.count(Permutation(shifted)) == 1);
      }
    }
  }
}

TEST_CASE("Lempel and square-power symmetry") {
  SUBCASE("beta = alpha gives symmetric arrays") {
    FiniteField F(11, 1);
    for (std::int64_t a : F.primitive_elements()) {
      auto out = golomb_generate(spec_of(Method::G2, 11, 1, a, a));
      CHECK(is_symmetric(out.permutation));
    }
  }
  SUBCASE("q = r^2 with beta = alpha^r gives symmetric arrays") {
    FiniteField F(3, 2);  // q = 9 = 3^2
    for (std::int64_t a : F.primitive_elements()) {
      auto out = golomb_generate(spec_of(Method::G2, 3, 2, a, F.pow(a, 3)));
      CHECK(is_symmetric(out.permutation));
    }
  }
}

TEST_CASE("family_at_order finds the right parameters") {
  CHECK(family_at_order(Method::W1exp, 10).size() == 40);  // p = 11
  CHECK(family_at_order(Method::G2, 14).size() == 16);     // q = 16
  CHECK(family_at_order(Method::G2, 15).empty() == false); // q = 17
  CHECK(family_at_order(Method::W1exp, 12).size() == 48);  // p = 13, 12 * phi(12)
  CHECK(family_at_order(Method::W1exp, 13).empty());       // 14 is not prime
  CHECK(family_at_order(Method::G2, 16).empty());          // q = 18 is not a prime power
}
