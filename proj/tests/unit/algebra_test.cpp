#include <random>

#include "doctest.h"
#include "gspan/algebra/character.hpp"
#include "gspan/algebra/finite_group.hpp"
#include "gspan/algebra/group_ring.hpp"
#include "gspan/errors.hpp"

using namespace gspan;

TEST_CASE("abelian group basics") {
  AbelianGroup trivial = makeAbelianGroup({});
  CHECK(trivial.order() == 1);
  CHECK(trivial.describe() == "Z1");

  AbelianGroup g({2, 3});
  CHECK(g.order() == 6);
  CHECK(g.describe() == "Z2xZ3");
  auto a = g.element({1, 2});
  auto b = g.element({0, 1});
  CHECK(g.add(g.add(a, b), g.negate(b)) == a);
  CHECK(g.add(g.zero(), a) == a);
  CHECK(g.element({3, -1}) == g.element({1, 2}));
  CHECK(g.render(a) == "g(1,2)");
  CHECK(g.multiple(b, 3) == g.zero());
  CHECK(g.elements().size() == 6);

  CHECK_THROWS_AS(AbelianGroup({0}), ArgumentError);
}

TEST_CASE("subgroups") {
  AbelianGroup z4({4});
  std::vector<GroupElement> twice{z4.element({0}), z4.element({2})};
  CHECK(isSubgroup(z4, twice));
  std::vector<GroupElement> notClosed{z4.element({0}), z4.element({1})};
  CHECK_FALSE(isSubgroup(z4, notClosed));
  CHECK(allSubgroups(z4).size() == 3);
  CHECK(allSubgroups(AbelianGroup({2, 2})).size() == 5);
  std::vector<GroupElement> gen{z4.element({2})};
  CHECK(generatedSubgroup(z4, gen) == twice);
}

TEST_CASE("group ring arithmetic") {
  AbelianGroup z2({2});
  auto e = GroupRingElement::basis(z2, z2.zero());
  auto s = GroupRingElement::basis(z2, z2.element({1}));
  CHECK((e * s) == s);
  auto sum = e + s;
  auto square = sum * sum;
  CHECK(square.coefficient(z2.zero()) == 2);
  CHECK(square.coefficient(z2.element({1})) == 2);
  CHECK(square.render() == "2*g(0) + 2*g(1)");

  auto half = e * Rational(1, 2);
  CHECK((half + half) == e);
  CHECK(GroupRingElement(z2).render() == "0");
  CHECK((s - s).isZero());
  CHECK(e.render() == "1*g(0)");
}

TEST_CASE("average idempotents") {
  AbelianGroup z2({2});
  std::vector<GroupElement> trivial{z2.zero()};
  CHECK(averageIdempotent(z2, trivial) == GroupRingElement::basis(z2, z2.zero()));
  auto all = z2.elements();
  CHECK(averageIdempotent(z2, all).render() == "1/2*g(0) + 1/2*g(1)");

  AbelianGroup z4({4});
  std::vector<GroupElement> twice{z4.element({0}), z4.element({2})};
  auto u = averageIdempotent(z4, twice);
  GroupRingElement expected(z4);
  expected.addTerm(z4.element({0}), Rational(1, 2)).addTerm(z4.element({2}), Rational(1, 2));
  CHECK(u == expected);
  CHECK(u * u == u);

  std::vector<GroupElement> bad{z4.element({1})};
  CHECK_THROWS_AS(averageIdempotent(z4, bad), ArgumentError);
}

TEST_CASE("group ring ring axioms on random elements") {
  std::mt19937_64 rng(7);
  AbelianGroup g({2, 3});
  auto random = [&] {
    GroupRingElement x(g);
    for (auto e : g.elements())
      if (rng() % 2) x.addTerm(e, makeRational(static_cast<long>(rng() % 7) - 3, static_cast<unsigned long>(1 + rng() % 4)));
    return x;
  };
  for (int i = 0; i < 50; ++i) {
    auto a = random(), b = random(), c = random();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b).augmentation() == a.augmentation() * b.augmentation());
  }
}

TEST_CASE("cyclotomic polynomials") {
  auto asInts = [](const IntPolynomial& p) {
    std::vector<long> out;
    for (const auto& c : p) out.push_back(c.get_si());
    return out;
  };
  CHECK(asInts(cyclotomicPolynomial(1)) == std::vector<long>{-1, 1});
  CHECK(asInts(cyclotomicPolynomial(2)) == std::vector<long>{1, 1});
  // x^4 - 1 = (x - 1)(x + 1)(x^2 + 1)
  CHECK(asInts(cyclotomicPolynomial(4)) == std::vector<long>{1, 0, 1});
  CHECK(asInts(cyclotomicPolynomial(6)) == std::vector<long>{1, -1, 1});
  CHECK(asInts(cyclotomicPolynomial(12)) == std::vector<long>{1, 0, -1, 0, 1});
  // Phi_p = 1 + x + ... + x^(p-1)
  CHECK(asInts(cyclotomicPolynomial(5)) == std::vector<long>{1, 1, 1, 1, 1});
}

TEST_CASE("cyclotomic arithmetic") {
  auto f = std::make_shared<const CyclotomicField>(4);
  auto i = CyclotomicNumber::rootOfUnity(f, 1);
  auto minusOne = CyclotomicNumber::fromRational(f, -1);
  CHECK(i * i == minusOne);
  CHECK(CyclotomicNumber::rootOfUnity(f, 4) == CyclotomicNumber::fromRational(f, 1));
  CHECK(i.render() == "z");
  CHECK(i.decimal() == "0+1i");
  CHECK((i + CyclotomicNumber::rootOfUnity(f, 3)).isZero());

  auto f3 = std::make_shared<const CyclotomicField>(3);
  auto w = CyclotomicNumber::rootOfUnity(f3, 1);
  // 1 + w + w^2 = 0
  CHECK((CyclotomicNumber::fromRational(f3, 1) + w + w * w).isZero());
}

TEST_CASE("characters") {
  AbelianGroup z4({4});
  auto rho = Character::standard(z4);
  CHECK(rho.conductor() == 4);
  CHECK(rho.isInjective());
  auto i = CyclotomicNumber::rootOfUnity(rho.field(), 1);
  CHECK(rho.value(z4.element({1})) == i);
  CHECK(rho.apply(GroupRingElement::basis(z4, z4.element({1}))) == i);

  auto all = z4.elements();
  CHECK(rho.apply(averageIdempotent(z4, all)).isZero());

  AbelianGroup g({2, 3});
  CHECK(Character::standard(g).conductor() == 6);
  auto triv = Character::trivial(g);
  GroupRingElement x(g);
  x.addTerm(g.element({1, 1}), Rational(3, 2)).addTerm(g.element({0, 2}), Rational(-1, 3));
  CHECK(triv.apply(x) == CyclotomicNumber::fromRational(triv.field(), x.augmentation()));

  std::mt19937_64 rng(11);
  for (int k = 0; k < 30; ++k) {
    Character chi(g, {static_cast<std::int64_t>(rng() % 2), static_cast<std::int64_t>(rng() % 3)});
    GroupRingElement a(g), b(g);
    for (auto e : g.elements()) {
      a.addTerm(e, makeRational(static_cast<long>(rng() % 5) - 2, static_cast<unsigned long>(1 + rng() % 3)));
      b.addTerm(e, makeRational(static_cast<long>(rng() % 5) - 2, static_cast<unsigned long>(1 + rng() % 3)));
    }
    CHECK(chi.apply(a * b) == chi.apply(a) * chi.apply(b));
    CHECK(chi.apply(a + b) == chi.apply(a) + chi.apply(b));
  }
}

TEST_CASE("finite groups") {
  auto z6 = FiniteGroup::fromAbelian(AbelianGroup({6}));
  CHECK(z6.order() == 6);
  CHECK(z6.multiply(4, 5) == 3);
  CHECK(z6.inverse(2) == 4);
  CHECK_THROWS_AS(FiniteGroup::fromTable(2, {0, 1, 1, 1}), ValidationError);

  auto z2 = FiniteGroup::fromAbelian(AbelianGroup({2}));
  auto z3 = FiniteGroup::fromAbelian(AbelianGroup({3}));
  // Hom(Z3, Z6) has three elements, Hom(Z2, Z3) one.
  std::vector<std::uint64_t> c6{0, 1, 2, 3, 4, 5};
  auto add6 = [](std::uint64_t a, std::uint64_t b) { return (a + b) % 6; };
  CHECK(enumerateHomomorphisms(z3, c6, 0, add6).size() == 3);
  std::vector<std::uint64_t> c3{0, 1, 2};
  auto add3 = [](std::uint64_t a, std::uint64_t b) { return (a + b) % 3; };
  CHECK(enumerateHomomorphisms(z2, c3, 0, add3).size() == 1);
}
