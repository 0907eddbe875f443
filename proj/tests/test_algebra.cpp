#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "podles/algebra.hpp"

#include <random>

using namespace podles;
using G = Generator;

namespace {

const std::vector<PresentationId> kAll = {PresentationId::Uq,       PresentationId::UqPrime,
                                          PresentationId::Podles,   PresentationId::Cross,
                                          PresentationId::CrossHat, PresentationId::Yc,
                                          PresentationId::Decoupled, PresentationId::CrossHatK};

AlgebraElement random_element(std::mt19937& rng, const Presentation& p, int max_len, int terms = 3) {
  const auto& alpha = p.alphabet();
  std::uniform_int_distribution<std::size_t> letter(0, alpha.size() - 1);
  std::uniform_int_distribution<int> len(1, max_len), coef(-2, 2), spow(-2, 2);
  AlgebraElement x;
  for (int t = 0; t < terms; ++t) {
    Word w;
    for (int i = len(rng); i > 0; --i) w.push_back(alpha[letter(rng)]);
    int c = coef(rng);
    if (c == 0) c = 1;
    x += AlgebraElement(w, Scalar(c) * Scalar::s_pow(spow(rng)));
  }
  return x;
}

AlgebraElement nf(std::string_view text, const Presentation& p) {
  return normal_form(parse_element(text, p), p);
}

}  // namespace

TEST_CASE("presentation catalog shapes") {
  const Presentation uq = make_presentation(PresentationId::Uq, Regime::c_finite);
  CHECK(uq.alphabet().size() == 4);
  CHECK(uq.rules().size() == 5);
  const Presentation pod = make_presentation(PresentationId::Podles, Regime::c_finite);
  CHECK(pod.alphabet() == std::vector<G>{G::B, G::Bstar, G::A});
  CHECK(pod.rule_for(G::A, G::B) != nullptr);
  CHECK(pod.rule_for(G::B, G::A) == nullptr);
  CHECK_THROWS_AS(presentation_from_name("Heisenberg"), ParameterError);
  CHECK(presentation_from_name("crosshat") == PresentationId::CrossHat);
}

TEST_CASE("exact-relation gate") {
  for (PresentationId id : kAll)
    for (Regime r : {Regime::c_finite, Regime::c_infinite}) {
      const Presentation p = make_presentation(id, r);
      for (const auto& rel : p.relations()) {
        INFO(p.name() << " " << rel.id);
        CHECK(normal_form(rel.difference(), p).is_zero());
      }
    }
}

TEST_CASE("normal forms from the catalog") {
  const Presentation pod = make_presentation(PresentationId::Podles, Regime::c_finite);
  CHECK(to_string(nf("A B", pod)) == "q^-2 * B A");
  CHECK(nf("B* B", pod) == nf("A - A^2 + c", pod));

  const Presentation uq = make_presentation(PresentationId::Uq, Regime::c_finite);
  const Scalar linv = lambda().inverse();
  CHECK(nf("E F - F E", uq) == linv * AlgebraElement(Word{G::K, G::K}) - linv * AlgebraElement(Word{G::Kinv, G::Kinv}));
  CHECK(nf("K K^-1", uq) == AlgebraElement::one());
  CHECK(nf("K^-1 K", uq) == AlgebraElement::one());

  const Presentation cross = make_presentation(PresentationId::Cross, Regime::c_finite);
  CHECK(nf("E A", cross) == AlgebraElement(Word{G::A, G::E}) + Scalar::s_pow(-1) * AlgebraElement(Word{G::Bstar, G::K}));
}

TEST_CASE("c = infinity variants") {
  const Presentation pod = make_presentation(PresentationId::Podles, Regime::c_infinite);
  CHECK(nf("B* B", pod) == nf("1 - A^2", pod));
  const Presentation yc = make_presentation(PresentationId::Yc, Regime::c_infinite);
  const AlgebraElement expected = Scalar::q_pow(1) * Scalar::q_pow(1) * AlgebraElement(Word{G::X, G::Xstar}) +
                                  (Scalar(1) - Scalar::q_pow(2)) *
                                      (AlgebraElement(Word{G::Y, G::Y}) + AlgebraElement::one());
  CHECK(nf("X* X", yc) == expected);
}

TEST_CASE("star on generators and words") {
  const Presentation uq = make_presentation(PresentationId::Uq, Regime::c_finite);
  CHECK(star(AlgebraElement(G::E), uq) == AlgebraElement(G::F));
  const Presentation pod = make_presentation(PresentationId::Podles, Regime::c_finite);
  CHECK(star(AlgebraElement(G::B), pod) == AlgebraElement(G::Bstar));
  CHECK(star(nf("q^(1/2) * A B", pod), pod) == nf("q^(1/2) * B* A", pod));
  CHECK(star(parse_element("q^(1/2) * A B", pod), pod) == Scalar::s() * AlgebraElement(Word{G::Bstar, G::A}));
  for (PresentationId id : kAll) {
    const Presentation p = make_presentation(id, Regime::c_finite);
    for (G g : p.alphabet()) CHECK(star(star(AlgebraElement(g), p), p) == AlgebraElement(g));
  }
}

TEST_CASE("idempotence, linearity and star compatibility") {
  std::mt19937 rng(2024);
  for (PresentationId id : kAll)
    for (Regime r : {Regime::c_finite, Regime::c_infinite}) {
      const Presentation p = make_presentation(id, r);
      INFO(p.name());
      for (int trial = 0; trial < 15; ++trial) {
        const AlgebraElement x = random_element(rng, p, 5);
        const AlgebraElement y = random_element(rng, p, 4);
        const AlgebraElement nx = normal_form(x, p);
        CHECK(normal_form(nx, p) == nx);
        const Scalar a = Scalar(3) * Scalar::s_pow(-1) + Scalar::c();
        CHECK(normal_form(a * x + y, p) == a * nx + normal_form(y, p));
        const AlgebraElement z = random_element(rng, p, 4);
        CHECK(normal_form(star(z, p), p) == normal_form(star(normal_form(z, p), p), p));
      }
    }
}

TEST_CASE("localized cross product consistency") {
  const Presentation p = make_presentation(PresentationId::CrossHat, Regime::c_finite);
  CHECK(nf("A A^-1 - 1", p).is_zero());
  CHECK(nf("E A A^-1 - E", p).is_zero());
  CHECK(nf("F A^-1 A - F", p).is_zero());
  CHECK(nf("K A^-1", p) == AlgebraElement(Word{G::Ainv, G::K}));
}

TEST_CASE("local confluence") {
  for (PresentationId id : {PresentationId::Uq, PresentationId::Podles, PresentationId::Cross})
    for (Regime r : {Regime::c_finite, Regime::c_infinite}) {
      const Presentation p = make_presentation(id, r);
      const ConfluenceReport rep = check_local_confluence(p, 4);
      INFO(p.name());
      CHECK(rep.confluent());
      CHECK(rep.ambiguous_words > 0);
    }
  for (PresentationId id : {PresentationId::UqPrime, PresentationId::Yc, PresentationId::CrossHat,
                            PresentationId::Decoupled, PresentationId::CrossHatK}) {
    const Presentation p = make_presentation(id, Regime::c_finite);
    INFO(p.name());
    CHECK(check_local_confluence(p, 3).confluent());
  }
  const Presentation uq = make_presentation(PresentationId::Uq, Regime::c_finite);
  const ConfluenceReport two = check_local_confluence(uq, 2);
  CHECK(two.confluent());
  CHECK(two.ambiguous_words == 0);
}

TEST_CASE("a non-confluent rule set is detected") {
  // Dropping the q-power from A B -> q^-2 B A breaks the overlap A B* B.
  const Presentation pod = make_presentation(PresentationId::Podles, Regime::c_finite);
  std::vector<RewriteRule> rules = pod.rules();
  for (auto& rule : rules)
    if (rule.first == G::A && rule.second == G::B) rule.rhs = AlgebraElement(Word{G::B, G::A});
  const Presentation broken(pod.id(), pod.regime(), pod.alphabet(),
                            {{G::A, AlgebraElement(G::A)}, {G::B, AlgebraElement(G::Bstar)},
                             {G::Bstar, AlgebraElement(G::B)}},
                            pod.relations(), rules);
  CHECK_FALSE(check_local_confluence(broken, 3).confluent());
}

TEST_CASE("parser") {
  const Presentation p = make_presentation(PresentationId::CrossHat, Regime::c_finite);
  CHECK(parse_element("A^-2", p) == AlgebraElement(Word{G::Ainv, G::Ainv}));
  CHECK(parse_element("2/3 * B* K^-1", p) == Scalar(Rational(2, 3)) * AlgebraElement(Word{G::Bstar, G::Kinv}));
  CHECK(parse_element("0", p).is_zero());
  CHECK_THROWS_AS(parse_element("A +", p), ParameterError);
  CHECK_THROWS_AS(parse_element("X", p), ParameterError);
  CHECK_THROWS_AS(normal_form(AlgebraElement(G::X), p), ParameterError);
}
