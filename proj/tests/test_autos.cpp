#include <catch2/catch_amalgamated.hpp>

#include "braidauto/endomorphism.hpp"

using namespace braidauto;

static Word pw(const char* text, int rank) { return parse_word(text, rank); }

TEST_CASE("identity endomorphism fixes every generator", "[autos]") {
  Endomorphism id = identity_endo(3);
  Word a = pw("x1 x3^-1 x2", 3);
  REQUIRE(apply(id, a) == a);
}

TEST_CASE("apply substitutes images and reduces", "[autos]") {
  Endomorphism e;
  e.rank = 2;
  e.images = {pw("x1 x2", 2), pw("x2", 2)};
  REQUIRE(apply(e, pw("x1 x2^-1", 2)) == pw("x1", 2));
  REQUIRE(apply(e, pw("x1^-1", 2)) == pw("x2^-1 x1^-1", 2));
  REQUIRE_THROWS_AS(apply(e, pw("x1", 3)), input_error);
  REQUIRE_THROWS_AS(apply(e, pw("y", 2)), input_error);
  e.y_fixed = true;
  REQUIRE(apply(e, pw("x1 y^2", 2)) == pw("x1 x2 y^2", 2));
}

TEST_CASE("composition applies the right factor first", "[autos]") {
  Endomorphism swap;
  swap.rank = 2;
  swap.images = {pw("x2", 2), pw("x1", 2)};
  Endomorphism smear;
  smear.rank = 2;
  smear.images = {pw("x1 x2", 2), pw("x2", 2)};
  // compose(swap, smear)(x1) = swap(x1 x2) = x2 x1.
  REQUIRE(compose(swap, smear).images[0] == pw("x2 x1", 2));
  REQUIRE(compose(smear, swap).images[0] == pw("x2", 2));
}

TEST_CASE("certify demands mutually inverse maps", "[autos]") {
  Endomorphism f;
  f.rank = 2;
  f.images = {pw("x1 x2 x1^-1", 2), pw("x1", 2)};
  Endomorphism b;
  b.rank = 2;
  b.images = {pw("x2", 2), pw("x2^-1 x1 x2", 2)};
  Automorphism a = certify(f, b);
  REQUIRE(apply(a, pw("x1", 2)) == pw("x1 x2 x1^-1", 2));
  REQUIRE(apply(inverse(a), pw("x1", 2)) == pw("x2", 2));
  REQUIRE_THROWS_AS(certify(f, f), certification_error);
  Endomorphism not_onto;
  not_onto.rank = 2;
  not_onto.images = {pw("x1 x2", 2), pw("x2", 2)};
  REQUIRE_THROWS_AS(certify(not_onto, not_onto), certification_error);
}

TEST_CASE("inner automorphisms conjugate by the word", "[autos]") {
  Word c = pw("x1 x2", 3);
  Automorphism g = inner(c);
  REQUIRE(apply(g, pw("x3", 3)) == pw("x1 x2 x3 x2^-1 x1^-1", 3));
  REQUIRE(compose(g, inverse(g)).forward == identity_endo(3));
  REQUIRE_THROWS_AS(inner(pw("x1 y", 2)), input_error);
}

TEST_CASE("automorphism composition certifies transitively", "[autos]") {
  Automorphism g = inner(pw("x1", 2));
  Automorphism h = inner(pw("x2^-1", 2));
  Automorphism gh = compose(g, h);
  REQUIRE(compose(gh, inverse(gh)).forward == identity_endo(2));
  REQUIRE(gh.forward == inner(pw("x1 x2^-1", 2)).forward);
}

TEST_CASE("permuted conjugate decomposition", "[autos]") {
  Endomorphism e;
  e.rank = 3;
  e.images = {pw("x3 x2 x3^-1", 3), pw("x1", 3), pw("x3", 3)};
  auto data = perm_conj_decompose(e);
  REQUIRE(data.has_value());
  REQUIRE(data->perm == std::vector<int>{2, 1, 3});
  REQUIRE(data->conjugators[0] == pw("x3", 3));
  REQUIRE(data->conjugators[1] == empty_word(3));

  Endomorphism repeat;
  repeat.rank = 2;
  repeat.images = {pw("x1", 2), pw("x2 x1 x2^-1", 2)};
  REQUIRE_FALSE(perm_conj_decompose(repeat).has_value());

  Endomorphism not_conj;
  not_conj.rank = 2;
  not_conj.images = {pw("x1 x2", 2), pw("x2", 2)};
  REQUIRE_FALSE(perm_conj_decompose(not_conj).has_value());
}

TEST_CASE("delta conjugator residue", "[autos]") {
  // Conjugation by x1^-1 sends Delta to x2 x3 x1; the canonical conjugator is
  // x1^-1 and the residue is 1.
  REQUIRE(delta_conjugator_residue(inner(pw("x1^-1", 3)).forward).value() == 1);
  REQUIRE(delta_conjugator_residue(identity_endo(3)).value() == 0);
  REQUIRE(delta_conjugator_residue(inner(delta_word(3)).forward).value() == 0);

  Endomorphism rot;
  rot.rank = 3;
  rot.images = {pw("x2", 3), pw("x3", 3), pw("x1", 3)};
  REQUIRE(delta_conjugator_residue(rot).value() == 1);

  Endomorphism swap;
  swap.rank = 3;
  swap.images = {pw("x2", 3), pw("x1", 3), pw("x3", 3)};
  REQUIRE_FALSE(delta_conjugator_residue(swap).has_value());
}
