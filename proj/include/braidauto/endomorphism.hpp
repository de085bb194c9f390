#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidauto/word.hpp"

namespace braidauto {

// Endomorphism of F_rank given by generator images (image of x_i at slot i-1).
// Images never contain y; y_fixed marks maps that are read on F_n x Z with
// y -> y. Two endomorphisms are equal when their ranks and reduced images
// agree; the y flag is bookkeeping and does not take part in equality.
struct Endomorphism {
  int rank = 1;
  std::vector<Word> images;
  bool y_fixed = false;

  friend bool operator==(const Endomorphism& a, const Endomorphism& b) {
    return a.rank == b.rank && a.images == b.images;
  }
};

inline Endomorphism identity_endo(int rank, bool y_fixed = false) {
  Endomorphism e;
  e.rank = rank;
  e.y_fixed = y_fixed;
  for (int i = 1; i <= rank; ++i) e.images.push_back(reduce({{i, +1}}, rank));
  return e;
}

inline Word apply(const Endomorphism& phi, const Word& w) {
  if (phi.rank != w.rank) throw input_error("apply: rank mismatch");
  if (w.ypow != 0 && !phi.y_fixed) throw input_error("apply: y letter outside F_n x Z mode");
  Word out = empty_word(w.rank);
  out.ypow = w.ypow;
  for (const Letter& a : w.letters) {
    const Word& img = phi.images[a.index - 1];
    out = word_product(out, a.sign > 0 ? img : word_inverse(img));
  }
  return out;
}

// compose(phi, psi) applies psi first: compose(phi, psi)(x) = phi(psi(x)).
inline Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi) {
  if (phi.rank != psi.rank) throw input_error("compose: rank mismatch");
  Endomorphism r;
  r.rank = phi.rank;
  r.y_fixed = phi.y_fixed && psi.y_fixed;
  r.images.reserve(psi.images.size());
  for (const Word& img : psi.images) r.images.push_back(apply(phi, img));
  return r;
}

// An automorphism is an endomorphism packaged with a certified inverse.
struct Automorphism {
  Endomorphism forward;
  Endomorphism backward;
};

inline Automorphism identity_auto(int rank, bool y_fixed = false) {
  return {identity_endo(rank, y_fixed), identity_endo(rank, y_fixed)};
}

inline Automorphism certify(const Endomorphism& forward, const Endomorphism& backward) {
  if (forward.rank != backward.rank) throw input_error("certify: rank mismatch");
  Endomorphism id = identity_endo(forward.rank);
  if (!(compose(forward, backward) == id) || !(compose(backward, forward) == id))
    throw certification_error("certify: maps are not mutually inverse");
  return {forward, backward};
}

inline Automorphism inverse(const Automorphism& a) { return {a.backward, a.forward}; }

inline Automorphism compose(const Automorphism& a, const Automorphism& b) {
  return {compose(a.forward, b.forward), compose(b.backward, a.backward)};
}

inline Word apply(const Automorphism& a, const Word& w) { return apply(a.forward, w); }

// Conjugation g_w: x_i -> w x_i w^-1. Its inverse is g_{w^-1}.
inline Automorphism inner(const Word& w) {
  if (w.ypow != 0) throw input_error("inner: conjugator has a y part");
  Word wi = word_inverse(w);
  Automorphism g;
  g.forward.rank = g.backward.rank = w.rank;
  for (int i = 1; i <= w.rank; ++i) {
    Word xi = reduce({{i, +1}}, w.rank);
    g.forward.images.push_back(word_product(word_product(w, xi), wi));
    g.backward.images.push_back(word_product(word_product(wi, xi), w));
  }
  return g;
}

// Decomposition phi(x_i) = w_i x_{perm(i)} w_i^-1; perm[i-1] holds perm(i).
struct PermConjData {
  std::vector<int> perm;
  std::vector<Word> conjugators;
};

inline std::optional<PermConjData> perm_conj_decompose(const Endomorphism& phi) {
  PermConjData data;
  std::vector<char> seen(phi.rank + 1, 0);
  for (const Word& img : phi.images) {
    auto gc = generator_conjugate_decompose(img);
    if (!gc) return std::nullopt;
    if (seen[gc->index]) return std::nullopt;
    seen[gc->index] = 1;
    data.perm.push_back(gc->index);
    data.conjugators.push_back(gc->conjugator);
  }
  return data;
}

// Residue class mod n of the algebraic length of the Delta-conjugator's
// inverse; well defined because conjugators differ by Delta powers. Empty when
// phi(Delta) is not conjugate to Delta.
inline std::optional<int> delta_conjugator_residue(const Endomorphism& phi) {
  int n = phi.rank;
  auto u = delta_conjugator(apply(phi, delta_word(n)), n);
  if (!u) return std::nullopt;
  long long len = algebraic_length(word_inverse(*u));
  return (int)(((len % n) + n) % n);
}

}  // namespace braidauto
