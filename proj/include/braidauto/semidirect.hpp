#pragma once

#include <numeric>
#include <vector>

#include "braidauto/families.hpp"

namespace braidauto {

// Element of the braid-by-free-group semidirect product in normal form: a
// braid word (the alpha part) and a reduced fiber word (the eta part, with
// eta_i realized as x_i). The braid word is only meaningful up to braid
// equality and is compared through the Artin representation.
struct SDElement {
  GroupWord braid;  // family braid, rank n; kept free of adjacent cancellations
  Word fiber;
};

inline int sd_rank(const SDElement& a) { return a.braid.family.n; }

inline SDElement sd_identity(int n) {
  return {group_word({FamilyKind::braid, n}), empty_word(n)};
}

inline GroupWord cancel_concat(const GroupWord& u, const GroupWord& v) {
  GroupWord r = u;
  for (const GenSymbol& g : v.syllables) {
    if (!r.syllables.empty() && r.syllables.back() == gen_inverse(g))
      r.syllables.pop_back();
    else
      r.syllables.push_back(g);
  }
  return r;
}

// (a1, h1) * (a2, h2) = (a1 a2, rep(a2)(h1) * h2): the right factor's braid
// acts on the left factor's fiber, which is the unique law that makes the
// alpha-eta normal form match the conjugation relations under diagrammatic
// evaluation.
inline SDElement sd_multiply(const SDElement& a, const SDElement& b) {
  if (sd_rank(a) != sd_rank(b)) throw input_error("sd_multiply: rank mismatch");
  SDElement r;
  r.braid = cancel_concat(a.braid, b.braid);
  r.fiber = word_product(apply(represent(b.braid), a.fiber), b.fiber);
  return r;
}

inline SDElement sd_inverse(const SDElement& a) {
  SDElement r;
  r.braid = gw_inverse(a.braid);
  r.fiber = apply(represent(r.braid), word_inverse(a.fiber));
  return r;
}

inline SDElement sd_power(const SDElement& a, long long e) {
  SDElement base = e < 0 ? sd_inverse(a) : a;
  SDElement r = sd_identity(sd_rank(a));
  for (long long i = 0, m = e < 0 ? -e : e; i < m; ++i) r = sd_multiply(r, base);
  return r;
}

inline std::vector<int> braid_word_permutation(const GroupWord& w) {
  int n = w.family.n;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  for (const GenSymbol& g : w.syllables) std::swap(p[g.index - 1], p[g.index]);
  return p;
}

// Equality in the semidirect product: identical fibers and braid parts equal
// as braids. Word identity, then the permutation and exponent sum, screen out
// almost everything before the Artin images are compared.
inline bool sd_equal(const SDElement& a, const SDElement& b) {
  if (sd_rank(a) != sd_rank(b)) throw input_error("sd_equal: rank mismatch");
  if (!(a.fiber == b.fiber)) return false;
  if (a.braid == b.braid) return true;
  if (braid_word_permutation(a.braid) != braid_word_permutation(b.braid)) return false;
  long long ea = 0, eb = 0;
  for (const GenSymbol& g : a.braid.syllables) ea += g.sign;
  for (const GenSymbol& g : b.braid.syllables) eb += g.sign;
  if (ea != eb) return false;
  return represent(a.braid).forward == represent(b.braid).forward;
}

namespace detail {

inline SDElement sd_alpha(int j, int n) {
  SDElement r = sd_identity(n);
  gw_append(r.braid, GenKind::sigma, j, 1);
  return r;
}

inline SDElement sd_eta1(int n) {
  SDElement r = sd_identity(n);
  r.fiber = reduce({{1, +1}}, n);
  return r;
}

// Image of the extra crossing sigma_n:
// eta_1^-1 alpha_1^-1 .. alpha_{n-2}^-1 alpha_{n-1} alpha_{n-2} .. alpha_1 eta_1.
inline SDElement sd_sigma_n_image(int n) {
  SDElement acc = sd_inverse(sd_eta1(n));
  for (int j = 1; j <= n - 2; ++j) acc = sd_multiply(acc, sd_inverse(sd_alpha(j, n)));
  acc = sd_multiply(acc, sd_alpha(n - 1, n));
  for (int j = n - 2; j >= 1; --j) acc = sd_multiply(acc, sd_alpha(j, n));
  return sd_multiply(acc, sd_eta1(n));
}

// Image of the rotation: alpha_{n-1} .. alpha_1 eta_1.
inline SDElement sd_zeta_image(int n) {
  SDElement acc = sd_identity(n);
  for (int j = n - 1; j >= 1; --j) acc = sd_multiply(acc, sd_alpha(j, n));
  return sd_multiply(acc, sd_eta1(n));
}

}  // namespace detail

// The isomorphism from circular words into the semidirect product, used as an
// independent equality oracle.
inline SDElement theta(const GroupWord& w) {
  if (w.family.kind != FamilyKind::circular) throw input_error("theta: circular words only");
  int n = w.family.n;
  SDElement acc = sd_identity(n);
  for (const GenSymbol& g : w.syllables) {
    SDElement img;
    if (g.kind == GenKind::zeta)
      img = detail::sd_zeta_image(n);
    else if (g.index == n)
      img = detail::sd_sigma_n_image(n);
    else
      img = detail::sd_alpha(g.index, n);
    if (g.sign < 0) img = sd_inverse(img);
    acc = sd_multiply(acc, img);
  }
  return acc;
}

}  // namespace braidauto
