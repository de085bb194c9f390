#pragma once

#include <optional>
#include <string>

#include "braidauto/endomorphism.hpp"

namespace braidauto {

// Decision record for the image-membership checks. `data` is present whenever
// the permuted-conjugacy shape test succeeded, so an accepted verdict always
// carries the permutation and the conjugating words. `residue` is filled by
// the checks that measure the conjugator of x_1 .. x_n. `reason` is one of
// not-perm-conj | delta-not-conjugate | delta-not-fixed | residue-nonzero.
struct MembershipVerdict {
  bool accepted = false;
  std::optional<PermConjData> data;
  std::optional<int> residue;
  std::optional<std::string> reason;
};

inline MembershipVerdict check_welded(const Automorphism& phi) {
  MembershipVerdict v;
  v.data = perm_conj_decompose(phi.forward);
  if (!v.data) {
    v.reason = "not-perm-conj";
    return v;
  }
  v.accepted = true;
  return v;
}

inline MembershipVerdict check_braid(const Automorphism& phi) {
  MembershipVerdict v;
  v.data = perm_conj_decompose(phi.forward);
  if (!v.data) {
    v.reason = "not-perm-conj";
    return v;
  }
  int n = phi.forward.rank;
  if (!(apply(phi.forward, delta_word(n)) == delta_word(n))) {
    v.reason = "delta-not-fixed";
    return v;
  }
  v.accepted = true;
  return v;
}

inline MembershipVerdict check_necklace(const Automorphism& phi) {
  MembershipVerdict v;
  v.data = perm_conj_decompose(phi.forward);
  if (!v.data) {
    v.reason = "not-perm-conj";
    return v;
  }
  v.residue = delta_conjugator_residue(phi.forward);
  if (!v.residue) {
    v.reason = "delta-not-conjugate";
    return v;
  }
  v.accepted = true;
  return v;
}

inline MembershipVerdict check_affine(const Automorphism& phi) {
  MembershipVerdict v;
  v.data = perm_conj_decompose(phi.forward);
  if (!v.data) {
    v.reason = "not-perm-conj";
    return v;
  }
  v.residue = delta_conjugator_residue(phi.forward);
  if (!v.residue) {
    v.reason = "delta-not-conjugate";
    return v;
  }
  if (*v.residue != 0) {
    v.reason = "residue-nonzero";
    return v;
  }
  v.accepted = true;
  return v;
}

}  // namespace braidauto
