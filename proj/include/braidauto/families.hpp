#pragma once

#include <string>
#include <utility>
#include <vector>

#include "braidauto/endomorphism.hpp"
#include "braidauto/word.hpp"

namespace braidauto {

enum class FamilyKind { braid, welded, rings, circular, necklace, affine };

inline std::string family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::braid: return "braid";
    case FamilyKind::welded: return "welded";
    case FamilyKind::rings: return "rings";
    case FamilyKind::circular: return "circular";
    case FamilyKind::necklace: return "necklace";
    case FamilyKind::affine: return "affine";
  }
  throw internal_error("family_name: bad kind");
}

inline FamilyKind parse_family(const std::string& name) {
  if (name == "braid") return FamilyKind::braid;
  if (name == "welded") return FamilyKind::welded;
  if (name == "rings") return FamilyKind::rings;
  if (name == "circular") return FamilyKind::circular;
  if (name == "necklace") return FamilyKind::necklace;
  if (name == "affine") return FamilyKind::affine;
  throw input_error("unknown family '" + name + "'");
}

struct Family {
  FamilyKind kind = FamilyKind::braid;
  int n = 2;
  friend bool operator==(const Family&, const Family&) = default;
};

// Families whose maps live on F_n x Z and fix y.
inline bool family_y_fixed(FamilyKind k) {
  return k == FamilyKind::necklace || k == FamilyKind::rings;
}

// Generator indices wrap modulo n in these families.
inline bool family_cyclic(FamilyKind k) {
  return k == FamilyKind::circular || k == FamilyKind::necklace || k == FamilyKind::affine;
}

// sigma: strand crossing; rho: strand permutation; twist: single-circle flip;
// zeta/tau: global rotation (circular resp. necklace spelling).
enum class GenKind { sigma, rho, twist, zeta, tau };

struct GenSymbol {
  GenKind kind = GenKind::sigma;
  int index = 0;  // 0 for zeta/tau
  int sign = +1;
  friend bool operator==(const GenSymbol&, const GenSymbol&) = default;
};

inline GenSymbol gen_inverse(GenSymbol g) { return {g.kind, g.index, -g.sign}; }

inline bool admissible(const Family& f, const GenSymbol& g) {
  int n = f.n;
  switch (g.kind) {
    case GenKind::sigma:
      return g.index >= 1 && g.index <= (family_cyclic(f.kind) ? n : n - 1);
    case GenKind::rho:
      return (f.kind == FamilyKind::welded || f.kind == FamilyKind::rings) && g.index >= 1 &&
             g.index <= n - 1;
    case GenKind::twist:
      return f.kind == FamilyKind::rings && g.index >= 1 && g.index <= n;
    case GenKind::zeta:
      return f.kind == FamilyKind::circular;
    case GenKind::tau:
      return f.kind == FamilyKind::necklace;
  }
  return false;
}

// Symbolic group element: a sequence of signed generators. No normalization is
// imposed; two different sequences may name the same element, and equality is
// decided by equal_elements.
struct GroupWord {
  Family family;
  std::vector<GenSymbol> syllables;
  friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

inline GroupWord group_word(Family f) { return GroupWord{f, {}}; }

inline void gw_append(GroupWord& w, GenKind kind, int index, long long exponent) {
  GenSymbol g{kind, index, exponent < 0 ? -1 : +1};
  if (!admissible(w.family, g))
    throw input_error("generator not admissible for family " + family_name(w.family.kind));
  for (long long i = 0, m = exponent < 0 ? -exponent : exponent; i < m; ++i)
    w.syllables.push_back(g);
}

inline GroupWord concat(const GroupWord& u, const GroupWord& v) {
  if (!(u.family == v.family)) throw input_error("concat: family mismatch");
  GroupWord r = u;
  r.syllables.insert(r.syllables.end(), v.syllables.begin(), v.syllables.end());
  return r;
}

inline GroupWord gw_inverse(const GroupWord& w) {
  GroupWord r = group_word(w.family);
  for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it)
    r.syllables.push_back(gen_inverse(*it));
  return r;
}

inline GroupWord gw_power(const GroupWord& w, long long e) {
  GroupWord base = e < 0 ? gw_inverse(w) : w;
  GroupWord r = group_word(w.family);
  for (long long i = 0, m = e < 0 ? -e : e; i < m; ++i) r = concat(r, base);
  return r;
}

// Cancels adjacent mutually inverse syllables; the group element is unchanged.
inline GroupWord gw_free_reduce(const GroupWord& w) {
  GroupWord r = group_word(w.family);
  for (const GenSymbol& g : w.syllables) {
    if (!r.syllables.empty()) {
      const GenSymbol& b = r.syllables.back();
      if (b.kind == g.kind && b.index == g.index && b.sign == -g.sign) {
        r.syllables.pop_back();
        continue;
      }
    }
    r.syllables.push_back(g);
  }
  return r;
}

inline int index_mod(int i, int n) { return ((i - 1) % n + n) % n + 1; }

inline Automorphism generator_automorphism(const Family& f, const GenSymbol& g) {
  if (!admissible(f, g))
    throw input_error("generator not admissible for family " + family_name(f.kind));
  int n = f.n;
  bool yf = family_y_fixed(f.kind);
  Endomorphism fwd = identity_endo(n, yf);
  Endomorphism bwd = identity_endo(n, yf);
  auto x = [n](int i, int s) { return reduce({{index_mod(i, n), s}}, n); };
  switch (g.kind) {
    case GenKind::sigma: {
      int i = g.index, j = index_mod(g.index + 1, n);
      // x_i -> x_i x_j x_i^-1, x_j -> x_i; inverse: x_i -> x_j, x_j -> x_j^-1 x_i x_j
      fwd.images[i - 1] = reduce({{i, +1}, {j, +1}, {i, -1}}, n);
      fwd.images[j - 1] = x(i, +1);
      bwd.images[i - 1] = x(j, +1);
      bwd.images[j - 1] = reduce({{j, -1}, {i, +1}, {j, +1}}, n);
      break;
    }
    case GenKind::rho: {
      int i = g.index, j = g.index + 1;
      fwd.images[i - 1] = x(j, +1);
      fwd.images[j - 1] = x(i, +1);
      bwd = fwd;
      break;
    }
    case GenKind::twist: {
      fwd.images[g.index - 1] = x(g.index, -1);
      bwd = fwd;
      break;
    }
    case GenKind::zeta:
    case GenKind::tau: {
      for (int j = 1; j <= n; ++j) {
        fwd.images[j - 1] = x(j + 1, +1);
        bwd.images[j - 1] = x(j - 1, +1);
      }
      break;
    }
  }
  Automorphism a{fwd, bwd};
  return g.sign > 0 ? a : inverse(a);
}

// Evaluation is diagrammatic: the leftmost syllable acts first, so the word
// g_1 g_2 .. g_k maps to the composite rho(g_k) o ... o rho(g_1). Under this
// convention represent(u v) = compose(represent(v), represent(u)).
inline Automorphism represent(const GroupWord& w) {
  Automorphism acc = identity_auto(w.family.n, family_y_fixed(w.family.kind));
  for (const GenSymbol& g : w.syllables)
    acc = compose(generator_automorphism(w.family, g), acc);
  return acc;
}

inline bool rotation_symbol(GenKind k) { return k == GenKind::zeta || k == GenKind::tau; }

inline void require_rotation_family(const Family& f, const char* op) {
  if (f.kind != FamilyKind::circular && f.kind != FamilyKind::necklace &&
      f.kind != FamilyKind::affine)
    throw input_error(std::string(op) + ": family has no angular sum");
}

// Exponent sum of the rotation syllables (zeta or tau).
inline long long epsilon_word(const GroupWord& w) {
  require_rotation_family(w.family, "epsilon_word");
  long long s = 0;
  for (const GenSymbol& g : w.syllables)
    if (rotation_symbol(g.kind)) s += g.sign;
  return s;
}

// (sigma exponent sum, rotation exponent sum); both survive the braid and
// conjugation relations.
inline std::pair<long long, long long> abelianization(const GroupWord& w) {
  if (w.family.kind != FamilyKind::circular && w.family.kind != FamilyKind::necklace)
    throw input_error("abelianization: circular or necklace only");
  long long s = 0, r = 0;
  for (const GenSymbol& g : w.syllables)
    (rotation_symbol(g.kind) ? r : s) += g.sign;
  return {s, r};
}

struct NormalizedRotation {
  long long k = 0;
  GroupWord tail;  // sigma syllables only
};

// Pushes every rotation syllable to the front: moving zeta^e left across
// sigma_j turns it into sigma_{j+e} (from the relation sigma_i zeta = zeta
// sigma_{i+1}), so k ends up equal to the angular sum.
inline NormalizedRotation normalize_zeta(const GroupWord& w) {
  if (w.family.kind != FamilyKind::circular && w.family.kind != FamilyKind::necklace)
    throw input_error("normalize_zeta: circular or necklace only");
  NormalizedRotation out;
  out.tail = group_word(w.family);
  int n = w.family.n;
  for (const GenSymbol& g : w.syllables) {
    if (rotation_symbol(g.kind)) {
      out.k += g.sign;
      for (GenSymbol& t : out.tail.syllables) t.index = index_mod(t.index + g.sign, n);
    } else {
      out.tail.syllables.push_back(g);
    }
  }
  return out;
}

// Word problem, family by family. The braid, welded, rings and affine
// representations are faithful, so image equality decides. The circular
// representation has kernel generated by zeta^n (infinite order), which the
// integer angular sum separates; the necklace kernel is generated by tau^n of
// order two, so the angular sum decides modulo 2n.
inline bool equal_elements(const GroupWord& u, const GroupWord& v) {
  if (!(u.family == v.family)) throw input_error("equal_elements: family mismatch");
  switch (u.family.kind) {
    case FamilyKind::braid:
    case FamilyKind::welded:
    case FamilyKind::rings:
    case FamilyKind::affine:
      return represent(u).forward == represent(v).forward;
    case FamilyKind::circular:
      return epsilon_word(u) == epsilon_word(v) && represent(u).forward == represent(v).forward;
    case FamilyKind::necklace: {
      long long d = epsilon_word(u) - epsilon_word(v);
      long long m = 2 * u.family.n;
      return d % m == 0 && represent(u).forward == represent(v).forward;
    }
  }
  throw internal_error("equal_elements: bad family");
}

inline bool zero_angular(const GroupWord& w) {
  if (w.family.kind == FamilyKind::circular) return epsilon_word(w) == 0;
  if (w.family.kind == FamilyKind::necklace)
    return epsilon_word(w) % (2 * w.family.n) == 0;
  throw input_error("zero_angular: circular or necklace only");
}

// Pure-braid band generator: the i-th strand circles the j-th one. The induced
// permutation is the identity.
inline GroupWord band_generator_word(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n)) throw input_error("band_generator_word: need 1 <= i < j <= n");
  GroupWord w = group_word({FamilyKind::braid, n});
  for (int t = j - 1; t > i; --t) gw_append(w, GenKind::sigma, t, 1);
  gw_append(w, GenKind::sigma, i, 2);
  for (int t = i + 1; t <= j - 1; ++t) gw_append(w, GenKind::sigma, t, -1);
  return w;
}

// Basis-conjugating generator x_i -> x_j x_i x_j^-1 (all other generators
// fixed), with its closed-form inverse. Realizable by welded words.
inline Automorphism basis_conjugating_auto(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n))
    throw input_error("basis_conjugating_auto: need 1 <= i < j <= n");
  Endomorphism fwd = identity_endo(n);
  Endomorphism bwd = identity_endo(n);
  fwd.images[i - 1] = reduce({{j, +1}, {i, +1}, {j, -1}}, n);
  bwd.images[i - 1] = reduce({{j, -1}, {i, +1}, {j, +1}}, n);
  return {fwd, bwd};
}

// --- text grammar ------------------------------------------------------------
// Tokens s<i>, r<i>, u<i> (ring twist), z, t, each with an optional ^<e>;
// family and rank come out of band.

inline GroupWord parse_group_word(const std::string& text, Family f) {
  GroupWord w = group_word(f);
  std::vector<std::string> tokens = split_tokens(text);
  for (size_t at = 0; at < tokens.size(); ++at) {
    std::string tok = tokens[at];
    std::string where = "token " + std::to_string(at + 1);
    long long e = take_exponent(tok, where);
    GenKind kind;
    int index = 0;
    if (tok == "z") {
      kind = GenKind::zeta;
    } else if (tok == "t") {
      kind = GenKind::tau;
    } else if (tok.size() >= 2 && (tok[0] == 's' || tok[0] == 'r' || tok[0] == 'u')) {
      kind = tok[0] == 's' ? GenKind::sigma : tok[0] == 'r' ? GenKind::rho : GenKind::twist;
      index = parse_generator_index(tok.substr(1), where);
    } else {
      throw input_error("unknown token '" + tokens[at] + "' at " + where);
    }
    GenSymbol probe{kind, index, +1};
    if (!admissible(f, probe))
      throw input_error("generator '" + tokens[at] + "' not admissible at " + where);
    gw_append(w, kind, index, e);
  }
  return w;
}

inline std::string format_group_word(const GroupWord& w) {
  std::string out;
  size_t i = 0;
  while (i < w.syllables.size()) {
    size_t j = i;
    while (j < w.syllables.size() && w.syllables[j] == w.syllables[i]) ++j;
    const GenSymbol& g = w.syllables[i];
    if (!out.empty()) out += ' ';
    switch (g.kind) {
      case GenKind::sigma: out += "s" + std::to_string(g.index); break;
      case GenKind::rho: out += "r" + std::to_string(g.index); break;
      case GenKind::twist: out += "u" + std::to_string(g.index); break;
      case GenKind::zeta: out += "z"; break;
      case GenKind::tau: out += "t"; break;
    }
    long long e = (long long)(j - i) * g.sign;
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

}  // namespace braidauto
