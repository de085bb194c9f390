#pragma once

#include <cstddef>
#include <queue>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "braidauto/families.hpp"
#include "braidauto/membership.hpp"

namespace braidauto {

// Witness synthesis: given an automorphism known to lie in a family's image,
// produce a generator word mapping onto it. All synthesizers share one bounded
// best-first search that peels the automorphism down to the identity with a
// fixed move set, then reads the word off the move trail. Every witness is
// re-evaluated before it is returned.

struct SearchMove {
  GroupWord word;      // realizes autom under represent
  GroupWord inv_word;  // its syllable-wise inverse
  Automorphism autom;
};

namespace detail {

inline std::string endo_key(const Endomorphism& e) {
  std::string k;
  for (const Word& w : e.images) {
    for (const Letter& a : w.letters) {
      k += std::to_string(a.sign * a.index);
      k += ',';
    }
    k += '|';
  }
  return k;
}

inline long long endo_measure(const Endomorphism& e) {
  long long m = 0;
  for (const Word& w : e.images) m += (long long)w.letters.size();
  return m;
}

struct SearchNode {
  Endomorphism psi;
  int parent = -1;
  int move = -1;
  int side = 0;  // 0: psi o G (right), 1: G o psi (left)
};

// Maintains phi = rep(a) o psi o rep(b). A right move psi -> psi o G appends
// G's inverse word to b; a left move psi -> G o psi prepends it to a. When psi
// reaches the identity, b ++ a evaluates to phi.
inline GroupWord untangle(const Endomorphism& start, const std::vector<SearchMove>& moves,
                          const Family& fam, std::size_t budget) {
  Endomorphism target = identity_endo(start.rank);
  std::vector<SearchNode> arena;
  using Entry = std::pair<long long, int>;  // (measure, node index); index orders ties
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> frontier;
  std::unordered_set<std::string> visited;
  int goal = -1;

  auto admit = [&](Endomorphism psi, int parent, int move, int side) {
    if (goal >= 0) return;
    if (!visited.insert(endo_key(psi)).second) return;
    if (arena.size() >= budget) throw internal_error("witness search exhausted its node budget");
    long long m = endo_measure(psi);
    arena.push_back({std::move(psi), parent, move, side});
    int idx = (int)arena.size() - 1;
    if (arena[idx].psi == target)
      goal = idx;
    else
      frontier.push({m, idx});
  };

  admit(start, -1, -1, 0);
  while (goal < 0) {
    if (frontier.empty()) throw internal_error("witness search ran out of moves");
    int at = frontier.top().second;
    frontier.pop();
    for (int mi = 0; mi < (int)moves.size() && goal < 0; ++mi) {
      admit(compose(arena[at].psi, moves[mi].autom.forward), at, mi, 0);
      if (goal < 0) admit(compose(moves[mi].autom.forward, arena[at].psi), at, mi, 1);
    }
  }

  GroupWord left = group_word(fam);
  std::vector<int> right_moves;
  for (int at = goal; arena[at].parent >= 0; at = arena[at].parent) {
    if (arena[at].side == 1)
      left = concat(left, moves[arena[at].move].inv_word);
    else
      right_moves.push_back(arena[at].move);
  }
  GroupWord out = group_word(fam);
  for (auto it = right_moves.rbegin(); it != right_moves.rend(); ++it)
    out = concat(out, moves[*it].inv_word);
  return concat(out, left);
}

inline SearchMove make_move(GroupWord word, Automorphism autom) {
  Automorphism check = represent(word);
  if (!(check.forward == autom.forward))
    throw internal_error("search move word does not evaluate to its automorphism");
  SearchMove m;
  m.inv_word = gw_inverse(word);
  m.word = std::move(word);
  m.autom = std::move(autom);
  return m;
}

inline std::vector<SearchMove> crossing_moves(const Family& fam) {
  std::vector<SearchMove> moves;
  for (int i = 1; i <= fam.n - 1; ++i)
    for (int s : {+1, -1}) {
      GroupWord w = group_word(fam);
      gw_append(w, GenKind::sigma, i, s);
      moves.push_back(make_move(std::move(w), generator_automorphism(fam, {GenKind::sigma, i, s})));
    }
  return moves;
}

}  // namespace detail

// Word in the permutation generators r_i whose evaluation sends x_j to
// x_{perm(j)}. Built by bubble-sorting the one-line form and recording the
// swap positions in performed order.
inline GroupWord perm_word(const std::vector<int>& perm, const Family& fam) {
  GroupWord w = group_word(fam);
  std::vector<int> line = perm;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int c = 0; c + 1 < (int)line.size(); ++c)
      if (line[c] > line[c + 1]) {
        std::swap(line[c], line[c + 1]);
        gw_append(w, GenKind::rho, c + 1, 1);
        moved = true;
      }
  }
  Endomorphism got = represent(w).forward;
  for (int j = 1; j <= fam.n; ++j)
    if (!(got.images[j - 1] == reduce({{perm[j - 1], +1}}, fam.n)))
      throw internal_error("perm_word: constructed word misses the permutation");
  return w;
}

namespace detail {

// Conjugation moves x_a -> x_b^s x_a x_b^-s, realized as the conjugate of the
// two-syllable word s1 r1 by a permutation word placing a, b on strands 1, 2.
inline std::vector<SearchMove> conjugation_moves(const Family& fam) {
  int n = fam.n;
  std::vector<SearchMove> moves;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (a == b) continue;
      std::vector<int> line{a, b};
      for (int v = 1; v <= n; ++v)
        if (v != a && v != b) line.push_back(v);
      GroupWord placement = perm_word(line, fam);
      GroupWord base = gw_inverse(placement);
      gw_append(base, GenKind::sigma, 1, 1);
      gw_append(base, GenKind::rho, 1, 1);
      base = concat(base, placement);
      for (int s : {+1, -1}) {
        Endomorphism fwd = identity_endo(n);
        Endomorphism bwd = identity_endo(n);
        fwd.images[a - 1] = reduce({{b, s}, {a, +1}, {b, -s}}, n);
        bwd.images[a - 1] = reduce({{b, -s}, {a, +1}, {b, s}}, n);
        moves.push_back(make_move(s > 0 ? base : gw_inverse(base), Automorphism{fwd, bwd}));
      }
    }
  return moves;
}

}  // namespace detail

// Braid witness: peels the automorphism with signed crossings on both sides.
inline GroupWord artin_witness(const Automorphism& phi, std::size_t budget = 60000) {
  MembershipVerdict v = check_braid(phi);
  if (!v.accepted) throw input_error("artin_witness: automorphism rejected: " + *v.reason);
  Family fam{FamilyKind::braid, phi.forward.rank};
  GroupWord w = gw_free_reduce(detail::untangle(phi.forward, detail::crossing_moves(fam), fam, budget));
  if (!(represent(w).forward == phi.forward))
    throw internal_error("artin_witness: synthesized word fails verification");
  return w;
}

// Welded witness: splits off the strand permutation as a word in the r_i, then
// reduces the remaining conjugation-shaped part with the conjugation moves.
inline GroupWord welded_witness(const Automorphism& phi, std::size_t budget = 60000) {
  MembershipVerdict v = check_welded(phi);
  if (!v.accepted) throw input_error("welded_witness: automorphism rejected: " + *v.reason);
  int n = phi.forward.rank;
  Family fam{FamilyKind::welded, n};
  GroupWord placement = perm_word(v.data->perm, fam);
  Automorphism perm_auto = represent(placement);
  Endomorphism pure = compose(phi.forward, perm_auto.backward);
  GroupWord tail = detail::untangle(pure, detail::conjugation_moves(fam), fam, budget);
  GroupWord w = gw_free_reduce(concat(placement, tail));
  if (!(represent(w).forward == phi.forward))
    throw internal_error("welded_witness: synthesized word fails verification");
  return w;
}

namespace detail {

// Necklace word evaluating to the conjugation by x_k: for k = 1 the word
// t^-1 s_{n-1} .. s_1, and in general its conjugate by k - 1 rotations.
inline GroupWord circle_conjugation_word(int k, const Family& fam) {
  GroupWord w = group_word(fam);
  gw_append(w, GenKind::tau, 0, -(long long)(k - 1) - 1);
  for (int i = fam.n - 1; i >= 1; --i) gw_append(w, GenKind::sigma, i, 1);
  gw_append(w, GenKind::tau, 0, (long long)(k - 1));
  return w;
}

}  // namespace detail

// Necklace witness: divides out the conjugation by the Delta conjugator, which
// leaves an automorphism fixing Delta, and delegates that part to the braid
// search. The crossing indices carry over unchanged.
inline GroupWord necklace_witness(const Automorphism& phi, std::size_t budget = 60000) {
  MembershipVerdict v = check_necklace(phi);
  if (!v.accepted) throw input_error("necklace_witness: automorphism rejected: " + *v.reason);
  int n = phi.forward.rank;
  Family fam{FamilyKind::necklace, n};
  Word u = *delta_conjugator(apply(phi.forward, delta_word(n)), n);
  GroupWord conj_part = group_word(fam);
  for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it) {
    GroupWord piece = detail::circle_conjugation_word(it->index, fam);
    conj_part = concat(conj_part, it->sign > 0 ? piece : gw_inverse(piece));
  }
  Automorphism fixing = compose(inner(word_inverse(u)), phi);
  if (!check_braid(fixing).accepted)
    throw internal_error("necklace_witness: residual automorphism is not braid-shaped");
  Family bfam{FamilyKind::braid, n};
  GroupWord braid_part =
      detail::untangle(fixing.forward, detail::crossing_moves(bfam), bfam, budget);
  GroupWord w = group_word(fam);
  for (const GenSymbol& g : braid_part.syllables) w.syllables.push_back(g);
  w = gw_free_reduce(concat(w, conj_part));
  if (!(represent(w).forward == phi.forward))
    throw internal_error("necklace_witness: synthesized word fails verification");
  return w;
}

}  // namespace braidauto
