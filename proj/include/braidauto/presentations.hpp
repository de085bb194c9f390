#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "braidauto/families.hpp"
#include "braidauto/semidirect.hpp"

namespace braidauto {

// Symbolic presentation words: named generators with exponents. Evaluation
// against an assignment of automorphisms uses the same diagrammatic convention
// as represent (leftmost syllable acts first).

struct PSyllable {
  std::string gen;
  long long exp = 1;
};

using PWord = std::vector<PSyllable>;

struct Relation {
  PWord lhs;
  PWord rhs;
};

struct Presentation {
  std::string name;
  int n = 2;
  std::vector<std::string> generators;
  std::vector<Relation> relations;
};

inline std::string format_pword(const PWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const PSyllable& s : w) {
    if (!out.empty()) out += ' ';
    out += s.gen;
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

inline Endomorphism eval_pword(const PWord& w, const std::map<std::string, Automorphism>& images,
                               int rank) {
  Automorphism acc = identity_auto(rank, true);
  for (const PSyllable& s : w) {
    auto it = images.find(s.gen);
    if (it == images.end()) throw input_error("no image assigned to generator '" + s.gen + "'");
    if (it->second.forward.rank != rank)
      throw input_error("image of '" + s.gen + "' has the wrong rank");
    Automorphism step = s.exp < 0 ? inverse(it->second) : it->second;
    for (long long i = 0, m = s.exp < 0 ? -s.exp : s.exp; i < m; ++i) acc = compose(step, acc);
  }
  return acc.forward;
}

namespace detail {

inline PSyllable ps(const std::string& g, long long e = 1) { return {g, e}; }

inline std::string tok(char head, int i) { return std::string(1, head) + std::to_string(i); }

inline Relation braid_rel(const std::string& g, const std::string& h) {
  return {{ps(g), ps(h), ps(g)}, {ps(h), ps(g), ps(h)}};
}

inline Relation comm_rel(const std::string& g, const std::string& h) {
  return {{ps(g), ps(h)}, {ps(h), ps(g)}};
}

inline void sigma_relations(Presentation& p, int n) {
  for (int i = 1; i <= n - 2; ++i) p.relations.push_back(braid_rel(tok('s', i), tok('s', i + 1)));
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) p.relations.push_back(comm_rel(tok('s', i), tok('s', j)));
}

inline void welded_relations(Presentation& p, int n) {
  sigma_relations(p, n);
  for (int i = 1; i <= n - 1; ++i) p.relations.push_back({{ps(tok('r', i), 2)}, {}});
  for (int i = 1; i <= n - 2; ++i) p.relations.push_back(braid_rel(tok('r', i), tok('r', i + 1)));
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) p.relations.push_back(comm_rel(tok('r', i), tok('r', j)));
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (j - i >= 2 || i - j >= 2) p.relations.push_back(comm_rel(tok('s', i), tok('r', j)));
  // Mixed crossing-permutation relations.
  for (int i = 1; i <= n - 2; ++i) {
    p.relations.push_back({{ps(tok('r', i)), ps(tok('r', i + 1)), ps(tok('s', i))},
                           {ps(tok('s', i + 1)), ps(tok('r', i)), ps(tok('r', i + 1))}});
    p.relations.push_back({{ps(tok('s', i + 1)), ps(tok('s', i)), ps(tok('r', i + 1))},
                           {ps(tok('r', i)), ps(tok('s', i + 1)), ps(tok('s', i))}});
  }
}

// Cyclic-index relations shared by the rotation families. At n = 2 the two
// crossings generate freely, so no braid or commutation relations are emitted.
inline void cyclic_sigma_relations(Presentation& p, int n) {
  if (n < 3) return;
  for (int i = 1; i <= n; ++i)
    p.relations.push_back(braid_rel(tok('s', i), tok('s', index_mod(i + 1, n))));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j) {
      if (i == 1 && j == n) continue;
      p.relations.push_back(comm_rel(tok('s', i), tok('s', j)));
    }
}

inline void rotation_conjugation_relations(Presentation& p, int n, const std::string& rot) {
  for (int i = 1; i <= n; ++i)
    p.relations.push_back(
        {{ps(rot, -1), ps(tok('s', i)), ps(rot)}, {ps(tok('s', index_mod(i + 1, n)))}});
}

}  // namespace detail

// Builtin presentations; `name` is a family name or "semidirect" for the
// braid-with-fiber generators a_i, e_i.
inline Presentation builtin_presentation(const std::string& name, int n) {
  if (n < 2) throw input_error("builtin_presentation: n must be at least 2");
  using namespace detail;
  Presentation p;
  p.name = name;
  p.n = n;
  if (name == "braid") {
    for (int i = 1; i <= n - 1; ++i) p.generators.push_back(tok('s', i));
    sigma_relations(p, n);
  } else if (name == "welded") {
    for (int i = 1; i <= n - 1; ++i) p.generators.push_back(tok('s', i));
    for (int i = 1; i <= n - 1; ++i) p.generators.push_back(tok('r', i));
    welded_relations(p, n);
  } else if (name == "rings") {
    for (int i = 1; i <= n - 1; ++i) p.generators.push_back(tok('s', i));
    for (int i = 1; i <= n - 1; ++i) p.generators.push_back(tok('r', i));
    for (int j = 1; j <= n; ++j) p.generators.push_back(tok('u', j));
    welded_relations(p, n);
    for (int j = 1; j <= n; ++j) p.relations.push_back({{ps(tok('u', j), 2)}, {}});
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) p.relations.push_back(comm_rel(tok('u', i), tok('u', j)));
    for (int i = 1; i <= n - 1; ++i) {
      p.relations.push_back(
          {{ps(tok('r', i)), ps(tok('u', i))}, {ps(tok('u', i + 1)), ps(tok('r', i))}});
      p.relations.push_back(
          {{ps(tok('r', i)), ps(tok('u', i + 1))}, {ps(tok('u', i)), ps(tok('r', i))}});
      for (int j = 1; j <= n; ++j)
        if (j != i && j != i + 1) p.relations.push_back(comm_rel(tok('r', i), tok('u', j)));
      p.relations.push_back(
          {{ps(tok('s', i)), ps(tok('u', i + 1))}, {ps(tok('u', i)), ps(tok('s', i))}});
      for (int j = 1; j <= n; ++j)
        if (j != i && j != i + 1) p.relations.push_back(comm_rel(tok('s', i), tok('u', j)));
    }
  } else if (name == "circular" || name == "necklace") {
    std::string rot = name == "circular" ? "z" : "t";
    for (int i = 1; i <= n; ++i) p.generators.push_back(tok('s', i));
    p.generators.push_back(rot);
    cyclic_sigma_relations(p, n);
    rotation_conjugation_relations(p, n, rot);
    if (name == "necklace") p.relations.push_back({{ps(rot, 2 * n)}, {}});
  } else if (name == "affine") {
    for (int i = 1; i <= n; ++i) p.generators.push_back(tok('s', i));
    cyclic_sigma_relations(p, n);
  } else if (name == "semidirect") {
    for (int i = 1; i <= n - 1; ++i) p.generators.push_back(tok('a', i));
    for (int j = 1; j <= n; ++j) p.generators.push_back(tok('e', j));
    for (int i = 1; i <= n - 2; ++i) p.relations.push_back(braid_rel(tok('a', i), tok('a', i + 1)));
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j)
        p.relations.push_back(comm_rel(tok('a', i), tok('a', j)));
    for (int i = 1; i <= n - 1; ++i) {
      p.relations.push_back({{ps(tok('a', i), -1), ps(tok('e', i)), ps(tok('a', i))},
                             {ps(tok('e', i)), ps(tok('e', i + 1)), ps(tok('e', i), -1)}});
      p.relations.push_back(
          {{ps(tok('a', i), -1), ps(tok('e', i + 1)), ps(tok('a', i))}, {ps(tok('e', i))}});
      for (int k = 1; k <= n; ++k)
        if (k != i && k != i + 1)
          p.relations.push_back(
              {{ps(tok('a', i), -1), ps(tok('e', k)), ps(tok('a', i))}, {ps(tok('e', k))}});
    }
  } else {
    throw input_error("unknown presentation '" + name + "'");
  }
  return p;
}

// The standard images for each builtin presentation.
inline std::map<std::string, Automorphism> builtin_images(const std::string& name, int n) {
  if (n < 2) throw input_error("builtin_images: n must be at least 2");
  using detail::tok;
  std::map<std::string, Automorphism> images;
  if (name == "semidirect") {
    Family bf{FamilyKind::braid, n};
    for (int i = 1; i <= n - 1; ++i)
      images[tok('a', i)] = generator_automorphism(bf, {GenKind::sigma, i, +1});
    for (int j = 1; j <= n; ++j) images[tok('e', j)] = inner(reduce({{j, -1}}, n));
    return images;
  }
  Family f{parse_family(name), n};
  int top_sigma = family_cyclic(f.kind) ? n : n - 1;
  for (int i = 1; i <= top_sigma; ++i)
    images[tok('s', i)] = generator_automorphism(f, {GenKind::sigma, i, +1});
  if (f.kind == FamilyKind::welded || f.kind == FamilyKind::rings)
    for (int i = 1; i <= n - 1; ++i)
      images[tok('r', i)] = generator_automorphism(f, {GenKind::rho, i, +1});
  if (f.kind == FamilyKind::rings)
    for (int j = 1; j <= n; ++j)
      images[tok('u', j)] = generator_automorphism(f, {GenKind::twist, j, +1});
  if (f.kind == FamilyKind::circular)
    images["z"] = generator_automorphism(f, {GenKind::zeta, 0, +1});
  if (f.kind == FamilyKind::necklace)
    images["t"] = generator_automorphism(f, {GenKind::tau, 0, +1});
  return images;
}

struct RelationRow {
  std::string lhs;
  std::string rhs;
  bool pass = false;
  std::string diff_gen;   // first basis generator with differing images
  std::string lhs_image;  // its image under the left side
  std::string rhs_image;  // and under the right side
};

struct AssignmentReport {
  std::vector<RelationRow> rows;
  bool all_pass = true;
};

inline AssignmentReport check_assignment(const Presentation& p,
                                         const std::map<std::string, Automorphism>& images) {
  for (const std::string& g : p.generators)
    if (images.find(g) == images.end())
      throw input_error("no image assigned to generator '" + g + "'");
  AssignmentReport report;
  for (const Relation& rel : p.relations) {
    RelationRow row;
    row.lhs = format_pword(rel.lhs);
    row.rhs = format_pword(rel.rhs);
    Endomorphism le = eval_pword(rel.lhs, images, p.n);
    Endomorphism re = eval_pword(rel.rhs, images, p.n);
    row.pass = le == re;
    if (!row.pass) {
      report.all_pass = false;
      for (int i = 0; i < p.n; ++i)
        if (!(le.images[i] == re.images[i])) {
          row.diff_gen = "x" + std::to_string(i + 1);
          row.lhs_image = format_word(le.images[i]);
          row.rhs_image = format_word(re.images[i]);
          break;
        }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

struct KernelScanReport {
  long long scanned = 0;
  long long kernel_hits = 0;
  long long violations = 0;
};

// Exhaustive scan of all circular words up to the given length. Every word
// whose evaluation is the identity automorphism must behave like the power
// zeta^epsilon: angular sum divisible by n, zero crossing exponent sum, and
// the same image in the semidirect product.
inline KernelScanReport kernel_scan(int n, int max_len) {
  if (n < 2) throw input_error("kernel_scan: n must be at least 2");
  if (max_len < 0) throw input_error("kernel_scan: max_len must be nonnegative");
  Family fam{FamilyKind::circular, n};
  std::vector<GenSymbol> gens;
  for (int i = 1; i <= n; ++i)
    for (int s : {+1, -1}) gens.push_back({GenKind::sigma, i, s});
  for (int s : {+1, -1}) gens.push_back({GenKind::zeta, 0, s});
  std::vector<Automorphism> gen_autos;
  for (const GenSymbol& g : gens) gen_autos.push_back(generator_automorphism(fam, g));

  Endomorphism id = identity_endo(n);
  SDElement rotation_image = detail::sd_zeta_image(n);
  KernelScanReport report;
  GroupWord path = group_word(fam);

  auto visit = [&](auto&& self, const Endomorphism& acc, int depth) -> void {
    ++report.scanned;
    if (acc == id) {
      ++report.kernel_hits;
      long long eps = epsilon_word(path);
      auto sums = abelianization(path);
      bool ok = eps % n == 0 && sums.first == 0;
      if (ok) ok = sd_equal(theta(path), sd_power(rotation_image, eps));
      if (!ok) ++report.violations;
    }
    if (depth == max_len) return;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      path.syllables.push_back(gens[gi]);
      self(self, compose(gen_autos[gi].forward, acc), depth + 1);
      path.syllables.pop_back();
    }
  };
  visit(visit, id, 0);
  return report;
}

}  // namespace braidauto
