// Acceptance gate: one line per criterion, "criterion N: PASS/FAIL - <label>".
// Run as: acceptance <cli-path> <golden-dir>. Exits nonzero if any criterion
// fails. All randomness uses fixed seeds.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "braidauto/io.hpp"
#include "braidauto/witness.hpp"

using namespace braidauto;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int num, const std::string& label, const std::function<std::string()>& body) {
  auto t0 = Clock::now();
  std::string problem;
  try {
    problem = body();
  } catch (const std::exception& e) {
    problem = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.1fs", secs);
  if (problem.empty()) {
    std::cout << "criterion " << num << ": PASS - " << label << " (" << timing << ")\n";
  } else {
    ++failures;
    std::cout << "criterion " << num << ": FAIL - " << label << " (" << problem << ", " << timing
              << ")\n";
  }
  std::cout.flush();
}

GroupWord random_word(std::mt19937& rng, const Family& f, int max_len) {
  std::vector<GenSymbol> pool;
  int top = family_cyclic(f.kind) ? f.n : f.n - 1;
  for (int i = 1; i <= top; ++i)
    for (int s : {+1, -1}) pool.push_back({GenKind::sigma, i, s});
  if (f.kind == FamilyKind::welded || f.kind == FamilyKind::rings)
    for (int i = 1; i <= f.n - 1; ++i)
      for (int s : {+1, -1}) pool.push_back({GenKind::rho, i, s});
  if (f.kind == FamilyKind::rings)
    for (int i = 1; i <= f.n; ++i) pool.push_back({GenKind::twist, i, +1});
  if (f.kind == FamilyKind::circular)
    for (int s : {+1, -1}) pool.push_back({GenKind::zeta, 0, s});
  if (f.kind == FamilyKind::necklace)
    for (int s : {+1, -1}) pool.push_back({GenKind::tau, 0, s});
  GroupWord w = group_word(f);
  int len = (int)(rng() % (unsigned)(max_len + 1));
  for (int i = 0; i < len; ++i) w.syllables.push_back(pool[rng() % pool.size()]);
  return w;
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s)
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  return out + "'";
}

struct RunResult {
  std::string out;
  int exit_code = -1;
};

RunResult run_cli(const std::string& cli, const std::string& dir, const std::string& args) {
  std::string cmd = "cd " + shell_quote(dir) + " && " + shell_quote(cli) + " " + args +
                    " 2>/dev/null";
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int status = pclose(p);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

std::string presentations_criterion() {
  for (const char* name : {"braid", "welded", "circular", "necklace", "affine", "semidirect"})
    for (int n = 2; n <= 8; ++n) {
      AssignmentReport rep = check_assignment(builtin_presentation(name, n), builtin_images(name, n));
      if (!rep.all_pass) return std::string(name) + " n=" + std::to_string(n) + " has a failing relation";
    }
  return "";
}

std::string kernel_criterion() {
  KernelScanReport r = kernel_scan(3, 6);
  if (r.scanned != 299593) return "scanned " + std::to_string(r.scanned) + ", expected 299593";
  if (r.kernel_hits != 3739) return "kernel_hits " + std::to_string(r.kernel_hits) + ", expected 3739";
  if (r.violations != 0) return std::to_string(r.violations) + " violations";
  return "";
}

std::string theta_criterion() {
  std::mt19937 rng(1003);
  for (int trial = 0; trial < 10000; ++trial) {
    int n = 2 + (int)(rng() % 4);
    Family f{FamilyKind::circular, n};
    GroupWord u = random_word(rng, f, 12);
    GroupWord v = random_word(rng, f, 12);
    SDElement tu = theta(u), tv = theta(v);
    if (!sd_equal(theta(concat(u, v)), sd_multiply(tu, tv)))
      return "homomorphism breaks at trial " + std::to_string(trial);
    bool by_theta = sd_equal(tu, tv);
    bool by_rep = equal_elements(u, v);
    if (by_theta != by_rep) return "oracle disagreement at trial " + std::to_string(trial);
  }
  return "";
}

std::string identities_criterion() {
  for (int n = 3; n <= 8; ++n) {
    Family neck{FamilyKind::necklace, n};
    Family circ{FamilyKind::circular, n};
    for (int k = 1; k <= n; ++k) {
      Word xk = reduce({{k, +1}}, n);
      if (!(represent(detail::circle_conjugation_word(k, neck)).forward == inner(xk).forward))
        return "conjugation word misses inner(x" + std::to_string(k) + ") at n=" + std::to_string(n);
    }
    Word delta = delta_word(n);
    Word x1 = reduce({{1, +1}}, n);
    Word xn = reduce({{n, +1}}, n);
    Automorphism sn = represent(parse_group_word("s" + std::to_string(n), circ));
    Word expected = word_product(word_product(xn, word_inverse(x1)),
                                 word_product(delta, word_product(x1, word_inverse(xn))));
    if (!(apply(sn, delta) == expected)) return "wrap crossing moves delta wrong at n=" + std::to_string(n);
    Automorphism t = represent(parse_group_word("t", neck));
    if (!(apply(t, delta) == word_product(word_inverse(x1), word_product(delta, x1))))
      return "rotation moves delta wrong at n=" + std::to_string(n);
    if (epsilon_word(parse_group_word("t", neck)) != 1) return "rotation angular sum is not 1";
    if (epsilon_word(parse_group_word("s1 s" + std::to_string(n), circ)) != 0)
      return "crossing angular sum is not 0";
    if (!(represent(gw_power(parse_group_word("z", circ), n)).forward == identity_endo(n)))
      return "z^n does not evaluate to the identity at n=" + std::to_string(n);
  }
  return "";
}

std::string torsion_criterion() {
  for (int n = 2; n <= 6; ++n) {
    Family f{FamilyKind::necklace, n};
    GroupWord tn = gw_power(parse_group_word("t", f), n);
    GroupWord t2n = gw_power(parse_group_word("t", f), 2 * n);
    GroupWord one = group_word(f);
    if (!equal_elements(t2n, one)) return "t^" + std::to_string(2 * n) + " is not trivial at n=" + std::to_string(n);
    if (equal_elements(tn, one)) return "t^" + std::to_string(n) + " collapses at n=" + std::to_string(n);
  }
  return "";
}

std::string witness_family(FamilyKind kind, GroupWord (*synth)(const Automorphism&, std::size_t),
                          unsigned seed) {
  std::mt19937 rng(seed);
  auto t0 = Clock::now();
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 + (int)(rng() % 4);
    Family f{kind, n};
    GroupWord w = random_word(rng, f, 10);
    Automorphism a = represent(w);
    GroupWord found = synth(a, 60000);
    if (!(represent(found).forward == a.forward))
      return family_name(kind) + " witness wrong at trial " + std::to_string(trial);
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs >= 120.0) return family_name(kind) + " witnesses took " + std::to_string(secs) + "s";
  return "";
}

std::string witness_criterion() {
  if (std::string r = witness_family(FamilyKind::braid, artin_witness, 1006); !r.empty()) return r;
  if (std::string r = witness_family(FamilyKind::welded, welded_witness, 1007); !r.empty()) return r;
  if (std::string r = witness_family(FamilyKind::necklace, necklace_witness, 1008); !r.empty())
    return r;
  return "";
}

std::string separation_criterion() {
  Automorphism twist = represent(parse_group_word("u1", Family{FamilyKind::rings, 3}));
  if (check_welded(twist).accepted) return "letter inversion slipped past the conjugation shape";

  Endomorphism f;
  f.rank = 2;
  f.images = {parse_word("x1 x2", 2), parse_word("x2", 2)};
  Endomorphism b;
  b.rank = 2;
  b.images = {parse_word("x1 x2^-1", 2), parse_word("x2", 2)};
  Automorphism smear = certify(f, b);
  if (check_braid(smear).accepted || check_welded(smear).accepted ||
      check_necklace(smear).accepted || check_affine(smear).accepted)
    return "free smear map was accepted somewhere";

  Automorphism rot = represent(parse_group_word("t", Family{FamilyKind::necklace, 3}));
  if (!check_necklace(rot).accepted) return "rotation rejected by its own family";
  if (check_braid(rot).accepted) return "rotation accepted as a braid";
  if (check_affine(rot).accepted) return "rotation accepted as affine";

  Automorphism wrap = represent(parse_group_word("s3", Family{FamilyKind::affine, 3}));
  if (!check_affine(wrap).accepted) return "wrap crossing rejected by the affine check";
  return "";
}

std::string residue_criterion() {
  std::mt19937 rng(1009);
  for (int trial = 0; trial < 10000; ++trial) {
    int n = 2 + (int)(rng() % 4);
    Family f{trial % 2 == 0 ? FamilyKind::circular : FamilyKind::necklace, n};
    GroupWord w = random_word(rng, f, 12);
    auto res = delta_conjugator_residue(represent(w).forward);
    if (!res) return "no residue at trial " + std::to_string(trial);
    long long eps = epsilon_word(w);
    if (*res != (int)(((eps % n) + n) % n)) return "residue mismatch at trial " + std::to_string(trial);
  }
  return "";
}

std::string injectivity_criterion() {
  std::mt19937 rng(1010);
  for (int trial = 0; trial < 5000; ++trial) {
    int n = 2 + (int)(rng() % 4);
    Family f{FamilyKind::circular, n};
    GroupWord u = random_word(rng, f, 12);
    GroupWord v;
    if (trial % 10 == 0) {
      v = u;
      GenSymbol g{GenKind::sigma, 1 + (int)(rng() % n), +1};
      v.syllables.push_back(g);
      v.syllables.push_back(gen_inverse(g));
    } else {
      v = random_word(rng, f, 12);
    }
    GroupWord zc = parse_group_word("z", f);
    u = concat(u, gw_power(zc, -epsilon_word(u)));
    v = concat(v, gw_power(zc, -epsilon_word(v)));
    bool by_theta = sd_equal(theta(u), theta(v));
    bool by_rep = represent(u).forward == represent(v).forward;
    if (by_theta != by_rep)
      return "angular-free pair splits the oracle at trial " + std::to_string(trial);
  }
  return "";
}

std::string golden_criterion(const std::string& cli, const std::string& dir) {
  std::ifstream cases(dir + "/cases.txt");
  if (!cases) return "cannot open cases.txt";
  std::set<std::string> covered;
  int total = 0;
  std::string line;
  while (std::getline(cases, line)) {
    if (line.empty() || line[0] == '#') continue;
    size_t p1 = line.find('|');
    size_t p2 = line.find('|', p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos) return "malformed case line: " + line;
    std::string id = line.substr(0, p1);
    int want_exit = std::stoi(line.substr(p1 + 1, p2 - p1 - 1));
    std::string args = line.substr(p2 + 1);
    std::ifstream expect_file(dir + "/" + id + ".out", std::ios::binary);
    if (!expect_file) return "missing expected output for " + id;
    std::ostringstream expect;
    expect << expect_file.rdbuf();
    RunResult got = run_cli(cli, dir, args);
    if (got.exit_code != want_exit)
      return id + ": exit " + std::to_string(got.exit_code) + ", expected " + std::to_string(want_exit);
    if (got.out != expect.str()) return id + ": output differs";
    covered.insert(args.substr(0, args.find(' ')));
    ++total;
  }
  if (total < 20) return "only " + std::to_string(total) + " cases";
  for (const char* sub : {"eval", "equal", "epsilon", "normalize", "member", "witness", "relations",
                          "kernel-scan", "oracle-equal", "pure-gen"})
    if (!covered.count(sub)) return std::string("no case covers ") + sub;
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <cli-path> <golden-dir>\n";
    return 2;
  }
  std::string cli = std::filesystem::absolute(argv[1]).string();
  std::string golden = std::filesystem::absolute(argv[2]).string();

  criterion(1, "builtin presentations verify for n=2..8", [] {
    auto t0 = Clock::now();
    std::string r = presentations_criterion();
    if (!r.empty()) return r;
    if (std::chrono::duration<double>(Clock::now() - t0).count() >= 5.0)
      return std::string("slower than 5s");
    return std::string();
  });
  criterion(2, "kernel scan n=3 up to length 6 is clean", kernel_criterion);
  criterion(3, "semidirect oracle agrees on 10000 circular pairs", theta_criterion);
  criterion(4, "rotation and wrap identities hold for n=3..8", identities_criterion);
  criterion(5, "rotation has order exactly 2n for n=2..6", torsion_criterion);
  criterion(6, "3000 witness round trips", witness_criterion);
  criterion(7, "membership separations", separation_criterion);
  criterion(8, "residue equals angular sum mod n on 10000 words", residue_criterion);
  criterion(9, "oracle and images agree on 5000 angular-free pairs", injectivity_criterion);
  criterion(10, "golden command corpus is byte-identical",
            [&] { return golden_criterion(cli, golden); });

  return failures == 0 ? 0 : 1;
}
