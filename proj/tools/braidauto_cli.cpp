#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "braidauto/io.hpp"
#include "braidauto/witness.hpp"

namespace {

using namespace braidauto;

void check_rank(int n) {
  if (n < 2 || n > 64) throw input_error("n must be between 2 and 64");
}

ordered_json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return ordered_json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw input_error("cannot parse '" + path + "': " + e.what());
  }
}

Automorphism load_automorphism(const std::string& fwd_path, const std::string& bwd_path, int n) {
  Endomorphism fwd = endo_from_json(load_json(fwd_path));
  Endomorphism bwd = endo_from_json(load_json(bwd_path));
  if (n != 0 && fwd.rank != n)
    throw input_error("forward record has rank " + std::to_string(fwd.rank) +
                      " but n is " + std::to_string(n));
  return certify(fwd, bwd);
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

void emit_endo_plain(const Endomorphism& e) {
  for (int i = 1; i <= e.rank; ++i)
    std::cout << "x" << i << " -> " << format_word(e.images[i - 1]) << "\n";
  if (e.y_fixed) std::cout << "y -> y\n";
}

std::string rotation_token(FamilyKind k) { return k == FamilyKind::circular ? "z" : "t"; }

MembershipVerdict run_check(const std::string& kind, const Automorphism& a) {
  if (kind == "braid") return check_braid(a);
  if (kind == "welded") return check_welded(a);
  if (kind == "necklace") return check_necklace(a);
  if (kind == "affine") return check_affine(a);
  throw input_error("unknown check '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"automorphism toolkit for braid-like groups on free group generators"};
  app.require_subcommand(1);
  app.fallthrough();
  bool plain = false;
  app.add_flag("--plain", plain, "plain text output instead of JSON");

  std::string family_name, word_text, word_text2, check_kind, gen_kind;
  std::string fwd_path, bwd_path;
  int n = 0, max_len = 0, gi = 0, gj = 0;

  CLI::App* c_eval = app.add_subcommand("eval", "evaluate a generator word to its automorphism");
  c_eval->add_option("--family", family_name)->required();
  c_eval->add_option("--n", n)->required();
  c_eval->add_option("word", word_text);

  CLI::App* c_equal = app.add_subcommand("equal", "decide the word problem for two words");
  c_equal->add_option("--family", family_name)->required();
  c_equal->add_option("--n", n)->required();
  c_equal->add_option("lhs", word_text);
  c_equal->add_option("rhs", word_text2);

  CLI::App* c_oracle =
      app.add_subcommand("oracle-equal", "decide circular equality through the semidirect model");
  c_oracle->add_option("--family", family_name);
  c_oracle->add_option("--n", n)->required();
  c_oracle->add_option("lhs", word_text);
  c_oracle->add_option("rhs", word_text2);

  CLI::App* c_eps = app.add_subcommand("epsilon", "angular sum of a rotation-family word");
  c_eps->add_option("--family", family_name)->required();
  c_eps->add_option("--n", n)->required();
  c_eps->add_option("word", word_text);

  CLI::App* c_norm =
      app.add_subcommand("normalize", "move rotation syllables to a single leading power");
  c_norm->add_option("--family", family_name)->required();
  c_norm->add_option("--n", n)->required();
  c_norm->add_option("word", word_text);

  CLI::App* c_member =
      app.add_subcommand("member", "test whether a certified automorphism lies in a family image");
  c_member->add_option("--check", check_kind)->required();
  c_member->add_option("--n", n);
  c_member->add_option("forward", fwd_path)->required();
  c_member->add_option("backward", bwd_path)->required();

  CLI::App* c_witness =
      app.add_subcommand("witness", "synthesize a generator word for a certified automorphism");
  c_witness->add_option("--check", check_kind)->required();
  c_witness->add_option("--n", n);
  c_witness->add_option("forward", fwd_path)->required();
  c_witness->add_option("backward", bwd_path)->required();

  CLI::App* c_rel =
      app.add_subcommand("relations", "verify the builtin presentation under the builtin images");
  c_rel->add_option("--family", family_name)->required();
  c_rel->add_option("--n", n)->required();

  CLI::App* c_kernel =
      app.add_subcommand("kernel-scan", "scan circular words for kernel elements and check them");
  c_kernel->add_option("--n", n)->required();
  c_kernel->add_option("--max-len", max_len)->required();

  CLI::App* c_pure = app.add_subcommand("pure-gen", "emit a pure generator (lambda or delta)");
  c_pure->add_option("--kind", gen_kind)->required();
  c_pure->add_option("--i", gi)->required();
  c_pure->add_option("--j", gj)->required();
  c_pure->add_option("--n", n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_eval)) {
      check_rank(n);
      Family f{parse_family(family_name), n};
      Endomorphism e = represent(parse_group_word(word_text, f)).forward;
      if (plain)
        emit_endo_plain(e);
      else
        emit(endo_to_json(e));
      return 0;
    }
    if (app.got_subcommand(c_equal)) {
      check_rank(n);
      Family f{parse_family(family_name), n};
      bool eq = equal_elements(parse_group_word(word_text, f), parse_group_word(word_text2, f));
      if (plain)
        std::cout << (eq ? "true" : "false") << "\n";
      else
        emit(ordered_json{{"equal", eq}});
      return eq ? 0 : 1;
    }
    if (app.got_subcommand(c_oracle)) {
      check_rank(n);
      if (!family_name.empty() && family_name != "circular")
        throw input_error("oracle-equal supports only the circular family");
      Family f{FamilyKind::circular, n};
      bool eq = sd_equal(theta(parse_group_word(word_text, f)), theta(parse_group_word(word_text2, f)));
      if (plain)
        std::cout << (eq ? "true" : "false") << "\n";
      else
        emit(ordered_json{{"equal", eq}});
      return eq ? 0 : 1;
    }
    if (app.got_subcommand(c_eps)) {
      check_rank(n);
      Family f{parse_family(family_name), n};
      long long e = epsilon_word(parse_group_word(word_text, f));
      if (plain)
        std::cout << e << "\n";
      else
        emit(ordered_json{{"epsilon", e}});
      return 0;
    }
    if (app.got_subcommand(c_norm)) {
      check_rank(n);
      Family f{parse_family(family_name), n};
      NormalizedRotation nr = normalize_zeta(parse_group_word(word_text, f));
      if (plain) {
        std::string out;
        if (nr.k != 0) {
          out = rotation_token(f.kind);
          if (nr.k != 1) out += "^" + std::to_string(nr.k);
        }
        std::string tail = format_group_word(nr.tail);
        if (!tail.empty()) out += (out.empty() ? "" : " ") + tail;
        std::cout << out << "\n";
      } else {
        emit(ordered_json{{"k", nr.k}, {"tail", format_group_word(nr.tail)}});
      }
      return 0;
    }
    if (app.got_subcommand(c_member)) {
      MembershipVerdict v = run_check(check_kind, load_automorphism(fwd_path, bwd_path, n));
      if (plain)
        std::cout << (v.accepted ? "accepted" : "rejected " + *v.reason) << "\n";
      else
        emit(verdict_to_json(v));
      return v.accepted ? 0 : 1;
    }
    if (app.got_subcommand(c_witness)) {
      Automorphism a = load_automorphism(fwd_path, bwd_path, n);
      GroupWord w;
      if (check_kind == "braid")
        w = artin_witness(a);
      else if (check_kind == "welded")
        w = welded_witness(a);
      else if (check_kind == "necklace")
        w = necklace_witness(a);
      else
        throw input_error("unknown check '" + check_kind + "'");
      if (plain)
        std::cout << format_group_word(w) << "\n";
      else
        emit(ordered_json{{"witness", format_group_word(w)}, {"verified", true}});
      return 0;
    }
    if (app.got_subcommand(c_rel)) {
      check_rank(n);
      AssignmentReport report =
          check_assignment(builtin_presentation(family_name, n), builtin_images(family_name, n));
      if (plain) {
        for (const RelationRow& row : report.rows) {
          if (row.pass)
            std::cout << "ok " << row.lhs << " = " << row.rhs << "\n";
          else
            std::cout << "FAIL " << row.lhs << " = " << row.rhs << " [" << row.diff_gen << ": "
                      << row.lhs_image << " vs " << row.rhs_image << "]\n";
        }
      } else {
        emit(assignment_report_to_json(report));
      }
      return report.all_pass ? 0 : 1;
    }
    if (app.got_subcommand(c_kernel)) {
      check_rank(n);
      KernelScanReport report = kernel_scan(n, max_len);
      if (plain)
        std::cout << "scanned=" << report.scanned << " kernel_hits=" << report.kernel_hits
                  << " violations=" << report.violations << "\n";
      else
        emit(kernel_report_to_json(report));
      return report.violations == 0 ? 0 : 1;
    }
    if (app.got_subcommand(c_pure)) {
      check_rank(n);
      if (gen_kind == "lambda") {
        GroupWord w = band_generator_word(gi, gj, n);
        if (plain)
          std::cout << format_group_word(w) << "\n";
        else
          emit(ordered_json{{"word", format_group_word(w)}});
      } else if (gen_kind == "delta") {
        Automorphism a = basis_conjugating_auto(gi, gj, n);
        if (plain)
          emit_endo_plain(a.forward);
        else
          emit(auto_to_json(a));
      } else {
        throw input_error("unknown kind '" + gen_kind + "'");
      }
      return 0;
    }
    throw internal_error("no subcommand dispatched");
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
