// Starts from an automorphism of the free group, asks which families contain
// it, and synthesizes a generator word where the answer is yes.

#include <iostream>

#include "braidauto/witness.hpp"

using namespace braidauto;

static void report(const char* label, const MembershipVerdict& v) {
  std::cout << label << ": " << (v.accepted ? "accepted" : "rejected");
  if (!v.accepted && v.reason) std::cout << " (" << *v.reason << ")";
  std::cout << "\n";
}

int main() {
  Family neck{FamilyKind::necklace, 3};
  GroupWord secret = parse_group_word("s2 t s1^-1 t", neck);
  Automorphism a = represent(secret);

  std::cout << "hidden word: " << format_group_word(secret) << "\n";
  for (int i = 1; i <= 3; ++i)
    std::cout << "x" << i << " -> " << format_word(apply(a, reduce({{i, +1}}, 3))) << "\n";
  std::cout << "\n";

  report("braid", check_braid(a));
  report("welded", check_welded(a));
  report("necklace", check_necklace(a));
  report("affine", check_affine(a));
  std::cout << "\n";

  GroupWord found = necklace_witness(a);
  std::cout << "recovered word: " << format_group_word(found) << "\n";
  std::cout << "same automorphism: "
            << (represent(found).forward == a.forward ? "yes" : "no") << "\n";
  std::cout << "same group element: " << (equal_elements(found, secret) ? "yes" : "no") << "\n";
  return 0;
}
