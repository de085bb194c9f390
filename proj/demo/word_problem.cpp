// Solves the word problem in the circular family and prints what the
// representation sees: images of the basis, angular sum, rotation normal form.

#include <iostream>

#include "braidauto/families.hpp"

using namespace braidauto;

int main() {
  Family f{FamilyKind::circular, 3};
  GroupWord lhs = parse_group_word("s1 s2 s1", f);
  GroupWord rhs = parse_group_word("s2 s1 s2", f);

  std::cout << "family: " << family_name(f.kind) << " on " << f.n << " strands\n";
  std::cout << format_group_word(lhs) << "  ==  " << format_group_word(rhs) << "  ?  "
            << (equal_elements(lhs, rhs) ? "yes" : "no") << "\n\n";

  Automorphism a = represent(lhs);
  for (int i = 1; i <= f.n; ++i)
    std::cout << "x" << i << " -> " << format_word(apply(a, reduce({{i, +1}}, f.n))) << "\n";
  std::cout << "\n";

  GroupWord mixed = parse_group_word("s1 z s2 z^-1 s3 z", f);
  NormalizedRotation nr = normalize_zeta(mixed);
  std::cout << format_group_word(mixed) << "  ->  z^" << nr.k << " "
            << format_group_word(nr.tail) << "\n";
  std::cout << "angular sum: " << epsilon_word(mixed) << "\n";

  GroupWord zn = gw_power(parse_group_word("z", f), f.n);
  std::cout << "z^" << f.n << " acts trivially: "
            << (represent(zn).forward == identity_endo(f.n) ? "yes" : "no")
            << ", but z^" << f.n << " == 1 is "
            << (equal_elements(zn, group_word(f)) ? "true" : "false") << "\n";
  return 0;
}
