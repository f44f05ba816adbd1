// Runs every acceptance check and prints one line per criterion.

#include "mobius3/verify.hpp"

#include <iostream>

int main() {
  int failed = 0;
  for (const auto& r : mobius3::verify_all(mobius3::VerifyProfile::Full)) {
    std::cout << mobius3::format_line(r) << std::endl;
    failed += !r.pass;
  }
  return failed == 0 ? 0 : 1;
}
