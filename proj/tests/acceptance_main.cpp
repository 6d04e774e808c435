#include <iostream>

#include "devsurf/selftest.hpp"

int main() {
  const devsurf::VerificationReport rep = devsurf::run_selftest(0x4519, &std::cout);
  return rep.all_pass() ? 0 : 1;
}
