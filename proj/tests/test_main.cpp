#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "qpi/types.hpp"

int main(int argc, char** argv) {
  qpi::set_invariant_checks(true);
  doctest::Context ctx(argc, argv);
  return ctx.run();
}
