#include "spinpoly/cyclotomic.hpp"
#include <cstdio>

int main() {
  // Placeholder entry point; subcommands land with the full pipeline.
  std::puts("spinpoly: not yet wired");
  return 2;
}
