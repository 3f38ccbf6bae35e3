// SPDX-License-Identifier: Apache-2.0
#include "baxter/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return baxter::run_cli({argv + 1, argv + argc}, std::cout, std::cerr, std::cin);
}
