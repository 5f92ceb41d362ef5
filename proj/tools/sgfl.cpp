#include <iostream>

#include "sgfl/cli.hpp"

int main(int argc, char** argv) {
  return sgfl::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
