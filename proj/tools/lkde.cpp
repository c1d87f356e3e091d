#include "lkde/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
  return lkde::cli::run(argc, argv, std::cout, std::cerr);
}
