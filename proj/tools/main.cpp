#include "cli/app.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return fracon::cli::app_main(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
