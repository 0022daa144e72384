#include <cstring>
#include <iostream>

#include "palper/acceptance.hpp"

int main(int argc, char** argv) {
  palper::acceptance::Options options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) options.quick = true;
    else if (std::strcmp(argv[i], "--deep") == 0) options.deep = true;
    else if (std::strcmp(argv[i], "--full") == 0) options.quick = false;
    else {
      std::cerr << "usage: palper_acceptance [--quick|--full] [--deep]\n";
      return 2;
    }
  }
  return palper::acceptance::run(options, std::cout) ? 0 : 1;
}
