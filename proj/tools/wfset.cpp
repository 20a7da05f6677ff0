#include <iostream>

#include "wfs/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const wfs::cli::DispatchResult r = wfs::cli::dispatch(args);
  (r.code == 2 ? std::cerr : std::cout) << r.output;
  return r.code;
}
