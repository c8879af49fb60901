// Writes Katsura-n and Eco-n systems in the .ms format.

#include <fstream>
#include <iostream>
#include <string>

#include "zdsolve/benchmarks.hpp"
#include "zdsolve/io.hpp"

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: gen_benchmarks katsura|eco n out.ms\n";
    return 1;
  }
  std::string family = argv[1];
  int n = std::stoi(argv[2]);
  zds::bench::System s;
  if (family == "katsura")
    s = zds::bench::katsura(static_cast<size_t>(n));
  else if (family == "eco")
    s = zds::bench::eco(static_cast<size_t>(n));
  else {
    std::cerr << "unknown family " << family << "\n";
    return 1;
  }
  zds::io::InputSystem sys{s.vars, 0, s.polys};
  std::ofstream(argv[3]) << "# " << family << "-" << n << "\n" << zds::io::print_ms(sys);
  return 0;
}
