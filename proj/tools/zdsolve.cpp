#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "zdsolve/error.hpp"
#include "zdsolve/io.hpp"
#include "zdsolve/multimod.hpp"

using namespace zds;

int main(int argc, char** argv) {
  CLI::App app{"Solver for zero-dimensional polynomial systems"};
  std::string input, output, la = "exact", trace = "on";
  uint32_t prime = 0;
  unsigned threads = 1;
  uint64_t seed = 0;
  bool no_real_roots = false;
  long precision = 64;
  app.add_option("-f", input, "input file (.ms)")->required();
  app.add_option("-o", output, "output file (default stdout)");
  app.add_option("-p", prime, "solve modulo this prime only");
  app.add_option("--la", la, "linear algebra: exact|prob")->check(CLI::IsMember({"exact", "prob"}));
  app.add_option("--trace", trace, "F4 tracer: on|off")->check(CLI::IsMember({"on", "off"}));
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "random seed");
  app.add_flag("--no-real-roots", no_real_roots, "stop after the parametrization");
  app.add_option("--precision", precision, "enclosure width 2^-precision")->check(CLI::PositiveNumber);
  auto* verbose = app.add_flag("-v", "verbosity (repeat for more)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  const size_t verbosity = verbose->count();

  std::ifstream in(input);
  if (!in) {
    std::cerr << "error: cannot open " << input << "\n";
    return 1;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  io::InputSystem sys;
  try {
    sys = io::parse_ms(buf.str());
  } catch (const Error& e) {
    std::cerr << "error: " << input << ": " << e.what() << "\n";
    return 1;
  }
  if (prime != 0 && (prime >= (1u << 31) || !is_prime_u64(prime))) {
    std::cerr << "error: -p " << prime << ": characteristic not prime\n";
    return 1;
  }

  multimod::Config cfg;
  cfg.la = la == "prob" ? multimod::LaMode::Probabilistic
                        : (trace == "on" ? multimod::LaMode::Tracer : multimod::LaMode::Exact);
  cfg.threads = threads;
  cfg.seed = seed;
  cfg.prime = sys.characteristic != 0 ? sys.characteristic : prime;

  io::SolutionReport report;
  report.vars = sys.vars;
  int rc = 0;
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto out = multimod::solve_over_rationals(sys.polys, sys.vars.size(), cfg);
    report.modular = out.modular;
    report.modular_result = out.modular_result;
    report.lifted = out.lifted;
    report.diag = out.diag;
    if (!out.modular && !no_real_roots) {
      report.real_roots_requested = true;
      report.roots = io::real_root_boxes(out.lifted, precision);
    }
  } catch (const Error& e) {
    report.status = e.code() == ErrorCode::PositiveDimension ? io::Status::Infinite : io::Status::Error;
    report.message = e.what();
    std::cerr << "error: " << e.what() << "\n";
    rc = 2;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (verbosity >= 1) {
    std::cerr << "primes used " << report.diag.primes_used << ", bad " << report.diag.bad_primes << ", relearns "
              << report.diag.relearns << ", reconstructions " << report.diag.reconstructions << "\n";
    std::cerr << "time " << secs << " s (learn " << report.diag.seconds_learn << " s, images "
              << report.diag.seconds_images << " s)\n";
  }
  if (verbosity >= 2 && report.real_roots_requested) std::cerr << "real roots " << report.roots.size() << "\n";

  std::string text = io::write_solution(report);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream of(output);
    if (!of) {
      std::cerr << "error: cannot write " << output << "\n";
      return 1;
    }
    of << text;
  }
  return rc;
}
