// branchcount <command> --job <file> [--seed N] [--bound B] [--retries R] [--emit report.json]
// branchcount <command> --ring x,y --gens "x^3;x*(x-y)"
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "branchcount/error.hpp"
#include "branchcount/job.hpp"

using namespace branchcount;

namespace {

std::vector<std::string> split_gens(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ';');) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified real half-branch counts of curve germs"};
  std::string command, job_file, ring_text, gens_text, emit;
  std::optional<std::uint64_t> seed;
  std::optional<long> bound;
  std::optional<unsigned> retries, k;
  app.add_option("command", command, "staircase, dim, degree, branches or map23")->required();
  app.add_option("--job", job_file, "JSON job file");
  app.add_option("--ring", ring_text, "inline ring, e.g. x,y");
  app.add_option("--gens", gens_text, "inline generators separated by ';'");
  app.add_option("--seed", seed, "random seed for generic combinations");
  app.add_option("--bound", bound, "coefficient bound for random draws");
  app.add_option("--retries", retries, "maximum genericity retries");
  app.add_option("--k", k, "explicit even exponent for omega");
  app.add_option("--emit", emit, "write the JSON report here ('-' for standard output)");
  CLI11_PARSE(app, argc, argv);

  Job job;
  try {
    if (!job_file.empty()) {
      std::ifstream in(job_file);
      if (!in) {
        std::cerr << "cannot read job file " << job_file << '\n';
        return exit_code::parse;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      job = load_job(buf.str());
      if (!job.command.empty() && job.command != command) {
        std::cerr << "job file is for '" << job.command << "', not '" << command << "'\n";
        return exit_code::parse;
      }
    } else if (!ring_text.empty() && !gens_text.empty()) {
      job.ring = parse_ring(ring_text);
      job.generators = split_gens(gens_text);
    } else {
      std::cerr << "give --job, or both --ring and --gens\n";
      return exit_code::parse;
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return exit_code::parse;
  }
  job.command = command;
  if (seed) job.seed = *seed;
  if (bound) job.bound = *bound;
  if (retries) job.retries = *retries;
  if (k) job.k = *k;

  const JobOutcome res = run_job(job);
  if (emit == "-") {
    std::cout << res.report;
  } else {
    (res.exit_code == exit_code::success ? std::cout : std::cerr) << res.text;
    if (!emit.empty()) {
      std::ofstream out(emit);
      out << res.report;
      if (!out) {
        std::cerr << "cannot write " << emit << '\n';
        return exit_code::internal;
      }
    }
  }
  return res.exit_code;
}
