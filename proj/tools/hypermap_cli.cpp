// hypermap: realize a finite group as the automorphism group of a dessin and
// emit a certificate; plus the arithmetic helpers behind the construction.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hypermap/error.hpp"
#include "hypermap/pipeline.hpp"
#include "hypermap/psl2.hpp"

namespace {

using namespace hypermap;

constexpr int kPass = 0, kVerifyFailed = 1, kInputError = 2, kSearchBudget = 3;

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::SearchExhausted:
    case ErrorCode::SearchBoundExceeded:
    case ErrorCode::SearchBudgetExhausted:
    case ErrorCode::NoEligibleQ:
      return kSearchBudget;
    case ErrorCode::Disconnected:
      return kVerifyFailed;
    default:
      return kInputError;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Realize finite groups as automorphism groups of dessins, with certificates"};
  app.set_version_flag("--version", std::string(library_version()));
  app.require_subcommand(1);

  // realize
  auto* realize_cmd = app.add_subcommand("realize", "build a dessin with automorphism group A and certify it");
  std::string group_src, triple_text, out_dir;
  std::uint32_t q_pin = 0;
  RealizeOptions ropts;
  bool to_stdout = false;
  realize_cmd->add_option("--group", group_src, "catalog name (trivial, C<n>, D<n>, S<n>, A<n>, Q8) or JSON file")
      ->required();
  realize_cmd->add_option("--triple", triple_text, "l,m,n");
  realize_cmd->add_option("--q", q_pin, "prime q");
  realize_cmd->add_option("--seed", ropts.seed, "search seed")->capture_default_str();
  realize_cmd->add_option("--out", out_dir, "output directory");
  realize_cmd->add_flag("--stdout", to_stdout, "print the certificate");
  realize_cmd->add_option("--theta-budget", ropts.theta_budget, "random theta assignments")->capture_default_str();
  std::size_t group_cap = 500;
  realize_cmd->add_option("--group-cap", group_cap, "largest accepted |A|")->capture_default_str();
  realize_cmd->add_option("--dart-cap", ropts.dart_cap, "largest accepted dart count")->capture_default_str();

  auto* info_cmd = app.add_subcommand("triple-info", "classification and admissible primes of a triple");
  std::string info_triple;
  info_cmd->add_option("triple", info_triple, "l,m,n")->required();

  auto* findq_cmd = app.add_subcommand("find-q", "smallest admissible prime q with genus at least the rank");
  std::string findq_triple;
  std::uint64_t rank = 1;
  findq_cmd->add_option("triple", findq_triple, "l,m,n")->required();
  findq_cmd->add_option("--rank", rank, "rank d of A")->capture_default_str();

  auto* psl_cmd = app.add_subcommand("psl2-triple", "generating triple of PSL2(q) with orders l, m, n");
  std::uint32_t pq = 0, pl = 0, pm = 0, pn = 0;
  std::uint64_t pseed = 1;
  psl_cmd->add_option("q", pq)->required();
  psl_cmd->add_option("l", pl)->required();
  psl_cmd->add_option("m", pm)->required();
  psl_cmd->add_option("n", pn)->required();
  psl_cmd->add_option("--seed", pseed)->capture_default_str();

  auto* a4_cmd = app.add_subcommand("remark3", "variant through the action on conjugates of A4 in PSL2(q)");
  std::string a4_triple;
  std::uint64_t q_bound = 100000, a4_cap = 20000;
  a4_cmd->add_option("triple", a4_triple, "l,m,n with entries coprime to 6")->required();
  a4_cmd->add_option("--q-bound", q_bound)->capture_default_str();
  a4_cmd->add_option("--degree-cap", a4_cap, "build the action only up to this degree")->capture_default_str();

  auto* agl_cmd = app.add_subcommand("remark4", "variant through S_p acting on cosets of AGL1(p)");
  std::uint32_t p = 0;
  std::uint64_t agl_cap = 10000;
  agl_cmd->add_option("p", p, "prime >= 5")->required();
  agl_cmd->add_option("--degree-cap", agl_cap, "build the action only up to this degree")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "re-validate a certificate and dessin");
  std::string cert_path, dessin_path;
  verify_cmd->add_option("--certificate", cert_path)->required();
  verify_cmd->add_option("--dessin", dessin_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kInputError;
  }

  try {
    if (*realize_cmd) {
      if (!triple_text.empty()) ropts.triple = parse_triple(triple_text);
      if (q_pin) ropts.q = q_pin;
      auto group = load_group(group_src, group_cap);
      auto r = realize(group, ropts);
      if (!out_dir.empty()) write_realization(r, out_dir);
      if (to_stdout || out_dir.empty()) std::cout << r.certificate;
      if (!r.pass) {
        std::cerr << "verification failed:";
        for (const auto& [name, ok] : r.checks)
          if (!ok) std::cerr << ' ' << name;
        std::cerr << '\n';
        return kVerifyFailed;
      }
      std::cerr << "pass\n";
      return kPass;
    }
    if (*info_cmd) {
      std::cout << triple_info_report(parse_triple(info_triple));
      return kPass;
    }
    if (*findq_cmd) {
      std::cout << find_q_report(parse_triple(findq_triple), rank);
      return kPass;
    }
    if (*psl_cmd) {
      std::cout << psl2_triple_report(pq, pl, pm, pn, pseed);
      return kPass;
    }
    if (*a4_cmd) {
      std::cout << a4_coset_report(a4_coset_plan(parse_triple(a4_triple), q_bound, a4_cap));
      return kPass;
    }
    if (*agl_cmd) {
      std::cout << agl_coset_report(p, agl_cap);
      return kPass;
    }
    if (*verify_cmd) {
      auto rep = validate_certificate(read_file(cert_path), read_file(dessin_path));
      if (rep.ok) {
        std::cout << "pass\n";
        return kPass;
      }
      for (const auto& f : rep.failures) std::cout << "FAIL " << f << '\n';
      return kVerifyFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
