#ifndef DELJOIN_TOOLS_CLI_HPP
#define DELJOIN_TOOLS_CLI_HPP

// Command-line front end. Exit codes: 0 success, 2 verification mismatch,
// 3 cell cap exceeded, 4 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <deljoin/deljoin.hpp>

namespace deljoin::cli {

enum ExitCode : int { kOk = 0, kMismatch = 2, kCapExceeded = 3, kUsage = 4 };

struct RunConfig {
  std::size_t cell_cap = kDefaultCellCap;
  unsigned threads = 0;  // 0 = hardware
  std::string output;
  int verbosity = 0;
  std::string suite = "core";
  std::string dump_dir;
};

class Session {
 public:
  Session(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  void emit(const std::string& text) {
    if (config.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(config.output, std::ios::binary);
    if (!f) throw SpecError("cannot write '" + config.output + "'");
    f << text;
  }
  void emit(const json& j) { emit(j.dump(2) + "\n"); }

  void log(const std::string& line) {
    if (config.verbosity > 0) err_ << line << '\n';
  }

  void dump_chain(const ChainComplexGF2& cc, const std::string& stem) {
    if (config.dump_dir.empty()) return;
    std::filesystem::create_directories(config.dump_dir);
    for (std::size_t i = 1; i < cc.boundary.size(); ++i) {
      const auto path = std::filesystem::path(config.dump_dir) / (stem + "_d" + std::to_string(i) + ".txt");
      std::ofstream f(path);
      cc.boundary[i].dump(f);
      log("wrote " + path.string());
    }
  }

  std::ostream& out() { return out_; }
  RunConfig config;

 private:
  std::ostream& out_;
  std::ostream& err_;
};

inline int report_exit(const CheckReport& r) {
  if (r.verdict == "INDETERMINATE") return kCapExceeded;
  if (r.verdict == "FAIL") return kMismatch;
  return kOk;
}

inline int cmd_build(Session& s, const std::vector<std::string>& args) {
  if (args.empty()) throw SpecError("build needs a construction");
  const std::string& kind = args[0];
  auto need = [&](std::size_t n) {
    if (args.size() != n + 1) throw SpecError("build " + kind + " takes " + std::to_string(n) + " argument(s)");
  };
  auto integer = [&](std::size_t i) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(args[i], &used);
      if (used != args[i].size()) throw std::invalid_argument("trailing characters");
      return v;
    } catch (const std::exception&) {
      throw SpecError("expected an integer, got '" + args[i] + "'");
    }
  };
  Object built;
  if (kind == "skeleton") {
    need(2);
    built = simplex_skeleton(integer(1), integer(2));
  } else if (kind == "points") {
    need(1);
    built = discrete_points(integer(1));
  } else if (kind == "crosspoly") {
    need(1);
    built = cross_polytope_boundary(integer(1));
  } else if (kind == "join") {
    need(2);
    built = parse_object("join(" + args[1] + "," + args[2] + ")");
  } else if (kind == "cone") {
    need(1);
    built = cone(parse_complex(args[1]));
  } else if (kind == "deljoin") {
    need(1);
    built = deleted_join(parse_complex(args[1]));
  } else if (kind == "delprod") {
    need(1);
    built = deleted_product(parse_complex(args[1]));
  } else {
    throw SpecError("unknown construction '" + kind + "'");
  }
  s.emit(to_json_text(built));
  return kOk;
}

inline int cmd_betti(Session& s, const std::string& spec) {
  const Object o = parse_object(spec);
  ChainComplexGF2 cc;
  std::string name;
  std::visit(
      [&](const auto& v) {
        cc = chain_complex(v);
        name = v.name();
      },
      o);
  if (auto bad = cc.first_nonzero_square())
    throw VerificationError("boundary squares to nonzero in degree " + std::to_string(*bad));
  s.dump_chain(cc, "boundary");
  const auto b = cc.betti();
  json j;
  j["complex"] = name;
  j["cells"] = cc.cells;
  j["betti"] = b;
  j["euler"] = cc.euler_characteristic();
  s.emit(j);
  return kOk;
}

inline int cmd_index(Session& s, const std::string& spec) {
  const Z2Complex x = parse_z2(spec);
  if (!s.config.dump_dir.empty()) s.dump_chain(chain_complex(quotient(x)), "quotient");
  s.emit(index_report(x));
  return kOk;
}

inline int cmd_certify(Session& s, const std::string& spec, int d) {
  const Certificate c = certify_nonembeddable(parse_complex(spec), d);
  s.emit(c.to_json());
  return c.verdict == Verdict::indeterminate ? kCapExceeded : kOk;
}

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : detail::split(text, ',')) out.push_back(detail::parse_int(part, text));
  return out;
}

inline int cmd_check(Session& s, const std::vector<std::string>& args, std::optional<int> dim) {
  if (args.empty()) throw SpecError("check needs a check name");
  const std::string& which = args[0];
  auto need = [&](std::size_t n) {
    if (args.size() != n + 1) throw SpecError("check " + which + " takes " + std::to_string(n) + " argument(s)");
  };
  CheckReport r;
  if (which == "theorem1") {
    need(1);
    r = theorem1_check(parse_complex(args[1]));
  } else if (which == "theorem3a") {
    need(2);
    r = theorem3a_check(parse_complex(args[1]), parse_complex(args[2]));
  } else if (which == "gvkf") {
    need(1);
    r = gvkf_check(parse_int_list(args[1]));
  } else if (which == "corollary2") {
    need(4);
    if (!dim) throw SpecError("check corollary2 needs --dim");
    r = corollary2_check(parse_complex(args[1]), {args[2], args[3], args[4]}, *dim);
  } else if (which == "conelemma") {
    need(1);
    r = cone_lemma_check(parse_complex(args[1]));
  } else if (which == "joindecomp") {
    need(2);
    r = join_decomposition_check(parse_complex(args[1]), parse_complex(args[2]));
  } else {
    throw SpecError("unknown check '" + which + "'");
  }
  s.emit(r.to_json());
  return report_exit(r);
}

inline int cmd_verify(Session& s) {
  const auto results = run_suite(s.config.suite);
  int code = kOk;
  std::ostringstream table;
  table << std::left << std::setw(52) << "check" << std::setw(14) << "verdict" << "ms\n";
  for (const auto& r : results) {
    table << std::left << std::setw(52) << r.title << std::setw(14) << r.report.verdict << std::fixed
          << std::setprecision(1) << r.report.timings_ms.value("total", 0.0) << '\n';
    code = std::max(code, report_exit(r.report));
  }
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.report.passed();
  table << passed << "/" << results.size() << " PASS\n";
  if (s.config.output.empty()) {
    s.out() << table.str();
  } else {
    s.out() << table.str();
    s.emit(suite_json(results));
  }
  return code;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  Session s(out, err);
  if (const char* env = std::getenv("DELJOIN_CELL_CAP")) {
    try {
      s.config.cell_cap = std::stoull(env);
    } catch (const std::exception&) {
      err << "DELJOIN_CELL_CAP is not a number\n";
      return kUsage;
    }
  }

  CLI::App app{"deljoin: deleted joins, Z2-index and non-embeddability certificates"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--cap", s.config.cell_cap, "global cell cap")->check(CLI::PositiveNumber);
  app.add_option("--threads", s.config.threads, "worker threads (default: hardware)")->check(CLI::PositiveNumber);
  app.add_option("-o,--output", s.config.output, "write the result here instead of stdout");
  app.add_flag("-v,--verbose", s.config.verbosity, "verbosity");
  app.add_option("--dump-matrices", s.config.dump_dir, "dump GF(2) boundary matrices into this directory");

  std::vector<std::string> build_args;
  auto* build = app.add_subcommand("build", "construct a complex and write it as JSON");
  build->add_option("construction", build_args,
                    "skeleton n k | join A B | cone A | points m | crosspoly n | deljoin A | delprod A")
      ->required();

  std::string file;
  auto* betti_cmd = app.add_subcommand("betti", "GF(2) Betti numbers");
  betti_cmd->add_option("FILE", file, "complex file or inline specifier")->required();

  auto* index_cmd = app.add_subcommand("index", "cohomological Z2-index of a Z2-complex");
  index_cmd->add_option("FILE", file, "Z2-complex file or inline specifier")->required();

  int cert_dim = 0;
  auto* certify = app.add_subcommand("certify", "non-embeddability certificate");
  certify->add_option("FILE", file, "complex file or inline specifier")->required();
  certify->add_option("--dim", cert_dim, "target dimension d")->required()->check(CLI::NonNegativeNumber);

  std::vector<std::string> check_args;
  std::optional<int> check_dim;
  auto* check = app.add_subcommand("check", "run one verification check");
  check->add_option("args", check_args,
                    "theorem1 K | theorem3a K L | gvkf k1[,k2,...] | corollary2 P v1 v2 v3 | conelemma K | joindecomp K L")
      ->required();
  check->add_option("--dim", check_dim, "target dimension (corollary2)");

  auto* verify = app.add_subcommand("verify-paper", "run the verification suite");
  verify->add_option("--suite", s.config.suite, "core or full")->check(CLI::IsMember({"core", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    set_cell_cap(s.config.cell_cap);
    if (s.config.threads > 0) set_thread_count(s.config.threads);
    if (*build) return cmd_build(s, build_args);
    if (*betti_cmd) return cmd_betti(s, file);
    if (*index_cmd) return cmd_index(s, file);
    if (*certify) return cmd_certify(s, file, cert_dim);
    if (*check) return cmd_check(s, check_args, check_dim);
    if (*verify) return cmd_verify(s);
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const VerificationError& e) {
    err << "verification mismatch: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace deljoin::cli

#endif  // DELJOIN_TOOLS_CLI_HPP
