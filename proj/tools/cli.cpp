#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "report.hpp"
#include "toricsym/error.hpp"

namespace toricsym::cli {

namespace {

constexpr const char* kBetaHelp =
    "Curve class as comma-separated integers d,a...,b... meaning "
    "beta = d*h - sum a_i*e_i - sum b_j*f_j (minus-sign convention), "
    "in basis order h, points in sorted order, lines in the given order. "
    "Example: class C (p123,p124,l34,l23,l14) beta = f34 - f23 is 0,0,0,-1,1,0";

IntVec parse_beta(const std::string& text) {
  IntVec out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    Int value = 0;
    try {
      value = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size())
      throw Error(ErrorCode::kInvalidArgument, "malformed beta entry '" + tok + "'");
    out.push_back(value);
  }
  return out;
}

void emit(const report::json& doc, const std::string& path, std::ostream& out) {
  const std::string text = report::dump(doc);
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  file << text;
}

BlowupSpace build_space(const std::string& centers, int dim) {
  return build(parse_centers(centers, dim));
}

int do_analyze(const std::string& centers, int dim, const std::string& json_path, std::ostream& out) {
  const BlowupSpace space = build_space(centers, dim);
  emit(report::envelope("analyze", report::analyze_payload(space)), json_path, out);
  return kExitOk;
}

int do_census(int dim, const std::string& dedup, unsigned threads, const std::string& json_path,
              std::ostream& out) {
  const CensusReport rep = run_census(dim, dedup == "on", threads);
  emit(report::envelope("census", report::census_payload(rep)), json_path, out);
  return kExitOk;
}

int do_push(const std::string& centers, int dim, const std::string& beta_text, int index, bool json,
            std::ostream& out) {
  const BlowupSpace space = build_space(centers, dim);
  CurveClass beta{parse_beta(beta_text)};
  if (beta.coords.size() != space.basis_size())
    throw Error(ErrorCode::kInvalidArgument,
                "beta has " + std::to_string(beta.coords.size()) + " entries, basis has " +
                    std::to_string(space.basis_size()));
  const auto group = find_symmetries(space);
  std::size_t chosen = 0;
  if (index < 0) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (!classify(space, group[i]).trivial) {
        chosen = i;
        break;
      }
    }
    if (chosen == 0) {
      for (std::size_t i = 0; i < group.size(); ++i)
        if (group[i].matrix == IntMat::identity(static_cast<std::size_t>(space.rank()))) chosen = i;
    }
  } else {
    if (static_cast<std::size_t>(index) >= group.size())
      throw Error(ErrorCode::kInvalidArgument,
                  "symmetry index " + std::to_string(index) + " out of range (" +
                      std::to_string(group.size()) + " symmetries)");
    chosen = static_cast<std::size_t>(index);
  }
  const ToricSymmetry& sym = group[chosen];
  const CurveClass image = apply_to_curve(sym, beta);
  const std::string b = format_curve(space, beta);
  const std::string b2 = format_curve(space, image);
  if (json) {
    report::json payload = {
        {"space", {{"rank", space.rank()}, {"centers", space.config().to_string()}}},
        {"symmetry", report::symmetry_to_json(space, sym, chosen)},
        {"beta", {{"coords", beta.coords}, {"text", b}}},
        {"image", {{"coords", image.coords}, {"text", b2}}},
        {"gw_identity", "GW^X_{g," + b + "} = GW^X_{g," + b2 + "}"},
        {"dt_identity", "DT^X_{n," + b + "} = DT^X_{n," + b2 + "}"},
    };
    out << report::dump(report::envelope("push", payload));
    return kExitOk;
  }
  out << "space: " << (space.config().to_string().empty() ? "(base)" : space.config().to_string()) << "\n"
      << "symmetry " << chosen << ": " << to_string(sym.matrix)
      << (classify(space, sym).trivial ? " (trivial)" : " (nontrivial)") << "\n"
      << "beta  = " << b << "\n"
      << "beta' = " << b2 << "\n"
      << "GW^X_{g," << b << "} = GW^X_{g," << b2 << "}\n"
      << "DT^X_{n," << b << "} = DT^X_{n," << b2 << "}\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toric blowups of projective space and their symmetries", "toricsym"};
  app.require_subcommand(1);

  std::string centers;
  int dim = 3;
  std::string json_path;
  std::string dedup = "on";
  unsigned threads = 0;
  std::string beta;
  int sym_index = -1;
  bool push_json = false;

  auto* analyze = app.add_subcommand("analyze", "Report fan, Chow ring, ledger, -K and symmetries of one space");
  analyze->add_option("--centers", centers, "Comma-separated centers, e.g. p123,l34,l24")->required();
  analyze->add_option("--dim", dim, "Ambient dimension")->check(CLI::IsMember({2, 3}));
  auto* json_opt = analyze->add_option("--json", json_path, "Write the report to PATH");
  analyze->add_flag("--stdout", "Write the report to standard output (default)")->excludes(json_opt);

  auto* census = app.add_subcommand("census", "Enumerate all blowup configurations and classify symmetries");
  census->add_option("--dim", dim, "Ambient dimension")->check(CLI::IsMember({2, 3}));
  census->add_option("--dedup", dedup, "Deduplicate under relabeling")->check(CLI::IsMember({"on", "off"}));
  census->add_option("--parallel", threads, "Worker threads (0 = hardware concurrency)");
  census->add_option("--json", json_path, "Write the report to PATH");

  auto* push = app.add_subcommand("push", "Push a curve class forward along a symmetry");
  push->add_option("--centers", centers, "Comma-separated centers")->required();
  push->add_option("--dim", dim, "Ambient dimension")->check(CLI::IsMember({2, 3}));
  push->add_option("--beta", beta, kBetaHelp)->required()->allow_extra_args(false);
  push->add_option("--symmetry", sym_index,
                   "Symmetry index as listed by analyze (default: first nontrivial, else identity)")
      ->check(CLI::NonNegativeNumber);
  push->add_flag("--json", push_json, "Emit a JSON report instead of text");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return do_analyze(centers, dim, json_path, out);
    if (*census) return do_census(dim, dedup, threads, json_path, out);
    return do_push(centers, dim, beta, sym_index, push_json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_internal() ? kExitInternal : kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace toricsym::cli
