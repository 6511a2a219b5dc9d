#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "scover/constructions.hpp"
#include "scover/io.hpp"
#include "scover/solver.hpp"
#include "scover/verify.hpp"

namespace {

using namespace scover;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout << bytes << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << bytes << "\n";
}

int solver_threads_from_env() {
  // Accepted for forward compatibility; the current solver is sequential
  // so node counts stay identical run to run.
  const char* env = std::getenv("SCOVER_THREADS");
  if (env == nullptr) return 0;
  try {
    const int v = std::stoi(env);
    if (v < 1) throw std::invalid_argument("below 1");
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("SCOVER_THREADS must be a positive integer");
  }
}

void print_report_pretty(const VerificationReport& report) {
  std::cout << "cap mode : " << to_string(report.cap_mode) << "\n";
  std::cout << "linear   : " << (report.linear ? "yes" : "NO") << "\n";
  if (report.linear_witness) {
    std::cout << "           lines " << report.linear_witness->line_i << " and "
              << report.linear_witness->line_j << " share";
    for (PointId p : report.linear_witness->shared) std::cout << " " << p;
    std::cout << "\n";
  }
  std::cout << "covered  : " << (report.covered ? "yes" : "NO") << "\n";
  if (report.uncovered_witness) {
    std::cout << "           uncovered s-set:";
    for (PointId p : *report.uncovered_witness) std::cout << " " << p;
    std::cout << "\n";
  }
  std::cout << "cap ok   : " << (report.cap_ok ? "yes" : "NO") << "\n";
  if (report.cap_witness)
    std::cout << "           oversized line index " << *report.cap_witness << "\n";
}

std::string rational_text(const Rational& r) {
  std::string out = std::to_string(r.numerator());
  if (r.denominator() != 1) out += "/" + std::to_string(r.denominator());
  return out;
}

void print_lemma_pretty(const LemmaReport& report, int m) {
  auto row = [&](const char* name, const BoundCheck& check) {
    std::cout << name << " : ";
    if (!check.applicable) {
      std::cout << "not applicable\n";
      return;
    }
    std::cout << "bound " << rational_text(check.bound) << ", "
              << (check.satisfied ? "holds" : "VIOLATED") << " (m = " << m
              << ")\n";
  };
  row("lemma part 1", report.part1);
  row("lemma part 2", report.part2);
  row("lemma part 3", report.part3);
  std::cout << "lemma part 4 : ";
  if (report.part4.applicable) {
    std::cout << "pair sum " << report.pair_sum << " >= "
              << rational_text(report.part4.bound) << ", "
              << (report.part4.satisfied ? "holds" : "VIOLATED") << "\n";
  }
  std::cout << "uncovered edges : " << report.uncovered_edges << "\n";
  std::cout << "pair-count residual : " << report.turan_residual << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"s-cover construction, verification, and exact minimization"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "emit a family as JSON");
  construct->require_subcommand(1);
  std::string out_path;
  int arg_t = 0, arg_s = 0, arg_n = 0;
  std::uint64_t arg_q = 0;

  auto* c_grid = construct->add_subcommand("grid", "t x (s-1) grid plus z");
  c_grid->add_option("--t", arg_t, "rows")->required();
  c_grid->add_option("--s", arg_s, "cover parameter")->required();
  c_grid->add_option("--out", out_path, "output file (default stdout)");

  auto* c_pencil = construct->add_subcommand("near-pencil", "near pencil on n points");
  c_pencil->add_option("--n", arg_n, "points")->required();
  c_pencil->add_option("--out", out_path, "output file (default stdout)");

  auto* c_plane = construct->add_subcommand("plane", "projective plane of prime order");
  c_plane->add_option("--q", arg_q, "prime order")->required();
  c_plane->add_option("--out", out_path, "output file (default stdout)");

  auto* c_tight = construct->add_subcommand("tight", "tight family, (s-1) | (n-1)");
  c_tight->add_option("--n", arg_n, "points")->required();
  c_tight->add_option("--s", arg_s, "cover parameter")->required();
  c_tight->add_option("--out", out_path, "output file (default stdout)");

  auto* c_asym = construct->add_subcommand("asymptotic", "blocks plus projective plane");
  c_asym->add_option("--n", arg_n, "points")->required();
  c_asym->add_option("--s", arg_s, "cover parameter")->required();
  c_asym->add_option("--out", out_path, "output file (default stdout)");

  // verify / profile / lemmas
  std::string file_path;
  std::string cap_name = "standard";
  bool pretty = false;

  auto* v_cmd = app.add_subcommand("verify", "check the s-cover axioms");
  v_cmd->add_option("file", file_path, "family JSON (- for stdin)")->required();
  v_cmd->add_option("--cap", cap_name, "standard|strict|none");
  v_cmd->add_flag("--pretty", pretty, "human-readable table");

  auto* p_cmd = app.add_subcommand("profile", "structure quantities");
  p_cmd->add_option("file", file_path, "family JSON (- for stdin)")->required();
  p_cmd->add_flag("--pretty", pretty, "human-readable table");

  auto* l_cmd = app.add_subcommand("lemmas", "counting-bound diagnostics");
  l_cmd->add_option("file", file_path, "family JSON (- for stdin)")->required();
  l_cmd->add_flag("--pretty", pretty, "human-readable table");

  // search
  int search_cap = -1;
  SearchBudget budget;
  bool use_oracle = false;
  auto* s_cmd = app.add_subcommand("search", "exact minimum cover size");
  s_cmd->add_option("--n", arg_n, "points")->required();
  s_cmd->add_option("--s", arg_s, "cover parameter")->required();
  s_cmd->add_option("--cap", search_cap, "line-size cap (default cap_of(n,s))");
  s_cmd->add_option("--max-nodes", budget.max_nodes, "node budget");
  s_cmd->add_option("--max-seconds", budget.max_seconds, "time budget");
  s_cmd->add_flag("--oracle", use_oracle, "force the n <= 8 enumeration oracle");

  // bound
  auto* b_cmd = app.add_subcommand("bound", "cap_of and bound_of");
  b_cmd->add_option("--n", arg_n, "points")->required();
  b_cmd->add_option("--s", arg_s, "cover parameter")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    solver_threads_from_env();

    if (construct->parsed()) {
      CoverFamily family = [&]() {
        if (c_grid->parsed()) return grid_construction(arg_t, arg_s);
        if (c_pencil->parsed()) return near_pencil(arg_n);
        if (c_plane->parsed()) return projective_plane(arg_q);
        if (c_tight->parsed()) return recursive_tight(arg_n, arg_s);
        return asymptotic_cover(arg_n, arg_s);
      }();
      std::map<std::string, std::string> meta;
      if (c_grid->parsed()) {
        meta = {{"construction", "grid"},
                {"t", std::to_string(arg_t)},
                {"s", std::to_string(arg_s)}};
      } else if (c_pencil->parsed()) {
        meta = {{"construction", "near-pencil"}, {"n", std::to_string(arg_n)}};
      } else if (c_plane->parsed()) {
        meta = {{"construction", "plane"}, {"q", std::to_string(arg_q)}};
      } else if (c_tight->parsed()) {
        meta = {{"construction", "tight"},
                {"n", std::to_string(arg_n)},
                {"s", std::to_string(arg_s)}};
      } else {
        meta = {{"construction", "asymptotic"},
                {"n", std::to_string(arg_n)},
                {"s", std::to_string(arg_s)}};
      }
      write_output(out_path, serialize(family, meta));
      return 0;
    }

    if (v_cmd->parsed()) {
      const CoverFamily family = parse(read_input(file_path));
      const VerificationReport report =
          verify_cover(family, cap_mode_from_string(cap_name));
      if (pretty)
        print_report_pretty(report);
      else
        std::cout << report_json(report).dump() << "\n";
      return report.all_ok() ? 0 : kExitVerifyFailed;
    }

    if (p_cmd->parsed()) {
      const CoverFamily family = parse(read_input(file_path));
      const StructureProfile profile = compute_profile(family);
      if (pretty) {
        std::cout << "m = " << profile.m << ", a1 = " << profile.a1
                  << ", v = " << profile.v << ", d = " << profile.d
                  << ", |P| = " << profile.p
                  << ", |Q| = " << profile.q_set.size()
                  << ", q = " << profile.q_div << ", r = " << profile.r_div
                  << "\n";
      } else {
        std::cout << profile_json(profile).dump() << "\n";
      }
      return 0;
    }

    if (l_cmd->parsed()) {
      const CoverFamily family = parse(read_input(file_path));
      const VerificationReport report = verify_cover(family, CapMode::standard);
      if (!report.all_ok()) {
        std::cerr << "lemmas: family fails verification\n";
        std::cout << report_json(report).dump() << "\n";
        return kExitVerifyFailed;
      }
      const StructureProfile profile = compute_profile(family);
      const LemmaReport lemmas = lemma_bounds(family, profile);
      if (pretty)
        print_lemma_pretty(lemmas, family.m());
      else
        std::cout << lemma_json(lemmas).dump() << "\n";
      return 0;
    }

    if (s_cmd->parsed()) {
      if (use_oracle) {
        const int cap = search_cap > 0 ? search_cap : cap_of(arg_n, arg_s);
        const int m_star = brute_oracle(arg_n, arg_s, cap);
        nlohmann::json out{{"method", "brute_oracle"},
                           {"n", arg_n},
                           {"s", arg_s},
                           {"cap", cap},
                           {"m_star", m_star}};
        std::cout << out.dump() << "\n";
        return 0;
      }
      const int cap = search_cap > 0 ? search_cap : cap_of(arg_n, arg_s);
      const SearchResult result = min_cover_exact(arg_n, arg_s, cap, budget);
      std::cout << search_json(result).dump() << "\n";
      return 0;
    }

    if (b_cmd->parsed()) {
      nlohmann::json out{{"n", arg_n},
                         {"s", arg_s},
                         {"cap", cap_of(arg_n, arg_s)},
                         {"bound", rational_json(bound_of(arg_n, arg_s))}};
      std::cout << out.dump() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
