#include "phaseless/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "phaseless/adaptive.hpp"
#include "phaseless/error.hpp"
#include "phaseless/groebner.hpp"
#include "phaseless/hardness.hpp"
#include "phaseless/io.hpp"
#include "phaseless/oracle.hpp"
#include "phaseless/solver.hpp"

namespace phaseless::cli {

namespace {

using io::Json;

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  buf << f.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text,
                std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoUnivariate:
    case ErrorCode::NonZeroDimensional:
    case ErrorCode::TooLarge:
      return kDiagnostic;
    default:
      return kInvalidInput;
  }
}

int warn_incomplete(const SolutionSet& set, std::ostream& err) {
  if (set.complete) return kOk;
  err << "error[CompletenessWarning]: an integer factorization gave up; "
         "rational roots may be missing\n";
  return kDiagnostic;
}

// Parses "lo:hi:steps" into steps + 1 equally spaced rationals.
std::vector<Rat> parse_grid(const std::string& text) {
  const auto a = text.find(':');
  const auto b = text.find(':', a == std::string::npos ? a : a + 1);
  if (a == std::string::npos || b == std::string::npos) {
    throw Error(ErrorCode::ParseError, "grid must look like lo:hi:steps");
  }
  const Rat lo = Rat::parse(text.substr(0, a));
  const Rat hi = Rat::parse(text.substr(a + 1, b - a - 1));
  const Rat steps = Rat::parse(text.substr(b + 1));
  if (!steps.is_integer() || steps.sign() <= 0 || steps > Rat(1000000)) {
    throw Error(ErrorCode::ParseError, "grid steps must be in 1..1000000");
  }
  const long count = steps.num().get_si();
  std::vector<Rat> xs;
  for (long i = 0; i <= count; ++i) {
    xs.push_back(lo + (hi - lo) * Rat(i, count));
  }
  return xs;
}

std::vector<Integer> integer_weights(const std::vector<Rat>& values) {
  std::vector<Integer> out;
  for (const Rat& v : values) {
    if (!v.is_integer()) {
      throw Error(ErrorCode::ParseError, "weights must be integers");
    }
    out.push_back(v.num());
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact phaseless polynomial interpolation over Q", "phaseless"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string output;
  std::string nodes_text, weights_text, exact_text, signs_text, grid_text,
      coeffs_text, reduction_path;
  int k_override = -1;
  int n_value = -1, k_value = -1;
  bool compare = false, dump_system = false, exact_output = false;
  std::size_t index = 0;

  auto* solve_cmd = app.add_subcommand("solve", "Recover all |q| consistent with an instance");
  solve_cmd->add_option("--input", input, "Instance JSON ('-' for stdin)");
  solve_cmd->add_option("--output", output, "Write solutions here");
  solve_cmd->add_option("--k", k_override, "Expected freedom; must match the point count");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force sign enumeration");
  oracle_cmd->add_option("--input", input, "Instance JSON ('-' for stdin)");
  oracle_cmd->add_option("--output", output, "Write solutions here");
  oracle_cmd->add_flag("--compare", compare, "Also run the solver; exit 1 on mismatch");

  auto* adapt_cmd = app.add_subcommand("adapt", "Select the adaptive evaluation node");
  adapt_cmd->add_option("--input", input, "Instance JSON with n + 1 points");
  adapt_cmd->add_option("--output", output, "Write result here");

  auto* counter_cmd = app.add_subcommand("counterexample", "Two polynomials indistinguishable on 2n nodes");
  counter_cmd->add_option("--nodes", nodes_text, "Comma-separated nodes")->required();
  counter_cmd->add_option("--output", output, "Write result here");

  auto* reduce_cmd = app.add_subcommand("reduce-partition", "Compile a Partition instance");
  reduce_cmd->add_option("--weights", weights_text, "Comma-separated integer weights")->required();
  reduce_cmd->add_option("--n", n_value, "Degree bound")->required();
  reduce_cmd->add_option("--k", k_value, "Number of exact evaluations")->required();
  reduce_cmd->add_option("--nodes", nodes_text, "n + 2 nodes: k exact, then phaseless");
  reduce_cmd->add_option("--exact-values", exact_text, "k exact values");
  reduce_cmd->add_option("--output", output, "Write instance here");

  auto* decode_cmd = app.add_subcommand("decode", "Decode a sign vector of a reduction instance");
  decode_cmd->add_option("--instance", reduction_path, "Reduction instance JSON")->required();
  decode_cmd->add_option("--signs", signs_text, "Comma-separated signs, e.g. +,-,+")->required();
  decode_cmd->add_option("--output", output, "Write result here");

  auto* groebner_cmd = app.add_subcommand("groebner", "Dump the lex Groebner basis of an instance");
  groebner_cmd->add_option("--input", input, "Instance JSON ('-' for stdin)");
  groebner_cmd->add_flag("--system", dump_system, "Dump the equations instead of the basis");
  groebner_cmd->add_option("--output", output, "Write dump here");

  auto* sample_cmd = app.add_subcommand("sample", "Tabulate |q(x)| on a grid as CSV");
  sample_cmd->add_option("--coeffs", coeffs_text, "Comma-separated coefficients, index = power");
  sample_cmd->add_option("--input", input, "Solution JSON (used without --coeffs)");
  sample_cmd->add_option("--index", index, "Which solution of --input to sample");
  sample_cmd->add_option("--grid", grid_text, "lo:hi:steps")->required();
  sample_cmd->add_flag("--exact", exact_output, "Print exact rationals instead of decimals");
  sample_cmd->add_option("--output", output, "Write CSV here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error[Usage]: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (solve_cmd->parsed()) {
      const Instance inst =
          io::instance_from_json(io::parse_json(read_text(input, in)));
      const SolutionSet set =
          k_override >= 0 ? solve(inst, k_override) : solve(inst);
      write_text(output, dump(io::solutions_to_json(set)), out);
      const int warn = warn_incomplete(set, err);
      if (warn != kOk) return warn;
      return set.size() > 0 ? kOk : kNoSolution;
    }
    if (oracle_cmd->parsed()) {
      const Instance inst =
          io::instance_from_json(io::parse_json(read_text(input, in)));
      const SolutionSet brute = oracle_enumerate(inst);
      write_text(output, dump(io::solutions_to_json(brute)), out);
      if (compare) {
        const SolutionSet fast = solve(inst);
        if (!(fast == brute)) {
          err << "error[Mismatch]: solver found " << fast.size()
              << " solutions, oracle found " << brute.size() << "\n";
          return kNoSolution;
        }
        const int warn = warn_incomplete(fast, err);
        if (warn != kOk) return warn;
        return kOk;
      }
      return brute.size() > 0 ? kOk : kNoSolution;
    }
    if (adapt_cmd->parsed()) {
      const Instance inst =
          io::instance_from_json(io::parse_json(read_text(input, in)));
      const SeparationBound sb = separation_bound(inst.points, inst.n);
      const Json result{{"next_x", io::rat_to_json(Rat(Integer(sb.bound + 1)))},
                        {"bound", io::rat_to_json(Rat(sb.bound))},
                        {"multiplier", io::rat_to_json(Rat(sb.multiplier))}};
      write_text(output, dump(result), out);
      return kOk;
    }
    if (counter_cmd->parsed()) {
      const std::vector<Rat> nodes = io::parse_rat_list(nodes_text);
      const auto [p, q] = counterexample_pair(nodes);
      const int n = static_cast<int>(nodes.size() / 2);
      Instance inst{n, {}};
      for (const Rat& x : nodes) inst.points.push_back({x, abs(p.eval(x))});
      const auto width = static_cast<std::size_t>(n) + 1;
      const Json result{{"n", n},
                        {"p", Json{{"coeffs", io::coeffs_to_json(p, width)}}},
                        {"q", Json{{"coeffs", io::coeffs_to_json(q, width)}}},
                        {"instance", io::instance_to_json(inst)}};
      write_text(output, dump(result), out);
      return kOk;
    }
    if (reduce_cmd->parsed()) {
      const std::vector<Integer> t =
          integer_weights(io::parse_rat_list(weights_text));
      std::optional<std::vector<Rat>> nodes, exact;
      if (!nodes_text.empty()) nodes = io::parse_rat_list(nodes_text);
      if (!exact_text.empty()) exact = io::parse_rat_list(exact_text);
      const ReductionInstance inst = reduce_partition(t, n_value, k_value, nodes, exact);
      write_text(output, dump(io::reduction_to_json(inst)), out);
      return kOk;
    }
    if (decode_cmd->parsed()) {
      const ReductionInstance inst = io::reduction_from_json(
          io::parse_json(read_text(reduction_path, in)));
      const std::vector<int> b = io::parse_sign_list(signs_text);
      const Rat residual = feasibility_residual(inst, b);
      const auto signing = decode_solution(inst, b);
      Json result{{"residual", io::rat_to_json(residual)},
                  {"feasible", signing.has_value()}};
      if (signing) {
        result["signing"] = *signing;
      } else {
        result["signing"] = nullptr;
      }
      write_text(output, dump(result), out);
      return signing ? kOk : kNoSolution;
    }
    if (groebner_cmd->parsed()) {
      const Instance inst =
          io::instance_from_json(io::parse_json(read_text(input, in)));
      SolveTrace trace;
      std::ostringstream text;
      if (dump_system) {
        validate(inst);
        const ShiftedPoints sh = shift_origin(inst.points);
        std::vector<Point> squared;
        for (const Point& p : sh.points) squared.push_back({p.x, p.y * p.y});
        const AffineFamily fam = affine_family(squared, inst.freedom(), 2 * inst.n);
        const Rat a0 = fix_anchor(sh.anchor_value, -1);
        const PolySystem sys = build_system(fam, a_recursion(fam, a0, inst.n));
        for (const MPoly& eq : sys.equations) text << eq.str() << "\n";
      } else {
        const GroebnerBasis gb = instance_basis(inst);
        for (const MPoly& g : gb.elements) text << g.str() << "\n";
      }
      write_text(output, text.str(), out);
      return kOk;
    }
    if (sample_cmd->parsed()) {
      UPoly q;
      if (!coeffs_text.empty()) {
        q = UPoly(io::parse_rat_list(coeffs_text));
      } else {
        const SolutionSet set = io::solutions_from_json(
            io::parse_json(read_text(input, in)));
        if (index >= set.size()) {
          throw Error(ErrorCode::IndexOutOfRange, "no solution with that index");
        }
        q = set.polys[index];
      }
      std::ostringstream csv;
      csv << "x,abs_value\n";
      csv << std::setprecision(17);
      for (const Rat& x : parse_grid(grid_text)) {
        const Rat v = abs(q.eval(x));
        if (exact_output) {
          csv << x << "," << v << "\n";
        } else {
          csv << x.to_double() << "," << v.to_double() << "\n";
        }
      }
      write_text(output, csv.str(), out);
      return kOk;
    }
  } catch (const Error& e) {
    err << "error[" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    err << "error[ParseError]: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace phaseless::cli
