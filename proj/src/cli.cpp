#include "zigzag/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "zigzag/boundary_graph.hpp"
#include "zigzag/classify.hpp"
#include "zigzag/danielewski.hpp"
#include "zigzag/derivation.hpp"
#include "zigzag/enumerate.hpp"
#include "zigzag/errors.hpp"
#include "zigzag/program_parser.hpp"
#include "zigzag/report.hpp"
#include "zigzag/ring_parser.hpp"

namespace zigzag {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidParameter("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& payload, const std::string& out_path,
          std::ostream& out) {
  if (out_path.empty()) {
    out << payload;
    if (!payload.empty() && payload.back() != '\n') out << "\n";
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw InvalidParameter("cannot write file: " + out_path);
  f << payload;
}

std::string json_payload(const Json& j) { return j.dump(2) + "\n"; }

std::optional<Check> check_from_name(const std::string& name) {
  for (Check c : {Check::ChainBounds, Check::KCriterion, Check::Adjunction,
                  Check::Fiber, Check::Roundtrip}) {
    if (check_name(c) == name) return c;
  }
  return std::nullopt;
}

std::vector<Rational> parse_roots(const std::string& text) {
  std::vector<Rational> roots;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) {
    const auto a = item.find_first_not_of(" \t");
    if (a == std::string::npos)
      throw InvalidParameter("empty entry in root list: " + text);
    const auto b = item.find_last_not_of(" \t");
    roots.push_back(rational_from_string(item.substr(a, b - a + 1)));
  }
  if (roots.empty()) throw InvalidParameter("empty root list");
  return roots;
}

int do_classify(const std::string& path, const std::string& format,
                const std::string& out_path, std::ostream& out) {
  const BlowupProgram program = parse_program(read_file(path));
  const Classification cls = classify(program);
  if (format == "json") {
    emit(json_payload(classification_json(cls)), out_path, out);
  } else if (format == "dot") {
    emit(graph_dot(replay(cls.normalized)), out_path, out);
  } else {
    emit(classification_text(cls), out_path, out);
  }
  return 0;
}

int do_check(const std::string& path, const std::string& format,
             const std::string& out_path, std::ostream& out) {
  const BlowupProgram program = parse_program(read_file(path));
  const BoundaryGraph graph = replay(program);
  const CheckBundle bundle = run_checks(graph);
  if (format == "json") {
    emit(json_payload(check_json(graph, bundle)), out_path, out);
  } else if (format == "dot") {
    emit(graph_dot(graph), out_path, out);
  } else {
    emit(check_text(graph, bundle), out_path, out);
  }
  return bundle.pass ? 0 : 1;
}

int do_enumerate(const EnumerationLimits& limits,
                 const std::vector<std::string>& check_names,
                 const std::string& format, const std::string& out_path,
                 std::ostream& out, std::ostream& err) {
  VerifySettings settings;
  settings.limits = limits;
  if (!check_names.empty()) {
    settings.checks.clear();
    for (const auto& name : check_names) {
      const auto c = check_from_name(name);
      if (!c) {
        err << "error: unknown check '" << name
            << "' (expected chain-bounds, k-criterion, adjunction, fiber, "
               "or roundtrip)\n";
        return 2;
      }
      settings.checks.insert(*c);
    }
  }
  const VerifyReport report = verify_programs(settings);
  if (format == "json") {
    emit(json_payload(verify_json(settings, report)), out_path, out);
  } else {
    emit(verify_text(settings, report), out_path, out);
  }
  return report.failure_count == 0 ? 0 : 1;
}

int do_lnd(const std::string& path, int cap, const std::string& format,
           const std::string& out_path, std::ostream& out) {
  const RingFile file = parse_ring_file(read_file(path));
  if (file.derivations.empty())
    throw InvalidParameter("no derivation blocks in " + path);
  std::vector<DerivationReport> reports;
  bool all_certified = true;
  for (const auto& d : file.derivations) {
    reports.push_back(analyze_derivation(d, cap));
    if (reports.back().certificate.verdict != LndVerdict::CertifiedYes)
      all_certified = false;
  }
  if (format == "json") {
    emit(json_payload(lnd_json(reports)), out_path, out);
  } else {
    emit(lnd_text(reports), out_path, out);
  }
  return all_certified ? 0 : 1;
}

int do_danielewski(const std::string& roots_text, const std::string& poly_text,
                   int cap, const std::string& format,
                   const std::string& out_path,
                   const std::string& program_out, std::ostream& out,
                   std::ostream& err) {
  std::optional<DanielewskiSurface> surface;
  if (!roots_text.empty()) {
    surface = build_danielewski_from_roots(parse_roots(roots_text));
  } else {
    const auto vars = make_varset({"z"});
    surface = build_danielewski(parse_polynomial(poly_text, vars));
  }
  const Json j = danielewski_json(*surface, cap);
  if (format == "json") {
    emit(json_payload(j), out_path, out);
  } else {
    emit(danielewski_text(*surface, cap), out_path, out);
  }
  if (!program_out.empty()) {
    if (is_smooth(*surface)) {
      emit(print_program(zigzag_of(*surface)), program_out, out);
    } else {
      err << "note: the surface is singular, no boundary program written\n";
    }
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "boundary zigzag calculus and locally nilpotent derivation toolkit"};
  app.require_subcommand(1);

  std::string in_path;
  std::string format = "text";
  std::string out_path;

  auto* classify_cmd =
      app.add_subcommand("classify", "classify the surface of a program");
  classify_cmd->add_option("file", in_path, "blow-up program file")
      ->required();
  classify_cmd->add_option("--format", format, "text, json, or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  classify_cmd->add_option("--out", out_path, "write the report to a file");

  auto* check_cmd =
      app.add_subcommand("check", "replay a program and run every check");
  check_cmd->add_option("file", in_path, "blow-up program file")->required();
  check_cmd->add_option("--format", format, "text, json, or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  check_cmd->add_option("--out", out_path, "write the report to a file");

  EnumerationLimits limits;
  std::vector<std::string> check_names;
  auto* enum_cmd = app.add_subcommand(
      "enumerate", "enumerate programs within limits and verify them");
  enum_cmd->add_option("--max-k", limits.max_k, "largest k to enumerate");
  enum_cmd->add_option("--max-q", limits.max_q,
                       "largest attachment count to enumerate");
  enum_cmd->add_option("--base-n-min", limits.base_n_min,
                       "smallest base parameter");
  enum_cmd->add_option("--base-n-max", limits.base_n_max,
                       "largest base parameter");
  enum_cmd->add_option("--checks", check_names,
                       "comma separated subset of chain-bounds, k-criterion, "
                       "adjunction, fiber, roundtrip")
      ->delimiter(',');
  enum_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  enum_cmd->add_option("--out", out_path, "write the report to a file");

  int cap = 64;
  auto* lnd_cmd = app.add_subcommand(
      "lnd", "certify the derivations of a presented ring locally nilpotent");
  lnd_cmd->add_option("file", in_path, "ring description file")->required();
  lnd_cmd->add_option("--cap", cap, "nilpotency search bound")
      ->check(CLI::PositiveNumber);
  lnd_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  lnd_cmd->add_option("--out", out_path, "write the report to a file");

  std::string roots_text;
  std::string poly_text;
  std::string program_out;
  auto* dan_cmd = app.add_subcommand(
      "danielewski", "build a surface x*y = p(z) and analyze it");
  auto* roots_opt = dan_cmd->add_option(
      "--roots", roots_text, "comma separated roots of p, e.g. 1,2,3");
  auto* poly_opt =
      dan_cmd->add_option("--poly", poly_text, "p as a polynomial in z");
  roots_opt->excludes(poly_opt);
  dan_cmd->add_option("--cap", cap, "nilpotency search bound")
      ->check(CLI::PositiveNumber);
  dan_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  dan_cmd->add_option("--out", out_path, "write the report to a file");
  dan_cmd->add_option("--program-out", program_out,
                      "write the boundary program to a file");

  try {
    std::vector<const char*> argv;
    argv.push_back("zigzag");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify_cmd->parsed())
      return do_classify(in_path, format, out_path, out);
    if (check_cmd->parsed()) return do_check(in_path, format, out_path, out);
    if (enum_cmd->parsed())
      return do_enumerate(limits, check_names, format, out_path, out, err);
    if (lnd_cmd->parsed()) return do_lnd(in_path, cap, format, out_path, out);
    if (dan_cmd->parsed()) {
      if (roots_text.empty() && poly_text.empty()) {
        err << "error: danielewski needs --roots or --poly\n";
        return 2;
      }
      return do_danielewski(roots_text, poly_text, cap, format, out_path,
                            program_out, out, err);
    }
  } catch (const InternalCheckFailure& e) {
    err << "internal check failure: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace zigzag
