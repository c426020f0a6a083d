#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <qtorus/dynamics.hpp>
#include <qtorus/io.hpp>
#include <qtorus/quantize.hpp>
#include <qtorus/theta_rep.hpp>
#include <qtorus/weyl_algebra.hpp>

namespace qtorus::cli {
namespace {

using nlohmann::json;

constexpr std::int64_t kMaxDenseN = 4096;

struct CommandInfo {
  std::string name;
  std::vector<std::string> flags;
};

const std::vector<CommandInfo>& commands() {
  static const std::vector<CommandInfo> table = {
      {"trace", {"n", "a", "in"}},
      {"evolve", {"n", "a", "in", "map", "steps"}},
      {"ergodicity", {"n", "a", "in", "map", "max-steps"}},
      {"mixing", {"n", "a", "b", "in", "map", "steps"}},
      {"sector", {"n", "a", "in", "theta"}},
      {"dft-check", {"n", "theta", "truncation", "tolerance"}},
      {"kernel-plot", {"h", "figure-convention"}},
      {"basis-check", {"n", "theta", "grid", "tolerance"}},
      {"egorov", {"n", "a", "in", "map"}},
  };
  return table;
}

const CommandInfo* find_command(const std::string& name) {
  for (const auto& c : commands()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

[[noreturn]] void usage(const std::string& flag, const std::string& what) {
  throw UsageError("--" + flag + ": " + what);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::int64_t parse_int(const std::string& flag, const std::string& s) {
  std::int64_t v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end) usage(flag, "expected an integer, got \"" + s + "\"");
  return v;
}

double parse_real(const std::string& flag, const std::string& s) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end || !std::isfinite(v)) {
    usage(flag, "expected a finite number, got \"" + s + "\"");
  }
  return v;
}

std::vector<std::int64_t> parse_ints(const std::string& flag, const std::string& s,
                                     std::size_t count) {
  const auto parts = split(s, ',');
  if (count != 0 && parts.size() != count) {
    usage(flag, "expected " + std::to_string(count) + " comma-separated integers, got \"" + s + "\"");
  }
  std::vector<std::int64_t> out;
  for (const auto& p : parts) out.push_back(parse_int(flag, p));
  return out;
}

WeylIndex parse_index(const std::string& flag, const std::string& s) {
  const auto v = parse_ints(flag, s, 2);
  return {v[0], v[1]};
}

ThetaPoint parse_theta(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) usage("theta", "expected \"t1,t2\", got \"" + s + "\"");
  return {parse_real("theta", parts[0]), parse_real("theta", parts[1])};
}

ToralAutomorphism parse_map(const std::string& s) {
  const auto colon = s.find(':');
  const std::string kind = s.substr(0, colon);
  const std::string body = colon == std::string::npos ? "" : s.substr(colon + 1);
  if (kind == "cat") {
    const auto v = parse_ints("map", body, 4);
    if (v[0] * v[3] - v[1] * v[2] != 1) usage("map", "cat map determinant must be 1");
    return ToralAutomorphism::cat(v[0], v[1], v[2], v[3]);
  }
  if (kind == "kronecker") {
    const auto parts = split(body, ',');
    if (parts.size() != 2) usage("map", "expected \"kronecker:t1,t2\", got \"" + s + "\"");
    return ToralAutomorphism::kronecker(parse_real("map", parts[0]), parse_real("map", parts[1]));
  }
  usage("map", "expected \"cat:a,b,c,d\" or \"kronecker:t1,t2\", got \"" + s + "\"");
}

std::vector<std::int64_t> parse_n_list(const std::string& s) {
  auto v = parse_ints("n", s, 0);
  for (auto n : v) {
    if (n < 1) usage("n", "N must be >= 1");
  }
  return v;
}

std::int64_t parse_n(const Invocation& inv) {
  const std::int64_t n = parse_int("n", inv.get("n"));
  if (n < 1) usage("n", "N must be >= 1");
  return n;
}

bool dense_command(const std::string& command) {
  return command == "sector" || command == "dft-check" || command == "basis-check";
}

void require(const Invocation& inv, const std::string& flag) {
  if (!inv.has(flag)) usage(flag, "required by " + inv.command);
}

// Validates supplied values (the map first), then required flags, then fills
// defaults.
void validate(Invocation& inv) {
  if (inv.has("map")) parse_map(inv.get("map"));

  if (inv.has("output") && inv.get("output") != "csv" && inv.get("output") != "json") {
    usage("output", "expected json or csv, got \"" + inv.get("output") + "\"");
  }
  if (inv.has("n")) {
    if (inv.command == "egorov") {
      parse_n_list(inv.get("n"));
    } else {
      const std::int64_t n = parse_n(inv);
      if (dense_command(inv.command) && n > kMaxDenseN) {
        usage("n", "dense sector commands support N <= " + std::to_string(kMaxDenseN));
      }
    }
  }
  for (const char* flag : {"a", "b"}) {
    if (inv.has(flag)) parse_index(flag, inv.get(flag));
  }
  if (inv.has("theta")) parse_theta(inv.get("theta"));
  if (inv.has("steps")) {
    const std::int64_t s = parse_int("steps", inv.get("steps"));
    if (inv.command == "mixing" && s < 1) usage("steps", "must be >= 1");
  }
  if (inv.has("max-steps") && parse_int("max-steps", inv.get("max-steps")) < 1) {
    usage("max-steps", "must be >= 1");
  }
  if (inv.has("tolerance") && !(parse_real("tolerance", inv.get("tolerance")) > 0.0)) {
    usage("tolerance", "must be > 0");
  }
  if (inv.has("truncation") && parse_int("truncation", inv.get("truncation")) < 1) {
    usage("truncation", "must be >= 1");
  }
  if (inv.has("grid") && parse_int("grid", inv.get("grid")) < 2) usage("grid", "must be >= 2");
  if (inv.has("h") && !(parse_real("h", inv.get("h")) > 0.0)) usage("h", "must be > 0");
  for (const char* flag : {"in", "out"}) {
    if (inv.has(flag) && inv.get(flag).empty()) usage(flag, "expected a file path");
  }

  const std::string& c = inv.command;
  const bool takes_element = c == "trace" || c == "evolve" || c == "ergodicity" ||
                             c == "mixing" || c == "sector";
  if (takes_element || c == "egorov") {
    if (inv.has("in") && inv.has("a")) usage("a", "--a and --in are mutually exclusive");
    if (!inv.has("in")) {
      require(inv, "a");
      require(inv, "n");
    }
  }
  if (c == "egorov") require(inv, "n");
  if (c == "evolve" || c == "ergodicity" || c == "mixing" || c == "egorov") require(inv, "map");
  if (c == "ergodicity") require(inv, "max-steps");
  if (c == "mixing") {
    require(inv, "b");
    require(inv, "steps");
  }
  if (c == "dft-check" || c == "basis-check") require(inv, "n");
  if (c == "kernel-plot") require(inv, "h");

  inv.options.try_emplace("output", "csv");
  if (c == "evolve") inv.options.try_emplace("steps", "1");
  if (c == "sector" || c == "dft-check" || c == "basis-check") inv.options.try_emplace("theta", "0,0");
  if (c == "dft-check" || c == "basis-check") inv.options.try_emplace("tolerance", "1e-8");
  if (c == "dft-check") inv.options.try_emplace("truncation", "50");
  if (c == "basis-check") inv.options.try_emplace("grid", "200");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) usage("in", "cannot read \"" + path + "\"");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

AlgebraElement load_element(const Invocation& inv) {
  if (!inv.has("in")) {
    return weyl_monomial(parse_index("a", inv.get("a")), PlanckParameter(parse_n(inv)));
  }
  AlgebraElement a = [&] {
    try {
      return io::algebra_from_json(read_file(inv.get("in")));
    } catch (const ParseError& e) {
      usage("in", e.what());
    }
  }();
  if (inv.has("n") && a.planck().n() != parse_n(inv)) {
    usage("n", "does not match N=" + std::to_string(a.planck().n()) + " of the --in element");
  }
  return a;
}

bool want_json(const Invocation& inv) { return inv.get("output") == "json"; }

std::string complex_to_csv(Complex z) {
  return "re,im\n" + io::format_double(z.real()) + ',' + io::format_double(z.imag()) + '\n';
}

std::string algebra_to_csv(const AlgebraElement& a) {
  std::string out = "m,k,re,im\n";
  for (const auto& [v, c] : a.terms()) {
    out += v.m.str() + ',' + v.k.str() + ',' + io::format_double(c.real()) + ',' +
           io::format_double(c.imag()) + '\n';
  }
  return out;
}

std::string emit_report(const Invocation& inv, const DiagnosticsReport& r) {
  return want_json(inv) ? io::report_to_json(r) : io::report_to_csv(r);
}

Report run_trace(const Invocation& inv) {
  const Complex z = trace(load_element(inv));
  return {kExitOk, want_json(inv) ? complex_to_json(z) : complex_to_csv(z), {}};
}

Report run_evolve(const Invocation& inv) {
  const auto alpha = parse_map(inv.get("map"));
  const AlgebraElement out =
      apply_automorphism(alpha, load_element(inv), parse_int("steps", inv.get("steps")));
  return {kExitOk, want_json(inv) ? io::algebra_to_json(out) : algebra_to_csv(out), {}};
}

Report run_ergodicity(const Invocation& inv) {
  const auto report = ergodicity_sweep(parse_map(inv.get("map")), load_element(inv),
                                       parse_int("max-steps", inv.get("max-steps")));
  return {kExitOk, emit_report(inv, report), {}};
}

Report run_mixing(const Invocation& inv) {
  const AlgebraElement a = load_element(inv);
  const AlgebraElement b = weyl_monomial(parse_index("b", inv.get("b")), a.planck());
  const auto report =
      mixing_sweep(parse_map(inv.get("map")), a, b, parse_int("steps", inv.get("steps")));
  return {kExitOk, emit_report(inv, report), {}};
}

Report run_sector(const Invocation& inv) {
  const SectorMatrix m = represent(load_element(inv), parse_theta(inv.get("theta")));
  return {kExitOk, want_json(inv) ? io::sector_to_json(m) : io::sector_to_csv(m), {}};
}

Report finish_check(const Invocation& inv, CheckDocument doc) {
  doc.pass = doc.max_deviation <= doc.tolerance;
  Report r{doc.pass ? kExitOk : kExitTolerance,
           want_json(inv) ? check_to_json(doc) : check_to_csv(doc), {}};
  if (!doc.pass) {
    r.message = doc.command + ": max deviation " + io::format_double(doc.max_deviation) +
                " exceeds tolerance " + io::format_double(doc.tolerance);
  }
  return r;
}

Report run_dft_check(const Invocation& inv) {
  const PlanckParameter planck(parse_n(inv));
  const ThetaPoint theta = parse_theta(inv.get("theta"));
  const std::int64_t k = parse_int("truncation", inv.get("truncation"));
  DftLemmaCheck check = check_dft_lemma(theta, planck, k);
  CheckDocument doc{"dft-check", planck.n(), theta.theta1(), theta.theta2(), k,
                    parse_real("tolerance", inv.get("tolerance")), check.max_deviation, false,
                    {std::move(check.recovered), std::move(check.expected)}};
  return finish_check(inv, std::move(doc));
}

Report run_basis_check(const Invocation& inv) {
  const PlanckParameter planck(parse_n(inv));
  const ThetaPoint theta = parse_theta(inv.get("theta"));
  const std::int64_t grid = parse_int("grid", inv.get("grid"));
  SectorMatrix gram = basis_gram_matrix(planck, theta, static_cast<int>(grid));
  const double dev = gram.max_abs_diff(SectorMatrix::identity(planck.n()));
  CheckDocument doc{"basis-check", planck.n(), theta.theta1(), theta.theta2(), grid,
                    parse_real("tolerance", inv.get("tolerance")), dev, false, {std::move(gram)}};
  return finish_check(inv, std::move(doc));
}

Report run_kernel_plot(const Invocation& inv) {
  KernelPlotDocument doc;
  doc.h = parse_real("h", inv.get("h"));
  doc.figure_convention = inv.has("figure-convention");
  doc.figure = kernel_plot(doc.h, true);
  doc.library = kernel_plot(doc.h, false);
  if (want_json(inv)) return {kExitOk, kernel_plot_to_json(doc), {}};
  return {kExitOk, io::kernel_plot_to_csv(doc.figure_convention ? doc.figure : doc.library), {}};
}

Report run_egorov(const Invocation& inv) {
  const auto alpha = parse_map(inv.get("map"));
  TorusSymbol f;
  if (inv.has("in")) {
    try {
      f = io::symbol_from_json(read_file(inv.get("in")));
    } catch (const ParseError& e) {
      usage("in", e.what());
    }
  } else {
    f = TorusSymbol::mode(parse_index("a", inv.get("a")));
  }
  DiagnosticsReport report;
  for (std::int64_t n : parse_n_list(inv.get("n"))) {
    report.steps.push_back(n);
    report.values.emplace_back(egorov_defect(f, alpha, PlanckParameter(n)), 0.0);
  }
  return {kExitOk, emit_report(inv, report), {}};
}

json sector_json(const SectorMatrix& m) { return json::parse(io::sector_to_json(m)); }

double json_number(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name) || !obj.at(name).is_number()) {
    throw ParseError(std::string("missing numeric field \"") + name + "\"");
  }
  return obj.at(name).get<double>();
}

std::int64_t json_integer(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name) || !obj.at(name).is_number_integer()) {
    throw ParseError(std::string("missing integer field \"") + name + "\"");
  }
  return obj.at(name).get<std::int64_t>();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

json rows_to_json(const std::vector<KernelPlotRow>& rows) {
  json arr = json::array();
  for (const auto& row : rows) arr.push_back({{"r", row.r}, {"g_abs2", row.g_abs2}});
  return arr;
}

std::vector<KernelPlotRow> rows_from_json(const json& doc, const char* name) {
  if (!doc.contains(name) || !doc.at(name).is_array()) {
    throw ParseError(std::string("missing array \"") + name + "\"");
  }
  std::vector<KernelPlotRow> rows;
  for (const json& row : doc.at(name)) rows.push_back({json_number(row, "r"), json_number(row, "g_abs2")});
  return rows;
}

}  // namespace

Invocation parse(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("missing command; run with --help for usage");
  const bool help = std::any_of(args.begin(), args.end(),
                                [](const std::string& a) { return a == "--help" || a == "-h"; });
  const CommandInfo* info = find_command(args.front());
  if (help) return Invocation{info ? info->name : std::string{}, {}, true};
  if (info == nullptr) throw UsageError("unknown command \"" + args.front() + "\"");

  CLI::App app{"qtorus " + info->name};
  app.allow_extras();
  app.set_help_flag();
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> handles;
  bool figure_convention = false;
  const std::vector<std::string> common = {"output", "out"};
  for (const auto* list : {&info->flags, &common}) {
    for (const auto& flag : *list) {
      if (flag == "figure-convention") {
        handles[flag] = app.add_flag("--figure-convention", figure_convention);
      } else {
        handles[flag] = app.add_option("--" + flag, values[flag]);
      }
    }
  }

  std::vector<std::string> rest(args.begin() + 1, args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  for (const auto& extra : app.remaining()) {
    if (extra.rfind("-", 0) == 0) throw UsageError("unknown flag " + extra.substr(0, extra.find('=')) + " for " + info->name);
    throw UsageError("unexpected argument \"" + extra + "\" for " + info->name);
  }

  Invocation inv{info->name, {}, false};
  for (const auto& [flag, opt] : handles) {
    if (opt->count() == 0) continue;
    inv.options[flag] = flag == "figure-convention" ? "true" : values[flag];
  }
  validate(inv);
  return inv;
}

Report execute(const Invocation& inv) {
  if (inv.help) return {kExitOk, help_text(), {}};
  try {
    Invocation checked = inv;
    validate(checked);
    const std::string& c = checked.command;
    if (c == "trace") return run_trace(checked);
    if (c == "evolve") return run_evolve(checked);
    if (c == "ergodicity") return run_ergodicity(checked);
    if (c == "mixing") return run_mixing(checked);
    if (c == "sector") return run_sector(checked);
    if (c == "dft-check") return run_dft_check(checked);
    if (c == "kernel-plot") return run_kernel_plot(checked);
    if (c == "basis-check") return run_basis_check(checked);
    if (c == "egorov") return run_egorov(checked);
    return {kExitUsage, {}, "unknown command \"" + c + "\""};
  } catch (const UsageError& e) {
    return {kExitUsage, {}, e.what()};
  } catch (const ArgumentError& e) {
    return {kExitUsage, {}, e.what()};
  } catch (const ParameterMismatch& e) {
    return {kExitUsage, {}, e.what()};
  } catch (const DimensionMismatch& e) {
    return {kExitUsage, {}, e.what()};
  } catch (const ParseError& e) {
    return {kExitUsage, {}, e.what()};
  } catch (const std::exception& e) {
    return {kExitTolerance, {}, e.what()};
  }
}

Report run(const std::vector<std::string>& args) {
  try {
    return execute(parse(args));
  } catch (const UsageError& e) {
    return {kExitUsage, {}, e.what()};
  }
}

std::string help_text() {
  return R"(usage: qtorus <command> [flags]

Commands:
  trace        tau(a): the identity coefficient                --n --a | --in
  evolve       alpha_steps(a) under --map                      --n --a | --in, --map [--steps 1]
  ergodicity   ||<a>_M - tau(a)|| for M = 1..max-steps         --n --a | --in, --map --max-steps
  mixing       tau(alpha_n(a) b) for n = 1..steps              --n --a | --in, --b --map --steps
  sector       matrix of a on the theta sector                 --n --a | --in, [--theta 0,0]
  dft-check    position combs vs DFT of momentum combs         --n [--theta --truncation --tolerance]
  kernel-plot  |g(r/(2 hbar))|^2 on [-5,5], 501 points         --h [--figure-convention]
  basis-check  Gram matrix of the theta basis vs identity      --n [--theta --grid --tolerance]
  egorov       Koopman distance of evolve/quantize orders      --n N1,N2,.. --map, --a | --in

Flags:
  --n N             h = 1/N (egorov takes a comma-separated list)
  --map M           cat:a,b,c,d (ad - bc = 1) or kronecker:t1,t2
  --a, --b m,k      Weyl index of a monomial W(m,k); egorov reads --a as the mode e^{2 pi i (m x + k p)}
  --in FILE         JSON input: an algebra element {"n","terms"}, or for egorov a symbol {"modes"}
  --theta t1,t2     sector parameter (default 0,0)
  --steps S         evolve: power of the map (default 1); mixing: number of steps
  --max-steps M     ergodicity: largest averaging window
  --tolerance T     dft-check, basis-check: pass threshold (default 1e-8)
  --truncation K    dft-check: comb spikes k in [-K, K] (default 50)
  --grid G          basis-check: G x G midpoint quadrature (default 200)
  --h H             kernel-plot: Planck parameter h
  --figure-convention
                    kernel-plot: sample the figure convention hbar := h, whose peak is
                    (1/(2 pi h))^2. Without it the library convention hbar = h/(2 pi) is used.
                    JSON output always carries both series.
  --output json|csv output format (default csv)
  --out FILE        write output to FILE (atomically) instead of stdout
  --help            show this text

Exit codes: 0 success, 1 numeric tolerance failure, 2 usage error.
)";
}

void write_atomically(const std::string& path, std::string_view text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) usage("out", "cannot write \"" + path + "\"");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out.flush()) usage("out", "cannot write \"" + path + "\"");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    usage("out", "cannot write \"" + path + "\"");
  }
}

std::string check_to_json(const CheckDocument& doc) {
  json matrices = json::array();
  for (const auto& m : doc.matrices) matrices.push_back(sector_json(m));
  const char* parameter = doc.command == "dft-check" ? "truncation" : "grid";
  json out = {{"command", doc.command},
              {"n", doc.n},
              {"theta", {doc.theta1, doc.theta2}},
              {parameter, doc.parameter},
              {"tolerance", doc.tolerance},
              {"max_deviation", doc.max_deviation},
              {"pass", doc.pass},
              {"matrices", matrices}};
  return out.dump();
}

CheckDocument check_from_json(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("command") || !doc.at("command").is_string()) {
    throw ParseError("missing field \"command\"");
  }
  CheckDocument out;
  out.command = doc.at("command").get<std::string>();
  if (out.command != "dft-check" && out.command != "basis-check") {
    throw ParseError("unknown check command \"" + out.command + "\"");
  }
  out.n = json_integer(doc, "n");
  if (!doc.contains("theta") || !doc.at("theta").is_array() || doc.at("theta").size() != 2 ||
      !doc.at("theta")[0].is_number() || !doc.at("theta")[1].is_number()) {
    throw ParseError("field \"theta\" must be a pair of numbers");
  }
  out.theta1 = doc.at("theta")[0].get<double>();
  out.theta2 = doc.at("theta")[1].get<double>();
  out.parameter = json_integer(doc, out.command == "dft-check" ? "truncation" : "grid");
  out.tolerance = json_number(doc, "tolerance");
  out.max_deviation = json_number(doc, "max_deviation");
  if (!doc.contains("pass") || !doc.at("pass").is_boolean()) throw ParseError("missing field \"pass\"");
  out.pass = doc.at("pass").get<bool>();
  if (!doc.contains("matrices") || !doc.at("matrices").is_array()) {
    throw ParseError("missing array \"matrices\"");
  }
  for (const json& m : doc.at("matrices")) out.matrices.push_back(io::sector_from_json(m.dump()));
  return out;
}

std::string check_to_csv(const CheckDocument& doc) {
  const char* parameter = doc.command == "dft-check" ? "truncation" : "grid";
  return std::string("n,theta1,theta2,") + parameter + ",tolerance,max_deviation,pass\n" +
         std::to_string(doc.n) + ',' + io::format_double(doc.theta1) + ',' +
         io::format_double(doc.theta2) + ',' + std::to_string(doc.parameter) + ',' +
         io::format_double(doc.tolerance) + ',' + io::format_double(doc.max_deviation) + ',' +
         (doc.pass ? "1" : "0") + '\n';
}

bool operator==(const KernelPlotDocument& a, const KernelPlotDocument& b) {
  auto same = [](const std::vector<KernelPlotRow>& x, const std::vector<KernelPlotRow>& y) {
    return std::equal(x.begin(), x.end(), y.begin(), y.end(),
                      [](const KernelPlotRow& p, const KernelPlotRow& q) {
                        return p.r == q.r && p.g_abs2 == q.g_abs2;
                      });
  };
  return a.h == b.h && a.figure_convention == b.figure_convention && same(a.figure, b.figure) &&
         same(a.library, b.library);
}

std::string kernel_plot_to_json(const KernelPlotDocument& doc) {
  json out = {{"h", doc.h},
              {"figure_convention", doc.figure_convention},
              {"figure", rows_to_json(doc.figure)},
              {"library", rows_to_json(doc.library)}};
  return out.dump();
}

KernelPlotDocument kernel_plot_from_json(std::string_view text) {
  const json doc = parse_json(text);
  KernelPlotDocument out;
  out.h = json_number(doc, "h");
  if (!doc.contains("figure_convention") || !doc.at("figure_convention").is_boolean()) {
    throw ParseError("missing field \"figure_convention\"");
  }
  out.figure_convention = doc.at("figure_convention").get<bool>();
  out.figure = rows_from_json(doc, "figure");
  out.library = rows_from_json(doc, "library");
  return out;
}

std::string complex_to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}.dump(); }

Complex complex_from_json(std::string_view text) {
  const json doc = parse_json(text);
  return {json_number(doc, "re"), json_number(doc, "im")};
}

}  // namespace qtorus::cli
