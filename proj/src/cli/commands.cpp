#include "ellb/cli/commands.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ellb/cli/checks.hpp"
#include "ellb/cli/emit.hpp"
#include "ellb/hopfext/cobar.hpp"
#include "ellb/moduli3/normalize.hpp"
#include "ellb/reps/decompose.hpp"
#include "ellb/wpl/wpl.hpp"

namespace ellb::cli {

namespace {

std::pair<long, long> parse_weights(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("--weights expects a pair like 4,6");
  try {
    return {std::stol(text.substr(0, comma)), std::stol(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument("--weights expects integers like 4,6");
  }
}

std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("--range expects a window like -22..12");
  long lo = 0, hi = 0;
  try {
    lo = std::stol(text.substr(0, dots));
    hi = std::stol(text.substr(dots + 2));
  } catch (const std::exception&) {
    throw std::invalid_argument("--range expects integers like -22..12");
  }
  if (lo > hi) throw std::invalid_argument("--range window is empty");
  return {lo, hi};
}

moduli3::Resolver parse_resolver(const std::string& text) {
  if (text == "enumerate") return moduli3::Resolver::enumerate_all();
  if (text == "zero") return moduli3::Resolver::zero();
  const std::string prefix = "fixed:";
  if (text.rfind(prefix, 0) == 0) {
    std::vector<moduli3::ChoiceKind> choices;
    std::stringstream ss(text.substr(prefix.size()));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item == "Zero") choices.push_back(moduli3::ChoiceKind::Zero);
      else if (item == "OnLine") choices.push_back(moduli3::ChoiceKind::OnLine);
      else if (item == "OnEalpha")
        choices.push_back(moduli3::ChoiceKind::OnEalpha);
      else
        throw std::invalid_argument(
            "unknown resolver answer '" + item +
            "' (expected Zero, OnLine or OnEalpha)");
    }
    return moduli3::Resolver::fixed(std::move(choices));
  }
  throw std::invalid_argument(
      "--resolver expects enumerate, zero or fixed:<answers>");
}

void print_text(const std::string& s) {
  std::cout << s;
  if (s.empty() || s.back() != '\n') std::cout << '\n';
}

int run_wpl(const std::string& weights, const std::string& range,
            const std::string& format) {
  const auto [k, l] = parse_weights(weights);
  const auto [lo, hi] = parse_range(range);
  const wpl::CohChart c = wpl::chart(wpl::WeightedLine(k, l), lo, hi);
  print_text(format == "json" ? wpl::chart_json(c) : wpl::chart_ascii(c));
  return 0;
}

int run_ext_chart(long s_max, long n_max, long prime, std::size_t cap,
                  const std::string& format) {
  hopfext::ExtChartData chart = hopfext::ext_chart(s_max, n_max, prime, cap);

  // Cells whose local group the budgets could not certify make the run a
  // resource failure: reporting a partial chart as if complete would be
  // worse than refusing.
  std::vector<std::string> missing;
  for (const auto& [key, cell] : chart.cells)
    if (!cell.localized_known)
      missing.push_back("(" + std::to_string(cell.s) + "," +
                        std::to_string(cell.n) + ") " + cell.status);
  if (!missing.empty()) {
    std::cerr << "chart cells without a certified local group:";
    for (const auto& m : missing) std::cerr << " " << m;
    std::cerr << "\nraise --cap (or ELLB_BASIS_CAP) to spend more\n";
    return 3;
  }

  for (const auto& [key, cell] : chart.cells)
    for (const auto& f : cell.flags)
      std::cerr << "note (" << cell.s << "," << cell.n << "): " << f << "\n";

  if (format == "json")
    std::cout << finish_json(ext_chart_to_json(chart));
  else
    print_text(ext_chart_to_ascii(chart));
  return 0;
}

// Construct grammar: mbar(n) | trivial | sum(e,e) | tensor(e,e)
// | ind(Group, e) | res(Group, e), where ind names the subgroup the inner
// module lives over and res names the ambient group it restricts from.
struct ConstructParser {
  const std::string& text;
  std::size_t pos = 0;

  struct Node {
    std::string head;
    std::vector<Node> kids;
    long number = 0;
    bool is_number = false;
  };

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Node parse_expr() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() &&
        (text[pos] == '-' || std::isdigit(static_cast<unsigned char>(text[pos])))) {
      ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      Node n;
      n.is_number = true;
      n.number = std::stol(text.substr(start, pos - start));
      return n;
    }
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_'))
      ++pos;
    if (pos == start)
      throw std::invalid_argument("construct: expected a name at position " +
                                  std::to_string(pos));
    Node n;
    n.head = text.substr(start, pos - start);
    if (eat('(')) {
      if (!eat(')')) {
        do {
          n.kids.push_back(parse_expr());
        } while (eat(','));
        if (!eat(')'))
          throw std::invalid_argument("construct: missing ')' after " +
                                      n.head);
      }
    }
    return n;
  }

  Node parse_all() {
    Node n = parse_expr();
    skip_ws();
    if (pos != text.size())
      throw std::invalid_argument("construct: trailing text '" +
                                  text.substr(pos) + "'");
    return n;
  }
};

reps::MatrixRep eval_construct(const ConstructParser::Node& node,
                               const reps::FiniteGroup& g,
                               const reps::Domain& dom) {
  using Node = ConstructParser::Node;
  if (node.is_number)
    throw std::invalid_argument("construct: a bare number is not a module");
  const auto arity = [&](std::size_t want) {
    if (node.kids.size() != want)
      throw std::invalid_argument("construct: " + node.head + " takes " +
                                  std::to_string(want) + " argument(s)");
  };

  if (node.head == "trivial") {
    arity(0);
    return reps::trivial_rep(g, dom);
  }
  if (node.head == "mbar") {
    arity(1);
    if (!node.kids[0].is_number)
      throw std::invalid_argument("construct: mbar takes an integer");
    const long n = node.kids[0].number;
    if (g.name() == reps::GroupName::C2xC2) return reps::m_n(n, dom);
    if (g.name() == reps::GroupName::Q8)
      return reps::pullback_q8(reps::m_n(n, dom), g);
    throw std::invalid_argument(
        "construct: mbar lives over C2xC2 or, by pullback, Q8; the target "
        "group here is " + reps::to_string(g.name()));
  }
  if (node.head == "sum" || node.head == "tensor") {
    arity(2);
    const reps::MatrixRep a = eval_construct(node.kids[0], g, dom);
    const reps::MatrixRep b = eval_construct(node.kids[1], g, dom);
    return node.head == "sum" ? reps::direct_sum(a, b) : reps::tensor(a, b);
  }
  if (node.head == "ind" || node.head == "res") {
    arity(2);
    const Node& named = node.kids[0];
    if (named.is_number || !named.kids.empty())
      throw std::invalid_argument("construct: " + node.head +
                                  " names a group first");
    const reps::FiniteGroup other =
        reps::build_group(reps::group_from_string(named.head));
    if (node.head == "ind") {
      const reps::MatrixRep inner = eval_construct(node.kids[1], other, dom);
      return reps::induce(inner, g, reps::embed_subgroup(other, g));
    }
    const reps::MatrixRep ambient = eval_construct(node.kids[1], other, dom);
    return reps::restrict_rep(ambient, g, reps::embed_subgroup(g, other));
  }
  throw std::invalid_argument("construct: unknown operation '" + node.head +
                              "'");
}

int run_reps(const std::string& group, const std::string& construct,
             long field, std::uint64_t seed, const std::string& format) {
  const reps::FiniteGroup g =
      reps::build_group(reps::group_from_string(group));
  const reps::Domain dom = reps::Domain::finite_field(field);
  ConstructParser parser{construct};
  const reps::MatrixRep rep =
      eval_construct(parser.parse_all(), g, dom);
  const reps::DecompositionReport report = reps::decompose(rep, seed);

  if (format == "json") {
    Json header;
    header["group"] = group;
    header["construct"] = construct;
    header["field"] = field;
    header["seed"] = seed;
    std::cout << finish_json(decomposition_to_json(header, report));
  } else {
    print_text(decomposition_to_ascii(report));
  }
  return 0;
}

int run_bundles(const std::string& spec_path, const std::string& resolver,
                const std::string& format) {
  std::ifstream in(spec_path);
  if (!in)
    throw std::invalid_argument("cannot open chain file " + spec_path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument("chain file " + spec_path +
                                " is not valid JSON: " + e.what());
  }
  if (!j.is_object() || !j.contains("stages") || !j["stages"].is_array())
    throw std::invalid_argument("chain file needs a stages array");

  moduli3::StandardBundle top;
  if (j.contains("initial_top"))
    for (const auto& s : j["initial_top"])
      top = top.add({moduli3::kind_from_string(s.at("kind").get<std::string>()),
                     s.at("twist").get<int>()});

  std::vector<moduli3::PatternStage> stages;
  for (const auto& st : j["stages"]) {
    moduli3::PatternStage ps;
    ps.base_twist = st.at("twist").get<int>();
    if (st.contains("components"))
      for (const auto& c : st["components"])
        ps.components.push_back(
            {moduli3::kind_from_string(c.at("kind").get<std::string>()),
             c.at("twist").get<int>(), c.at("value").get<int>()});
    stages.push_back(std::move(ps));
  }

  const auto forms =
      moduli3::normalize_patterns(top, stages, parse_resolver(resolver));
  if (format == "json")
    std::cout << finish_json(normal_forms_to_json(forms));
  else
    print_text(normal_forms_to_ascii(forms));
  return 0;
}

int run_verify(const std::string& suite, const std::string& manifest_path,
               const std::string& format) {
  Json manifest;
  try {
    manifest = load_manifest(manifest_path);
  } catch (const std::runtime_error& e) {
    // An unreadable manifest is a flag problem, not a failed check.
    throw std::invalid_argument(e.what());
  }
  if (manifest["suite"].get<std::string>() != suite)
    throw std::invalid_argument("manifest " + manifest_path +
                                " is for suite '" +
                                manifest["suite"].get<std::string>() +
                                "', not '" + suite + "'");

  CheckState state;
  const std::vector<CheckResult> results = run_suite(manifest, state);
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    std::cerr << r.name << ": " << r.seconds << "s\n";
  }

  if (format == "json") {
    Json out;
    out["suite"] = suite;
    Json rows = Json::array();
    for (const auto& r : results) {
      Json row;
      row["name"] = r.name;
      row["pass"] = r.pass;
      row["details"] = r.details;
      rows.push_back(std::move(row));
    }
    out["checks"] = std::move(rows);
    out["passed"] = all;
    std::cout << finish_json(out);
  } else {
    std::ostringstream text;
    for (const auto& r : results)
      text << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.details
           << "\n";
    text << "suite " << suite << ": "
         << std::count_if(results.begin(), results.end(),
                          [](const CheckResult& r) { return r.pass; })
         << "/" << results.size() << " checks passed\n";
    print_text(text.str());
  }
  return all ? 0 : 1;
}

} // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"cohomology charts, module decompositions and bundle "
               "normal forms for the moduli of elliptic curves"};
  app.require_subcommand(1);

  // The basis cap default can come from the environment; an explicit
  // --cap still wins.
  std::size_t cap = 20000;
  if (const char* env = std::getenv("ELLB_BASIS_CAP")) {
    try {
      cap = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "invalid ELLB_BASIS_CAP value '" << env << "'\n";
      return 2;
    }
  }

  std::string weights, range, format = "ascii";
  auto* wpl_cmd =
      app.add_subcommand("wpl", "cohomology chart of a weighted line");
  wpl_cmd->add_option("--weights", weights, "weight pair, e.g. 4,6")
      ->required();
  wpl_cmd->add_option("--range", range, "twist window, e.g. -22..12")
      ->required();
  wpl_cmd->add_option("--format", format, "json or ascii")
      ->check(CLI::IsMember({"json", "ascii"}));

  long s_max = 0, n_max = 0, prime = 3;
  auto* ext_cmd = app.add_subcommand(
      "ext-chart", "local cohomology chart of the elliptic algebroid");
  ext_cmd->add_option("--smax", s_max, "top cohomological degree")
      ->required();
  ext_cmd->add_option("--nmax", n_max, "top internal degree")->required();
  ext_cmd->add_option("--prime", prime, "localization prime");
  ext_cmd->add_option("--cap", cap, "basis size cap");
  ext_cmd->add_option("--format", format, "json or ascii")
      ->check(CLI::IsMember({"json", "ascii"}));

  std::string group, construct;
  long field = 2;
  std::uint64_t seed = 0;
  auto* reps_cmd =
      app.add_subcommand("reps", "modular representation computations");
  reps_cmd->require_subcommand(1);
  auto* dec_cmd = reps_cmd->add_subcommand(
      "decompose", "split a constructed module into indecomposables");
  dec_cmd->add_option("--group", group, "target group, e.g. GL2F3")
      ->required();
  dec_cmd->add_option("--construct", construct,
                      "module expression, e.g. ind(Q8, mbar(1))")
      ->required();
  dec_cmd->add_option("--field", field, "prime field order")->required();
  dec_cmd->add_option("--seed", seed, "splitting search seed");
  dec_cmd->add_option("--format", format, "json or ascii")
      ->check(CLI::IsMember({"json", "ascii"}));

  std::string spec_path, resolver = "enumerate";
  auto* bun_cmd =
      app.add_subcommand("bundles", "standard bundle computations");
  bun_cmd->require_subcommand(1);
  auto* norm_cmd = bun_cmd->add_subcommand(
      "normalize", "normal forms of an iterated extension chain");
  norm_cmd->add_option("--spec", spec_path, "chain file (JSON)")->required();
  norm_cmd->add_option("--resolver", resolver,
                       "enumerate, zero or fixed:<answers>");
  norm_cmd->add_option("--format", format, "json or ascii")
      ->check(CLI::IsMember({"json", "ascii"}));

  std::string suite, manifest_path = "manifests/paper.json";
  auto* ver_cmd = app.add_subcommand(
      "verify", "run a manifest of acceptance checks");
  ver_cmd->add_option("--suite", suite, "suite name, e.g. paper")
      ->required();
  ver_cmd->add_option("--manifest", manifest_path, "manifest file");
  ver_cmd->add_option("--format", format, "json or ascii")
      ->check(CLI::IsMember({"json", "ascii"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*wpl_cmd) return run_wpl(weights, range, format);
    if (*ext_cmd) return run_ext_chart(s_max, n_max, prime, cap, format);
    if (*dec_cmd) return run_reps(group, construct, field, seed, format);
    if (*norm_cmd) return run_bundles(spec_path, resolver, format);
    if (*ver_cmd) return run_verify(suite, manifest_path, format);
  } catch (const hopfext::ResourceCapExceeded& e) {
    std::cerr << "resource cap exceeded: " << e.what()
              << "\nraise --cap (or ELLB_BASIS_CAP) to spend more\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  }
  return 2; // unreachable with require_subcommand, kept for safety
}

} // namespace ellb::cli
