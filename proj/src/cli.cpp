#include "simperm/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "simperm/dynamics.hpp"
#include "simperm/error.hpp"
#include "simperm/genealogy.hpp"
#include "simperm/mixed_order.hpp"
#include "simperm/oracle.hpp"
#include "simperm/simplicity.hpp"

namespace simperm::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string resolve_format(const CommandConfig& c, const std::string& fallback,
                           std::initializer_list<const char*> allowed) {
  const std::string format = c.format.empty() ? fallback : c.format;
  for (const char* a : allowed)
    if (format == a) return format;
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw UsageError("format '" + format + "' is not valid for '" + c.subcommand + "' (expected one of: " + list + ")");
}

json images_json(const Permutation& p) { return std::vector<int>(p.images().begin(), p.images().end()); }

struct Record {
  std::string name;
  Permutation perm;
  json data;
};

std::vector<Record> enumerate_records(const CommandConfig& c) {
  std::vector<Record> records;
  if (c.enum_class == "mixed") {
    for (const auto& m : enumerate_mixed(c.n)) records.push_back({m.name(), m.perm, to_json(m)});
  } else if (c.enum_class == "pow2") {
    const auto tree = genealogy_tree(c.level);
    int index = 0;
    for (const auto& p : tree.levels.back()) {
      json j;
      j["name"] = "sim" + std::to_string(p.degree()) + "_" + std::to_string(++index);
      j["order"] = p.degree();
      j["images"] = images_json(p);
      j["level"] = c.level;
      records.push_back({j["name"].get<std::string>(), p, j});
    }
  } else if (c.enum_class == "odd") {
    for (auto v : {StefanVariant::Alpha, StefanVariant::Beta}) {
      const auto p = stefan(c.order, v);
      json j;
      j["name"] = std::string(to_string(v)) + "_" + std::to_string(c.order);
      j["order"] = c.order;
      j["images"] = images_json(p);
      j["variant"] = std::string(to_string(v));
      records.push_back({j["name"].get<std::string>(), p, j});
    }
  } else {
    throw UsageError("unknown class '" + c.enum_class + "' (expected mixed, pow2 or odd)");
  }
  return records;
}

int run_enumerate(const CommandConfig& c, std::ostream& out) {
  const auto format = resolve_format(c, "jsonl", {"jsonl", "json", "table"});
  const auto records = enumerate_records(c);
  if (format == "jsonl") {
    for (const auto& r : records) out << r.data.dump() << '\n';
  } else if (format == "json") {
    json all = json::array();
    for (const auto& r : records) all.push_back(r.data);
    out << all.dump(2) << '\n';
  } else {
    for (const auto& r : records) out << r.name << '\t' << to_string(r.perm) << '\n';
  }
  return kSuccess;
}

json verify_report(const Permutation& p) {
  const auto cls = classify_simple(p);
  json j;
  j["simple"] = is_simple(cls);
  const auto fields = to_json(cls);
  for (const auto& [key, value] : fields.items()) j[key] = value;
  if (auto m = identify_mixed(p)) {
    j["square_class"] = m->square_class.label();
    j["k"] = m->first_image;
  }
  return j;
}

int run_verify(const CommandConfig& c, std::ostream& out) {
  const auto format = resolve_format(c, "json", {"json", "table"});
  const auto p = parse_permutation(c.permutation);
  const auto report = verify_report(p);
  if (format == "json") {
    out << report.dump() << '\n';
  } else {
    for (auto& [key, value] : report.items()) out << key << '\t' << value.dump() << '\n';
  }
  return kSuccess;
}

int run_genealogy(const CommandConfig& c, std::ostream& out) {
  const auto format = resolve_format(c, "json", {"json", "dot"});
  const auto tree = genealogy_tree(c.max_level);
  if (format == "dot")
    out << to_dot(tree);
  else
    out << to_json(tree).dump() << '\n';
  return kSuccess;
}

int run_markov(const CommandConfig& c, std::ostream& out) {
  const auto format = resolve_format(c, "json", {"json", "dot"});
  const auto p = parse_permutation(c.permutation);
  const auto graph = markov_graph(p);
  if (format == "dot") {
    out << to_dot(graph);
    return kSuccess;
  }
  json j;
  j["permutation"] = to_string(p);
  j["graph"] = to_json(graph);
  j["forced_periods"] = to_json(forced_periods(p, c.max_period));
  j["loop_periods"] = to_json(loop_periods(graph, c.max_loop < 0 ? c.max_period : c.max_loop));
  out << j.dump() << '\n';
  return kSuccess;
}

int run_oracle(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  const auto format = resolve_format(c, "json", {"json", "table"});
  const auto report = cross_check(c.order, OracleOptions{c.override_cost_bound, c.threads});
  if (format == "json") {
    out << to_json(report).dump() << '\n';
  } else {
    out << "degree\t" << report.degree << '\n'
        << "scanned\t" << report.candidates_scanned << '\n'
        << "found\t" << report.found.size() << '\n'
        << "source\t" << report.source << '\n'
        << "constructive\t" << report.constructive.size() << '\n'
        << "sound\t" << (report.sound ? "true" : "false") << '\n'
        << "agreement\t" << (report.agreement ? (*report.agreement ? "true" : "false") : "n/a") << '\n'
        << "completeness\t" << (report.completeness_verified() ? "verified" : "unverified") << '\n';
  }
  err << "oracle: degree " << report.degree << " elapsed " << report.elapsed.count() << " ms\n";
  return report.ok() ? kSuccess : kDisagreement;
}

int dispatch(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  if (c.subcommand == "enumerate") return run_enumerate(c, out);
  if (c.subcommand == "verify") return run_verify(c, out);
  if (c.subcommand == "genealogy") return run_genealogy(c, out);
  if (c.subcommand == "markov") return run_markov(c, out);
  if (c.subcommand == "oracle") return run_oracle(c, out, err);
  throw UsageError("unknown subcommand '" + c.subcommand + "'");
}

}  // namespace

int execute(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.output.empty()) return dispatch(config, out, err);
    std::ostringstream buffer;
    const int status = dispatch(config, buffer, err);
    std::ofstream file(config.output, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + config.output + "'");
    file << buffer.str();
    return status;
  } catch (const ParseError& e) {
    err << "error: malformed permutation: offending token '" << e.token() << "'\n";
  } catch (const NotAPermutation& e) {
    err << "error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const CostBoundError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << '\n';
    return kDisagreement;
  }
  return kUsageError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig c;
  CLI::App app{"Simple permutations: pasting/reversing algebra, enumeration and verification", "simperm"};
  app.require_subcommand(1);

  auto add_common = [&c](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format");
    sub->add_option("--output", c.output, "Write to this file instead of standard output");
  };

  auto* enumerate = app.add_subcommand("enumerate", "List simple permutations of one class");
  enumerate->add_option("--class", c.enum_class, "mixed, pow2 or odd")->required();
  enumerate->add_option("--n", c.n, "Mixed order 4n+2");
  enumerate->add_option("--level", c.level, "Power-of-two level k (order 2^k)");
  enumerate->add_option("--order", c.order, "Odd order");
  add_common(enumerate);

  auto* verify = app.add_subcommand("verify", "Classify a permutation");
  verify->add_option("permutation", c.permutation, "Comma-separated images")->required();
  add_common(verify);

  auto* genealogy = app.add_subcommand("genealogy", "Genealogy tree of Sim(2^k)");
  genealogy->add_option("--max-level", c.max_level, "Deepest level")->required();
  add_common(genealogy);

  auto* markov = app.add_subcommand("markov", "Markov graph and forced periods");
  markov->add_option("permutation", c.permutation, "Comma-separated images")->required();
  markov->add_option("--max-period", c.max_period, "Largest period searched (<= 12)");
  markov->add_option("--max-loop", c.max_loop, "Longest loop length (<= 12); defaults to --max-period");
  add_common(markov);

  auto* oracle = app.add_subcommand("oracle", "Brute-force cross-check");
  oracle->add_option("--order", c.order, "Degree")->required();
  oracle->add_flag("--override-cost-bound", c.override_cost_bound,
                   "Scan degrees above 10 anyway (potentially very slow)");
  oracle->add_option("--threads", c.threads, "Scan threads");
  add_common(oracle);

  std::vector<const char*> argv{"simperm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  return execute(c, out, err);
}

}  // namespace simperm::cli
