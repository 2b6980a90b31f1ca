#include "dwcount/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "dwcount/errors.hpp"
#include "dwcount/group_io.hpp"
#include "dwcount/lambda_basis.hpp"
#include "dwcount/oracle.hpp"
#include "dwcount/seifert.hpp"
#include "dwcount/tqft.hpp"

namespace dwcount::cli {
namespace {

using Json = nlohmann::ordered_json;

const std::map<std::string, Mode> kModes = {{"formula", Mode::formula},
                                            {"structural", Mode::structural},
                                            {"oracle", Mode::oracle},
                                            {"verify", Mode::verify},
                                            {"a5check", Mode::a5check}};

std::string mode_name(Mode m) {
  for (const auto& [name, mode] : kModes)
    if (mode == m) return name;
  return "?";
}

class Stopwatch {
 public:
  template <class F>
  auto time(const std::string& label, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    auto result = f();
    laps_.emplace_back(label, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return result;
  }
  const std::vector<std::pair<std::string, double>>& laps() const { return laps_; }

 private:
  std::vector<std::pair<std::string, double>> laps_;
};

std::string representative_label(const FiniteGroup& g, Element rep) {
  const auto ct = cycle_type(g, rep);
  if (ct.empty()) return "#" + std::to_string(rep);
  std::string s = "[";
  for (std::size_t k = 0; k < ct.size(); ++k) s += (k ? "," : "") + std::to_string(ct[k]);
  return s + "]";
}

bool looks_like_a5(const LambdaBasis& basis) {
  if (basis.group().order() != 60) return false;
  std::vector<std::size_t> sizes;
  for (std::size_t c = 0; c < basis.classes().size(); ++c) sizes.push_back(basis.classes().class_size(c));
  std::sort(sizes.begin(), sizes.end());
  return sizes == std::vector<std::size_t>{1, 12, 12, 15, 20};
}

struct Report {
  Json json = Json::object();
  std::vector<std::string> text;
  bool agree = true;
};

FiniteGroup load_group(const RunConfig& c, std::string& label) {
  if (c.group.empty() == c.group_file.empty())
    throw ValidationError("give exactly one of --group and --group-file");
  if (!c.group_file.empty()) {
    label = c.group_file;
    return read_group_file(c.group_file, c.max_order);
  }
  const std::string prefix = "builtin:";
  if (c.group.rfind(prefix, 0) != 0) throw ValidationError("--group expects builtin:NAME");
  label = c.group;
  return builtin_group(c.group.substr(prefix.size()), c.max_order);
}

void execute(const RunConfig& c, Report& r) {
  Stopwatch clock;
  std::string label;
  const auto group = std::make_shared<const FiniteGroup>(load_group(c, label));
  const SeifertData data = parse_seifert(c.seifert);
  const LambdaBasis basis = clock.time("basis", [&] { return build_lambda(group, c.seed); });
  const auto order = static_cast<unsigned long>(group->order());

  r.json["group"] = {{"source", label},
                     {"order", order},
                     {"classes", basis.classes().size()},
                     {"lambda_size", basis.size()}};
  r.json["manifold"] = to_string(data);
  r.json["mode"] = mode_name(c.mode);
  r.json["seed"] = c.seed;
  r.text.push_back("group " + label + ": order " + std::to_string(order) + ", " +
                   std::to_string(basis.classes().size()) + " classes, |Lambda| = " + std::to_string(basis.size()));
  r.text.push_back("manifold " + to_string(data));

  const bool wants_formula = c.mode == Mode::formula || c.mode == Mode::verify || c.mode == Mode::a5check;
  const bool wants_structural = c.mode == Mode::structural || c.mode == Mode::verify;
  const bool wants_oracle = c.mode == Mode::oracle || c.mode == Mode::verify;
  if (c.mode == Mode::a5check && (!looks_like_a5(basis) || !data.orientable_base))
    throw ValidationError("a5check needs the group A5 and an orientable base");

  Json modes = Json::object();
  std::optional<Integer> reference;
  auto record = [&](const std::string& name, const Integer& value) {
    modes[name] = value.get_str();
    r.text.push_back(name + ": " + value.get_str());
    if (!reference) reference = value;
    else if (*reference != value) r.agree = false;
  };

  if (wants_formula) {
    const CountResult result = clock.time("formula", [&] { return count(basis, data); });
    Json terms = Json::array();
    for (const auto& t : result.terms) {
      const auto& sector = basis.sectors()[t.index.class_index];
      terms.push_back({{"class", t.index.class_index},
                       {"character", t.index.char_row},
                       {"representative", representative_label(*group, sector.representative)},
                       {"degree", sector.table.degrees[t.index.char_row]},
                       {"dim", basis.dim_chi(t.index)},
                       {"eta_product", t.eta_product.to_string()},
                       {"term", t.term.to_string()}});
    }
    r.json["terms"] = std::move(terms);
    record("formula", result.count);
  }
  if (wants_structural) {
    const auto result = clock.time("structural", [&] {
      const TorusSpace space(basis);
      return z_seifert_structural(space, data);
    });
    const Rational total = result.z * Rational(order);
    if (total.get_den() != 1) throw ConsistencyError("structural count " + total.get_str() + " is not an integer");
    record("structural", total.get_num());
    if (!data.orientable_base) r.json["crosscap_cross_checked"] = result.crosscap_cross_checked;
  }
  if (wants_oracle) {
    OracleOptions options;
    options.max_space = c.max_oracle_space;
    options.threads = c.threads;
    const Presentation p = data.orientable_base ? presentation_orientable(data.genus, data.pairs)
                                                : presentation_nonorientable_paper(data.genus, data.pairs);
    const auto result = clock.time("oracle", [&] { return count_homs_detailed(*group, p, options); });
    record("oracle", Integer(std::to_string(result.count)));
    if (!data.orientable_base) {
      // reported for comparison only, never part of the agreement check
      const Presentation standard = presentation_nonorientable_standard(data.genus, data.pairs);
      const auto other = clock.time("oracle_standard", [&] { return count_homs_detailed(*group, standard, options); });
      r.json["oracle_standard"] = std::to_string(other.count);
      r.text.push_back("oracle (y h y^-1 = h^-1 presentation, not compared): " + std::to_string(other.count));
    }
  }
  if (c.mode == Mode::a5check) {
    const Integer value = clock.time("a5_closed_form", [&] { return count_a5_specialized(data); });
    record("a5_closed_form", value);
  }

  r.json["count"] = reference->get_str();
  Rational z(*reference, Integer(order));
  z.canonicalize();
  r.json["z"] = z.get_str();
  r.json["modes"] = std::move(modes);
  r.json["agree"] = r.agree;
  r.text.insert(r.text.begin() + 2, "count " + reference->get_str() + "  (Z = " + z.get_str() + ")");
  if (r.json["modes"].size() > 1) r.text.push_back(r.agree ? "all modes agree" : "MODES DISAGREE");
  if (c.timings) {
    Json timings = Json::object();
    for (const auto& [name, seconds] : clock.laps()) timings[name] = seconds;
    r.json["timings_s"] = std::move(timings);
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Report report;
  int code = kExitOk;
  std::string message;
  try {
    execute(config, report);
    if (!report.agree) {
      code = kExitConsistency;
      message = "modes disagree";
    }
  } catch (const ValidationError& e) {
    code = kExitInput;
    message = e.what();
  } catch (const ConfigurationError& e) {
    code = kExitInput;
    message = e.what();
  } catch (const CostLimitError& e) {
    code = kExitLimit;
    message = e.what();
  } catch (const SizeLimitError& e) {
    code = kExitLimit;
    message = e.what();
  } catch (const ConsistencyError& e) {
    code = kExitConsistency;
    message = e.what();
  }
  if (!message.empty()) err << "error: " << message << "\n";
  if (config.json) {
    if (code != kExitOk) {
      report.json["error"] = message;
      report.json["exit_code"] = code;
    }
    out << report.json.dump(2) << "\n";
  } else {
    for (const auto& line : report.text) out << line << "\n";
  }
  return code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Count regular coverings of Seifert 3-manifolds with a finite group of deck transformations"};
  RunConfig config;
  std::string mode = "formula";
  auto* group_opt = app.add_option("--group", config.group, "builtin:NAME (Cn, Dn, Sn, An, Q8)");
  auto* file_opt = app.add_option("--group-file", config.group_file, "perm/cayley description file");
  group_opt->excludes(file_opt);
  app.add_option("--seifert", config.seifert, "descriptor such as \"O;g=1;(2,1)(3,1)\"")->required();
  app.add_option("--mode", mode, "formula | structural | oracle | verify | a5check")
      ->check(CLI::IsMember({"formula", "structural", "oracle", "verify", "a5check"}));
  app.add_option("--seed", config.seed, "seed for character table splitting");
  app.add_flag("--json", config.json, "JSON report");
  app.add_option("--threads", config.threads, "oracle worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--max-order", config.max_order, "largest group order accepted")
      ->check(CLI::Range(std::size_t{1}, kHardMaxOrder));
  app.add_option("--max-oracle-space", config.max_oracle_space, "bound on |G|^generators for the oracle");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  config.mode = kModes.at(mode);
  return run(config, out, err);
}

}  // namespace dwcount::cli
