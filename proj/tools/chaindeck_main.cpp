#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "chaindeck/config.hpp"
#include "chaindeck/constructions.hpp"
#include "chaindeck/oracle.hpp"
#include "chaindeck/spectrum.hpp"
#include "chaindeck/taskgen.hpp"
#include "chaindeck/verifier.hpp"
#include "json.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kNegative = 2;  // verification defects, search not Found

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const chaindeck::Config& config, const std::string& path,
                  const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::string resolved = chaindeck::resolve_output_path(config, path);
  std::ofstream out(resolved);
  if (!out) throw std::runtime_error("cannot write " + resolved);
  out << content;
}

// Profiles arrive as "x1,x2,..."; n, when given separately, must agree.
chaindeck::LengthProfile profile_from_flags(const std::string& csv, std::optional<int> n) {
  chaindeck::LengthProfile p = chaindeck::parse_profile(csv);
  if (n && *n != p.n())
    throw std::invalid_argument("profile \"" + csv + "\" is for n=" + std::to_string(p.n()) +
                                ", but --n " + std::to_string(*n) + " was given");
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balanced path decompositions of the complete digraph, with chain rule task sets"};
  app.require_subcommand(1);

  int spectrum_n = 0;
  bool spectrum_admissible = false, spectrum_histogram = false;
  std::string spectrum_csv;
  std::optional<int> spectrum_bound;
  auto* cmd_spectrum = app.add_subcommand("spectrum", "Enumerate length profiles for an order n");
  cmd_spectrum->add_option("--n", spectrum_n, "Ambient order")->required();
  cmd_spectrum->add_flag("--admissible", spectrum_admissible,
                         "Only profiles passing the necessary conditions");
  cmd_spectrum->add_flag("--histogram", spectrum_histogram, "Group profile counts by size");
  cmd_spectrum->add_option("--csv", spectrum_csv, "Write the size histogram as CSV (- for stdout)");
  cmd_spectrum->add_option("--max-order", spectrum_bound, "Override the enumeration bound");

  std::optional<int> check_n;
  std::string check_profile;
  bool check_json = false;
  auto* cmd_check = app.add_subcommand("check", "Evaluate the necessary conditions for a profile");
  cmd_check->add_option("--n", check_n, "Ambient order (checked against the profile length)");
  cmd_check->add_option("--profile", check_profile, "Profile x1,x2,...")->required();
  cmd_check->add_flag("--json", check_json, "Machine-readable report");

  std::optional<int> construct_n;
  std::string construct_profile, construct_out, construct_dot;
  bool construct_list = false;
  auto* cmd_construct = app.add_subcommand("construct", "Materialize a stored decomposition");
  cmd_construct->add_option("--n", construct_n, "Ambient order");
  cmd_construct->add_option("--profile", construct_profile, "Profile x1,x2,...");
  cmd_construct->add_flag("--list", construct_list, "List supported profiles for --n");
  cmd_construct->add_option("--out", construct_out, "Output file (default stdout)");
  cmd_construct->add_option("--dot", construct_dot, "Also write a GraphViz rendering");

  std::string verify_input;
  bool verify_json = false;
  auto* cmd_verify = app.add_subcommand("verify", "Check a decomposition file");
  cmd_verify->add_option("--input", verify_input, "Decomposition JSON (- for stdin)")->required();
  cmd_verify->add_flag("--json", verify_json, "Machine-readable report");

  std::optional<int> search_n;
  std::string search_profile, search_out;
  bool search_balanced = false, search_no_prune = false, search_json = false;
  std::optional<std::int64_t> search_budget;
  auto* cmd_search = app.add_subcommand("search", "Backtracking search for a decomposition");
  cmd_search->add_option("--n", search_n, "Ambient order");
  cmd_search->add_option("--profile", search_profile, "Profile x1,x2,...")->required();
  cmd_search->add_flag("--balanced", search_balanced, "Require balance");
  cmd_search->add_option("--budget", search_budget,
                         "Node budget (default: unlimited for n<=5, config value above)");
  cmd_search->add_flag("--no-prune", search_no_prune, "Disable balance feasibility cuts");
  cmd_search->add_option("--out", search_out, "Write the witness when found");
  cmd_search->add_flag("--json", search_json, "Machine-readable outcome");

  std::optional<int> generate_n;
  std::string generate_profile, generate_input, generate_labels, generate_out;
  std::string generate_format = "text", generate_redraw = "mixed", generate_source;
  std::optional<std::uint64_t> generate_seed;
  bool generate_allow_unbalanced = false;
  auto* cmd_generate = app.add_subcommand("generate", "Render a chain rule task set");
  cmd_generate->add_option("--n", generate_n, "Ambient order");
  cmd_generate->add_option("--profile", generate_profile, "Construct this profile as the source");
  cmd_generate->add_option("--input", generate_input, "Decomposition JSON as the source");
  cmd_generate->add_option("--labels", generate_labels, "Labeling JSON")->required();
  cmd_generate->add_option("--seed", generate_seed, "RNG seed (default: config seed or entropy)");
  cmd_generate->add_option("--redraw", generate_redraw, "once | per-occurrence | mixed");
  cmd_generate->add_option("--format", generate_format, "latex | text | json");
  cmd_generate->add_flag("--allow-unbalanced", generate_allow_unbalanced,
                         "Accept unbalanced sources");
  cmd_generate->add_option("--out", generate_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    chaindeck::Config config = chaindeck::load_config_from_env();

    if (cmd_spectrum->parsed()) {
      int bound = spectrum_bound.value_or(config.enumeration_bound);
      if (spectrum_histogram || !spectrum_csv.empty()) {
        auto hist = chaindeck::spectrum_histogram(spectrum_n, bound);
        if (!spectrum_csv.empty()) {
          write_output(config, spectrum_csv, chaindeck::histogram_csv(hist));
        } else {
          for (const auto& [s, count] : hist)
            std::cout << s << " " << count << "\n";
        }
      } else {
        for (const auto& p : chaindeck::enumerate_profiles(spectrum_n, spectrum_admissible, bound))
          std::cout << p.to_string() << "\n";
      }
      return kOk;
    }

    if (cmd_check->parsed()) {
      auto p = profile_from_flags(check_profile, check_n);
      auto report = chaindeck::necessary_conditions(p);
      if (check_json) {
        nlohmann::ordered_json doc;
        doc["arc_count_ok"] = report.arc_count_ok;
        doc["k"] = report.k ? nlohmann::ordered_json(*report.k) : nlohmann::ordered_json(nullptr);
        doc["path_count_divisible"] = report.path_count_divisible;
        doc["interior_divisible"] = report.interior_divisible;
        doc["admissible"] = report.admissible;
        std::cout << doc.dump(2) << "\n";
      } else {
        auto yn = [](bool b) { return b ? "yes" : "no"; };
        std::cout << "arc_count_ok:         " << yn(report.arc_count_ok) << "\n";
        std::cout << "k:                    " << (report.k ? std::to_string(*report.k) : "-")
                  << "\n";
        std::cout << "path_count_divisible: " << yn(report.path_count_divisible) << "\n";
        std::cout << "interior_divisible:   " << yn(report.interior_divisible) << "\n";
        std::cout << "admissible:           " << yn(report.admissible) << "\n";
      }
      return kOk;
    }

    if (cmd_construct->parsed()) {
      if (construct_list) {
        if (!construct_n) throw std::invalid_argument("--list needs --n");
        for (const auto& [p, tag] : chaindeck::list_supported(*construct_n))
          std::cout << p.to_string() << " " << tag << "\n";
        return kOk;
      }
      if (construct_profile.empty())
        throw std::invalid_argument("construct needs --profile (or --list)");
      auto p = profile_from_flags(construct_profile, construct_n);
      auto d = chaindeck::construct(p.n(), p);
      write_output(config, construct_out, chaindeck::emit_decomposition(d));
      if (!construct_dot.empty()) write_output(config, construct_dot, chaindeck::to_dot(d));
      return kOk;
    }

    if (cmd_verify->parsed()) {
      auto d = chaindeck::parse_decomposition(read_input(verify_input));
      auto report = chaindeck::verify(d);
      std::cout << (verify_json ? chaindeck::report_to_json(report)
                                : chaindeck::report_to_text(report));
      return report.ok() ? kOk : kNegative;
    }

    if (cmd_search->parsed()) {
      auto p = profile_from_flags(search_profile, search_n);
      std::int64_t budget = search_budget.value_or(
          p.n() <= 5 ? chaindeck::kUnlimitedBudget : config.oracle_budget);
      auto outcome = chaindeck::search(p.n(), p, search_balanced, budget, !search_no_prune);
      if (search_json) {
        nlohmann::ordered_json doc;
        doc["status"] = chaindeck::search_status_name(outcome.status);
        doc["nodes_explored"] = outcome.nodes_explored;
        doc["budget"] = outcome.budget;
        doc["witness"] = outcome.witness
                             ? nlohmann::ordered_json::parse(
                                   chaindeck::emit_decomposition(*outcome.witness))
                             : nlohmann::ordered_json(nullptr);
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "status: " << chaindeck::search_status_name(outcome.status) << "\n";
        std::cout << "nodes:  " << outcome.nodes_explored << "\n";
      }
      if (outcome.witness && !search_out.empty())
        write_output(config, search_out, chaindeck::emit_decomposition(*outcome.witness));
      return outcome.status == chaindeck::SearchStatus::Found ? kOk : kNegative;
    }

    if (cmd_generate->parsed()) {
      if (generate_input.empty() == generate_profile.empty())
        throw std::invalid_argument("generate needs exactly one of --profile or --input");
      std::optional<chaindeck::Decomposition> d;
      std::string source;
      if (!generate_input.empty()) {
        d = chaindeck::parse_decomposition(read_input(generate_input));
      } else {
        auto p = profile_from_flags(generate_profile, generate_n);
        d = chaindeck::construct(p.n(), p);
        if (const auto* table = chaindeck::find_table(p.n(), p)) source = table->source;
        else source = "trivial";
      }
      auto labeling = chaindeck::parse_labeling(read_input(generate_labels));
      std::uint64_t seed;
      if (generate_seed) {
        seed = *generate_seed;
      } else if (config.seed) {
        seed = *config.seed;
      } else {
        std::random_device entropy;
        seed = (static_cast<std::uint64_t>(entropy()) << 32) ^ entropy();
        std::cerr << "seed: " << seed << "\n";
      }
      auto ts = chaindeck::generate_task_set(*d, labeling, seed,
                                             chaindeck::parse_redraw_policy(generate_redraw),
                                             generate_allow_unbalanced, source);
      std::string rendered;
      if (generate_format == "latex") rendered = chaindeck::taskset_to_latex(ts);
      else if (generate_format == "text") rendered = chaindeck::taskset_to_text(ts);
      else if (generate_format == "json") rendered = chaindeck::taskset_to_json(ts);
      else throw std::invalid_argument("format must be latex, text or json");
      write_output(config, generate_out, rendered);
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
