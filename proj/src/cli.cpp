#include "enriques/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "enriques/adjacency.hpp"
#include "enriques/canonical.hpp"
#include "enriques/jump.hpp"
#include "enriques/quasihomogeneous.hpp"
#include "enriques/serialize.hpp"
#include "enriques/spec_parser.hpp"

namespace enriques {
namespace {

struct Options {
  std::string spec;
  std::string format = "text";
  bool minimal = false;
  bool complete = false;
  bool neighbour = false;
  bool check = false;
  bool semi = false;
  bool verify = false;
  std::string source;
  std::string target;
  int extra_bound = -1;
  int max_vertices = 0;
  int max_weight = 0;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

std::string embedding_text(const SubdiagramEmbedding& e) {
  std::string out;
  for (const auto& [lo, up] : e.pairs) {
    if (!out.empty()) out += " ";
    out += std::to_string(lo) + ":" + std::to_string(up);
  }
  return out;
}

// A diagram operand is a JSON file if such a file exists, a spec otherwise.
DiagramType load_type(const std::string& operand) {
  if (std::filesystem::is_regular_file(operand)) {
    std::ifstream in(operand);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto w = io::parse_diagram(buffer.str());
    if (!is_consistent(w)) throw DomainError(operand + ": diagram is not consistent");
    return DiagramType::of(w);
  }
  return DiagramType::of(build_enriques_diagram(parse_spec(operand)));
}

MaximalityBounds resolve_bounds(const Options& o, const QuasihomogeneousSpec& spec) {
  auto bounds = default_maximality_bounds(spec);
  if (o.max_vertices > 0) bounds.max_vertices = o.max_vertices;
  if (o.max_weight > 0) bounds.max_weight = o.max_weight;
  if (o.extra_bound >= 0) bounds.extra_bound = o.extra_bound;
  return bounds;
}

void print_maximality_text(const MaximalityReport& m, std::ostream& out) {
  out << "threshold " << m.expected_max_mu() << "\n";
  out << "bounds max_vertices=" << m.bounds.max_vertices << " max_weight=" << m.bounds.max_weight
      << " extra_bound=" << m.bounds.extra_bound << "\n";
  out << "candidates " << m.candidates << "\n";
  out << "above_threshold " << m.above_threshold << "\n";
  out << "refuted " << m.refuted << "\n";
  out << "contradictions " << m.contradictions.size() << "\n";
  for (const auto& key : m.contradictions) out << "  " << key << "\n";
  out << "anomalies " << m.anomalies.size() << "\n";
  for (const auto& key : m.anomalies) out << "  " << key << "\n";
  out << "attained_max_mu "
      << (m.attained_max_mu ? std::to_string(*m.attained_max_mu) : std::string("none")) << "\n";
  out << "neighbour_adjacent " << yes_no(m.constructed_neighbour_adjacent) << "\n";
  out << "status " << (m.verified() ? "verified" : "unverified") << "\n";
}

int cmd_info(const Options& o, std::ostream& out) {
  const auto spec = parse_spec(o.spec);
  const auto inv = derived_invariants(spec);
  if (o.format == "json") {
    out << io::dump(io::invariants_to_json(spec, inv));
    return kExitOk;
  }
  out << "spec " << spec.to_string() << "\n"
      << "d_tilde " << inv.d_tilde << "\n"
      << "r " << inv.r << "\n"
      << "s " << inv.s << "\n"
      << "d " << inv.d << "\n"
      << "t " << inv.t << "\n"
      << "w " << inv.w << "\n"
      << "weight_x " << inv.weight_x << "\n"
      << "weight_y " << inv.weight_y << "\n"
      << "degree " << inv.degree << "\n";
  return kExitOk;
}

int cmd_diagram(const Options& o, std::ostream& out) {
  const auto spec = parse_spec(o.spec);
  auto w = build_enriques_diagram(spec);
  if (o.minimal || o.neighbour) w = minimalize(w);
  if (o.neighbour) w = construct_adjacent_diagram(w);
  if (o.format == "json") {
    out << io::dump(io::diagram_to_json(w));
  } else if (o.format == "dot") {
    out << io::to_dot(w);
  } else {
    out << io::to_text(w);
  }
  return kExitOk;
}

int cmd_mu(const Options& o, std::ostream& out) {
  const auto spec = parse_spec(o.spec);
  const int mu = milnor_number(build_enriques_diagram(spec));
  if (!o.check) {
    out << mu << "\n";
    return kExitOk;
  }
  const int oracle = milnor_orlik(spec);
  out << "mu " << mu << "\n"
      << "oracle " << oracle << "\n"
      << (mu == oracle ? "match" : "mismatch") << "\n";
  return mu == oracle ? kExitOk : kExitContradiction;
}

int cmd_jump(const Options& o, std::ostream& out, std::ostream& err) {
  const auto spec = parse_spec(o.spec);
  auto report = o.semi ? lambda_lin_semi(spec) : lambda_lin(spec);
  if (o.verify) {
    report.maximality = verify_maximality(spec, resolve_bounds(o, spec), candidate_cap_from_env());
  }
  if (o.format == "json") {
    out << io::dump(io::jump_report_to_json(report));
  } else {
    out << "spec " << spec.to_string() << "\n";
    if (report.semi_quasihomogeneous) out << "semi_quasihomogeneous yes\n";
    out << "d " << report.d << "\n"
        << "t " << report.t << "\n"
        << "w " << report.w << "\n"
        << "mu " << report.mu_d << "\n"
        << "mu_E " << report.mu_e << "\n"
        << "lambda_lin " << report.lambda_lin << "\n"
        << "D " << canonical_key(report.minimal) << "\n"
        << "E_D " << canonical_key(report.neighbour) << "\n"
        << "witness " << embedding_text(report.witness.embedding) << "\n"
        << "ord_nu " << join(report.witness.ord_nu) << "\n"
        << "ord_kappa " << join(report.witness.ord_kappa) << "\n";
    if (report.maximality) {
      print_maximality_text(*report.maximality, out);
    } else {
      out << "status unverified\n";
    }
  }
  if (report.maximality && !report.maximality->contradictions.empty()) {
    err << "maximality contradicted by " << report.maximality->contradictions.size()
        << " adjacent type(s)\n";
    return kExitContradiction;
  }
  return kExitOk;
}

int cmd_adjacent(const Options& o, std::ostream& out) {
  const auto source = load_type(o.source);
  const auto target = load_type(o.target);
  const int bound = o.extra_bound >= 0 ? o.extra_bound : default_extra_bound(target);
  const auto verdict = linear_adjacent(source, target, bound);
  if (o.format == "json") {
    out << io::dump(io::verdict_to_json(verdict, target));
    return kExitOk;
  }
  out << "source " << source.key << "\n" << "target " << target.key << "\n";
  if (const auto* yes = std::get_if<Adjacent>(&verdict)) {
    out << "adjacent yes\n"
        << "representative " << canonical_key(yes->representative) << "\n"
        << "embedding " << embedding_text(yes->witness.embedding) << "\n"
        << "ord_nu " << join(yes->witness.ord_nu) << "\n"
        << "ord_kappa " << join(yes->witness.ord_kappa) << "\n";
  } else {
    out << "adjacent no\n" << "extra_bound " << bound << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto spec = parse_spec(o.spec);
  const auto report = verify_maximality(spec, resolve_bounds(o, spec), candidate_cap_from_env());
  if (o.format == "json") {
    out << io::dump(io::maximality_to_json(report));
  } else {
    out << "spec " << spec.to_string() << "\n"
        << "mu " << report.mu << "\n"
        << "lambda_lin " << report.lambda_lin << "\n";
    print_maximality_text(report, out);
  }
  if (!report.contradictions.empty()) {
    err << "maximality contradicted by " << report.contradictions.size() << " adjacent type(s)\n";
    return kExitContradiction;
  }
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  EnumerationBounds bounds{o.max_vertices, o.max_weight, candidate_cap_from_env()};
  enumerate_minimal_diagrams(bounds, [&](const WeightedDiagram& w) {
    if (o.format == "json") {
      out << io::diagram_to_json(w).dump() << "\n";
    } else {
      out << canonical_key(w) << " mu=" << milnor_number(w) << "\n";
    }
  });
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enriques diagrams, Milnor numbers and linear adjacency jumps"};
  app.name("enriques");
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> text_json{"text", "json"};

  auto* info = app.add_subcommand("info", "Print the invariants derived from a spec");
  info->add_option("spec", o.spec, "k,l,p,q or [x*][y*](x^p+y^q)")->required();
  info->add_option("--format", o.format)->check(CLI::IsMember(text_json));

  auto* diagram = app.add_subcommand("diagram", "Emit the Enriques diagram of a spec");
  diagram->add_option("spec", o.spec)->required();
  diagram->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "dot"}));
  auto* minimal = diagram->add_flag("--minimal", o.minimal, "Minimal diagram");
  auto* complete = diagram->add_flag("--complete", o.complete, "Complete diagram (default)");
  auto* neighbour =
      diagram->add_flag("--neighbour", o.neighbour, "Jump-realizing neighbour of the minimal diagram");
  minimal->excludes(complete);
  neighbour->excludes(complete);
  neighbour->excludes(minimal);

  auto* mu = app.add_subcommand("mu", "Print the Milnor number");
  mu->add_option("spec", o.spec)->required();
  mu->add_flag("--check", o.check, "Compare against the weighted-homogeneous formula");

  auto* jump = app.add_subcommand("jump", "Print the linear jump report");
  jump->add_option("spec", o.spec)->required();
  jump->add_option("--format", o.format)->check(CLI::IsMember(text_json));
  jump->add_flag("--semi", o.semi, "Spec is the initial part of a semi-quasihomogeneous germ");
  jump->add_flag("--verify", o.verify, "Also run the bounded maximality check");
  jump->add_option("--max-vertices", o.max_vertices)->check(CLI::PositiveNumber);
  jump->add_option("--max-weight", o.max_weight)->check(CLI::PositiveNumber);
  jump->add_option("--extra-bound", o.extra_bound)->check(CLI::NonNegativeNumber);

  auto* adjacent = app.add_subcommand("adjacent", "Decide linear adjacency of two types");
  adjacent->add_option("source", o.source, "Spec or diagram JSON file")->required();
  adjacent->add_option("target", o.target, "Spec or diagram JSON file")->required();
  adjacent->add_option("--extra-bound", o.extra_bound)->check(CLI::NonNegativeNumber);
  adjacent->add_option("--format", o.format)->check(CLI::IsMember(text_json));

  auto* verify = app.add_subcommand("verify", "Bounded check of jump maximality");
  verify->add_option("spec", o.spec)->required();
  verify->add_option("--max-vertices", o.max_vertices)->check(CLI::PositiveNumber);
  verify->add_option("--max-weight", o.max_weight)->check(CLI::PositiveNumber);
  verify->add_option("--extra-bound", o.extra_bound)->check(CLI::NonNegativeNumber);
  verify->add_option("--format", o.format)->check(CLI::IsMember(text_json));

  auto* enumerate = app.add_subcommand("enumerate", "Stream minimal diagrams up to isomorphism");
  enumerate->add_option("--max-vertices", o.max_vertices)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--max-weight", o.max_weight)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--format", o.format)->check(CLI::IsMember(text_json));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (info->parsed()) return cmd_info(o, out);
    if (diagram->parsed()) return cmd_diagram(o, out);
    if (mu->parsed()) return cmd_mu(o, out);
    if (jump->parsed()) return cmd_jump(o, out, err);
    if (adjacent->parsed()) return cmd_adjacent(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kExitContradiction;
  }
  return kExitUsage;
}

}  // namespace enriques
