#include "pinchlink/cli.hpp"

#include "pinchlink/corpus.hpp"
#include "pinchlink/error.hpp"
#include "pinchlink/normalization.hpp"
#include "pinchlink/serialization.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace pinchlink::cli {

namespace {

enum class Format { text, json };

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw InputError("cannot open '" + path + "'");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

std::string source_name(const std::string& path) { return path == "-" ? "<stdin>" : path; }

SingularLinkDescription load_document(const std::string& path, std::istream& in) {
  return io::document_from_json(io::parse_json(read_input(path, in), source_name(path)));
}

io::Json moves_json(const ReductionResult& r) {
  io::Json moves = io::Json::array();
  for (const auto& m : r.moves) {
    moves.push_back({{"move", to_string(m.kind)}, {"e", m.removed.euler}, {"valence", m.valence}});
  }
  return moves;
}

void print_h1(const SingularLinkDescription& s, Format format, std::ostream& out) {
  const auto group = h1_singular_link(s);
  if (format == Format::json) {
    out << io::to_json(group).dump(2) << '\n';
  } else {
    out << group.to_string() << '\n';
  }
}

void print_normalize(const SingularLinkDescription& s, Format format, std::ostream& out) {
  const auto result = normalize(s);
  if (format == Format::json) {
    io::Json components = io::Json::array();
    for (const auto& c : result.components) {
      components.push_back({{"closed", io::to_json(c.closed)},
                            {"reduced", io::to_json(c.reduction.graph)},
                            {"s3_components", c.reduction.sphere_components},
                            {"s3", c.is_s3()},
                            {"h1", io::to_json(first_homology(c.closed))},
                            {"moves", moves_json(c.reduction)}});
    }
    out << io::Json{{"components", components}}.dump(2) << '\n';
    return;
  }
  out << "components: " << result.components.size() << '\n';
  for (std::size_t i = 0; i < result.components.size(); ++i) {
    const auto& c = result.components[i];
    out << "component " << i << ": ";
    if (c.is_s3()) {
      out << "S3";
    } else {
      out << "reduced " << io::to_json(c.reduction.graph).dump() << " + " << c.reduction.sphere_components
          << " S3, H_1 = " << first_homology(c.closed).to_string();
    }
    out << " (" << c.reduction.moves.size() << " moves)\n";
  }
}

void print_check(const SingularLinkDescription& s, Format format, std::ostream& out) {
  const bool manifold = is_topological_manifold(s);
  const auto report = obstruction_report(s);
  const auto verdict = check_smooth(s);
  if (format == Format::json) {
    out << io::Json{{"manifold", manifold},
                    {"h1", io::to_json(report.h1)},
                    {"obstruction", to_string(report)},
                    {"smooth", to_string(verdict)}}
               .dump(2)
        << '\n';
    return;
  }
  out << "manifold: " << (manifold ? "true" : "false") << '\n'
      << "h1: " << report.h1.to_string() << '\n'
      << "obstruction: " << to_string(report) << '\n'
      << "smooth: " << to_string(verdict) << '\n';
}

void print_reduce(const PlumbingGraph& g, Format format, std::ostream& out) {
  const auto result = reduce(g);
  const auto certificate = is_s3_certificate(g);
  if (format == Format::json) {
    out << io::Json{{"reduced", io::to_json(result.graph)},
                    {"s3_components", result.sphere_components},
                    {"s3_certificate", to_string(certificate)},
                    {"moves", moves_json(result)}}
               .dump(2)
        << '\n';
    return;
  }
  out << "reduced: " << io::to_json(result.graph).dump() << '\n'
      << "s3 components: " << result.sphere_components << '\n'
      << "moves: " << result.moves.size() << '\n'
      << "s3 certificate: " << to_string(certificate) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of links of non-normal surface germs", "pinchlink"};
  app.require_subcommand(1);
  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string path;
  auto* h1 = app.add_subcommand("h1", "First homology of the singular link");
  h1->add_option("input", path, "Document file, or - for standard input")->required();
  auto* norm = app.add_subcommand("normalize", "Link of the normalization as reduced plumbing graphs");
  norm->add_option("input", path, "Document file, or - for standard input")->required();
  auto* check = app.add_subcommand("check", "Obstruction report and smoothness verdict");
  check->add_option("input", path, "Document file, or - for standard input")->required();
  auto* red = app.add_subcommand("reduce", "Reduce a closed plumbing graph");
  red->add_option("graph", path, "Graph file, or - for standard input")->required();
  auto* validate = app.add_subcommand("validate", "Check that a document is well formed");
  validate->add_option("input", path, "Document file, or - for standard input")->required();
  std::string example_name;
  int degree = 2;
  auto* example = app.add_subcommand("example", "Print a built-in example document");
  example->add_option("name", example_name, "curling-d, two-planes or cylinder")->required();
  example->add_option("--d", degree, "Branch degree for curling-d")->capture_default_str();
  for (auto* sub : {h1, norm, check, red, validate, example}) {
    sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "pinchlink: " << e.what() << '\n';
    return 2;
  }
  const auto format = format_name == "json" ? Format::json : Format::text;

  try {
    if (*h1) {
      print_h1(load_document(path, in), format, out);
    } else if (*norm) {
      print_normalize(load_document(path, in), format, out);
    } else if (*check) {
      print_check(load_document(path, in), format, out);
    } else if (*red) {
      print_reduce(io::graph_from_json(io::parse_json(read_input(path, in), source_name(path))), format, out);
    } else if (*validate) {
      const auto s = load_document(path, in);
      out << "ok: " << s.curves().size() << " curves, " << s.attachments().size() << " boundary tori\n";
    } else if (*example) {
      out << corpus::example_document(example_name, degree).dump(2) << '\n';
    }
  } catch (const InputError& e) {
    err << "pinchlink: " << e.what() << '\n';
    return 2;
  } catch (const InvariantViolation& e) {
    err << "pinchlink: internal invariant violated: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "pinchlink: internal error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace pinchlink::cli
