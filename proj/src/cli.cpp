#include "syzmirror/cli.hpp"

#include "syzmirror/descriptor.hpp"
#include "syzmirror/export_formats.hpp"
#include "syzmirror/verify.hpp"

#include <CLI11.hpp>

namespace syzmirror {

namespace {

struct Options {
  int n = 0;
  int alpha = 0;
  std::string metric = "fs";
  int resolution = 40;
  std::string format;
  std::vector<std::string> in;
  std::string out;
  std::string mode = "metric";
  std::string check;
};

void emit(const Options& o, std::ostream& out, std::string_view document) {
  if (o.out.empty()) {
    out << document;
  } else {
    write_file(o.out, document);
  }
}

void require_parameters(const Options& o) {
  if (o.n < 1) throw UsageError("--n must be >= 1");
  if (o.alpha < 1) throw UsageError("--alpha must be >= 1");
}

PolytopeDescriptor load(const std::string& path) {
  try {
    return parse_descriptor(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Polytope load_delta(const Options& o) {
  if (o.in.size() != 1) throw UsageError("expected exactly one --in file");
  const PolytopeDescriptor d = load(o.in.front());
  if (d.kind != DescriptorKind::kDelta) {
    throw ParseError(o.in.front() + ": field 'kind': expected delta, got " + to_string(d.kind));
  }
  Polytope p = to_polytope(d);
  if (!(p == moment_polytope(p.n(), p.alpha()))) {
    throw ParseError(o.in.front() + ": field 'vertices': not the moment simplex alpha * e_i");
  }
  return p;
}

int cmd_gen(const Options& o, std::ostream& out) {
  require_parameters(o);
  emit(o, out, render_json(describe(moment_polytope(o.n, o.alpha), DescriptorKind::kDelta)));
  return kExitOk;
}

int cmd_dual(const Options& o, std::ostream& out) {
  const Polytope delta = load_delta(o);
  PolytopeDescriptor d;
  if (o.mode == "metric") {
    const Rational c = polar_threshold(delta.n(), delta.alpha());
    d = describe(metric_polar(delta, c), DescriptorKind::kMetricPolar);
    d.threshold = c;
  } else if (o.mode == "batyrev") {
    const BatyrevDual dual = batyrev_dual(delta);
    d = PolytopeDescriptor{DescriptorKind::kDual, delta.n(), delta.alpha(), dual.vertices, std::nullopt,
                           dual.is_reflexive};
  } else {
    throw UsageError("--mode must be metric or batyrev");
  }
  emit(o, out, render_json(d));
  return kExitOk;
}

int cmd_syz(const Options& o, std::ostream& out) {
  int n = o.n;
  int alpha = o.alpha;
  if (!o.in.empty()) {
    const Polytope delta = load_delta(o);
    n = delta.n();
    alpha = delta.alpha();
  }
  Options resolved = o;
  resolved.n = n;
  resolved.alpha = alpha;
  require_parameters(resolved);
  emit(o, out, render_json(describe(syz_polytope(n, alpha))));
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Check check = parse_check(o.check);
  VerifyParams params;
  params.n = o.n;
  params.alpha = o.alpha;
  params.resolution = o.resolution;
  try {
    params.metric = parse_metric(o.metric);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const VerificationReport report = run_check(check, params);
  emit(o, out, report.to_json().dump(2) + "\n");
  return report.pass ? kExitOk : kExitVerifyFail;
}

int cmd_export(const Options& o, std::ostream& out) {
  const ExportFormat format = parse_format(o.format);
  if (o.in.empty()) throw UsageError("export needs --in");
  std::vector<PolytopeDescriptor> layers;
  for (const auto& path : o.in) layers.push_back(load(path));
  emit(o, out, render(format, layers));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Moment polytopes of P^n, their SYZ duals and Batyrev duals"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Write the moment polytope Delta(n, alpha) as a JSON descriptor");
  gen->add_option("--n", o.n, "Dimension n >= 1")->required();
  gen->add_option("--alpha", o.alpha, "Kaehler scale alpha >= 1")->required();
  gen->add_option("--out", o.out, "Output path (default stdout)");

  auto* dual = app.add_subcommand("dual", "Metric polar or Batyrev lattice dual of a delta descriptor");
  dual->add_option("--in", o.in, "Delta descriptor")->required()->expected(1);
  dual->add_option("--mode", o.mode, "metric or batyrev")->check(CLI::IsMember({"metric", "batyrev"}));
  dual->add_option("--out", o.out, "Output path (default stdout)");

  auto* syz = app.add_subcommand("syz", "Convex hull of the face centers q_i");
  syz->add_option("--n", o.n, "Dimension n >= 1");
  syz->add_option("--alpha", o.alpha, "Kaehler scale alpha >= 1");
  syz->add_option("--in", o.in, "Delta descriptor (instead of --n/--alpha)")->expected(1);
  syz->add_option("--out", o.out, "Output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run a verification check and print a JSON report");
  verify->add_option("check", o.check, "lemma, scaling, syz-min, bipolar or reflexive")->required();
  verify->add_option("--n", o.n, "Dimension n")->required();
  verify->add_option("--alpha", o.alpha, "Kaehler scale alpha")->required();
  verify->add_option("--metric", o.metric, "flat or fs (grid checks)");
  verify->add_option("--resolution", o.resolution, "Grid subdivisions per edge (grid checks)");
  verify->add_option("--out", o.out, "Output path (default stdout)");

  auto* exp = app.add_subcommand("export", "Convert a descriptor to json, palp, svg or obj");
  exp->add_option("--in", o.in, "Descriptor; repeat to overlay layers in svg")->required();
  exp->add_option("--format", o.format, "json, palp, svg or obj")->required();
  exp->add_option("--out", o.out, "Output path (default stdout)");

  std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (dual->parsed()) return cmd_dual(o, out);
    if (syz->parsed()) return cmd_syz(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (exp->parsed()) return cmd_export(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitIo;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace syzmirror
