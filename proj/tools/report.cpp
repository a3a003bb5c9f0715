#include "report.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI/CLI.hpp>

#include "frobkit/algebra_file.hpp"
#include "frobkit/bordism.hpp"

namespace frobkit::cli {

json graded_json(const GradedDims& d) {
  json dims = json::object();
  for (const auto& [deg, v] : d.dims) dims[std::to_string(deg)] = v;
  json out;
  out["dims"] = dims;
  out["valid_through"] = d.valid_through;
  return out;
}

json algebra_json(const Algebra& a) {
  json out;
  out["label"] = a.name();
  out["field"] = a.field().name();
  out["dim"] = a.dim();
  out["basis"] = a.labels();
  return out;
}

namespace {

const char* status_name(AxiomStatus s) {
  switch (s) {
    case AxiomStatus::Pass: return "Pass";
    case AxiomStatus::Fail: return "Fail";
    case AxiomStatus::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

const char* field_verdict_name(FieldVerdict v) {
  switch (v) {
    case FieldVerdict::True: return "True";
    case FieldVerdict::False: return "False";
    case FieldVerdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

}  // namespace

json axiom_json(const AxiomCheck& c) {
  json out;
  out["name"] = c.name;
  out["status"] = status_name(c.status);
  out["lhs"] = graded_json(c.lhs);
  out["rhs"] = graded_json(c.rhs);
  out["witnessed_degrees"] = c.witnessed_degrees;
  if (c.status == AxiomStatus::Fail) out["fail_degree"] = c.fail_degree;
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

json frobenius_json(const FrobeniusReport& r) {
  json out;
  out["cutoff"] = r.cutoff;
  out["all_pass"] = r.all_pass();
  out["any_fail"] = r.any_fail();
  json ax = json::array();
  for (const auto& c : r.axioms) ax.push_back(axiom_json(c));
  out["axioms"] = ax;
  return out;
}

json obstruction_json(const ObstructionReport& r) {
  json out;
  out["reduced"] = r.reduced;
  out["blocks_found"] = r.blocks_found;
  out["is_field"] = field_verdict_name(r.field);
  out["hom_diag_to_free"] = graded_json(r.hom_diag_to_free_dims);
  out["hom_dim"] = r.hom_diag_to_free_dims.at(0);
  out["verdict"] = verdict_name(r.verdict);
  return out;
}

json document(const std::string& command, json args, json data, double seconds) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = {{"name", command}, {"args", std::move(args)}};
  out["data"] = std::move(data);
  out["timing"] = {{"wall_seconds", seconds}};
  return out;
}

json error_document(const std::string& command, json args, const std::string& kind, const std::string& message,
                    json extra) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = {{"name", command}, {"args", std::move(args)}};
  json e = {{"kind", kind}, {"message", message}};
  for (auto& [k, v] : extra.items()) e[k] = v;
  out["error"] = e;
  return out;
}

int default_cutoff() {
  const char* env = std::getenv("FROBKIT_MAX_DEGREE");
  if (env == nullptr || *env == '\0') return 4;
  std::size_t used = 0;
  int v = -1;
  try {
    v = std::stoi(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(env).size() || v < 0) throw Error("FROBKIT_MAX_DEGREE must be a nonnegative integer");
  return v;
}

namespace {

struct Outcome {
  json data;
  int code = kOk;
};

Outcome cmd_frobcheck(const Algebra& a, int cutoff) {
  FrobeniusReport r = verify_frobenius(a, cutoff);
  json data;
  data["algebra"] = algebra_json(a);
  data["cutoff"] = cutoff;
  data["frobenius"] = frobenius_json(r);
  return {data, r.any_fail() ? kVerifiedFailure : kOk};
}

Outcome cmd_surface(const Algebra& a, int genus, int cutoff) {
  json data;
  data["algebra"] = algebra_json(a);
  data["cutoff"] = cutoff;
  data["genus"] = genus;
  data["state_space"] = graded_json(evaluate_closed_surface(a, genus, cutoff));
  return {data, kOk};
}

Outcome cmd_eval(const std::string& program, const Algebra& a, int cutoff) {
  ExprPtr e = parse_bordism(program);
  CompiledProgram p = compile_bordism(e, a, cutoff);
  Evaluation r = evaluate(p);
  json data;
  data["algebra"] = algebra_json(a);
  data["cutoff"] = cutoff;
  data["program"] = print_bordism(*e);
  data["expanded"] = print_bordism(*p.expr);
  data["arity"] = {{"in", e->in}, {"out", e->out}};
  data["plan_steps"] = p.plan.size();
  data["closed"] = r.closed;
  data["homology"] = graded_json(r.closed ? r.dims : kernel_dims(r.kernel, std::min(cutoff, r.kernel.valid_through())));
  return {data, kOk};
}

Outcome cmd_nogo(const Algebra& a, int cutoff) {
  ObstructionReport r = no_go_check(a, cutoff);
  json data;
  data["algebra"] = algebra_json(a);
  data["cutoff"] = cutoff;
  data["obstruction"] = obstruction_json(r);
  // Reduced algebras split into points, and each point carries a nonzero Hom.
  const bool contradiction = (r.verdict == Verdict::FieldPoint || r.verdict == Verdict::DirectSumOfPoints) &&
                             r.hom_diag_to_free_dims.at(0) == 0;
  data["contradiction"] = contradiction;
  return {data, contradiction ? kVerifiedFailure : kOk};
}

Outcome cmd_hochschild(const Algebra& a, int cutoff) {
  Module d = diagonal_module(a);
  TorResult t = tor(d, d, cutoff);
  GradedDims dims;
  dims.valid_through = cutoff;
  for (int n = 0; n <= cutoff; ++n) dims.dims[n] = t.dims.at(n);
  json data;
  data["algebra"] = algebra_json(a);
  data["cutoff"] = cutoff;
  data["hochschild"] = graded_json(dims);
  json seq = json::array();
  for (int n = 0; n <= cutoff; ++n) seq.push_back(dims.at(n));
  data["sequence"] = seq;
  return {data, kOk};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"frobkit: exact 2D TQFT and Frobenius-object computations over finite-dimensional algebras"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "Write the JSON document to this file instead of stdout");

  std::string alg_path, prog_path;
  int max_degree = -1;
  int genus = 0;

  auto* frob = app.add_subcommand("frobcheck", "Verify the Frobenius algebra axioms for the diagonal kernels");
  frob->add_option("algebra", alg_path, "Algebra definition file")->required();
  frob->add_option("--max-degree", max_degree, "Highest homological degree checked")->check(CLI::NonNegativeNumber);

  auto* surf = app.add_subcommand("surface", "State space of the closed genus-g surface");
  surf->add_option("algebra", alg_path, "Algebra definition file")->required();
  surf->add_option("--genus", genus, "Genus")->required()->check(CLI::NonNegativeNumber);
  surf->add_option("--max-degree", max_degree, "Highest homological degree reported")->check(CLI::NonNegativeNumber);

  auto* ev = app.add_subcommand("eval", "Evaluate a bordism program");
  ev->add_option("program", prog_path, "Bordism program file")->required();
  ev->add_option("algebra", alg_path, "Algebra definition file")->required();
  ev->add_option("--max-degree", max_degree, "Highest homological degree reported")->check(CLI::NonNegativeNumber);

  auto* nogo = app.add_subcommand("nogo", "Obstruction spaces for extending to a (1+1+1)-theory");
  nogo->add_option("algebra", alg_path, "Algebra definition file")->required();
  nogo->add_option("--max-degree", max_degree, "Highest Ext degree reported")->check(CLI::NonNegativeNumber);

  auto* hh = app.add_subcommand("hochschild", "Hochschild homology Tor over A⊗A of the diagonal with itself");
  hh->add_option("algebra", alg_path, "Algebra definition file")->required();
  hh->add_option("--max-degree", max_degree, "Highest homological degree reported")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "frobkit: " << e.what() << "\n";
    return kInputError;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  json args;
  args["algebra"] = alg_path;
  if (sub == ev) args["program"] = prog_path;
  if (sub == surf) args["genus"] = genus;

  auto emit = [&](const json& doc) {
    if (output.empty()) {
      out << doc.dump(2) << "\n";
    } else {
      std::ofstream f(output);
      f << doc.dump(2) << "\n";
      if (!f) err << "frobkit: cannot write " << output << "\n";
    }
  };

  const auto t0 = std::chrono::steady_clock::now();
  try {
    const int cutoff = max_degree >= 0 ? max_degree : default_cutoff();
    args["max_degree"] = cutoff;
    Algebra a = load_algebra_file(alg_path);
    Outcome o;
    if (sub == frob)
      o = cmd_frobcheck(a, cutoff);
    else if (sub == surf)
      o = cmd_surface(a, genus, cutoff);
    else if (sub == ev)
      o = cmd_eval(read_file(prog_path), a, cutoff);
    else if (sub == nogo)
      o = cmd_nogo(a, cutoff);
    else
      o = cmd_hochschild(a, cutoff);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(document(name, args, o.data, secs));
    return o.code;
  } catch (const TruncationExhausted& e) {
    err << "frobkit: " << e.what() << "\n";
    emit(error_document(name, args, "TruncationExhausted", e.what(),
                        {{"requested", e.requested()}, {"bound", e.bound()}}));
    return kTruncation;
  } catch (const SyntaxError& e) {
    err << "frobkit: " << prog_path << ": " << e.what() << "\n";
    emit(error_document(name, args, "SyntaxError", e.what(),
                        {{"position", e.position()}, {"line", e.line()}, {"column", e.column()},
                         {"expected", e.expected()}}));
    return kInputError;
  } catch (const ArityError& e) {
    err << "frobkit: " << prog_path << ": " << e.what() << "\n";
    emit(error_document(name, args, "ArityError", e.what(),
                        {{"node", e.node()}, {"expected", e.expected()}, {"found", e.found()}}));
    return kInputError;
  } catch (const AlgebraFileError& e) {
    err << "frobkit: " << e.what() << "\n";
    emit(error_document(name, args, "AlgebraFileError", e.what(), {{"line", e.line()}}));
    return kInputError;
  } catch (const Error& e) {
    err << "frobkit: " << e.what() << "\n";
    emit(error_document(name, args, "Error", e.what()));
    return kInputError;
  } catch (const std::exception& e) {
    err << "frobkit: internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace frobkit::cli
