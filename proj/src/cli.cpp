#include "rankforge/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "rankforge/completion.hpp"
#include "rankforge/errors.hpp"
#include "rankforge/genmin.hpp"
#include "rankforge/io.hpp"
#include "rankforge/linalg.hpp"
#include "rankforge/oracle.hpp"
#include "rankforge/smodule.hpp"

namespace rankforge {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const Vector& v) { return Json(v); }

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row_vector(r));
  return rows;
}

Json rows_json(const std::vector<Vector>& vs) {
  Json rows = Json::array();
  for (const auto& v : vs) rows.push_back(v);
  return rows;
}

Json matrices_json(std::span<const Matrix> ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

bool is_number_array(const Json& j) {
  return std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_number(); });
}

void render_scalar(std::ostream& out, const Json& j) {
  if (j.is_string()) {
    out << j.get<std::string>();
  } else {
    out << j.dump();
  }
}

void render_numbers(std::ostream& out, const Json& arr, const char* sep) {
  bool first = true;
  for (const auto& e : arr) {
    out << (first ? "" : sep) << e.dump();
    first = false;
  }
}

// Text report: scalars and flat lists as key=value, nested lists as indented blocks.
void render_value(std::ostream& out, const Json& j, const std::string& indent);

void render_object(std::ostream& out, const Json& obj, const std::string& indent) {
  for (const auto& [key, value] : obj.items()) {
    if (value.is_array() && !is_number_array(value)) {
      out << indent << key << ":\n";
      render_value(out, value, indent + "  ");
    } else if (value.is_object()) {
      out << indent << key << ":\n";
      render_object(out, value, indent + "  ");
    } else {
      out << indent << key << '=';
      if (value.is_array()) {
        render_numbers(out, value, ",");
      } else {
        render_scalar(out, value);
      }
      out << '\n';
    }
  }
}

void render_value(std::ostream& out, const Json& j, const std::string& indent) {
  std::size_t index = 0;
  for (const auto& e : j) {
    if (e.is_array() && is_number_array(e)) {
      out << indent;
      render_numbers(out, e, " ");
      out << '\n';
    } else if (e.is_array()) {
      out << indent << '[' << index << "]\n";
      render_value(out, e, indent + "  ");
    } else if (e.is_object()) {
      out << indent << '-';
      bool first = true;
      for (const auto& [key, value] : e.items()) {
        out << (first ? " " : " ") << key << '=';
        if (value.is_array()) {
          render_numbers(out, value, ",");
        } else {
          render_scalar(out, value);
        }
        first = false;
      }
      out << '\n';
    } else {
      out << indent;
      render_scalar(out, e);
      out << '\n';
    }
    ++index;
  }
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;

  void emit(const Json& report) const {
    if (json) {
      out << report.dump(2) << '\n';
    } else {
      render_object(out, report, "");
    }
  }
};

void print_warnings(std::ostream& err, const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) err << "warning: " << w << '\n';
}

Pencil load_pencil_warn(const std::string& path, std::ostream& err) {
  std::vector<std::string> warnings;
  Pencil p = load_pencil(path, &warnings);
  print_warnings(err, warnings);
  return p;
}

SModule load_module_warn(const std::string& path, std::ostream& err) {
  std::vector<std::string> warnings;
  SModule m = load_module(path, &warnings);
  print_warnings(err, warnings);
  return m;
}

std::string identity_line(const WitnessReport& w) {
  std::ostringstream ss;
  ss << "rk = dimU - (dimW - dimLW): " << w.rank_h << " = " << w.dim_U << " - (" << w.dim_W << " - " << w.dim_LW
     << ")";
  return ss.str();
}

void add_witness(Json& report, const WitnessReport& w) {
  report["witness"] = to_json(w.W.basis());
  report["dim_U"] = w.dim_U;
  report["dim_W"] = w.dim_W;
  report["dim_LW"] = w.dim_LW;
  report["identity"] = identity_line(w);
}

Vector parse_assignment(const std::string& text, const FieldModulus& mod, std::size_t expected) {
  Vector v = parse_vector(text, mod);
  if (v.size() != expected) {
    throw ParseError(0, "expected " + std::to_string(expected) + " value(s), got " + std::to_string(v.size()));
  }
  return v;
}

FieldPolicy policy_of(bool allow_small) { return allow_small ? FieldPolicy::kExhaustive : FieldPolicy::kStrict; }

const char* policy_name(FieldPolicy p) { return p == FieldPolicy::kStrict ? "strict" : "exhaustive"; }

EnumerationCap cap_from(std::optional<std::uint64_t> flag) {
  EnumerationCap cap;
  if (flag) {
    cap.max_states = *flag;
  } else if (const char* env = std::getenv("RANKFORGE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw ParseError(0, "RANKFORGE_CAP must be a positive integer");
    cap.max_states = v;
  }
  return cap;
}

std::vector<Vector> standard_basis(std::size_t n) {
  std::vector<Vector> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(unit_vector(n, i));
  return b;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write '" + path + "'");
  f << content;
}

// ---- commands ---------------------------------------------------------------

void cmd_complete(const Context& ctx, const std::string& input) {
  const Pencil pencil = load_pencil_warn(input, ctx.err);
  const CompletionResult res = complete_max_rank(pencil);
  for (std::size_t i : res.dropped_zero_generators) ctx.err << "warning: B" << i << " is zero and was ignored\n";
  Json report;
  report["rank"] = res.rank;
  report["x"] = to_json(res.assignment);
  add_witness(report, res.witness);
  report["rank_trace"] = res.rank_trace;
  report["augmentations"] = res.chains.size();
  ctx.emit(report);
}

void cmd_check_max(const Context& ctx, const std::string& input, const std::string& at) {
  const Pencil pencil = load_pencil_warn(input, ctx.err);
  const Vector x = parse_assignment(at, pencil.modulus(), pencil.num_vars());
  const Matrix h = pencil.evaluate(x);
  const MaxRankVerdict verdict = check_max_rank(pencil.coefficients(), h);
  Json report;
  report["rank"] = rank(h);
  if (const auto* c = std::get_if<Certified>(&verdict)) {
    report["verdict"] = "Certified";
    add_witness(report, c->witness);
  } else {
    const EscapeChain& chain = std::get<NotCertified>(verdict).chain;
    report["verdict"] = "NotCertified";
    report["chain_length"] = chain.length();
    report["chain_generators"] = chain.generator_indices;
    report["chain_start"] = to_json(chain.start());
    report["chain_end"] = to_json(chain.chain_vectors.back());
  }
  ctx.emit(report);
}

void cmd_min_generators(const Context& ctx, const std::string& input, bool allow_small) {
  const SModule m = load_module_warn(input, ctx.err);
  const FieldPolicy policy = policy_of(allow_small);
  const MinGeneratorsResult res = minimize_generators(m, policy);
  Json report;
  report["count"] = res.count;
  report["field_policy"] = policy_name(policy);
  report["generators"] = rows_json(res.generators);
  Json probes = Json::array();
  for (std::size_t i = 0; i < res.probes.size(); ++i) {
    probes.push_back({{"budget", i + 1}, {"found", res.probes[i].found}, {"iterations", res.probes[i].iterations}});
  }
  report["probes"] = probes;
  ctx.emit(report);
}

void cmd_generators(const Context& ctx, const std::string& input, std::size_t budget, bool allow_small) {
  const SModule m = load_module_warn(input, ctx.err);
  const FieldPolicy policy = policy_of(allow_small);
  const BudgetResult res = generators_with_budget(m, budget, policy);
  Json report;
  report["budget"] = budget;
  report["found"] = res.found;
  report["field_policy"] = policy_name(policy);
  if (!res.found) report["insufficiency_certified"] = res.insufficiency_certified;
  report["generators"] = rows_json(res.generators);
  report["iterations"] = res.iterations;
  Json trace = Json::array();
  for (const auto& ev : res.trace) {
    trace.push_back({{"loop", ev.kind == LoopEvent::Kind::kInner ? "inner" : "outer"},
                     {"dim_W", ev.dim_W},
                     {"dim_W_prime", ev.dim_W_prime}});
  }
  report["trace"] = trace;
  ctx.emit(report);
}

void cmd_cyclic_step(const Context& ctx, const std::string& input, const std::string& at) {
  const SModule m = load_module_warn(input, ctx.err);
  const Vector u = parse_assignment(at, m.modulus(), m.dim());
  const AlgebraBasis alg = enveloping_algebra_basis(m);
  const CyclicStep step = cyclic_increment(m, alg, u);
  Json report;
  report["closure_dim"] = submodule_closure(m, std::span<const Vector>(&u, 1)).dim();
  if (const auto* imp = std::get_if<Improved>(&step)) {
    report["verdict"] = "Improved";
    report["u"] = to_json(imp->u);
    report["new_closure_dim"] = submodule_closure(m, std::span<const Vector>(&imp->u, 1)).dim();
  } else {
    report["verdict"] = "MaxCertified";
  }
  ctx.emit(report);
}

void cmd_hom_basis(const Context& ctx, const std::string& u_path, const std::string& v_path) {
  const SModule U = load_module_warn(u_path, ctx.err);
  const SModule V = load_module_warn(v_path, ctx.err);
  const auto basis = hom_basis(U, V);
  Json report;
  report["dim"] = basis.size();
  report["basis"] = matrices_json(basis);
  ctx.emit(report);
}

void cmd_dualize(const Context& ctx, const std::string& input, const std::string& output) {
  const SModule dual = dualize(load_module_warn(input, ctx.err));
  if (output.empty()) {
    write_module(ctx.out, dual);
    return;
  }
  std::ostringstream ss;
  write_module(ss, dual);
  write_file(output, ss.str());
  Json report;
  report["output"] = output;
  report["dim"] = dual.dim();
  ctx.emit(report);
}

Json cyclic_decoder(const CyclicReduction& red) {
  Json d;
  d["field"] = red.module.modulus().value();
  d["l_dim"] = red.l_dim;
  d["v_dim"] = red.v_dim;
  d["L_basis"] = matrices_json(red.L_basis);
  return d;
}

std::string module_text(const SModule& m) {
  std::ostringstream ss;
  write_module(ss, m);
  return ss.str();
}

void cmd_reduce(const Context& ctx, const std::string& input, const std::string& kind, const std::string& prefix) {
  const Pencil pencil = load_pencil_warn(input, ctx.err);
  const std::vector<Vector> U = standard_basis(pencil.cols());
  Json report;
  report["kind"] = kind;
  Json decoder;
  if (kind == "cyclic") {
    const CyclicReduction red = reduce_completion_to_cyclic(pencil.coefficients(), U);
    const std::string path = prefix + ".module";
    write_file(path, module_text(red.module));
    decoder = cyclic_decoder(red);
    decoder["kind"] = kind;
    decoder["module"] = path;
    decoder["decode"] = "w = (c, v): h = sum_t c[t] L_basis[t]; dim A(h, v) = 1 + rank h for h != 0";
    report["module"] = path;
    report["module_dim"] = red.module.dim();
  } else {
    const HomReduction red = kind == "injective-hom" ? reduce_nonsingular_to_injective_hom(pencil.coefficients(), U)
                                                     : reduce_to_surjective_hom(pencil.coefficients(), U);
    const std::string src = prefix + ".source.module";
    const std::string dst = prefix + ".target.module";
    write_file(src, module_text(red.source));
    write_file(dst, module_text(red.target));
    decoder = cyclic_decoder(red.cyclic);
    decoder["kind"] = kind;
    decoder["dual"] = red.dual;
    decoder["source"] = src;
    decoder["target"] = dst;
    decoder["decode"] = red.dual ? "phi: source -> target; w = first row of phi; h = sum_t w[t] L_basis[t]"
                                 : "phi: source -> target; w = first column of phi; h = sum_t w[t] L_basis[t]";
    report["source"] = src;
    report["source_dim"] = red.source.dim();
    report["target"] = dst;
    report["target_dim"] = red.target.dim();
  }
  const std::string sidecar = prefix + ".decoder.json";
  write_file(sidecar, decoder.dump(2) + "\n");
  report["decoder"] = sidecar;
  ctx.emit(report);
}

void cmd_oracle(const Context& ctx, const std::string& input, const std::string& kind, EnumerationCap cap) {
  Json report;
  report["kind"] = kind;
  report["cap"] = cap.max_states;
  if (kind == "completion") {
    const RankArgmax r = oracle_max_completion_rank(load_pencil_warn(input, ctx.err), cap);
    report["rank"] = r.rank;
    report["x"] = to_json(r.argmax);
  } else if (kind == "cyclic") {
    const CyclicArgmax r = oracle_max_cyclic_dim(load_module_warn(input, ctx.err), cap);
    report["dim"] = r.dim;
    report["v"] = to_json(r.argmax);
  } else {
    report["count"] = oracle_min_generators(load_module_warn(input, ctx.err), cap);
  }
  ctx.emit(report);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact maximum-rank completion and module generator tools over GF(p)", "rankforge"};
  app.require_subcommand(1);
  Context ctx{out, err};
  app.add_flag("--json", ctx.json, "Emit a single JSON object");

  std::string input, at, u_path, v_path, output, kind, prefix;
  std::size_t budget = 0;
  bool allow_small = false;
  std::optional<std::uint64_t> cap_flag;

  auto* complete = app.add_subcommand("complete", "Maximum-rank completion of a rank-one pencil");
  complete->add_option("--input", input, "Pencil file")->required();

  auto* check = app.add_subcommand("check-max", "Certify that an assignment attains the maximum rank");
  check->add_option("--input", input, "Pencil file")->required();
  check->add_option("--at", at, "Assignment x1,...,xn")->required();

  auto* mingen = app.add_subcommand("min-generators", "Minimum number of module generators");
  mingen->add_option("--input", input, "Module file")->required();
  mingen->add_flag("--allow-small-field", allow_small, "Search every field element when |F| <= 2 dim V");

  auto* gens = app.add_subcommand("generators", "Find at most --budget generators");
  gens->add_option("--input", input, "Module file")->required();
  gens->add_option("--budget", budget, "Number of generators")->required();
  gens->add_flag("--allow-small-field", allow_small, "Search every field element when |F| <= 2 dim V");

  auto* cyc = app.add_subcommand("cyclic-step", "One cyclic improvement step");
  cyc->add_option("--input", input, "Module file")->required();
  cyc->add_option("--at", at, "Vector v1,...,vn")->required();

  auto* hom = app.add_subcommand("hom-basis", "Basis of the homomorphism space U -> V");
  hom->add_option("--u", u_path, "Source module file")->required();
  hom->add_option("--v", v_path, "Target module file")->required();

  auto* dual = app.add_subcommand("dualize", "Dual module");
  dual->add_option("--input", input, "Module file")->required();
  dual->add_option("--output", output, "Write the module here instead of stdout");

  auto* reduce = app.add_subcommand("reduce", "Module reductions of the rank problem for L = span of all coefficients");
  reduce->add_option("--input", input, "Pencil file")->required();
  reduce->add_option("--kind", kind, "cyclic | injective-hom | surjective-hom")
      ->required()
      ->check(CLI::IsMember({"cyclic", "injective-hom", "surjective-hom"}));
  reduce->add_option("--out-prefix", prefix, "Prefix for the written files")->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force reference values");
  oracle->add_option("--input", input, "Pencil file (completion) or module file")->required();
  oracle->add_option("--kind", kind, "completion | cyclic | min-generators")
      ->required()
      ->check(CLI::IsMember({"completion", "cyclic", "min-generators"}));
  oracle->add_option("--cap", cap_flag, "Enumeration cap (default 2^24, or RANKFORGE_CAP)");

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", ctx.json, "Emit a single JSON object");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  try {
    if (complete->parsed()) {
      cmd_complete(ctx, input);
    } else if (check->parsed()) {
      cmd_check_max(ctx, input, at);
    } else if (mingen->parsed()) {
      cmd_min_generators(ctx, input, allow_small);
    } else if (gens->parsed()) {
      cmd_generators(ctx, input, budget, allow_small);
    } else if (cyc->parsed()) {
      cmd_cyclic_step(ctx, input, at);
    } else if (hom->parsed()) {
      cmd_hom_basis(ctx, u_path, v_path);
    } else if (dual->parsed()) {
      cmd_dualize(ctx, input, output);
    } else if (reduce->parsed()) {
      cmd_reduce(ctx, input, kind, prefix);
    } else if (oracle->parsed()) {
      cmd_oracle(ctx, input, kind, cap_from(cap_flag));
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const FieldTooSmall& e) {
    err << "field too small: " << e.what() << "\nrequired: |F| > " << e.required_bound() << '\n';
    return kExitFieldTooSmall;
  } catch (const InvariantBreach& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace rankforge
