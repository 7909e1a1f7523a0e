// Batch command-line surface for the qfejer library. Every subcommand reads
// --system (q2 | qp:<base> | qn) and --json; expression arguments starting
// with '@' name a JSON element file ('@-' reads standard input).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <qfejer/qfejer.hpp>

namespace {

using namespace qfejer;

struct Options {
  std::string system = "q2";
  bool system_given = false;
  bool json = false;
  long long probe_window = 64;
  long long kernel_budget = kDefaultKernelBudget;
};

struct Args {
  std::string expr;
  std::string expr2;
  std::string which;
  std::string h_text;
  std::string sample_text;
  std::string gens_text;
  long long p = 1;
  long long q = 1;
  long long n = 0;
  long long count = 1;
  long long nmax = 0;
  long long k = 0;
  bool csv = false;
};

SystemDescriptor active_system(const Options& opt) {
  return SystemDescriptor::parse(opt.system);
}

Element load_element(const std::string& arg, const Options& opt) {
  if (!arg.empty() && arg[0] == '@') {
    std::string path = arg.substr(1);
    std::string body;
    if (path == "-") {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      body = ss.str();
    } else {
      std::ifstream in(path);
      if (!in) throw Error("cannot open " + path);
      std::ostringstream ss;
      ss << in.rdbuf();
      body = ss.str();
    }
    Element e = element_from_json(Json::parse(body));
    if (opt.system_given && !(e.system() == active_system(opt)))
      throw SystemMismatchError("element file uses system " + e.system().name() +
                                ", --system says " + opt.system);
    return e;
  }
  return parse_element(arg, active_system(opt));
}

FolnerSequence folner_for(const SystemDescriptor& sys) {
  return sys.kind() == SystemKind::naturals ? FolnerSequence::prime_exponents()
                                            : FolnerSequence::cyclic();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

long long parse_ll(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw Error("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw Error("not an integer: '" + s + "'");
  return v;
}

HVec parse_hvec(const std::string& s) {
  HVec out;
  for (const std::string& part : split(s, ',')) out.push_back(parse_ll(part));
  return hvec_trim(out);
}

std::vector<HVec> parse_sample(const std::string& s) {
  std::vector<HVec> out;
  for (const std::string& part : split(s, ';')) out.push_back(parse_hvec(part));
  return out;
}

std::vector<long long> parse_gens(const std::string& s) {
  std::vector<long long> out;
  for (const std::string& part : split(s, ',')) out.push_back(parse_ll(part));
  return out;
}

void emit(const Options& opt, const Json& j, const std::string& text) {
  if (opt.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

std::string decomposition_to_text(const GradedDecomposition& dec) {
  std::string out;
  for (const auto& [d, comp] : dec) {
    if (!out.empty()) out += "\n";
    out += to_string(d) + ": " + to_text(comp);
  }
  return out.empty() ? "0" : out;
}

std::string sparse_vector_to_text(const SparseVector& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : v) {
    if (!out.empty()) out += "\n";
    out += std::to_string(k) + ": " + to_string(c);
  }
  return out;
}

std::string report_to_text(const ConvergenceReport& rep) {
  std::string out = "id: " + rep.id;
  for (const ConvergenceRow& r : rep.rows) {
    out += "\nn=" + std::to_string(r.n) + "  B_n=" + to_string(r.b_n) +
           "  lower_sq=" + to_string(r.lower_sq) +
           "  exact=" + (r.exact_equal ? "true" : "false");
  }
  return out;
}

void run(CLI::App& app, const Options& opt, const Args& args) {
  if (app.got_subcommand("eval")) {
    Element a = load_element(args.expr, opt);
    emit(opt, element_to_json(a), to_text(a));
    return;
  }
  if (app.got_subcommand("eq")) {
    Element a = load_element(args.expr, opt);
    Element b = load_element(args.expr2, opt);
    bool equal = eq(a, b);
    emit(opt, Json{{"equal", equal}}, equal ? "equal" : "different");
    return;
  }
  if (app.got_subcommand("fourier")) {
    Element a = load_element(args.expr, opt);
    Element f = fourier_coeff(a, args.p, args.q);
    emit(opt, element_to_json(f), to_text(f));
    return;
  }
  if (app.got_subcommand("decompose")) {
    Element a = load_element(args.expr, opt);
    GradedDecomposition dec = graded_decomposition(a);
    emit(opt, decomposition_to_json(dec), decomposition_to_text(dec));
    return;
  }
  if (app.got_subcommand("reconstruct")) {
    Element a = load_element(args.expr, opt);
    Element r = reconstruct(a);
    bool verified = eq(a, r);
    emit(opt, Json{{"element", element_to_json(r)}, {"verified", verified}},
         to_text(r) + "\nverified: " + (verified ? "true" : "false"));
    return;
  }
  if (app.got_subcommand("fejer")) {
    Element a = load_element(args.expr, opt);
    Element s = fejer_sum(a, folner_for(a.system()), args.n, opt.kernel_budget);
    emit(opt, element_to_json(s), to_text(s));
    return;
  }
  if (app.got_subcommand("cesaro")) {
    Element a = load_element(args.expr, opt);
    Element s = cesaro_mean(a, folner_for(a.system()), args.count, opt.kernel_budget);
    emit(opt, element_to_json(s), to_text(s));
    return;
  }
  if (app.got_subcommand("report")) {
    Element a = load_element(args.expr, opt);
    ConvergenceReport rep = convergence_report(a, folner_for(a.system()), args.nmax,
                                               opt.probe_window, args.expr,
                                               opt.kernel_budget);
    if (args.csv) {
      std::cout << report_to_csv(rep);
      return;
    }
    emit(opt, report_to_json(rep), report_to_text(rep));
    return;
  }
  if (app.got_subcommand("phi")) {
    FolnerSequence fs = folner_for(active_system(opt));
    HVec h = parse_hvec(args.h_text);
    Rational v = fs.phi(args.n, h, opt.kernel_budget);
    emit(opt, Json{{"n", args.n}, {"h", Json(h)}, {"phi", to_string(v)}}, to_string(v));
    return;
  }
  if (app.got_subcommand("kernel")) {
    FolnerSequence fs = folner_for(active_system(opt));
    KernelPolynomial k = fs.kernel(args.n, opt.kernel_budget);
    emit(opt, kernel_to_json(k), kernel_to_text(k));
    return;
  }
  if (app.got_subcommand("psd")) {
    FolnerSequence fs = folner_for(active_system(opt));
    LdltResult r = psd_certificate(fs, args.n, parse_sample(args.sample_text),
                                   opt.kernel_budget);
    std::string text = std::string("psd: ") + (r.psd ? "true" : "false");
    if (r.psd) {
      text += "\nrank: " + std::to_string(r.rank);
    } else {
      text += "\nwitness:";
      for (const Rational& x : *r.negative_witness) text += " " + to_string(x);
    }
    emit(opt, ldlt_to_json(r), text);
    return;
  }
  if (app.got_subcommand("apply")) {
    Element a = load_element(args.expr, opt);
    SparseVector image = act(a, delta(args.k));
    emit(opt, sparse_vector_to_json(image), sparse_vector_to_text(image));
    return;
  }
  if (app.got_subcommand("commutes")) {
    Element a = load_element(args.expr, opt);
    CommutantReport rep = commutant_probe(a, parse_gens(args.gens_text));
    std::string text = std::string("commutes: ") + (rep.commutes ? "true" : "false");
    text += "\noffending degrees:";
    if (rep.offending.empty()) text += " (none)";
    for (const Degree& d : rep.offending) text += " " + to_string(d);
    text += "\nscalar part: " + to_string(rep.scalar_part);
    emit(opt, commutant_to_json(rep), text);
    return;
  }
  if (app.got_subcommand("thompson")) {
    SystemDescriptor q2 = SystemDescriptor::q2();
    if (opt.system_given && !(active_system(opt) == q2))
      throw SystemMismatchError("the built-in generators live in system q2");
    Element a = args.which == "x0" ? thompson_x0() : thompson_x1();
    emit(opt, element_to_json(a), to_text(a));
    return;
  }
  throw Error("no subcommand given (try --help)");
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  if (const char* w = std::getenv("QFEJER_PROBE_WINDOW")) opt.probe_window = std::atoll(w);
  if (const char* b = std::getenv("QFEJER_KERNEL_BUDGET")) opt.kernel_budget = std::atoll(b);

  CLI::App app{"exact calculus for algebras of an integer shift and dilation isometries"};
  app.require_subcommand(0, 1);
  auto* sys_opt =
      app.add_option("--system", opt.system, "dynamical system: q2, qp:<base>, or qn");
  app.add_flag("--json", opt.json, "machine-readable output");

  Args args;

  auto add_expr = [&](CLI::App* sub) {
    sub->add_option("expr", args.expr, "expression, or @file / @- with element JSON")
        ->required();
    sub->fallthrough();
  };

  add_expr(app.add_subcommand("eval", "evaluate to the canonical term list"));

  auto* eq_cmd = app.add_subcommand("eq", "decide equality of two expressions");
  add_expr(eq_cmd);
  eq_cmd->add_option("expr2", args.expr2, "second expression")->required();

  auto* fourier_cmd = app.add_subcommand("fourier", "Fourier coefficient at index (p, q)");
  add_expr(fourier_cmd);
  fourier_cmd->add_option("--p", args.p, "left semigroup index")->required();
  fourier_cmd->add_option("--q", args.q, "right semigroup index")->required();

  add_expr(app.add_subcommand("decompose", "degree support and graded components"));
  add_expr(app.add_subcommand("reconstruct",
                              "rebuild from Fourier coefficients and verify"));

  auto* fejer_cmd = app.add_subcommand("fejer", "summation operator at index n");
  add_expr(fejer_cmd);
  fejer_cmd->add_option("--n", args.n, "truncation index")->required();

  auto* cesaro_cmd = app.add_subcommand("cesaro", "average of the first N sums");
  add_expr(cesaro_cmd);
  cesaro_cmd->add_option("--N", args.count, "number of sums averaged")->required();

  auto* report_cmd = app.add_subcommand("report", "convergence table for n = 0..nmax");
  add_expr(report_cmd);
  report_cmd->add_option("--nmax", args.nmax, "largest index")->required();
  report_cmd->add_flag("--csv", args.csv, "emit CSV rows");

  auto* phi_cmd = app.add_subcommand("phi", "Folner weight at a group element");
  phi_cmd->fallthrough();
  // frees -h so the short option name can carry the group element
  phi_cmd->set_help_flag("--help", "print help");
  phi_cmd->add_option("--n", args.n, "Folner index")->required();
  phi_cmd->add_option("--h", args.h_text, "group element: \"int\" or \"i1,i2,...\"")
      ->required();

  auto* kernel_cmd = app.add_subcommand("kernel", "summation kernel as a polynomial");
  kernel_cmd->fallthrough();
  kernel_cmd->add_option("--n", args.n, "Folner index")->required();

  auto* psd_cmd = app.add_subcommand("psd", "certify the weight Gram matrix on a sample");
  psd_cmd->fallthrough();
  psd_cmd->add_option("--n", args.n, "Folner index")->required();
  psd_cmd->add_option("--sample", args.sample_text,
                      "group elements separated by ';'")
      ->required();

  auto* apply_cmd = app.add_subcommand("apply", "image of the basis vector delta_k");
  add_expr(apply_cmd);
  apply_cmd->add_option("--k", args.k, "basis index")->required();

  auto* commutes_cmd =
      app.add_subcommand("commutes", "probe commutation with isometry generators");
  add_expr(commutes_cmd);
  commutes_cmd->add_option("--gens", args.gens_text, "semigroup elements, comma separated")
      ->required();

  auto* thompson_cmd = app.add_subcommand("thompson", "emit a built-in generator");
  thompson_cmd->fallthrough();
  thompson_cmd->add_option("which", args.which, "x0 or x1")
      ->required()
      ->check(CLI::IsMember({"x0", "x1"}));

  try {
    app.parse(argc, argv);
    opt.system_given = sys_opt->count() > 0;
    run(app, opt, args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    if (opt.json) std::cout << Json{{"error", e.what()}}.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
