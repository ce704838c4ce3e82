#include "apolar_cli/cli.hpp"

#include <CLI11.hpp>
#include <set>
#include <sstream>

#include "apolar/classify.hpp"
#include "apolar/error.hpp"
#include "apolar/serialize.hpp"
#include "apolar_cli/report.hpp"

namespace apolar::cli {

namespace {

constexpr int kInputError = 2;

struct Options {
  std::string dual;
  std::string ideal;
  std::optional<int> socle;
  std::optional<int> n;
  std::string ell;
  std::uint64_t seed = 0;
  int trials = 5;
  int coeff_bound = 10;
  std::string format = "text";
  std::string hvector;
  long bound = 20;
  std::vector<std::string> disable;
};

void add_format(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void add_input(CLI::App* app, Options& o) {
  auto* dual = app->add_option("--dual", o.dual, "Dual generator in X1..Xn");
  auto* ideal = app->add_option("--ideal", o.ideal, "Comma-separated ideal generators in x1..xn");
  dual->excludes(ideal);
  app->add_option("--socle", o.socle, "Socle degree (required with --ideal)");
  app->add_option("--n", o.n, "Number of variables (default: largest index used)");
}

AnalysisInput to_input(const Options& o) {
  AnalysisInput in;
  if (!o.dual.empty()) {
    in.kind = InputKind::Dual;
    in.text = o.dual;
  } else if (!o.ideal.empty()) {
    in.kind = InputKind::Ideal;
    in.text = o.ideal;
  } else {
    throw InvalidArgument("one of --dual or --ideal is required");
  }
  in.socle = o.socle;
  in.n = o.n;
  if (!o.ell.empty()) in.ell = parse_linear_form(o.ell);
  in.probe.seed = o.seed;
  in.probe.trials = o.trials;
  in.probe.coeff_bound = o.coeff_bound;
  return in;
}

void emit(std::ostream& out, const Options& o, const std::string& text, const Json& json) {
  if (o.format == "json") {
    out << json.dump(2) << '\n';
  } else {
    out << text;
  }
}

void cmd_analyze(const Options& o, std::ostream& out) {
  const AnalysisReport r = analyze(to_input(o));
  emit(out, o, to_text(r), to_json(r));
}

void cmd_dual(const Options& o, std::ostream& out) {
  if (o.ideal.empty()) throw InvalidArgument("dual needs --ideal");
  const AnalysisInput in = to_input(o);
  const DualGenerator F = load_generator(in);
  const HVector h = hilbert_function(F);
  const std::string form = format(F.form());
  Json j{{"ideal", in.text},
         {"n", F.nvars()},
         {"s", F.socle_degree()},
         {"form", form},
         {"hvector", to_json(h)}};
  emit(out, o, "F = " + form + "\nH = " + h.to_string() + "\n", j);
}

void cmd_bounds(const Options& o, std::ostream& out) {
  const HVector h = parse_hvector(o.hvector);
  if (h.size() == 0) throw InvalidArgument("empty H-vector");
  std::ostringstream text;
  Json checks = Json::array();
  bool ok = h[0] == 1;
  text << "H = " << h.to_string() << '\n';
  if (!ok) text << "h_0 = " << h[0] << " != 1\n";
  for (std::size_t i = 1; i + 1 < h.size(); ++i) {
    const auto rep = macaulay_rep(h[i], static_cast<int>(i));
    const long bound = macaulay_bound(h[i], static_cast<int>(i));
    const bool good = h[i + 1] <= bound;
    ok = ok && good;
    text << "h_" << i << " = " << h[i] << " = " << rep.to_string() << ", h_" << i + 1 << " = "
         << h[i + 1] << " <= " << bound << ": " << (good ? "ok" : "violated") << '\n';
    Json terms = Json::array();
    for (const auto& [top, bottom] : rep.terms) terms.push_back({top, bottom});
    checks.push_back({{"degree", i},
                      {"value", h[i]},
                      {"representation", terms},
                      {"next", h[i + 1]},
                      {"bound", bound},
                      {"ok", good}});
  }
  text << "O-sequence: " << (ok ? "yes" : "no") << '\n';
  emit(out, o, text.str(), Json{{"hvector", to_json(h)}, {"checks", checks}, {"o_sequence", ok}});
}

void cmd_jordan(const Options& o, std::ostream& out) {
  const AnalysisInput in = to_input(o);
  const ArtinAlgebra A(load_generator(in));
  const LinearForm l = in.ell ? *in.ell : LinearForm::all_ones(A.nvars());
  if (l.nvars() != A.nvars()) {
    throw DimensionMismatch("--ell has " + std::to_string(l.nvars()) + " coefficients, ring has " +
                            std::to_string(A.nvars()));
  }
  const Partition P = jordan_type(A, l);
  const Partition conj = conjugate_partition(hvector_partition(A.hilbert()));
  const bool slp = P == conj;
  std::ostringstream text;
  text << "H = " << A.hilbert().to_string() << '\n'
       << "Jordan type at " << l.to_string() << ": " << P.to_string() << '\n'
       << "conjugate of H: " << conj.to_string() << '\n'
       << "SLP at this form: " << (slp ? "yes" : "no") << '\n';
  emit(out, o, text.str(),
       Json{{"hvector", to_json(A.hilbert())},
            {"ell", to_json(l)},
            {"jordan_type", to_json(P)},
            {"hvector_conjugate", to_json(conj)},
            {"slp", slp}});
}

void cmd_classify_ci(const Options& o, std::ostream& out) {
  if (!o.n || !o.socle) throw InvalidArgument("classify ci needs --n and --socle");
  const CIReport r = classify_ci(*o.n, *o.socle);
  emit(out, o, to_text(r), to_json(r));
}

void cmd_classify_equigenerated(const Options& o, std::ostream& out) {
  const EquigeneratedReport r = classify_equigenerated(o.bound);
  emit(out, o, to_text(r), to_json(r));
}

void cmd_classify_k4(const Options& o, std::ostream& out) {
  std::set<K4Constraint> disabled;
  for (const auto& name : o.disable) {
    const auto c = parse_k4_constraint(name);
    if (!c) throw InvalidArgument("unknown constraint '" + name + "'");
    disabled.insert(*c);
  }
  const K4Report r = classify_k4(o.bound, disabled);
  emit(out, o, to_text(r), to_json(r));
}

void cmd_classify_tables(const Options& o, std::ostream& out) {
  const TablesReport r = check_conjectured_tables();
  emit(out, o, to_text(r, conjectured_tables()), to_json(r, conjectured_tables()));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Artinian Gorenstein algebras via Macaulay duality", "apolar"};
  app.require_subcommand(1);
  Options o;
  std::function<void(const Options&, std::ostream&)> action;

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a dual generator or an ideal");
  add_input(analyze_cmd, o);
  analyze_cmd->add_option("--ell", o.ell, "Linear form coefficients, e.g. 1,1,1,1");
  analyze_cmd->add_option("--seed", o.seed, "Seed for candidate linear forms")
      ->capture_default_str();
  analyze_cmd->add_option("--trials", o.trials, "Number of candidate linear forms")
      ->capture_default_str();
  analyze_cmd->add_option("--coeff-bound", o.coeff_bound, "Coefficient bound for candidates")
      ->capture_default_str();
  add_format(analyze_cmd, o);
  analyze_cmd->callback([&] { action = cmd_analyze; });

  auto* dual_cmd = app.add_subcommand("dual", "Recover the dual generator of an ideal");
  add_input(dual_cmd, o);
  add_format(dual_cmd, o);
  dual_cmd->callback([&] { action = cmd_dual; });

  auto* bounds_cmd = app.add_subcommand("bounds", "Check Macaulay's bounds for an H-vector");
  bounds_cmd->add_option("hvector", o.hvector, "H-vector, e.g. 1,4,7,7,4,1")->required();
  add_format(bounds_cmd, o);
  bounds_cmd->callback([&] { action = cmd_bounds; });

  auto* jordan_cmd = app.add_subcommand("jordan", "Jordan type of multiplication by a linear form");
  add_input(jordan_cmd, o);
  jordan_cmd->add_option("--ell", o.ell, "Linear form coefficients (default all ones)");
  add_format(jordan_cmd, o);
  jordan_cmd->callback([&] { action = cmd_jordan; });

  auto* classify_cmd = app.add_subcommand("classify", "Run a classification engine");
  classify_cmd->require_subcommand(1);
  auto* ci =
      classify_cmd->add_subcommand("ci", "Complete intersections of given n and socle degree");
  ci->add_option("--n", o.n, "Number of variables")->required();
  ci->add_option("--socle", o.socle, "Socle degree")->required();
  add_format(ci, o);
  ci->callback([&] { action = cmd_classify_ci; });
  auto* equi = classify_cmd->add_subcommand("equigenerated", "Equigenerated ideals, n = 4, s = 5");
  equi->add_option("--bound", o.bound, "Search bound")->capture_default_str();
  add_format(equi, o);
  equi->callback([&] { action = cmd_classify_equigenerated; });
  auto* k4 = classify_cmd->add_subcommand("k4", "Betti tables for H = (1,4,4,4,4,1)");
  k4->add_option("--bound", o.bound, "Search bound (>= 10)")->capture_default_str();
  k4->add_option("--disable", o.disable, "Constraint names to drop");
  add_format(k4, o);
  k4->callback([&] { action = cmd_classify_k4; });
  auto* tables = classify_cmd->add_subcommand("tables", "Check the candidate (1,4,7,7,4,1) tables");
  add_format(tables, o);
  tables->callback([&] { action = cmd_classify_tables; });

  std::vector<const char*> argv{"apolar"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kInputError;
  }

  try {
    std::ostringstream buffer;
    action(o, buffer);
    out << buffer.str();
    return 0;
  } catch (const NotGorensteinSocle& e) {
    err << "error: the ideal is not Gorenstein with the given socle degree (joint kernel has "
           "dimension "
        << e.kernel_dimension() << "): " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "error: parse error at position " << e.position() << ": " << e.message() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace apolar::cli
