#include "apolar_cli/report.hpp"

#include <sstream>

#include "apolar/error.hpp"
#include "apolar/hessian.hpp"

namespace apolar::cli {

namespace {

RingSpec ring_for(const AnalysisInput& in) {
  const RingSpec inferred = infer_ring(in.text);
  if (!in.n) return inferred;
  if (*in.n < inferred.n) {
    throw InvalidArgument("--n " + std::to_string(*in.n) +
                          " is smaller than the largest variable index " +
                          std::to_string(inferred.n));
  }
  return RingSpec(*in.n);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

const char* kind_name(InputKind k) { return k == InputKind::Dual ? "dual" : "ideal"; }

void require(bool ok, const std::string& what) {
  if (!ok) throw ParseError(0, "JSON schema: " + what);
}

}  // namespace

DualGenerator load_generator(const AnalysisInput& in) {
  const RingSpec ring = ring_for(in);
  if (in.kind == InputKind::Dual) {
    const Poly F = parse(in.text, ring, Alphabet::Dual);
    if (F.alphabet() != Alphabet::Dual) {
      throw MixedAlphabets("a dual generator uses the variables X1..Xn");
    }
    return DualGenerator(F);
  }
  if (!in.socle) throw InvalidArgument("an ideal needs --socle");
  const auto gens = parse_list(in.text, ring, Alphabet::Operator);
  for (const auto& g : gens) {
    if (g.alphabet() != Alphabet::Operator) {
      throw MixedAlphabets("ideal generators use the variables x1..xn");
    }
  }
  return dual_generator_from_ideal(gens, *in.socle);
}

AnalysisReport analyze(const AnalysisInput& in) {
  const DualGenerator F = load_generator(in);
  const ArtinAlgebra A(F);
  AnalysisReport r;
  r.kind = in.kind;
  r.input = in.text;
  r.n = F.nvars();
  r.s = F.socle_degree();
  r.form = format(F.form());
  r.hvector = A.hilbert();
  r.nondegenerate = is_nondegenerate(F);
  r.cone = is_cone(F);

  r.betti = betti_table(A);
  r.betti_symmetric = betti_symmetry_check(r.betti, r.s);
  try {
    r.betti_matches_hvector = hilbert_from_betti(r.betti) == r.hvector;
  } catch (const InconsistentTable&) {
    r.betti_matches_hvector = false;
  }
  for (const auto& [ij, v] : r.betti.entries()) {
    if (ij.first == 1) r.generators.push_back({ij.second, v});
  }
  r.macaulay_violations = check_macaulay(r.hvector);

  if (in.ell) {
    if (in.ell->nvars() != r.n) {
      throw DimensionMismatch("--ell has " + std::to_string(in.ell->nvars()) +
                              " coefficients, ring has " + std::to_string(r.n));
    }
    r.ell = in.ell;
    r.ell_wlp = has_wlp_at(A, *in.ell);
    r.ell_slp = has_slp_at(A, *in.ell);
  }
  r.seed = in.probe.seed;
  LefschetzProbe probe = probe_lefschetz(A, in.probe);
  r.trials = std::move(probe.trials);
  r.wlp_witness = probe.wlp_witness;
  r.slp_witness = probe.slp_witness;
  if (r.s >= 1) {
    const SlpDecision slp = has_slp(A, in.probe.seed);
    r.slp_exists = slp.has_slp;
    r.hessian_vanishes = slp.hessian_vanishes;
    if (slp.witness) r.hessian_witness = form_at(*slp.witness);
    if (r.s >= 2) {
      r.usual_hessian_vanishes =
          r.nondegenerate ? slp.hessian_vanishes.front() : hessian_is_identically_zero(A, 1);
    }
  } else {
    r.slp_exists = true;
  }

  if (r.ell) {
    r.jordan_source = "ell";
    r.jordan_form = *r.ell;
  } else if (r.slp_witness) {
    r.jordan_source = "slp-witness";
    r.jordan_form = *r.slp_witness;
  } else if (r.hessian_witness) {
    r.jordan_source = "hessian-witness";
    r.jordan_form = *r.hessian_witness;
  } else if (r.wlp_witness) {
    r.jordan_source = "wlp-witness";
    r.jordan_form = *r.wlp_witness;
  } else {
    r.jordan_source = "probe";
    r.jordan_form = r.trials.front().form;
  }
  r.jordan_type = jordan_type(A, r.jordan_form);
  r.hvector_conjugate = conjugate_partition(hvector_partition(r.hvector));
  return r;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "input (" << kind_name(r.kind) << "): " << r.input << '\n'
      << "n = " << r.n << ", s = " << r.s << '\n'
      << "F = " << r.form << '\n'
      << "H = " << r.hvector.to_string() << '\n'
      << "nondegenerate: " << yes_no(r.nondegenerate) << ", cone: " << yes_no(r.cone) << "\n\n"
      << "Betti table:\n"
      << render_betti(r.betti) << "symmetric: " << yes_no(r.betti_symmetric)
      << ", Hilbert function from Betti numbers matches H: " << yes_no(r.betti_matches_hvector)
      << '\n';
  out << "minimal generators:";
  if (r.generators.empty()) out << " none";
  for (std::size_t k = 0; k < r.generators.size(); ++k) {
    out << (k ? ", " : " ") << r.generators[k].count << " in degree " << r.generators[k].degree;
  }
  out << "\nMacaulay bounds: ";
  if (r.macaulay_violations.empty()) out << "satisfied";
  for (const auto& v : r.macaulay_violations) {
    out << "\n  h_" << v.degree << " = " << v.value << " exceeds " << v.bound;
  }
  out << "\n\nLefschetz properties:\n";
  if (r.ell) {
    out << "  ell = " << r.ell->to_string() << ": WLP " << yes_no(*r.ell_wlp) << ", SLP "
        << yes_no(*r.ell_slp) << '\n';
  }
  out << "  probe (seed " << r.seed << ", " << r.trials.size() << " trials):\n";
  for (std::size_t t = 0; t < r.trials.size(); ++t) {
    out << "    " << t << ": " << r.trials[t].form.to_string() << "  WLP "
        << yes_no(r.trials[t].wlp) << "  SLP " << yes_no(r.trials[t].slp) << '\n';
  }
  out << "  WLP witness: " << (r.wlp_witness ? r.wlp_witness->to_string() : "none found") << '\n'
      << "  SLP witness: " << (r.slp_witness ? r.slp_witness->to_string() : "none found") << '\n';
  for (std::size_t i = 0; i < r.hessian_vanishes.size(); ++i) {
    out << "  hess^" << i + 1 << " over A_" << i + 1 << ": "
        << (r.hessian_vanishes[i] ? "identically zero" : "nonzero") << '\n';
  }
  if (r.usual_hessian_vanishes) {
    out << "  usual Hessian: " << (*r.usual_hessian_vanishes ? "identically zero" : "nonzero")
        << '\n';
  }
  out << "  SLP for some linear form: " << yes_no(r.slp_exists);
  if (r.hessian_witness) out << " (Hessian witness " << r.hessian_witness->to_string() << ")";
  out << "\n\nJordan type at " << r.jordan_form.to_string() << " (" << r.jordan_source
      << "): " << r.jordan_type.to_string() << '\n'
      << "conjugate of H: " << r.hvector_conjugate.to_string() << '\n'
      << "Jordan type equals conjugate of H: " << yes_no(r.jordan_type == r.hvector_conjugate)
      << '\n';
  return out.str();
}

Json to_json(const AnalysisReport& r) {
  Json trials = Json::array();
  for (const auto& t : r.trials) {
    trials.push_back({{"form", to_json(t.form)}, {"wlp", t.wlp}, {"slp", t.slp}});
  }
  Json gens = Json::array();
  for (const auto& g : r.generators) gens.push_back({{"degree", g.degree}, {"count", g.count}});
  Json viol = Json::array();
  for (const auto& v : r.macaulay_violations) {
    viol.push_back({{"degree", v.degree}, {"value", v.value}, {"bound", v.bound}});
  }
  auto opt_form = [](const std::optional<LinearForm>& l) {
    return l ? to_json(*l) : Json(nullptr);
  };
  auto opt_bool = [](const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); };

  Json lefschetz{{"ell", opt_form(r.ell)},
                 {"ell_wlp", opt_bool(r.ell_wlp)},
                 {"ell_slp", opt_bool(r.ell_slp)},
                 {"seed", r.seed},
                 {"trials", trials},
                 {"wlp_witness", opt_form(r.wlp_witness)},
                 {"slp_witness", opt_form(r.slp_witness)},
                 {"slp_exists", r.slp_exists},
                 {"hessian_vanishes", r.hessian_vanishes},
                 {"hessian_witness", opt_form(r.hessian_witness)},
                 {"usual_hessian_vanishes", opt_bool(r.usual_hessian_vanishes)}};
  Json jordan{{"source", r.jordan_source},
              {"form", to_json(r.jordan_form)},
              {"type", to_json(r.jordan_type)},
              {"hvector_conjugate", to_json(r.hvector_conjugate)},
              {"equals_conjugate", r.jordan_type == r.hvector_conjugate}};
  return Json{{"input", {{"kind", kind_name(r.kind)}, {"text", r.input}}},
              {"n", r.n},
              {"s", r.s},
              {"form", r.form},
              {"hvector", to_json(r.hvector)},
              {"nondegenerate", r.nondegenerate},
              {"cone", r.cone},
              {"betti", betti_to_json(r.betti, r.s)},
              {"betti_symmetric", r.betti_symmetric},
              {"betti_matches_hvector", r.betti_matches_hvector},
              {"generators", gens},
              {"macaulay_violations", viol},
              {"lefschetz", lefschetz},
              {"jordan", jordan}};
}

AnalysisReport analysis_from_json(const Json& j) {
  try {
    AnalysisReport r;
    const auto& input = j.at("input");
    const auto kind = input.at("kind").get<std::string>();
    require(kind == "dual" || kind == "ideal", "input.kind is dual or ideal");
    r.kind = kind == "dual" ? InputKind::Dual : InputKind::Ideal;
    r.input = input.at("text").get<std::string>();
    r.n = j.at("n").get<int>();
    r.s = j.at("s").get<int>();
    r.form = j.at("form").get<std::string>();
    r.hvector = hvector_from_json(j.at("hvector"));
    r.nondegenerate = j.at("nondegenerate").get<bool>();
    r.cone = j.at("cone").get<bool>();
    int s = 0;
    r.betti = betti_from_json(j.at("betti"), &s);
    require(s == r.s, "betti.s equals s");
    r.betti_symmetric = j.at("betti_symmetric").get<bool>();
    r.betti_matches_hvector = j.at("betti_matches_hvector").get<bool>();
    for (const auto& g : j.at("generators")) {
      r.generators.push_back({g.at("degree").get<int>(), g.at("count").get<long>()});
    }
    for (const auto& v : j.at("macaulay_violations")) {
      r.macaulay_violations.push_back(
          {v.at("degree").get<int>(), v.at("value").get<long>(), v.at("bound").get<long>()});
    }
    auto opt_form = [](const Json& x) -> std::optional<LinearForm> {
      if (x.is_null()) return std::nullopt;
      return linear_form_from_json(x);
    };
    auto opt_bool = [](const Json& x) -> std::optional<bool> {
      if (x.is_null()) return std::nullopt;
      return x.get<bool>();
    };
    const auto& l = j.at("lefschetz");
    r.ell = opt_form(l.at("ell"));
    r.ell_wlp = opt_bool(l.at("ell_wlp"));
    r.ell_slp = opt_bool(l.at("ell_slp"));
    r.seed = l.at("seed").get<std::uint64_t>();
    for (const auto& t : l.at("trials")) {
      r.trials.push_back(
          {linear_form_from_json(t.at("form")), t.at("wlp").get<bool>(), t.at("slp").get<bool>()});
    }
    r.wlp_witness = opt_form(l.at("wlp_witness"));
    r.slp_witness = opt_form(l.at("slp_witness"));
    r.slp_exists = l.at("slp_exists").get<bool>();
    r.hessian_vanishes = l.at("hessian_vanishes").get<std::vector<bool>>();
    r.hessian_witness = opt_form(l.at("hessian_witness"));
    r.usual_hessian_vanishes = opt_bool(l.at("usual_hessian_vanishes"));
    const auto& jt = j.at("jordan");
    r.jordan_source = jt.at("source").get<std::string>();
    r.jordan_form = linear_form_from_json(jt.at("form"));
    r.jordan_type = partition_from_json(jt.at("type"));
    r.hvector_conjugate = partition_from_json(jt.at("hvector_conjugate"));
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("JSON schema: ") + e.what());
  }
}

}  // namespace apolar::cli
