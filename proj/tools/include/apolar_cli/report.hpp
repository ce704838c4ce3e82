#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apolar/artin.hpp"
#include "apolar/resolution.hpp"
#include "apolar/serialize.hpp"

namespace apolar::cli {

enum class InputKind { Dual, Ideal };

struct AnalysisInput {
  InputKind kind = InputKind::Dual;
  std::string text;
  std::optional<int> socle;  // required for ideals
  std::optional<int> n;      // inferred from the text when absent
  std::optional<LinearForm> ell;
  ProbeOptions probe;
};

/// Builds F from either input kind. Ideals need a socle degree.
DualGenerator load_generator(const AnalysisInput& in);

struct GeneratorDegree {
  int degree = 0;
  long count = 0;
};

struct AnalysisReport {
  InputKind kind = InputKind::Dual;
  std::string input;
  int n = 0;
  int s = 0;
  std::string form;
  HVector hvector;
  bool nondegenerate = false;
  bool cone = false;

  BettiTable betti{0};
  bool betti_symmetric = false;
  bool betti_matches_hvector = false;
  std::vector<GeneratorDegree> generators;
  std::vector<MacaulayViolation> macaulay_violations;

  // Lefschetz properties
  std::optional<LinearForm> ell;
  std::optional<bool> ell_wlp;
  std::optional<bool> ell_slp;
  std::uint64_t seed = 0;
  std::vector<ProbeTrial> trials;
  std::optional<LinearForm> wlp_witness;
  std::optional<LinearForm> slp_witness;
  bool slp_exists = false;
  std::vector<bool> hessian_vanishes;          // A_i-basis Hessians, i = 1..floor(s/2)
  std::optional<bool> usual_hessian_vanishes;  // second partials, when s >= 2
  std::optional<LinearForm> hessian_witness;

  // Jordan type of the chosen form: ell, else an SLP witness, else a WLP
  // witness, else the first probe form.
  std::string jordan_source;
  LinearForm jordan_form;
  Partition jordan_type;
  Partition hvector_conjugate;
};

AnalysisReport analyze(const AnalysisInput& in);

std::string to_text(const AnalysisReport& r);
Json to_json(const AnalysisReport& r);
/// Inverse of to_json. Throws ParseError on schema violations.
AnalysisReport analysis_from_json(const Json& j);

}  // namespace apolar::cli
