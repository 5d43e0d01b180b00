// Command-line driver for the triple-system engine.
//
// Subcommands:
//   verify    check the defining identities of an algebra file (and,
//             optionally, that a representation file really is one)
//   twist     twist a semidirect-product structure by a linear map and
//             report the components and classification of the result
//   mc-check  evaluate the Maurer-Cartan residual of a linear map
//   rb-check  decide whether a linear map is a relative Rota-Baxter
//             operator, cross-checking the twist classification and the
//             Maurer-Cartan residual against the direct definition
//
// Exit codes: 0 the command's verdict is positive; 1 the verdict is
// negative or an input structure fails its defining identities; 2 the
// input is malformed; 3 an internal cross-check failed (library bug).

#include <CLI11.hpp>
#include <json.hpp>

#include <lts/constructions.hpp>
#include <lts/io.hpp>
#include <lts/linfty.hpp>
#include <lts/twisting.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

std::string vec_to_text(const lts::Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += lts::to_string(v[i]);
  }
  return s + "]";
}

std::string tuple_to_text(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

json vec_to_json(const lts::Vec& v) {
  json out = json::object();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!lts::is_zero(v[i])) out[std::to_string(i)] = lts::to_string(v[i]);
  }
  return out;
}

json counterexample_to_json(const lts::AxiomCounterexample& c) {
  return json{{"args", c.tuple}, {"defect", vec_to_json(c.defect)}};
}

/// All nonzero entries of a degree-1 cochain, lexicographic in the tuple.
void cochain_entries(const lts::Cochain& c,
                     const std::function<void(const int*, const lts::Vec&)>&
                         emit) {
  const int ar = c.arity();
  std::vector<int> args(ar, 0);
  lts::Vec v(c.dim());
  for (std::size_t t = 0; t < c.tuple_count(); ++t) {
    c.unpack_tuple(t, args.data());
    const lts::Rational* raw = c.eval(args.data());
    if (raw == nullptr) continue;
    bool nz = false;
    for (int o = 0; o < c.dim(); ++o) {
      v[o] = raw[o];
      nz = nz || !lts::is_zero(v[o]);
    }
    if (nz) emit(args.data(), v);
  }
}

void print_cochain_text(std::ostream& os, const lts::Cochain& c,
                        const std::string& name) {
  bool any = false;
  cochain_entries(c, [&](const int* args, const lts::Vec& v) {
    if (!any) os << name << ":\n";
    any = true;
    os << "  (";
    for (int s = 0; s < c.arity(); ++s) {
      if (s) os << ", ";
      os << args[s];
    }
    os << ") -> " << vec_to_text(v) << "\n";
  });
  if (!any) os << name << ": zero\n";
}

json cochain_to_json(const lts::Cochain& c) {
  json entries = json::array();
  cochain_entries(c, [&](const int* args, const lts::Vec& v) {
    json e;
    e["args"] = std::vector<int>(args, args + c.arity());
    e["value"] = vec_to_json(v);
    entries.push_back(std::move(e));
  });
  return entries;
}

struct CommonInputs {
  std::string algebra_path;
  std::string rep_path;
  std::string map_path;
};

lts::Representation load_rep(const std::string& spec,
                             const lts::TripleSystem& t) {
  if (spec == "adjoint") return lts::adjoint_representation(t);
  return lts::load_representation_file(spec);
}

int run_verify(const CommonInputs& in, const std::string& format) {
  lts::TripleSystem t = lts::load_algebra_file(in.algebra_path);
  lts::AxiomReport report = lts::lts_axioms_check(t);

  bool rep_pass = true;
  std::optional<lts::RepresentationReport> rep_report;
  if (!in.rep_path.empty()) {
    lts::Representation r = load_rep(in.rep_path, t);
    rep_report = lts::check_representation(t, r);
    rep_pass = rep_report->pass();
  }

  if (format == "json") {
    json j;
    j["dim"] = t.dim();
    j["alternating"] = report.alternating_ok;
    j["cyclic"] = report.cyclic_ok;
    j["fundamental"] = report.fundamental_ok;
    if (report.alternating_fail) {
      j["alternating_counterexample"] =
          counterexample_to_json(*report.alternating_fail);
    }
    if (report.cyclic_fail) {
      j["cyclic_counterexample"] = counterexample_to_json(*report.cyclic_fail);
    }
    if (report.fundamental_fail) {
      j["fundamental_counterexample"] =
          counterexample_to_json(*report.fundamental_fail);
    }
    if (rep_report) {
      j["representation"] = json{{"identity1", rep_report->identity1_ok},
                                 {"identity2", rep_report->identity2_ok}};
    }
    j["pass"] = report.pass() && rep_pass;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "dim: " << t.dim() << "\n";
    auto line = [&](const char* name, bool ok,
                    const std::optional<lts::AxiomCounterexample>& fail) {
      std::cout << name << ": " << (ok ? "ok" : "fail");
      if (!ok && fail) {
        std::cout << " at " << tuple_to_text(fail->tuple) << ", defect "
                  << vec_to_text(fail->defect);
      }
      std::cout << "\n";
    };
    line("alternating", report.alternating_ok, report.alternating_fail);
    line("cyclic", report.cyclic_ok, report.cyclic_fail);
    line("fundamental", report.fundamental_ok, report.fundamental_fail);
    if (rep_report) {
      std::cout << "representation: " << (rep_pass ? "ok" : "fail") << "\n";
    }
    std::cout << "verdict: "
              << ((report.pass() && rep_pass) ? "pass" : "fail") << "\n";
  }
  return (report.pass() && rep_pass) ? 0 : 1;
}

int run_twist(const CommonInputs& in, const std::string& format,
              const std::string& method, const std::string& out_path,
              bool corrupt_conjugation) {
  lts::TripleSystem t = lts::load_algebra_file(in.algebra_path);
  lts::Representation r = load_rep(in.rep_path, t);
  lts::LinearMap h = lts::load_map_file(in.map_path);

  if (!lts::lts_axioms_check(t).pass()) {
    throw lts::InvalidStructureError(
        "the algebra fails its defining identities; nothing to twist");
  }
  if (!lts::check_representation(t, r).pass()) {
    throw lts::InvalidStructureError(
        "the map file is not a representation of the algebra");
  }
  if (h.rows() != t.dim() || h.cols() != r.carrier_dim()) {
    throw lts::InvalidInputError(
        "the twisting map must have rows = dim and cols = carrier_dim");
  }

  const lts::SplitContext ctx{t.dim(), r.carrier_dim()};
  lts::Cochain theta =
      lts::structure_cochain(lts::semidirect_product(t, r));

  std::optional<lts::Cochain> series;
  std::optional<lts::Cochain> conjugation;
  if (method == "series" || method == "both") {
    series = lts::twist_series(theta, h, ctx);
  }
  if (method == "conjugation" || method == "both") {
    conjugation = lts::twist_conjugation(theta, h, ctx);
    if (corrupt_conjugation) {
      // Deliberately damage one coefficient so the path comparison below
      // reports a nonzero difference and the command exits 1.
      int args[3] = {0, 0, 0};
      lts::Vec v(ctx.total(), lts::Rational(0));
      const lts::Rational* raw = conjugation->eval(args);
      if (raw != nullptr) {
        for (int o = 0; o < ctx.total(); ++o) v[o] = raw[o];
      }
      v[0] += 1;
      conjugation->set_values(args, v);
    }
  }
  if (series && conjugation && !(*series == *conjugation)) {
    // The two computation paths share no code; a difference means one of
    // them (or a deliberate corruption, see the hidden flag) is wrong.
    // Report the nonzero difference and fail the verdict.
    lts::Cochain diff = *series - *conjugation;
    if (format == "json") {
      json j;
      j["series_equals_conjugation"] = false;
      j["difference"] = cochain_to_json(diff);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "series == conjugation: NO\n";
      print_cochain_text(std::cout, diff, "difference (series - conjugation)");
    }
    return 1;
  }
  const lts::Cochain& twisted = series ? *series : *conjugation;

  // The closed-form assembly must agree with the generic machinery.
  lts::Cochain closed = lts::closed_form_rb_twist(t, r, h);
  if (!(closed == twisted)) {
    throw lts::InternalError(
        "twist mismatch: the closed-form assembly disagrees with the "
        "twisting machinery");
  }

  lts::ThetaComponents comps = lts::decompose_theta(twisted, ctx);
  lts::Classification cls = lts::classify(twisted, ctx);
  lts::TripleSystem twisted_system = lts::cochain_to_system(twisted);
  lts::AxiomReport axioms = lts::lts_axioms_check(twisted_system);

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      throw lts::InvalidInputError("cannot write file: " + out_path);
    }
    out << lts::algebra_to_json(twisted_system) << "\n";
  }

  if (format == "json") {
    json j;
    j["method"] = method;
    j["series_equals_conjugation"] = bool(series && conjugation);
    j["closed_form_equals_twist"] = true;
    j["classification"] = cls.name();
    j["phi1_zero"] = cls.phi1_zero;
    j["phi2_zero"] = cls.phi2_zero;
    j["psi_zero"] = cls.psi_zero;
    j["twisted_axioms_pass"] = axioms.pass();
    j["components"] = json{{"phi1", cochain_to_json(comps.phi1)},
                           {"mu1", cochain_to_json(comps.mu1)},
                           {"psi", cochain_to_json(comps.psi)},
                           {"mu2", cochain_to_json(comps.mu2)},
                           {"phi2", cochain_to_json(comps.phi2)}};
    std::cout << j.dump(2) << "\n";
  } else {
    if (series && conjugation) {
      std::cout << "series == conjugation: yes\n";
    }
    std::cout << "closed-form == twist: yes\n";
    std::cout << "twisted axioms: " << (axioms.pass() ? "pass" : "fail")
              << "\n";
    std::cout << "classification: " << cls.name() << "\n";
    print_cochain_text(std::cout, comps.phi1, "phi1");
    print_cochain_text(std::cout, comps.mu1, "mu1");
    print_cochain_text(std::cout, comps.psi, "psi");
    print_cochain_text(std::cout, comps.mu2, "mu2");
    print_cochain_text(std::cout, comps.phi2, "phi2");
  }
  return 0;
}

int run_mc_check(const CommonInputs& in, const std::string& format) {
  lts::TripleSystem t = lts::load_algebra_file(in.algebra_path);
  lts::Representation r = load_rep(in.rep_path, t);
  lts::LinearMap h = lts::load_map_file(in.map_path);

  if (!lts::lts_axioms_check(t).pass()) {
    throw lts::InvalidStructureError(
        "the algebra fails its defining identities");
  }
  if (!lts::check_representation(t, r).pass()) {
    throw lts::InvalidStructureError(
        "the map file is not a representation of the algebra");
  }
  if (h.rows() != t.dim() || h.cols() != r.carrier_dim()) {
    throw lts::InvalidInputError(
        "the map must have rows = dim and cols = carrier_dim");
  }

  const lts::SplitContext ctx{t.dim(), r.carrier_dim()};
  lts::Cochain theta =
      lts::structure_cochain(lts::semidirect_product(t, r));
  lts::TwilledStructure tw = lts::TwilledStructure::create(theta, ctx);
  lts::HomCochain residual = lts::mc_residual(tw, h);

  bool zero = residual.is_zero();
  if (format == "json") {
    json j;
    j["mc_residual_zero"] = zero;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "mc-residual: " << (zero ? "zero" : "nonzero") << "\n";
  }
  return zero ? 0 : 1;
}

int run_rb_check(const CommonInputs& in, const std::string& format) {
  lts::TripleSystem t = lts::load_algebra_file(in.algebra_path);
  lts::Representation r = load_rep(in.rep_path, t);
  lts::LinearMap h = lts::load_map_file(in.map_path);

  if (!lts::lts_axioms_check(t).pass()) {
    throw lts::InvalidStructureError(
        "the algebra fails its defining identities");
  }
  if (!lts::check_representation(t, r).pass()) {
    throw lts::InvalidStructureError(
        "the map file is not a representation of the algebra");
  }
  if (h.rows() != t.dim() || h.cols() != r.carrier_dim()) {
    throw lts::InvalidInputError(
        "the operator must have rows = dim and cols = carrier_dim");
  }

  lts::RelativeRBReport rb = lts::check_relative_rb(t, r, h);
  lts::RBTwistResult twist = lts::rb_twist(t, r, h);
  if (twist.classification.is_twilled() != rb.ok) {
    throw lts::InternalError(
        "the twist classification disagrees with the direct operator "
        "identity");
  }

  const lts::SplitContext ctx{t.dim(), r.carrier_dim()};
  lts::Cochain theta =
      lts::structure_cochain(lts::semidirect_product(t, r));
  lts::TwilledStructure tw = lts::TwilledStructure::create(theta, ctx);
  bool mc_zero = lts::mc_residual(tw, h).is_zero();
  if (mc_zero != rb.ok) {
    throw lts::InternalError(
        "the Maurer-Cartan residual disagrees with the direct operator "
        "identity");
  }

  if (format == "json") {
    json j;
    j["relative_rota_baxter"] = rb.ok;
    if (rb.fail) j["counterexample"] = counterexample_to_json(*rb.fail);
    j["twist_classification"] = twist.classification.name();
    j["mc_residual_zero"] = mc_zero;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "relative-rota-baxter: " << (rb.ok ? "yes" : "no") << "\n";
    if (rb.fail) {
      std::cout << "first failure: " << tuple_to_text(rb.fail->tuple)
                << ", defect " << vec_to_text(rb.fail->defect) << "\n";
    }
    std::cout << "twist classification: " << twist.classification.name()
              << "\n";
    std::cout << "mc-residual: " << (mc_zero ? "zero" : "nonzero") << "\n";
  }
  return rb.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic engine for Lie triple systems"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  CommonInputs in;

  CLI::App* verify = app.add_subcommand(
      "verify", "Check the defining identities of an algebra file");
  verify->add_option("--algebra", in.algebra_path, "Algebra JSON file")
      ->required();
  verify->add_option("--rep", in.rep_path,
                     "Representation JSON file, or 'adjoint'");

  CLI::App* twist = app.add_subcommand(
      "twist",
      "Twist the semidirect-product structure of (algebra, representation) "
      "by a linear map");
  twist->add_option("--algebra", in.algebra_path, "Algebra JSON file")
      ->required();
  twist->add_option("--rep", in.rep_path,
                    "Representation JSON file, or 'adjoint'")
      ->required();
  twist->add_option("--map", in.map_path, "Linear map JSON file (V -> g)")
      ->required();
  std::string method = "both";
  twist->add_option("--method", method, "Computation path")
      ->check(CLI::IsMember({"series", "conjugation", "both"}))
      ->capture_default_str();
  std::string out_path;
  twist->add_option("--out", out_path,
                    "Write the twisted bracket table as an algebra file");
  bool corrupt_conjugation = false;
  twist
      ->add_flag("--corrupt-conjugation", corrupt_conjugation,
                 "Damage the conjugation result so the path comparison "
                 "reports a difference (test hook)")
      ->group("");  // hidden

  CLI::App* mc = app.add_subcommand(
      "mc-check",
      "Evaluate the Maurer-Cartan residual of a linear map against the "
      "semidirect-product structure");
  mc->add_option("--algebra", in.algebra_path, "Algebra JSON file")
      ->required();
  mc->add_option("--rep", in.rep_path,
                 "Representation JSON file, or 'adjoint'")
      ->required();
  mc->add_option("--map", in.map_path, "Linear map JSON file (V -> g)")
      ->required();

  CLI::App* rb = app.add_subcommand(
      "rb-check",
      "Decide whether a linear map is a relative Rota-Baxter operator");
  rb->add_option("--algebra", in.algebra_path, "Algebra JSON file")
      ->required();
  rb->add_option("--rep", in.rep_path,
                 "Representation JSON file, or 'adjoint'")
      ->required();
  rb->add_option("--map", in.map_path, "Linear map JSON file (V -> g)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(verify)) return run_verify(in, format);
    if (app.got_subcommand(twist)) {
      return run_twist(in, format, method, out_path, corrupt_conjugation);
    }
    if (app.got_subcommand(mc)) return run_mc_check(in, format);
    if (app.got_subcommand(rb)) return run_rb_check(in, format);
  } catch (const lts::InvalidInputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const lts::InvalidStructureError& e) {
    std::cerr << "structure error: " << e.what() << "\n";
    return 1;
  } catch (const lts::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
