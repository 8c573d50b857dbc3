// Command-line front end: analyze, hilbert, resolve, wlp, nll, family.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "lefschetz/families.hpp"
#include "lefschetz/hilbert.hpp"
#include "lefschetz/io.hpp"
#include "lefschetz/nll.hpp"

using namespace lefschetz;

namespace {

enum Exit { kOk = 0, kValidation = 1, kViolation = 2, kSizeCap = 3 };

struct Options {
  std::string file;
  bool json_out = false;
  std::uint64_t seed = kDefaultSeed;
  int trials = 5;
  std::string method = "rank";
  bool verify = false;
  std::string form;
  int degree = 0;
  bool degree_set = false;
  bool all = false;
  bool reduce = false;
  int sample_points = 200;
  std::vector<int> ci_degrees;
  int q = 3, n = 2;
  std::string forms;
  std::string output;
};

std::string join(const std::vector<long long>& v) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << v[i];
  s << ")";
  return s.str();
}

std::string join(const std::vector<int>& v) { return join(std::vector<long long>(v.begin(), v.end())); }

void emit(const Options& o, const json& doc, const std::string& text) {
  if (o.json_out)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

ArtinianGradedModule module_of(const ModuleInput& in) {
  if (auto* p = std::get_if<GradedPresentation>(&in)) return module_from_presentation(*p);
  return std::get<ArtinianGradedModule>(in);
}

const GradedPresentation& need_presentation(const ModuleInput& in, const char* cmd) {
  if (auto* p = std::get_if<GradedPresentation>(&in)) return *p;
  throw ValidationError(std::string(cmd) + " needs a presentation file");
}

void require_artinian(const GradedPresentation& p) {
  auto v = is_artinian(p);
  if (!v.artinian)
    throw ValidationError("cokernel is not of finite length: dim M_" + std::to_string(v.witness_degree) + " = " +
                          std::to_string(v.witness_dim) + " at T = max(a_n, d - a_1 - 2)");
}

LinearForm parse_form(const std::string& text, int r) {
  std::vector<Rational> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) c.push_back(parse_rational(item));
  if (static_cast<int>(c.size()) != r)
    throw ValidationError("--form needs " + std::to_string(r) + " comma-separated coefficients");
  return LinearForm(std::move(c));
}

json wlp_json(const WlpVerdict& v, const Options& o) {
  json j{{"status", to_string(v.status)}, {"seed", o.seed}, {"trials", v.trials_used}};
  if (v.witness) j["witness"] = v.witness->to_string();
  if (v.certificate) j["certificate_degree"] = *v.certificate;
  if (!v.sampled_failures.empty()) {
    json f = json::array();
    for (const auto& [form, degs] : v.sampled_failures) f.push_back({{"form", form}, {"failing_degrees", degs}});
    j["sampled_failures"] = f;
  }
  return j;
}

std::string wlp_text(const WlpVerdict& v, const Options& o) {
  std::ostringstream s;
  s << "WLP: " << to_string(v.status) << " (seed " << o.seed << ", " << v.trials_used << " trial(s))\n";
  if (v.witness) s << "  witness coefficients: " << v.witness->to_string() << "\n";
  if (v.certificate) s << "  certificate: X_" << *v.certificate << " has no nonzero maximal minor\n";
  for (const auto& [form, degs] : v.sampled_failures) s << "  form " << form << " fails in degrees " << join(degs) << "\n";
  return s.str();
}

json reduction_json(const ReductionCheck& r) {
  json j{{"applicable", r.applicable}};
  if (!r.applicable) {
    j["reason"] = r.reason;
    return j;
  }
  j["degree"] = r.degree;
  j["predicted"] = ideal_to_json(r.predicted);
  j["scheme_equal"] = r.scheme_equal;
  j["set_equal"] = r.set.equal();
  j["sample_points"] = r.set.points;
  j["set_disagreements"] = r.set.disagreements;
  return j;
}

std::string reduction_text(const char* name, const ReductionCheck& r) {
  std::ostringstream s;
  s << "  " << name << ": ";
  if (!r.applicable) {
    s << "not applicable (" << r.reason << ")\n";
    return s.str();
  }
  s << "degree " << r.degree << ", scheme " << (r.scheme_equal ? "equal" : "DIFFERENT") << ", set "
    << (r.set.equal() ? "equal" : "DIFFERENT") << " on " << r.set.points << " points\n";
  return s.str();
}

// --------------------------------------------------------------- commands

int run_hilbert(const Options& o) {
  ModuleInput in = load_input(o.file);
  const GradedPresentation& p = need_presentation(in, "hilbert");
  const int c = p.socle_bound();
  json rows = json::array();
  std::ostringstream text;
  bool mismatch = false;
  text << "t";
  if (o.method != "rank") text << "\tclosed";
  if (o.method != "closed") text << "\trank";
  text << "\n";
  for (int t = 0; t <= c; ++t) {
    json row{{"t", t}};
    text << t;
    long long hc = 0, hr = 0;
    if (o.method != "rank") {
      hc = hilbert_closed(p, t);
      row["closed"] = hc;
      text << "\t" << hc;
    }
    if (o.method != "closed") {
      hr = hilbert_rank(p, t);
      row["rank"] = hr;
      text << "\t" << hr;
    }
    if (o.method == "both") {
      row["equal"] = hc == hr;
      if (hc != hr) {
        mismatch = true;
        text << "\tMISMATCH";
      }
    }
    text << "\n";
    rows.push_back(row);
  }
  json doc{{"command", "hilbert"}, {"method", o.method}, {"rows", rows}};
  if (o.method == "both") doc["agree"] = !mismatch;
  if (o.method == "both") text << (mismatch ? "methods disagree\n" : "methods agree\n");
  emit(o, doc, text.str());
  return mismatch ? kViolation : kOk;
}

int run_resolve(const Options& o) {
  ModuleInput in = load_input(o.file);
  const GradedPresentation& p = need_presentation(in, "resolve");
  BuchsbaumRimResolution res = build_resolution(p);
  auto names = p.vars();
  auto matrix_json = [&](const PolyMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string(names));
      rows.push_back(row);
    }
    return rows;
  };
  std::vector<int> socle = socle_degrees(res);
  SymGorShape shape = check_symgor_shape(res);
  json doc{{"command", "resolve"},
           {"a", p.a()},
           {"b", p.b()},
           {"c", res.c},
           {"dd", res.dd},
           {"socle_degrees", socle},
           {"eps", matrix_json(res.eps)},
           {"eps_prime", matrix_json(res.eps_prime)},
           {"delta", matrix_json(res.delta)},
           {"g_prime", res.g_prime},
           {"symgor_shape", shape.holds()}};
  std::ostringstream text;
  text << "F0 twists a = " << join(p.a()) << "\nF1 twists b = " << join(p.b()) << "\nF2 twists c = " << join(res.c)
       << "\nF3 twists dd = " << join(res.dd) << "\nsocle degrees " << join(socle) << "\n";
  text << "eps:\n";
  for (std::size_t r = 0; r < res.eps.rows(); ++r) {
    text << " ";
    for (std::size_t c = 0; c < res.eps.cols(); ++c) text << " [" << res.eps(r, c).to_string(names) << "]";
    text << "\n";
  }
  text << "delta:\n";
  for (std::size_t r = 0; r < res.delta.rows(); ++r) {
    text << " ";
    for (std::size_t c = 0; c < res.delta.cols(); ++c) text << " [" << res.delta(r, c).to_string(names) << "]";
    text << "\n";
  }
  text << "self-dual shape with antisymmetric eps': " << (shape.holds() ? "yes" : "no") << "\n";
  int code = kOk;
  if (o.verify) {
    ExactnessReport rep = verify_exactness(res);
    json rows = json::array();
    text << "t\tF0\tF1\tF2\tF3\trk phi\trk eps\trk delta\tdim M_t\teuler\n";
    for (const auto& r : rep.rows) {
      rows.push_back({{"t", r.t},
                      {"f", {r.f0, r.f1, r.f2, r.f3}},
                      {"rank_phi", r.rank_phi},
                      {"rank_eps", r.rank_eps},
                      {"rank_delta", r.rank_delta},
                      {"module_dim", r.module_dim},
                      {"euler", r.euler}});
      text << r.t << "\t" << r.f0 << "\t" << r.f1 << "\t" << r.f2 << "\t" << r.f3 << "\t" << r.rank_phi << "\t"
           << r.rank_eps << "\t" << r.rank_delta << "\t" << r.module_dim << "\t" << r.euler << "\n";
    }
    doc["exactness"] = {{"ok", rep.ok}, {"rows", rows}};
    if (!rep.ok) {
      doc["exactness"]["failing_degree"] = rep.failing_degree;
      doc["exactness"]["failing_stage"] = rep.failing_stage;
      text << "NOT EXACT at degree " << rep.failing_degree << ": " << rep.failing_stage << "\n";
      code = kViolation;
    } else {
      text << "exact in all checked degrees\n";
    }
  }
  emit(o, doc, text.str());
  return code;
}

int run_wlp(const Options& o) {
  ModuleInput in = load_input(o.file);
  ArtinianGradedModule N = module_of(in);
  if (!o.form.empty()) {
    LinearForm l = parse_form(o.form, N.r());
    LefschetzCheck check = is_lefschetz_element(N, l);
    json doc{{"command", "wlp"}, {"form", l.to_string()}, {"lefschetz", check.is_lefschetz},
             {"failing_degrees", check.failing_degrees}};
    std::ostringstream text;
    text << "form " << l.to_string() << ": " << (check.is_lefschetz ? "Lefschetz element" : "not a Lefschetz element");
    if (!check.is_lefschetz) text << " (fails in degrees " << join(check.failing_degrees) << ")";
    text << "\n";
    emit(o, doc, text.str());
    return kOk;
  }
  WlpVerdict v = wlp_decide(N, o.trials, o.seed);
  json doc{{"command", "wlp"}, {"wlp", wlp_json(v, o)}};
  emit(o, doc, wlp_text(v, o));
  return kOk;
}

int run_nll(const Options& o) {
  ModuleInput in = load_input(o.file);
  ArtinianGradedModule N = module_of(in);
  json doc{{"command", "nll"}};
  std::ostringstream text;
  if (o.degree_set && !o.all) {
    DualIdeal I = locus_ideal(N, o.degree);
    doc["degree"] = o.degree;
    doc["ideal"] = ideal_to_json(I);
    text << "I(L_" << o.degree << ") = " << ideal_to_string(I) << "\n";
    emit(o, doc, text.str());
    return kOk;
  }
  json per = json::object();
  std::vector<DualIdeal> ideals = locus_ideals(N);
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    const int j = N.initial_degree() + static_cast<int>(k);
    per[std::to_string(j)] = ideal_to_json(ideals[k]);
    text << "I(L_" << j << ") = " << ideal_to_string(ideals[k]) << "\n";
  }
  doc["per_degree"] = per;
  DualIdeal full = intersect_all(ideals, N.r());
  doc["ideal"] = ideal_to_json(full);
  text << "I(L) = " << ideal_to_string(full) << "\n";
  int code = kOk;
  if (o.reduce) {
    ReducedLocusReport rep = reduced_locus(N, o.sample_points, o.seed);
    doc["level"] = rep.level;
    doc["level_reduction"] = reduction_json(rep.level_reduction);
    doc["symmetric_reduction"] = reduction_json(rep.symmetric_reduction);
    text << "level: " << (rep.level ? "yes" : "no") << "\n";
    text << reduction_text("two-degree reduction", rep.level_reduction);
    text << reduction_text("single-degree reduction", rep.symmetric_reduction);
    for (const ReductionCheck* r : {&rep.level_reduction, &rep.symmetric_reduction})
      if (r->applicable && (!r->scheme_equal || !r->set.equal())) code = kViolation;
  }
  emit(o, doc, text.str());
  return code;
}

int run_analyze(const Options& o) {
  ModuleInput in = load_input(o.file);
  json doc{{"command", "analyze"}, {"input", {{"file", o.file}}}, {"validation", "ok"}};
  std::ostringstream text;
  json violations = json::array();
  std::optional<ArtinianGradedModule> N;

  if (auto* p = std::get_if<GradedPresentation>(&in)) {
    doc["input"]["kind"] = "presentation";
    doc["input"]["presentation"] = presentation_to_json(*p);
    text << "presentation: n = " << p->n() << ", a = " << join(p->a()) << ", b = " << join(p->b()) << ", d = " << p->d()
         << ", d' = " << p->dprime() << "\n";
    require_artinian(*p);
    doc["artinian"] = true;
    text << "finite length: yes\n";

    BuchsbaumRimResolution res = build_resolution(*p);
    std::vector<int> socle = socle_degrees(res);
    SymGorShape shape = check_symgor_shape(res);
    doc["resolution"] = {{"c", res.c}, {"dd", res.dd}, {"socle_degrees", socle}, {"symgor_shape", shape.holds()}};
    text << "resolution twists c = " << join(res.c) << ", dd = " << join(res.dd) << "\nsocle degrees " << join(socle)
         << "\nself-dual shape with antisymmetric eps': " << (shape.holds() ? "yes" : "no") << "\n";

    HilbertTable h = hilbert_table(*p, HilbertMethod::rank);
    N = module_from_presentation(*p);
    const bool sym = is_symmetric(h), uni = is_strictly_unimodal(h), lvl = is_level(*N);
    doc["hilbert"] = {{"values", h.values}, {"total", h.total()}, {"symmetric", sym}, {"strictly_unimodal", uni},
                      {"level", lvl}};
    text << "h = " << join(h.values) << ", total " << h.total() << "\n";
    text << "symmetric: " << (sym ? "yes" : "no") << ", strictly unimodal: " << (uni ? "yes" : "no")
         << ", level: " << (lvl ? "yes" : "no") << "\n";

    ParityConditions pc = check_parity_conditions(*p);
    doc["parity"] = {{"a1_is_zero", pc.a1_is_zero}, {"d_even", pc.d_even}, {"condition_a", pc.condition_a},
                     {"condition_b", pc.condition_b}, {"applicable", pc.applicable}};
    text << "a_1 = 0: " << (pc.a1_is_zero ? "yes" : "no") << ", condition (a): " << (pc.condition_a ? "yes" : "no")
         << ", condition (b): " << (pc.condition_b ? "yes" : "no") << "\n";

    if (pc.a1_is_zero && !sym) violations.push_back("a_1 = 0 but h is not symmetric");
    if (pc.applicable) {
      if (!uni) violations.push_back("parity condition holds but h is not strictly unimodal");
      const int expected = (p->d() - 3) / 2;
      if (h.values[first_peak(h.values)] != h.at(expected))
        violations.push_back("maximum of h is not attained at floor((d-3)/2) = " + std::to_string(expected));
    }
  } else {
    N = std::get<ArtinianGradedModule>(in);
    doc["input"]["kind"] = "structure";
    auto soc = socle_dims(*N);
    doc["module"] = {{"t0", N->initial_degree()}, {"dims", N->dims()}, {"socle", soc}, {"level", is_level(*N)}};
    text << "h = " << join(N->dims()) << " starting in degree " << N->initial_degree() << "\nsocle " << join(soc)
         << "\nlevel: " << (is_level(*N) ? "yes" : "no") << "\n";
  }

  WlpVerdict w = wlp_decide(*N, o.trials, o.seed);
  doc["wlp"] = wlp_json(w, o);
  text << wlp_text(w, o);
  if (std::get_if<GradedPresentation>(&in) && check_parity_conditions(std::get<GradedPresentation>(in)).applicable &&
      w.status == WlpStatus::no_wlp)
    violations.push_back("WLP hypotheses hold but a degree has identically deficient rank");

  int code = kOk;
  try {
    ReducedLocusReport rep = reduced_locus(*N, 200, o.seed);
    json per = json::object();
    for (std::size_t k = 0; k < rep.per_degree.size(); ++k)
      per[std::to_string(N->initial_degree() + static_cast<int>(k))] = ideal_to_json(rep.per_degree[k]);
    const ReductionCheck& used = rep.symmetric_reduction.applicable ? rep.symmetric_reduction : rep.level_reduction;
    doc["nll"] = {{"per_degree", per},
                  {"ideal", ideal_to_json(rep.full)},
                  {"level_reduction", reduction_json(rep.level_reduction)},
                  {"symmetric_reduction", reduction_json(rep.symmetric_reduction)}};
    if (used.applicable) doc["nll"]["reduction_degree"] = used.degree;
    text << "I(L) = " << ideal_to_string(rep.full) << "\n";
    if (used.applicable) text << "NLL reduction degree " << used.degree << "\n";
    text << reduction_text("two-degree reduction", rep.level_reduction);
    text << reduction_text("single-degree reduction", rep.symmetric_reduction);
    for (const ReductionCheck* r : {&rep.level_reduction, &rep.symmetric_reduction})
      if (r->applicable && !r->scheme_equal) violations.push_back("locus reduction fails scheme-theoretically");
  } catch (const SizeCapError& e) {
    doc["nll"] = {{"error", e.what()}};
    text << "NLL: aborted, " << e.what() << "\n";
    code = kSizeCap;
  }

  doc["violations"] = violations;
  for (const auto& v : violations) text << "VIOLATION: " << v.get<std::string>() << "\n";
  if (!violations.empty()) code = kViolation;
  emit(o, doc, text.str());
  return code;
}

int run_family(const Options& o, bool ci) {
  GradedPresentation p = ci ? make_complete_intersection(o.ci_degrees.at(0), o.ci_degrees.at(1), o.ci_degrees.at(2))
                            : [&] {
                                std::optional<std::vector<std::string>> forms;
                                if (!o.forms.empty()) {
                                  std::vector<std::string> f;
                                  std::stringstream ss(o.forms);
                                  std::string item;
                                  while (std::getline(ss, item, ';')) f.push_back(item);
                                  forms = f;
                                }
                                return make_circulant(o.q, o.n, forms);
                              }();
  require_artinian(p);
  json doc = presentation_to_json(p);
  if (o.output.empty())
    std::cout << doc.dump(2) << "\n";
  else
    write_json_file(o.output, doc);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded Artinian modules: resolutions, Hilbert functions, Lefschetz properties"};
  app.require_subcommand(1);
  Options o;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "presentation or structure JSON file")->required();
    sub->add_flag("--json", o.json_out, "emit the structured report");
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
  };

  auto* analyze = app.add_subcommand("analyze", "full report for a presentation or structure file");
  add_file(analyze);
  add_seed(analyze);
  analyze->add_option("--trials", o.trials, "random forms tried for WLP")->capture_default_str();

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function table");
  add_file(hilbert);
  hilbert->add_option("--method", o.method, "closed, rank or both")
      ->check(CLI::IsMember({"closed", "rank", "both"}))
      ->capture_default_str();

  auto* resolve = app.add_subcommand("resolve", "Buchsbaum-Rim resolution");
  add_file(resolve);
  resolve->add_flag("--verify", o.verify, "certify exactness degree by degree");

  auto* wlp = app.add_subcommand("wlp", "weak Lefschetz property");
  add_file(wlp);
  add_seed(wlp);
  wlp->add_option("--trials", o.trials, "random forms to try")->capture_default_str()->check(CLI::PositiveNumber);
  wlp->add_option("--form", o.form, "test one form, coefficients like \"1,2,-1\"");

  auto* nll = app.add_subcommand("nll", "non-Lefschetz locus");
  add_file(nll);
  add_seed(nll);
  auto* deg = nll->add_option("--degree", o.degree, "single degree j");
  auto* all = nll->add_flag("--all", o.all, "every degree and the intersection (default)");
  deg->excludes(all);
  nll->add_flag("--reduce", o.reduce, "check the locus reduction statements");
  nll->add_option("--sample-points", o.sample_points, "points for the set-theoretic comparison")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  auto* family = app.add_subcommand("family", "write a presentation from a standard family");
  family->require_subcommand(1);
  auto* ci = family->add_subcommand("ci", "complete intersection x^q1, y^q2, z^q3");
  ci->add_option("q", o.ci_degrees, "q1 q2 q3")->required()->expected(3);
  ci->add_option("-o,--output", o.output, "output file (stdout when omitted)");
  auto* circ = family->add_subcommand("circulant", "banded n x (n+2) matrix of three forms of degree q");
  circ->add_option("--q", o.q, "form degree")->required();
  circ->add_option("--n", o.n, "number of rows")->required();
  circ->add_option("--forms", o.forms, "three forms separated by ';'");
  circ->add_option("-o,--output", o.output, "output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidation;
  }
  o.degree_set = deg->count() > 0;

  try {
    if (*analyze) return run_analyze(o);
    if (*hilbert) return run_hilbert(o);
    if (*resolve) return run_resolve(o);
    if (*wlp) return run_wlp(o);
    if (*nll) return run_nll(o);
    if (*ci) return run_family(o, true);
    if (*circ) return run_family(o, false);
  } catch (const SizeCapError& e) {
    std::cerr << "size cap: " << e.what() << "\n";
    return kSizeCap;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kValidation;
}
