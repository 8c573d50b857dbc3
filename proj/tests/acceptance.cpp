// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "lefschetz/buchsbaum_rim.hpp"
#include "lefschetz/families.hpp"
#include "lefschetz/hilbert.hpp"
#include "lefschetz/io.hpp"
#include "lefschetz/module.hpp"
#include "lefschetz/nll.hpp"

using namespace lefschetz;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> violations;

  void fail(const std::string& what) {
    pass = false;
    violations.push_back(what);
  }
};

struct Built {
  std::string name;
  GradedPresentation presentation;
  ArtinianGradedModule module;
};

std::vector<corpus::Entry> g_corpus;
std::vector<Built> g_modules;

DualIdeal dual_ideal(std::initializer_list<const char*> gens) {
  std::vector<Poly> g;
  for (const char* s : gens) g.push_back(parse_poly(s, dual_varnames(3)));
  return DualIdeal(3, g);
}

std::string data_path(const std::string& name) { return std::string(LEFSCHETZ_DATA_DIR) + "/" + name; }

// ------------------------------------------------------------------ 1

Outcome hilbert_oracle() {
  Outcome o;
  long long checked = 0;
  for (const auto& e : g_corpus) {
    const GradedPresentation& p = e.presentation;
    for (int t = 0; t <= p.d() - p.a().front() - 1; ++t) {
      ++checked;
      long long closed = hilbert_closed(p, t), rank = hilbert_rank(p, t);
      if (closed != rank)
        o.fail(e.name + ": t=" + std::to_string(t) + " closed " + std::to_string(closed) + " rank " +
               std::to_string(rank));
    }
  }
  o.detail = std::to_string(g_corpus.size()) + " presentations, " + std::to_string(checked) + " degrees";
  if (g_corpus.size() < 30) o.fail("corpus has fewer than 30 presentations");
  return o;
}

// ------------------------------------------------------------------ 2

Outcome golden_tables() {
  Outcome o;
  HilbertTable ci = hilbert_table(make_complete_intersection(2, 2, 2));
  if (ci.values != std::vector<long long>{1, 3, 3, 1}) o.fail("CI(2,2,2) table differs");
  HilbertTable circ = hilbert_table(make_circulant(3, 2));
  if (circ.values != std::vector<long long>{2, 6, 12, 16, 18, 18, 16, 12, 6, 2}) o.fail("circulant(3,2) table differs");
  if (circ.total() != 108) o.fail("circulant(3,2) length " + std::to_string(circ.total()));
  o.detail = "CI(2,2,2) and circulant(3,2), length " + std::to_string(circ.total());
  return o;
}

// ------------------------------------------------------------------ 3

bool homogeneous_of(const Poly& p, int degree) { return p.is_zero() || (p.is_homogeneous() && *p.degree() == degree); }

Outcome resolution_certification() {
  Outcome o;
  for (const auto& e : g_corpus) {
    const GradedPresentation& p = e.presentation;
    BuchsbaumRimResolution res = build_resolution(p);
    const PolyMatrix& phi = p.entries();
    const std::size_t m = res.eps.rows();
    if (!(phi * res.eps).is_zero()) o.fail(e.name + ": phi eps != 0");
    if (!(res.eps * res.delta).is_zero()) o.fail(e.name + ": eps delta != 0");
    if (!check_symgor_shape(res).antisymmetric) o.fail(e.name + ": eps' not antisymmetric");
    for (std::size_t j = 0; j < m; ++j) {
      bool nonzero = false;
      for (std::size_t r = 0; r < m; ++r) {
        nonzero = nonzero || !res.eps(r, j).is_zero();
        if (!homogeneous_of(res.eps(r, j), res.c[j] - p.b()[r]))
          o.fail(e.name + ": eps(" + std::to_string(r + 1) + "," + std::to_string(j + 1) + ") has the wrong degree");
        if (res.eps_prime(r, j) != res.eps(r, j) * Rational(res.g_prime[j]))
          o.fail(e.name + ": eps' != eps g'");
      }
      if (!nonzero) o.fail(e.name + ": column " + std::to_string(j + 1) + " of eps is zero");
    }
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < res.delta.cols(); ++i)
        if (!homogeneous_of(res.delta(j, i), res.dd[i] - res.c[j]))
          o.fail(e.name + ": delta entry has the wrong degree");
    ExactnessReport rep = verify_exactness(res);
    if (!rep.ok) o.fail(e.name + ": exactness fails at " + rep.failing_stage);
    for (const auto& row : rep.rows)
      if (row.euler != static_cast<long long>(row.module_dim) || row.module_dim != static_cast<std::size_t>(hilbert_rank(p, row.t)))
        o.fail(e.name + ": Euler characteristic differs at t=" + std::to_string(row.t));
    if (rep.rows.empty() || rep.rows.back().t < p.d() - p.a().front() - 1)
      o.fail(e.name + ": exactness rows stop early");
  }
  o.detail = std::to_string(g_corpus.size()) + " resolutions";
  return o;
}

// ------------------------------------------------------------------ 4

Outcome symmetry_unimodality() {
  Outcome o;
  int sym = 0, uni = 0;
  for (const auto& e : g_corpus) {
    const GradedPresentation& p = e.presentation;
    HilbertTable h = hilbert_table(p);
    ParityConditions pc = check_parity_conditions(p);
    if (pc.a1_is_zero) {
      ++sym;
      if (!is_symmetric(h)) o.fail(e.name + ": h is not symmetric");
    }
    if (pc.applicable) {
      ++uni;
      if (!is_strictly_unimodal(h)) o.fail(e.name + ": h is not strictly unimodal");
      if (first_peak(h.values) != (p.d() - 3) / 2)
        o.fail(e.name + ": peak at " + std::to_string(first_peak(h.values)) + ", expected " +
               std::to_string((p.d() - 3) / 2));
    }
  }
  o.detail = std::to_string(sym) + " symmetric, " + std::to_string(uni) + " strictly unimodal";
  return o;
}

// ------------------------------------------------------------------ 5

Outcome wlp_theorem() {
  Outcome o;
  int checked = 0;
  for (const auto& b : g_modules) {
    if (!check_parity_conditions(b.presentation).applicable) continue;
    ++checked;
    WlpVerdict v = wlp_decide(b.module, 5, kDefaultSeed);
    if (v.status != WlpStatus::has_wlp) o.fail(b.name + ": " + to_string(v.status));
  }
  for (const char* required : {"ci(2,2,2)", "ci(2,3,4)", "circulant(3,2)", "circulant(3,3)", "circulant(4,2)"}) {
    bool found = false;
    for (const auto& b : g_modules)
      found = found || (b.name == required && check_parity_conditions(b.presentation).applicable);
    if (!found) o.fail(std::string(required) + " missing or outside the hypotheses");
  }
  o.detail = std::to_string(checked) + " presentations, seed " + std::to_string(kDefaultSeed);
  return o;
}

// ------------------------------------------------------------------ 6

Outcome nll_golden() {
  Outcome o;
  GradedPresentation p = make_complete_intersection(2, 2, 2);
  ArtinianGradedModule N = module_from_presentation(p);
  DualIdeal maximal = dual_ideal({"a1", "a2", "a3"}), product = dual_ideal({"a1*a2*a3"});
  if (!ideal_equal(locus_ideal(N, 0), maximal)) o.fail("I(L_0) differs");
  if (!ideal_equal(locus_ideal(N, 1), product)) o.fail("I(L_1) differs");
  if (!ideal_equal(locus_ideal(N, 2), maximal)) o.fail("I(L_2) differs");
  DualIdeal nll = nll_ideal(N);
  if (!ideal_equal(nll, product)) o.fail("I(L) differs");
  if (!ideal_equal(nll, locus_ideal(N, (p.d() - 4) / 2))) o.fail("I(L) differs from the middle degree");
  o.detail = "I(L) = " + ideal_to_string(nll);
  return o;
}

// ------------------------------------------------------------------ 7

Outcome locus_reductions() {
  Outcome o;
  int crux = 0, transpose = 0, level = 0, collapse = 0, unchecked = 0;
  for (const auto& b : g_modules) {
    const ArtinianGradedModule& N = b.module;
    const int t0 = N.initial_degree(), c = N.top_degree();
    std::vector<std::string> capped;

    // each I(L_{N,j}) once; nullopt above the caps
    std::vector<std::optional<DualIdeal>> loci;
    for (int j = t0; j < c; ++j) {
      try {
        loci.push_back(locus_ideal(N, j));
      } catch (const SizeCapError&) {
        loci.emplace_back();
      }
    }
    auto cached = [&](int j) -> DualIdeal {
      if (j < t0 || j >= c) return DualIdeal::unit(N.r());
      if (!loci[j - t0]) throw SizeCapError("degree " + std::to_string(j));
      return *loci[j - t0];
    };

    std::optional<ReducedLocusReport> rep;
    if (std::all_of(loci.begin(), loci.end(), [](const auto& I) { return I.has_value(); })) {
      std::vector<DualIdeal> per_degree;
      for (const auto& I : loci) per_degree.push_back(*I);
      rep = reduced_locus(N, std::move(per_degree));
    } else {
      capped.push_back("reductions");
    }
    for (int i = t0; i + 1 < c; ++i) {
      try {
        CruxVerdict v = check_crux(N, i, cached);
        if (v.status == CheckStatus::failed) o.fail(b.name + ": crux at " + std::to_string(i) + ": " + v.reason);
        if (v.status == CheckStatus::passed) ++crux;
      } catch (const SizeCapError&) {
        capped.push_back("crux " + std::to_string(i));
      }
    }
    for (int i = t0; i < c; ++i) {
      try {
        if (!dual_transpose_identity(N, i, cached(t0 + c - i - 1)).equal)
          o.fail(b.name + ": transpose relation fails at " + std::to_string(i));
        ++transpose;
      } catch (const SizeCapError&) {
        capped.push_back("transpose " + std::to_string(i));
      }
    }
    const bool all_zero =
        std::all_of(b.presentation.a().begin(), b.presentation.a().end(), [](int a) { return a == 0; });
    if (rep && rep->level) {
      const ReductionCheck& lv = rep->level_reduction;
      if (!lv.applicable) o.fail(b.name + ": level reduction not applicable: " + lv.reason);
      else if (!lv.scheme_equal || !lv.set.equal()) o.fail(b.name + ": level reduction fails");
      else ++level;
    }
    if (rep && all_zero) {
      const ReductionCheck& sg = rep->symmetric_reduction;
      if (!sg.applicable) o.fail(b.name + ": single-degree collapse not applicable: " + sg.reason);
      else if (!sg.scheme_equal || !sg.set.equal()) o.fail(b.name + ": single-degree collapse fails");
      else ++collapse;
    }
    if (!capped.empty()) {
      unchecked += static_cast<int>(capped.size());
      std::string what = b.name + ": not verified, above the size caps:";
      for (const auto& x : capped) what += " [" + x + "]";
      o.fail(what);
    }
  }
  o.detail = std::to_string(crux) + " containments, " + std::to_string(transpose) + " transposes, " +
             std::to_string(level) + " level reductions, " + std::to_string(collapse) + " collapses, " +
             std::to_string(unchecked) + " checks not computable";
  return o;
}

// ------------------------------------------------------------------ 8

Outcome propagation_duality() {
  Outcome o;
  std::vector<const Built*> level;
  for (const auto& b : g_modules)
    if (is_level(b.module)) level.push_back(&b);
  if (level.empty()) o.fail("no level modules");
  std::mt19937_64 rng(kDefaultSeed);
  int pairs = 0;
  for (int k = 0; k < 20 && !level.empty(); ++k) {
    const Built& b = *level[rng() % level.size()];
    LinearForm l = random_linear_form(b.module.r(), rng, 3);
    PropagationReport rep = check_propagation(b.module, l);
    ++pairs;
    if (rep.surjective_upward != CheckStatus::passed || rep.injective_downward != CheckStatus::passed) {
      std::string why = b.name + " with " + l.to_string() + ":";
      for (const auto& s : rep.counterexamples) why += " " + s;
      o.fail(why);
    }
  }
  for (const auto& b : g_modules) {
    const ArtinianGradedModule& N = b.module;
    ArtinianGradedModule D = dual_module(N);
    const int t0 = N.initial_degree(), c = N.top_degree();
    for (int i = t0; i <= c; ++i)
      if (D.dim(i) != N.dim(t0 + c - i)) o.fail(b.name + ": dual dimension differs at " + std::to_string(i));
    ArtinianGradedModule DD = dual_module(D);
    if (DD.dims() != N.dims()) o.fail(b.name + ": double dual dims differ");
    if (!(DD == N)) o.fail(b.name + ": double dual differs");
  }
  o.detail = std::to_string(pairs) + " (module, form) pairs from " + std::to_string(level.size()) +
             " level modules, " + std::to_string(g_modules.size()) + " duals";
  return o;
}

// ------------------------------------------------------------------ 9

Outcome negative_controls() {
  Outcome o;
  try {
    load_input(data_path("b1_le_a1.json"));
    o.fail("b_1 <= a_1 fixture accepted");
  } catch (const ValidationError& e) {
    if (std::string(e.what()).find("codimension at most 2") == std::string::npos)
      o.fail(std::string("b_1 <= a_1 fixture rejected for another reason: ") + e.what());
  }

  GradedPresentation bad = std::get<GradedPresentation>(load_input(data_path("notartinian.json")));
  ArtinianVerdict v = is_artinian(bad);
  if (v.artinian) o.fail("[x^2, y^2, x^2+y^2] reported Artinian");
  if (v.witness_dim == 0) o.fail("non-Artinian verdict has no witness");
  try {
    module_from_presentation(bad);
    o.fail("module built from a non-Artinian presentation");
  } catch (const ValidationError&) {
  }

  ArtinianGradedModule zero = std::get<ArtinianGradedModule>(load_input(data_path("zero_maps.json")));
  WlpVerdict w = wlp_decide(zero, 5, kDefaultSeed);
  if (w.status != WlpStatus::no_wlp) o.fail("zero structure fixture: " + to_string(w.status));
  else if (!w.certificate || !locus_ideal(zero, *w.certificate).is_zero()) o.fail("NoWLP without a zero-locus certificate");

  o.detail = "witness dim M_" + std::to_string(v.witness_degree) + " = " + std::to_string(v.witness_dim);
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  auto load_start = std::chrono::steady_clock::now();
  g_corpus = corpus::full();
  for (const auto& e : g_corpus) g_modules.push_back({e.name, e.presentation, module_from_presentation(e.presentation)});
  double load_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - load_start).count();
  std::printf("corpus: %zu presentations (%.1f s)\n", g_corpus.size(), load_seconds);

  std::vector<Criterion> criteria{
      {1, "Hilbert oracle equivalence", 60, hilbert_oracle},
      {2, "golden Hilbert tables", 5, golden_tables},
      {3, "resolution certification", 120, resolution_certification},
      {4, "symmetry and unimodality", 60, symmetry_unimodality},
      {5, "WLP under the parity hypotheses", 30, wlp_theorem},
      {6, "NLL golden value", 10, nll_golden},
      {7, "locus reductions", 300, locus_reductions},
      {8, "propagation and duality", 30, propagation_duality},
      {9, "negative controls", 5, negative_controls},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      std::ostringstream msg;
      msg << "took " << seconds << " s, budget " << c.budget_seconds << " s";
      o.fail(msg.str());
    }
    std::printf("%s %d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), seconds);
    for (const auto& v : o.violations) std::printf("    %s\n", v.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
