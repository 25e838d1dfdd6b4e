// One line per acceptance criterion: "[PASS] n name (details)" or "[FAIL] ...".

#ifdef TUHYPER_CLI11_PACKAGE
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tuhyper/tuhyper.hpp"

using namespace tuhyper;

namespace {

using Clock = std::chrono::steady_clock;

struct Settings {
  std::uint64_t seed = 0x7a11ce;
  std::size_t corpus = 10'000;
  std::size_t samples = 1'000;
  unsigned workers = 1;
};

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Records the first few failures and keeps a running verdict.
class Tally {
 public:
  void fail(const std::string& why) {
    ok_ = false;
    if (notes_.size() < 3) notes_.push_back(why);
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
  [[nodiscard]] Verdict verdict(const std::string& summary) const {
    std::string d = summary;
    for (const auto& n : notes_) d += "; " + n;
    return {ok_, d};
  }

 private:
  bool ok_ = true;
  std::vector<std::string> notes_;
};

std::string dump(const Hypergraph& g) { return to_json(g).dump(); }
std::string dump(const MixedHypergraph& d) { return to_json(d).dump(); }

LinalgLimits linalg(const Settings& s) {
  LinalgLimits l;
  l.workers = s.workers;
  return l;
}

// Shared random corpora: criteria 5, 7 and 11 use the first, 6 and 7 the second.
struct Corpora {
  std::vector<Hypergraph> plain;
  std::vector<MixedHypergraph> mixed;
  std::vector<bool> plain_tu;
  std::vector<bool> mixed_tu;
};

Verdict fig1(const Settings& s) {
  Tally t;
  const auto g = fixtures::fig1();
  const auto d = decide_unimodular_disjoint(g);
  t.expect(!d.unimodular, "decided TU");
  t.expect(d.witness && d.witness->kind == WitnessKind::OddTreeHouse && verify_witness(g, *d.witness),
           "no verified odd tree house");
  const auto delta = max_abs_subdet(incidence_matrix(g), linalg(s)).delta;
  t.expect(delta == 2, "delta " + delta.str());
  const auto c = camion_unimodular(g, linalg(s));
  t.expect(!c.unimodular && c.support == 10 && c.support % 4 == 2, "Camion support " + std::to_string(c.support));
  return t.verdict("tree house found, delta " + delta.str() + ", Camion support " + std::to_string(c.support));
}

Verdict fig2(const Settings& s) {
  Tally t;
  const auto g = fixtures::fig2();
  const auto a = incidence_matrix(g);
  t.expect(!find_odd_cycle(g), "odd cycle found");
  t.expect(!find_odd_tree_house(g), "odd tree house found");
  t.expect(!is_tu_bruteforce(a, linalg(s)), "brute force says TU");
  t.expect(is_almost_tu(a, linalg(s)), "not almost TU");
  std::string rejected = "accepted";
  try {
    (void)decide_unimodular_disjoint(g);
  } catch (const NotDisjoint& e) {
    rejected = g.edge_name(e.first()) + "," + g.edge_name(e.second());
  }
  t.expect(rejected == "e,f", "disjoint check named " + rejected);
  return t.verdict("no forbidden structure, almost TU, rejected naming " + rejected);
}

Verdict fig5(const Settings& s) {
  Tally t;
  const auto d = fixtures::fig5();
  const auto a = incidence_matrix(d);
  const auto c = classify_almost_tu_disjoint(d);
  t.expect(c.kind == AlmostTuClass::MixedOddTreeHouse, "classified " + to_string(c.kind));
  const auto det = det_exact(a);
  t.expect(abs(det) == 2, "det " + det.str());
  const auto r = build_r_matrix(a);
  t.expect(is_tu_bruteforce(r.r, linalg(s)), "R is not TU");
  t.expect(r.product == a * r.r, "product is not A R");
  const auto hole = MixedHypergraph::from_matrix(r.product);
  const auto cyc = as_mixed_cycle(hole);
  t.expect(cyc && verify_witness(hole, Witness{WitnessKind::MixedOddCycle, *cyc}), "A R is not a verified mixed odd cycle");
  t.expect(abs(det_exact(r.product)) == 2, "|det A R| != 2");
  return t.verdict(to_string(c.kind) + ", |det| " + BigInt(abs(det)).str() + ", R TU, A R an unbalanced hole");
}

Verdict fig4(const Settings&) {
  Tally t;
  const auto left = fixtures::fig4_left();
  const auto n = normalize_to_hypergraph(left);
  const IntMatrix printed{{1, 0, 0, 0, 0, 0, 1}, {1, 1, 0, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0, 0},
                          {0, 0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 0, 1, 1}};
  const auto m = incidence_matrix(n.hypergraph);
  t.expect(n.complete, "normalization incomplete");
  t.expect(m == printed, "split matrix differs from the printed one");
  const BigInt before = abs(det_exact(incidence_matrix(left)));
  const BigInt after = abs(det_exact(m));
  t.expect(before == after, "|det| " + before.str() + " became " + after.str());
  return t.verdict("7x7 matrix reproduced, |det| " + before.str() + " preserved");
}

Verdict decision_plain(const Settings& s, Corpora& c) {
  Tally t;
  Rng rng(s.seed);
  std::size_t non_tu = 0;
  for (std::size_t i = 0; i < s.corpus; ++i) {
    auto g = sample_disjoint(rng, 9, 9);
    const bool brute = is_tu_bruteforce(incidence_matrix(g), linalg(s));
    const auto d = decide_unimodular_disjoint(g);
    if (d.unimodular != brute) t.fail("disagreement on " + dump(g));
    if (d.witness && !verify_witness(g, *d.witness)) t.fail("unverified witness on " + dump(g));
    non_tu += brute ? 0 : 1;
    c.plain_tu.push_back(brute);
    c.plain.push_back(std::move(g));
  }
  return t.verdict(std::to_string(s.corpus) + " instances, " + std::to_string(non_tu) + " not TU");
}

Verdict decision_mixed(const Settings& s, Corpora& c) {
  Tally t;
  Rng rng(s.seed + 1);
  std::size_t non_tu = 0;
  std::size_t native = 0;
  for (std::size_t i = 0; i < s.corpus; ++i) {
    auto d = sample_disjoint_mixed(rng, 8, 9);
    const bool brute = is_tu_bruteforce(incidence_matrix(d), linalg(s));
    const auto r = decide_unimodular_mixed_disjoint(d);
    if (r.unimodular != brute) t.fail("disagreement on " + dump(d));
    if (r.witness && !verify_witness(d, *r.witness)) t.fail("unverified witness on " + dump(d));
    non_tu += brute ? 0 : 1;
    native += r.via_reduction ? 0 : 1;
    c.mixed_tu.push_back(brute);
    c.mixed.push_back(std::move(d));
  }
  return t.verdict(std::to_string(s.corpus) + " instances, " + std::to_string(non_tu) + " not TU, " +
                   std::to_string(native) + " decided without normalization");
}

Verdict camion(const Settings& s, const Corpora& c) {
  Tally t;
  std::size_t checked = 0;
  for (std::size_t i = 0; i < c.plain.size(); ++i) {
    const auto& g = c.plain[i];
    if (g.num_vertices() + g.num_edges() > 14) continue;
    ++checked;
    const auto r = camion_unimodular(g, linalg(s));
    if (r.unimodular != c.plain_tu[i]) t.fail("hypergraph disagreement on " + dump(g));
  }
  for (std::size_t i = 0; i < c.mixed.size(); ++i) {
    const auto& d = c.mixed[i];
    if (d.num_vertices() + d.num_arcs() > 14) continue;
    ++checked;
    const auto r = camion_unimodular_mixed(d, linalg(s));
    if (r.unimodular != c.mixed_tu[i]) t.fail("mixed disagreement on " + dump(d));
  }
  return t.verdict(std::to_string(checked) + " instances with rows+cols <= 14");
}

Verdict delta_vs_packing(const Settings& s) {
  Tally t;
  Rng rng(s.seed + 2);
  std::size_t nonempty = 0;
  for (std::size_t i = 0; i < s.samples; ++i) {
    const auto g = sample_graph(rng, 10, 12);
    const auto ocp = compute_ocp(g);
    const auto delta = g.num_edges() == 0 ? BigInt(0) : max_abs_subdet(incidence_matrix(g), linalg(s)).delta;
    const BigInt expected = g.num_edges() == 0 ? BigInt(0) : BigInt(1) << ocp;
    if (delta != expected) t.fail("delta " + delta.str() + " vs 2^" + std::to_string(ocp) + " on " + dump(g));
    nonempty += g.num_edges() > 0 ? 1 : 0;
  }
  return t.verdict(std::to_string(s.samples) + " graphs (" + std::to_string(nonempty) + " with edges), n <= 10, m <= 12");
}

Verdict berge(const Settings& s) {
  Tally t;
  Rng rng(s.seed + 3);
  std::size_t non_tu = 0;
  for (std::size_t i = 0; i < s.samples; ++i) {
    const auto g = sample_disjoint(rng, 8, 10, 3);
    const bool brute = is_tu_bruteforce(incidence_matrix(g), linalg(s));
    const auto cycle = find_odd_cycle(g);
    if (brute == cycle.has_value()) t.fail("disagreement on " + dump(g));
    non_tu += brute ? 0 : 1;
  }
  return t.verdict(std::to_string(s.samples) + " instances, edge sizes <= 3, " + std::to_string(non_tu) + " not TU");
}

MixedHypergraph random_mixed_cycle(Rng& rng, std::size_t k) {
  std::vector<std::vector<int>> arcs;
  for (std::size_t i = 0; i < k; ++i) {
    const int a = static_cast<int>(i) + 1;
    const int b = static_cast<int>((i + 1) % k) + 1;
    arcs.push_back({rng.coin() ? a : -a, rng.coin() ? b : -b});
  }
  return MixedHypergraph::from_signed(k, arcs);
}

// Parity is the sum of arc parities; random signs give both kinds at every length.
Verdict mec(const Settings& s) {
  Tally t;
  Rng rng(s.seed + 4);
  std::size_t even = 0;
  std::size_t odd = 0;
  while (even < s.samples || odd < s.samples) {
    const auto k = rng.between(2, 12);
    const auto c = random_mixed_cycle(rng, k);
    const auto m = incidence_matrix(c);
    if (path_or_cycle_parity(c) == Parity::Even) {
      const auto u = even_cycle_nullvector(c);
      const auto mu = m * std::span<const std::int64_t>(u);
      const bool zero = std::all_of(mu.begin(), mu.end(), [](std::int64_t x) { return x == 0; });
      const bool nontrivial = std::any_of(u.begin(), u.end(), [](std::int64_t x) { return x != 0; });
      if (!zero || !nontrivial) t.fail("M u != 0 on " + dump(c));
      if (det_exact(m) != 0) t.fail("nonzero det on " + dump(c));
      ++even;
    } else if (k <= 11) {
      const BigInt det = abs(det_exact(m));
      if (det != 2) t.fail("|det| " + det.str() + " on " + dump(c));
      ++odd;
    }
  }
  return t.verdict(std::to_string(even) + " mixed even cycles (length <= 12), " + std::to_string(odd) +
                   " mixed odd cycles (length <= 11)");
}

Verdict extraction(const Settings&, const Corpora& c) {
  Tally t;
  std::size_t done = 0;
  for (std::size_t i = 0; i < c.plain.size(); ++i) {
    if (c.plain_tu[i]) continue;
    const auto& g = c.plain[i];
    try {
      const auto w = extract_witness(g);
      if (const auto why = witness_defect(g, w)) t.fail(*why + " on " + dump(g));
    } catch (const InternalConsistencyError& e) {
      t.fail(std::string(e.what()) + " on " + dump(g));
    }
    ++done;
  }
  return t.verdict(std::to_string(done) + " non-TU instances extracted and verified");
}

Verdict classification(const Settings& s) {
  Tally t;
  Rng rng(s.seed + 5);
  std::size_t planted = 0;
  std::size_t agree_pos = 0;
  for (std::size_t i = 0; i < s.samples; ++i) {
    GenConfig cfg;
    cfg.seed = rng.next();
    Plant p;
    if (rng.coin()) {
      p.kind = WitnessKind::MixedOddCycle;
      p.cycle_length = 2 * rng.between(1, 4) + 1;
      cfg.n_vertices = p.cycle_length;
    } else {
      p.kind = WitnessKind::MixedOddTreeHouse;
      do {
        for (auto& len : p.paths) len = 2 * rng.between(0, 2) + 1;
      } while (1 + p.paths[0] + p.paths[1] + p.paths[2] > 10);
      cfg.n_vertices = 1 + p.paths[0] + p.paths[1] + p.paths[2];
    }
    cfg.plant = p;
    const auto g = generate(cfg);
    const auto& d = std::get<MixedHypergraph>(g.instance);
    const auto cls = classify_almost_tu_disjoint(d);
    const bool almost = is_almost_tu(incidence_matrix(d), linalg(s));
    const bool says = cls.kind != AlmostTuClass::NotAlmostTU;
    if (says != almost) t.fail("planted disagreement on " + dump(d));
    if (!almost) t.fail("planted structure is not almost TU: " + dump(d));
    if (cls.witness && !verify_witness(d, *cls.witness)) t.fail("unverified classification witness on " + dump(d));
    ++planted;
    agree_pos += says == almost ? 1 : 0;
  }
  std::size_t random = 0;
  std::size_t random_positive = 0;
  for (std::size_t i = 0; i < s.samples; ++i) {
    const auto d = sample_disjoint_mixed(rng, 8, 9);
    const auto cls = classify_almost_tu_disjoint(d);
    const bool almost = is_almost_tu(incidence_matrix(d), linalg(s));
    if ((cls.kind != AlmostTuClass::NotAlmostTU) != almost) t.fail("random disagreement on " + dump(d));
    ++random;
    random_positive += almost ? 1 : 0;
  }
  return t.verdict(std::to_string(planted) + " planted, " + std::to_string(random) + " random (" +
                   std::to_string(random_positive) + " of them almost TU)");
}

}  // namespace

int main(int argc, char** argv) {
  Settings s;
  CLI::App app{"acceptance suite"};
  app.add_option("--seed", s.seed, "base seed")->capture_default_str();
  app.add_option("--corpus", s.corpus, "instances per equivalence corpus")->capture_default_str();
  app.add_option("--samples", s.samples, "instances for the smaller property checks")->capture_default_str();
  app.add_option("--workers", s.workers, "worker threads for brute-force routines")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  Corpora corpora;
  struct Criterion {
    int id;
    std::string name;
    double budget_s;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "FIG1 tree house, delta and Camion", 1, [&] { return fig1(s); }},
      {2, "FIG2 almost TU without forbidden structure", 1, [&] { return fig2(s); }},
      {3, "FIG5 classification and R construction", 5, [&] { return fig5(s); }},
      {4, "FIG4 splitting transcript", 1, [&] { return fig4(s); }},
      {5, "disjoint hypergraphs: decision vs brute force", 600, [&] { return decision_plain(s, corpora); }},
      {6, "disjoint mixed hypergraphs: decision vs brute force", 600, [&] { return decision_mixed(s, corpora); }},
      {7, "Camion criteria vs brute force", 0, [&] { return camion(s, corpora); }},
      {8, "graphs: delta = 2^ocp", 0, [&] { return delta_vs_packing(s); }},
      {9, "edge sizes <= 3: TU iff no odd cycle", 0, [&] { return berge(s); }},
      {10, "mixed even cycles singular, mixed odd cycles |det| 2", 0, [&] { return mec(s); }},
      {11, "extraction on every non-TU corpus instance", 1800, [&] { return extraction(s, corpora); }},
      {12, "almost-TU classification vs brute force", 0, [&] { return classification(s); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      v.pass = false;
      v.detail += "; over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget";
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (v.pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << " (" << v.detail << "; " << secs << " s)";
    std::cout << line.str() << std::endl;
    failed += v.pass ? 0 : 1;
  }
  std::cout << (12 - failed) << "/12 criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
