#include "cli.hpp"

#ifdef TUHYPER_CLI11_PACKAGE
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "tuhyper/tuhyper.hpp"

namespace tuhyper::cli {

namespace {

struct Options {
  std::string input;
  bool json = false;
  std::optional<std::size_t> max_order;
  std::uint64_t max_nodes = SearchLimits{}.max_nodes;
  unsigned workers = 1;
  std::optional<std::uint64_t> seed;

  bool disjoint = false;
  std::string verify_cert;
  std::string side = "right";
  std::string out_path;
  bool largest_core = false;

  // gen
  std::string config_path;
  std::size_t vertices = 0;
  std::size_t small_edges = 0;
  std::vector<std::size_t> proper_sizes;
  bool mixed = false;
  bool allow_overlap = false;
  std::string plant;
  std::size_t cycle_length = 3;
  std::vector<std::size_t> paths{1, 1, 1};
  std::size_t padding = 0;

  [[nodiscard]] SearchLimits search() const { return SearchLimits{max_nodes}; }
  [[nodiscard]] LinalgLimits linalg() const {
    LinalgLimits l;
    l.max_order = max_order;
    l.workers = workers;
    return l;
  }
};

struct Outcome {
  Json doc;
  int code = kAnswered;
  std::string headline;
};

Json big_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw InvalidInput("expected an integer");
}

Json minor_json(const Minor& m, const BigInt& det) {
  return Json{{"rows", m.rows}, {"cols", m.cols}, {"det", big_json(det)}};
}

Instance load(const std::string& input) {
  constexpr std::string_view prefix = "fixture:";
  if (input.starts_with(prefix)) return fixtures::by_name(input.substr(prefix.size()));
  if (!std::filesystem::exists(input)) throw InvalidInput("no such file: " + input);
  return load_instance(input);
}

const Symbols& symbols_of(const Instance& inst) {
  return *std::visit([](const auto& x) -> const std::shared_ptr<const Symbols>& { return x.symbols(); }, inst);
}

IntMatrix matrix_of(const Instance& inst) {
  return std::visit([](const auto& x) { return incidence_matrix(x); }, inst);
}

MixedHypergraph as_mixed(const Instance& inst) {
  if (const auto* g = std::get_if<Hypergraph>(&inst)) return MixedHypergraph::from_hypergraph(*g);
  return std::get<MixedHypergraph>(inst);
}

Json witness_or_null(const std::optional<Witness>& w, const Symbols& sym) {
  return w ? to_json(*w, sym) : Json(nullptr);
}

// ------------------------------------------------------------------ certificates

std::optional<std::string> check_selection_cert(const Instance& inst, const Json& cert, const Options& o) {
  const auto sel = selection_from_json(cert.at("selection"), symbols_of(inst));
  if (const auto* g = std::get_if<Hypergraph>(&inst)) {
    for (auto e : sel.edges)
      if (!g->has_edge(e)) return "selection names an unknown edge";
    const auto h = induce(*g, sel);
    if (h.num_edges() != sel.edges.size()) return "a selected edge misses the selected vertices";
    if (!is_eulerian(h)) return "selection is not Eulerian";
    if (support_size(incidence_matrix(h)) % 4 != 2) return "selection support is not 2 mod 4";
    return std::nullopt;
  }
  const auto& d = std::get<MixedHypergraph>(inst);
  for (auto e : sel.edges)
    if (!d.has_arc(e)) return "selection names an unknown arc";
  const auto h = induce(d, sel);
  if (h.num_arcs() != sel.edges.size()) return "a selected arc misses the selected vertices";
  if (!is_eulerian(h)) return "selection is not Eulerian";
  if (h.num_vertices() != h.num_arcs()) return "selection is not square";
  if (incidence_matrix(h).entry_sum() % 4 == 0) return "selection entry sum is divisible by 4";
  (void)o;
  return std::nullopt;
}

std::optional<std::string> check_minor_cert(const Instance& inst, const Json& cert) {
  const auto a = matrix_of(inst);
  const auto& mj = cert.at("minor");
  const auto rows = mj.at("rows").get<std::vector<std::size_t>>();
  const auto cols = mj.at("cols").get<std::vector<std::size_t>>();
  if (rows.size() != cols.size()) return "minor is not square";
  for (auto r : rows)
    if (r >= a.rows()) return "minor row out of range";
  for (auto c : cols)
    if (c >= a.cols()) return "minor column out of range";
  const auto det = det_exact(a.submatrix(rows, cols));
  if (det != big_from_json(mj.at("det"))) return "minor determinant differs from the claim";
  if (cert.contains("delta") && big_from_json(cert.at("delta")) != abs(det)) return "delta differs from the minor";
  if (cert.contains("tu") && cert.at("tu") == false && abs(det) <= 1) return "minor does not violate total unimodularity";
  return std::nullopt;
}

std::optional<std::string> check_r_cert(const Instance& inst, const Json& cert, const Options& o) {
  const auto a = matrix_of(inst);
  const auto r = matrix_from_json(cert.at("R"));
  const auto side = cert.value("side", std::string("right"));
  IntMatrix product;
  if (side == "right") {
    if (r.rows() != a.cols()) return "R has the wrong shape";
    product = a * r;
  } else {
    if (r.cols() != a.rows()) return "R has the wrong shape";
    product = r * a;
  }
  if (cert.contains("product") && matrix_from_json(cert.at("product")) != product) return "product differs from the claim";
  if (!is_tu_bruteforce(r, o.linalg())) return "R is not totally unimodular";
  if (!is_unbalanced_hole(product)) return "product is not an unbalanced hole";
  return std::nullopt;
}

Outcome verify_certificate(const Instance& inst, const Json& cert, const Options& o) {
  if (!cert.is_object()) throw InvalidInput("certificate must be a JSON object");
  std::string checked;
  std::optional<std::string> defect;
  try {
    if (cert.contains("witness") && !cert.at("witness").is_null()) {
      checked = "witness";
      const auto w = witness_from_json(cert.at("witness"), symbols_of(inst));
      defect = std::visit([&](const auto& x) { return witness_defect(x, w); }, inst);
    } else if (cert.contains("odd_cycle") || cert.contains("odd_tree_house")) {
      checked = "detect";
      for (const char* key : {"odd_cycle", "odd_tree_house"}) {
        if (!cert.contains(key) || cert.at(key).is_null() || defect) continue;
        const auto w = witness_from_json(cert.at(key), symbols_of(inst));
        defect = std::visit([&](const auto& x) { return witness_defect(x, w); }, inst);
      }
      if (!defect && cert.value("odd_cycle", Json()).is_null() && cert.value("odd_tree_house", Json()).is_null())
        throw InvalidInput("certificate claims no structure to verify");
    } else if (cert.contains("minor") && !cert.at("minor").is_null()) {
      checked = "minor";
      defect = check_minor_cert(inst, cert);
    } else if (cert.contains("selection") && !cert.at("selection").is_null()) {
      checked = "camion";
      defect = check_selection_cert(inst, cert, o);
    } else if (cert.contains("R") && !cert.at("R").is_null()) {
      checked = "R";
      defect = check_r_cert(inst, cert, o);
    } else {
      throw InvalidInput("certificate carries no witness, minor, selection or R");
    }
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("certificate: ") + e.what());
  }
  Outcome out;
  out.doc = Json{{"valid", !defect}, {"checked", checked}, {"reason", defect ? Json(*defect) : Json(nullptr)}};
  out.code = defect ? kViolated : kAnswered;
  out.headline = defect ? "certificate rejected: " + *defect : "certificate valid (" + checked + ")";
  return out;
}

// ---------------------------------------------------------------------- commands

Outcome cmd_check(const Options& o) {
  const auto inst = load(o.input);
  if (!o.verify_cert.empty()) return verify_certificate(inst, read_json_file(o.verify_cert), o);
  const auto& sym = symbols_of(inst);
  const bool disjoint = std::visit([](const auto& x) { return is_disjoint(x); }, inst);
  if (o.disjoint) std::visit([](const auto& x) { require_disjoint(x); }, inst);
  Outcome out;
  if (disjoint) {
    if (const auto* g = std::get_if<Hypergraph>(&inst)) {
      const auto d = decide_unimodular_disjoint(*g, o.search());
      out.doc = Json{{"tu", d.unimodular}, {"method", "forbidden-structure"}, {"witness", witness_or_null(d.witness, sym)}};
      out.code = d.unimodular ? kAnswered : kViolated;
    } else {
      const auto d = decide_unimodular_mixed_disjoint(std::get<MixedHypergraph>(inst), o.search());
      out.doc = Json{{"tu", d.unimodular},
                     {"method", "forbidden-structure"},
                     {"via_reduction", d.via_reduction},
                     {"witness", witness_or_null(d.witness, sym)}};
      out.code = d.unimodular ? kAnswered : kViolated;
    }
  } else {
    const auto a = matrix_of(inst);
    const auto m = first_non_unimodular_minor(a, o.linalg());
    out.doc = Json{{"tu", !m}, {"method", "bruteforce"}};
    out.doc["minor"] = m ? minor_json(*m, det_exact(a.submatrix(m->rows, m->cols))) : Json(nullptr);
    out.code = m ? kViolated : kAnswered;
  }
  out.headline = out.code == kAnswered ? "totally unimodular" : "not totally unimodular";
  return out;
}

Outcome cmd_delta(const Options& o) {
  const auto a = matrix_of(load(o.input));
  const auto r = max_abs_subdet(a, o.linalg());
  Outcome out;
  out.doc = Json{{"delta", big_json(r.delta)}};
  out.doc["minor"] = r.witness.rows.empty() ? Json(nullptr)
                                            : minor_json(r.witness, det_exact(a.submatrix(r.witness.rows, r.witness.cols)));
  out.headline = "delta = " + r.delta.str();
  return out;
}

Outcome cmd_detect(const Options& o) {
  const auto inst = load(o.input);
  const auto& sym = symbols_of(inst);
  std::optional<Witness> cycle;
  std::optional<Witness> house;
  if (const auto* g = std::get_if<Hypergraph>(&inst)) {
    cycle = find_odd_cycle(*g, o.search());
    house = find_odd_tree_house(*g, o.search());
  } else {
    const auto& d = std::get<MixedHypergraph>(inst);
    cycle = find_mixed_odd_cycle(d, o.search());
    house = find_mixed_odd_tree_house(d, o.search());
  }
  Outcome out;
  out.doc = Json{{"odd_cycle", witness_or_null(cycle, sym)}, {"odd_tree_house", witness_or_null(house, sym)}};
  out.code = (cycle || house) ? kViolated : kAnswered;
  out.headline = std::string("odd cycle: ") + (cycle ? "found" : "none") + ", odd tree house: " + (house ? "found" : "none");
  return out;
}

Outcome cmd_extract(const Options& o) {
  const auto inst = load(o.input);
  const auto& sym = symbols_of(inst);
  const ExtractLimits limits{o.search(), o.linalg(), o.largest_core ? CoreOrder::Largest : CoreOrder::Smallest};
  Outcome out;
  if (const auto* g = std::get_if<Hypergraph>(&inst)) {
    require_disjoint(*g);
    if (camion_unimodular(*g, limits.linalg).unimodular) {
      out.doc = Json{{"tu", true}, {"witness", nullptr}, {"trace", nullptr}};
      out.headline = "totally unimodular: nothing to extract";
      return out;
    }
    auto ex = extract_with_trace(*g, limits);
    out.doc = Json{{"tu", false}, {"witness", to_json(ex.witness, sym)}, {"trace", std::move(ex.trace)}};
  } else {
    const auto& d = std::get<MixedHypergraph>(inst);
    require_disjoint(d);
    const auto norm = normalize_to_hypergraph(d);
    if (!norm.complete) throw PreconditionViolated("extract: the mixed instance admits no consistent row signing");
    if (camion_unimodular(norm.hypergraph, limits.linalg).unimodular) {
      out.doc = Json{{"tu", true}, {"witness", nullptr}, {"trace", nullptr}};
      out.headline = "totally unimodular: nothing to extract";
      return out;
    }
    auto ex = extract_with_trace(norm.hypergraph, limits);
    const auto back = map_witness_back(ex.witness, norm.transcript);
    if (const auto why = witness_defect(d, back)) throw InternalConsistencyError("witness transfer", *why);
    out.doc = Json{{"tu", false},
                   {"witness", to_json(back, sym)},
                   {"reduced_witness", to_json(ex.witness, *norm.hypergraph.symbols())},
                   {"transcript", to_json(norm.transcript, *norm.reduced.symbols())},
                   {"trace", std::move(ex.trace)}};
  }
  out.code = kViolated;
  out.headline = "not totally unimodular: extracted " + out.doc["witness"]["kind"].get<std::string>();
  return out;
}

Outcome cmd_camion(const Options& o) {
  const auto inst = load(o.input);
  const auto& sym = symbols_of(inst);
  const auto r = std::holds_alternative<Hypergraph>(inst)
                     ? camion_unimodular(std::get<Hypergraph>(inst), o.linalg())
                     : camion_unimodular_mixed(std::get<MixedHypergraph>(inst), o.linalg());
  Outcome out;
  out.doc = Json{{"unimodular", r.unimodular}};
  out.doc["selection"] = r.unimodular ? Json(nullptr) : to_json(r.witness, sym);
  out.doc["support"] = r.support;
  out.doc["entry_sum"] = r.entry_sum;
  out.code = r.unimodular ? kAnswered : kViolated;
  out.headline = r.unimodular ? "Camion criterion holds"
                              : "Camion criterion fails (support " + std::to_string(r.support) + ")";
  return out;
}

Outcome cmd_reduce(const Options& o) {
  const auto d = as_mixed(load(o.input));
  const auto norm = normalize_to_hypergraph(d);
  Outcome out;
  out.doc = Json{{"complete", norm.complete},
                 {"transcript", to_json(norm.transcript, *norm.reduced.symbols())},
                 {"reduced", to_json(norm.reduced)},
                 {"matrix", to_json(incidence_matrix(norm.reduced))}};
  out.doc["hypergraph"] = norm.complete ? to_json(norm.hypergraph) : Json(nullptr);
  out.headline = norm.complete ? "reduced to a hypergraph in " + std::to_string(norm.transcript.steps.size()) + " steps"
                               : "no consistent row signing; partial reduction only";
  return out;
}

Outcome cmd_build_r(const Options& o) {
  if (o.side != "right" && o.side != "left") throw InvalidInput("--side must be right or left");
  const auto a = matrix_of(load(o.input));
  Outcome out;
  try {
    const auto rc = build_r_matrix(a, o.side == "right" ? Side::Right : Side::Left);
    out.doc = Json{{"side", o.side},
                   {"input_class", to_string(rc.input_class)},
                   {"R", to_json(rc.r)},
                   {"product", to_json(rc.product)},
                   {"AR_is_unbalanced_hole", is_unbalanced_hole(rc.product)},
                   {"det", big_json(det_exact(rc.product))}};
    try {
      out.doc["R_is_tu"] = is_tu_bruteforce(rc.r, o.linalg());
    } catch (const GuardExceeded&) {
      out.doc["R_is_tu"] = nullptr;
    }
    out.headline = "R built for a " + to_string(rc.input_class);
  } catch (const PreconditionViolated& e) {
    out.doc = Json{{"side", o.side},
                   {"input_class", to_string(AlmostTuClass::NotAlmostTU)},
                   {"R", nullptr},
                   {"product", nullptr},
                   {"AR_is_unbalanced_hole", false},
                   {"det", nullptr},
                   {"R_is_tu", nullptr}};
    out.code = kViolated;
    out.headline = e.what();
  }
  return out;
}

Plant plant_from(const Options& o) {
  Plant p;
  p.kind = witness_kind_from_string(o.plant);
  p.cycle_length = o.cycle_length;
  if (o.paths.size() != 3) throw InvalidInput("--paths takes three lengths");
  p.paths = {o.paths[0], o.paths[1], o.paths[2]};
  return p;
}

Outcome cmd_gen(const Options& o) {
  GenConfig cfg;
  if (!o.config_path.empty()) {
    cfg = gen_config_from_json(read_json_file(o.config_path));
  } else {
    cfg.n_vertices = o.vertices;
    cfg.n_small_edges = o.small_edges;
    cfg.proper_edge_sizes = o.proper_sizes;
    cfg.disjoint = !o.allow_overlap;
    cfg.mixed = o.mixed;
    cfg.plant_padding = o.padding;
    if (!o.plant.empty()) cfg.plant = plant_from(o);
  }
  cfg.seed = *o.seed;
  const auto g = generate(cfg);
  const auto& sym = symbols_of(g.instance);
  Json instance = std::visit([](const auto& x) { return to_json(x); }, g.instance);
  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path);
    if (!f) throw InvalidInput("cannot write " + o.out_path);
    f << instance.dump(2) << "\n";
  }
  Outcome out;
  out.doc = Json{{"config", to_json(cfg)}, {"instance", std::move(instance)}, {"witness", witness_or_null(g.planted, sym)}};
  out.headline = "generated " + std::to_string(cfg.n_vertices) + " vertices";
  return out;
}

struct Probe {
  std::string name;
  bool pass;
  std::string detail;
};

Outcome cmd_selftest(const Options& o) {
  std::vector<Probe> probes;
  auto probe = [&](const std::string& name, auto&& fn) {
    try {
      const auto [ok, detail] = fn();
      probes.push_back({name, ok, detail});
    } catch (const std::exception& e) {
      probes.push_back({name, false, e.what()});
    }
  };
  const auto ll = o.linalg();
  const auto sl = o.search();

  probe("fig1 tree house", [&] {
    const auto g = fixtures::fig1();
    const auto d = decide_unimodular_disjoint(g, sl);
    const bool ok = !d.unimodular && d.witness->kind == WitnessKind::OddTreeHouse && verify_witness(g, *d.witness);
    return std::pair{ok, std::string(ok ? "odd tree house" : "no tree house")};
  });
  probe("fig1 delta", [&] {
    const auto r = max_abs_subdet(incidence_matrix(fixtures::fig1()), ll);
    return std::pair{r.delta == 2, "delta " + r.delta.str()};
  });
  probe("fig1 camion", [&] {
    const auto r = camion_unimodular(fixtures::fig1(), ll);
    return std::pair{!r.unimodular && r.support == 10, "support " + std::to_string(r.support)};
  });
  probe("fig1 extraction", [&] {
    const auto g = fixtures::fig1();
    const auto w = extract_witness(g, {sl, ll});
    return std::pair{verify_witness(g, w), to_string(w.kind)};
  });
  probe("fig2 almost TU without forbidden structure", [&] {
    const auto g = fixtures::fig2();
    const auto a = incidence_matrix(g);
    const bool ok = !find_odd_cycle(g, sl) && !find_odd_tree_house(g, sl) && !is_tu_bruteforce(a, ll) && is_almost_tu(a, ll);
    return std::pair{ok, std::string(ok ? "as expected" : "mismatch")};
  });
  probe("fig2 not disjoint", [&] {
    const auto g = fixtures::fig2();
    try {
      require_disjoint(g);
    } catch (const NotDisjoint& e) {
      const bool ok = g.edge_name(e.first()) == "e" && g.edge_name(e.second()) == "f";
      return std::pair{ok, std::string(e.what())};
    }
    return std::pair{false, std::string("accepted as disjoint")};
  });
  probe("fig4 splitting", [&] {
    const auto n = normalize_to_hypergraph(fixtures::fig4_left());
    const auto m = incidence_matrix(n.hypergraph);
    const bool ok = n.complete && m == incidence_matrix(fixtures::fig4_right()) &&
                    abs(det_exact(m)) == abs(det_exact(incidence_matrix(fixtures::fig4_left())));
    return std::pair{ok, std::string(ok ? "7x7 matrix reproduced" : "matrix differs")};
  });
  probe("fig5 classification and R", [&] {
    const auto d = fixtures::fig5();
    const auto a = incidence_matrix(d);
    const auto c = classify_almost_tu_disjoint(d);
    const auto rc = build_r_matrix(a);
    const bool ok = c.kind == AlmostTuClass::MixedOddTreeHouse && abs(det_exact(a)) == 2 && is_tu_bruteforce(rc.r, ll) &&
                    is_unbalanced_hole(rc.product);
    return std::pair{ok, to_string(c.kind)};
  });
  probe("c3 odd cycle, c4 and dir4 TU", [&] {
    const bool ok = !decide_unimodular_disjoint(fixtures::c3(), sl).unimodular &&
                    decide_unimodular_disjoint(fixtures::c4(), sl).unimodular &&
                    decide_unimodular_mixed_disjoint(fixtures::dir4(), sl).unimodular;
    return std::pair{ok, std::string(ok ? "as expected" : "mismatch")};
  });

  Outcome out;
  out.doc = Json{{"probes", Json::array()}};
  std::size_t failed = 0;
  for (const auto& p : probes) {
    out.doc["probes"].push_back(Json{{"name", p.name}, {"pass", p.pass}, {"detail", p.detail}});
    failed += p.pass ? 0 : 1;
  }
  out.doc["passed"] = failed == 0;
  out.code = failed == 0 ? kAnswered : kViolated;
  out.headline = std::to_string(probes.size() - failed) + "/" + std::to_string(probes.size()) + " probes passed";
  return out;
}

// ------------------------------------------------------------------------ output

std::string paint(const std::string& s, const char* code, const Terminal& term) {
  return term.color ? std::string("\033[") + code + "m" + s + "\033[0m" : s;
}

void print_human(std::ostream& out, const Outcome& r, const Terminal& term) {
  out << paint(r.headline, r.code == kAnswered ? "32" : "31", term) << "\n";
  if (r.doc.contains("probes")) {
    for (const auto& p : r.doc["probes"])
      out << "  " << paint(p["pass"].get<bool>() ? "PASS" : "FAIL", p["pass"].get<bool>() ? "32" : "31", term) << "  "
          << p["name"].get<std::string>() << ": " << p["detail"].get<std::string>() << "\n";
    return;
  }
  for (const auto& [key, value] : r.doc.items()) {
    if (key == "command" || key == "trace" || value.is_null()) continue;
    out << "  " << key << ": " << value.dump() << "\n";
  }
}

int report_error(std::ostream& out, std::ostream& err, bool json, int code, const std::string& kind,
                 const std::string& message, Json extra = Json::object()) {
  err << "tuhyper: " << message << "\n";
  if (json) {
    extra["kind"] = kind;
    extra["message"] = message;
    out << Json{{"error", std::move(extra)}, {"exit_code", code}}.dump(2) << "\n";
  }
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, Terminal term) {
  Options o;
  CLI::App app{"Total unimodularity of disjoint hypergraph incidence matrices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tuhyper 0.1.0");

  auto common = [&](CLI::App* sub, bool input) {
    if (input) sub->add_option("input", o.input, "instance JSON file, or fixture:NAME")->required();
    sub->add_flag("--json", o.json, "emit JSON on stdout");
    sub->add_option("--max-order", o.max_order, "largest submatrix order examined by exhaustive routines");
    sub->add_option("--max-nodes", o.max_nodes, "search node budget per call")->capture_default_str();
    sub->add_option("--workers", o.workers, "worker threads for exhaustive routines")->capture_default_str()
        ->check(CLI::Range(1U, 256U));
  };

  auto* check = app.add_subcommand("check", "decide total unimodularity, or verify a certificate");
  common(check, true);
  check->add_flag("--disjoint", o.disjoint, "reject inputs whose proper edges overlap");
  check->add_option("--verify-cert", o.verify_cert, "certificate JSON emitted by another command")->check(CLI::ExistingFile);

  auto* delta = app.add_subcommand("delta", "largest absolute subdeterminant");
  common(delta, true);
  auto* detect = app.add_subcommand("detect", "search for odd cycles and odd tree houses");
  common(detect, true);
  auto* extract = app.add_subcommand("extract", "constructive witness extraction with an audit trace");
  common(extract, true);
  extract->add_flag("--largest-core", o.largest_core, "start each level from a largest Eulerian core");
  auto* camion = app.add_subcommand("camion", "Eulerian support criterion");
  common(camion, true);
  auto* reduce = app.add_subcommand("reduce", "sign and split a mixed instance into a hypergraph");
  common(reduce, true);
  auto* build_r = app.add_subcommand("build-r", "TU matrix R turning an almost-TU instance into an unbalanced hole");
  common(build_r, true);
  build_r->add_option("--side", o.side, "right (A R) or left (R A)")->capture_default_str();

  auto* gen = app.add_subcommand("gen", "seeded random instance");
  common(gen, false);
  gen->add_option("--seed", o.seed, "PRNG seed")->required();
  gen->add_option("--config", o.config_path, "GenConfig JSON; other shape flags are ignored")->check(CLI::ExistingFile);
  gen->add_option("--vertices", o.vertices, "number of vertices");
  gen->add_option("--small-edges", o.small_edges, "random edges of size 2 or 3");
  gen->add_option("--proper-sizes", o.proper_sizes, "sizes of extra proper edges")->delimiter(',');
  gen->add_flag("--mixed", o.mixed, "random signs");
  gen->add_flag("--allow-overlap", o.allow_overlap, "proper edges may overlap");
  gen->add_option("--plant", o.plant, "OddCycle, OddTreeHouse, MixedOddCycle or MixedOddTreeHouse");
  gen->add_option("--cycle-length", o.cycle_length, "length of a planted cycle")->capture_default_str();
  gen->add_option("--paths", o.paths, "path lengths of a planted tree house")->delimiter(',')->expected(3);
  gen->add_option("--padding", o.padding, "outside vertices added to planted edges")->capture_default_str();
  gen->add_option("--out", o.out_path, "also write the instance to this file");

  auto* selftest = app.add_subcommand("selftest", "fixture suite");
  common(selftest, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kAnswered;
    }
    app.exit(e, out, err);
    return kInputError;
  }

  const auto* sub = app.get_subcommands().front();
  const auto name = sub->get_name();
  try {
    Outcome r;
    if (name == "check") r = cmd_check(o);
    else if (name == "delta") r = cmd_delta(o);
    else if (name == "detect") r = cmd_detect(o);
    else if (name == "extract") r = cmd_extract(o);
    else if (name == "camion") r = cmd_camion(o);
    else if (name == "reduce") r = cmd_reduce(o);
    else if (name == "build-r") r = cmd_build_r(o);
    else if (name == "gen") r = cmd_gen(o);
    else r = cmd_selftest(o);
    r.doc["command"] = (name == "check" && !o.verify_cert.empty()) ? "verify-cert" : name;
    if (o.json) out << r.doc.dump(2) << "\n";
    else print_human(out, r, term);
    return r.code;
  } catch (const NotDisjoint& e) {
    const auto names = [&]() -> Json {
      try {
        const auto inst = load(o.input);
        const auto& sym = symbols_of(inst);
        return Json::array({sym.edge_name(e.first()), sym.edge_name(e.second())});
      } catch (const std::exception&) {
        return Json::array({raw(e.first()), raw(e.second())});
      }
    }();
    return report_error(out, err, o.json, kInputError, "NotDisjoint", e.what(), Json{{"edges", names}});
  } catch (const InvalidInput& e) {
    return report_error(out, err, o.json, kInputError, "InvalidInput", e.what());
  } catch (const PreconditionViolated& e) {
    return report_error(out, err, o.json, kInputError, "PreconditionViolated", e.what());
  } catch (const GuardExceeded& e) {
    return report_error(out, err, o.json, kLimitExceeded, "GuardExceeded", e.what());
  } catch (const BudgetExceeded& e) {
    return report_error(out, err, o.json, kLimitExceeded, "BudgetExceeded", e.what());
  } catch (const InternalConsistencyError& e) {
    return report_error(out, err, o.json, kInternalError, "InternalConsistencyError", e.what(), Json{{"step", e.step()}});
  } catch (const Json::exception& e) {
    return report_error(out, err, o.json, kInputError, "InvalidInput", e.what());
  }
}

}  // namespace tuhyper::cli
