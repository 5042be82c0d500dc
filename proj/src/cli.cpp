#include "endoring/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "endoring/constructions.hpp"
#include "endoring/endoscope.hpp"
#include "endoring/errors.hpp"

namespace endoring::cli {

namespace {

namespace fs = std::filesystem;

/// Raised for command-line problems detected after parsing.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path, std::string("malformed JSON: ") + e.what());
  }
}

std::optional<DegreeWindow> parse_window(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--hf-window expects lo:hi, got '" + text + "'");
  try {
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    int lo = std::stoi(text.substr(0, colon), &used_lo);
    int hi = std::stoi(text.substr(colon + 1), &used_hi);
    if (used_lo != colon || used_hi != text.size() - colon - 1 || lo > hi) throw std::invalid_argument("");
    return DegreeWindow{lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--hf-window expects lo:hi with lo <= hi, got '" + text + "'");
  }
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("ENDORING_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::logic_error&) {
      throw UsageError(std::string("ENDORING_SEED is not an integer: ") + s);
    }
  }
  return kDefaultSeed;
}

// ---------------------------------------------------------------------------
// Corpus fixtures

struct Fixture {
  FPModule module;
  BoundContext context;
};

Coeff prime_of(const Json& spec) {
  return spec.contains("prime") ? spec["prime"].get<Coeff>() : PrimeField::kDefaultPrime;
}

std::vector<std::string> string_list(const Json& spec, const std::string& key, const std::string& path) {
  if (!spec.contains(key) || !spec[key].is_array()) throw SchemaError(path + "." + key, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& s : spec[key]) {
    if (!s.is_string()) throw SchemaError(path + "." + key, "expected an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

std::size_t size_field(const Json& spec, const std::string& key, const std::string& path) {
  if (!spec.contains(key) || !spec[key].is_number_unsigned()) {
    throw SchemaError(path + "." + key, "expected a non-negative integer");
  }
  return spec[key].get<std::size_t>();
}

RingPtr spec_ring(const Json& spec, const std::string& path) {
  return make_ring(string_list(spec, "vars", path), prime_of(spec));
}

Fixture build_fixture(const Json& spec, const fs::path& base, const std::string& path) {
  if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string()) {
    throw SchemaError(path + ".kind", "missing");
  }
  const std::string kind = spec["kind"].get<std::string>();
  if (kind == "free") {
    std::vector<int> degs;
    if (spec.contains("degrees")) {
      degs = spec["degrees"].get<std::vector<int>>();
    } else {
      degs.assign(size_field(spec, "rank", path), 0);
    }
    return {FPModule::free(spec_ring(spec, path), degs), {}};
  }
  if (kind == "cyclic") {
    auto ring = spec_ring(spec, path);
    std::vector<std::vector<Polynomial>> cols;
    for (const auto& g : string_list(spec, "relations", path)) cols.push_back({parse_polynomial(g, ring)});
    return {make_module(ring, {0}, cols), {}};
  }
  if (kind == "residue-field") {
    auto ring = spec_ring(spec, path);
    std::vector<std::vector<Polynomial>> cols;
    for (std::size_t i = 0; i < ring->nvars(); ++i) cols.push_back({Polynomial::variable(ring, i)});
    return {make_module(ring, {0}, cols), {}};
  }
  if (kind == "koszul-cycles") {
    return {koszul_cycles(size_field(spec, "n", path), size_field(spec, "i", path), prime_of(spec)), {}};
  }
  if (kind == "determinantal") {
    std::size_t n = size_field(spec, "n", path);
    std::size_t m = size_field(spec, "m", path);
    BoundContext ctx;
    ctx.determinantal = std::make_pair(n, m);
    return {generic_determinantal(n, m, prime_of(spec)).module, ctx};
  }
  if (kind == "one-relation") {
    auto ring = spec_ring(spec, path);
    std::vector<Polynomial> entries;
    for (const auto& e : string_list(spec, "entries", path)) entries.push_back(parse_polynomial(e, ring));
    auto orm = one_relation_module(entries);
    BoundContext ctx;
    ctx.one_relation_ideal = orm.ideal;
    return {orm.module, ctx};
  }
  if (kind == "sum") {
    if (!spec.contains("parts") || !spec["parts"].is_array() || spec["parts"].empty()) {
      throw SchemaError(path + ".parts", "expected a non-empty array");
    }
    std::optional<FPModule> acc;
    for (std::size_t i = 0; i < spec["parts"].size(); ++i) {
      auto part = build_fixture(spec["parts"][i], base, path + ".parts[" + std::to_string(i) + "]").module;
      acc = acc ? direct_sum(*acc, part) : part;
    }
    return {*acc, {}};
  }
  if (kind == "perfect-syzygy") {
    if (!spec.contains("of")) throw SchemaError(path + ".of", "missing");
    auto m = build_fixture(spec["of"], base, path + ".of").module;
    return {perfect_syzygy(m, size_field(spec, "k", path)), {}};
  }
  if (kind == "file") {
    if (!spec.contains("path") || !spec["path"].is_string()) throw SchemaError(path + ".path", "missing");
    fs::path p = spec["path"].get<std::string>();
    if (p.is_relative()) p = base / p;
    if (!fs::exists(p)) throw std::runtime_error("missing fixture file " + p.string());
    return {module_from_json(read_json_file(p.string())), {}};
  }
  if (kind == "module") {
    if (!spec.contains("module")) throw SchemaError(path + ".module", "missing");
    return {module_from_json(spec["module"]), {}};
  }
  throw SchemaError(path + ".kind", "unknown fixture kind '" + kind + "'");
}

/// Evaluates one named check on a fixture; returns the observed value.
Json evaluate_check(const std::string& name, const Fixture& fx, std::uint64_t seed, const std::string& path) {
  const FPModule& e = fx.module;
  if (name == "is_local") return is_local_module(e).is_local;
  if (name == "ausbr0") return verify_ausbr0(e).status;
  if (name == "ausbr0_total") return verify_ausbr0(e).spots.at(0).left.total();
  if (name == "bounds") return generator_bound_report(e, fx.context).pass() ? "pass" : "fail";
  if (name == "nu_end") return generator_bound_report(e, fx.context).nu_end;
  if (name == "bar_bound") {
    EndAlgebra lambda(e);
    auto n = lambda.module().num_generators();
    return bar_algebra(lambda).dim() <= n * n;
  }
  if (name == "unit_law") return EndAlgebra(e).verify_unit_law();
  if (name == "trace_rank") {
    const PrimeField& F = e.ring()->field();
    return endomorphism_trace(ModuleMorphism::identity(e)) == F.from_int(rank(e));
  }
  if (name == "trace_commutes") return check_trace_commutes(EndAlgebra(e), 10, seed).pass();
  if (name == "reflexive") return is_reflexive(e);
  if (name == "has_free_summand") return has_free_summand(e);
  if (name == "j1_in_j0") {
    EndAlgebra lambda(e);
    return contained_in(j1(lambda), j0(lambda));
  }
  throw SchemaError(path, "unknown check '" + name + "'");
}

// ---------------------------------------------------------------------------
// Command line

struct Options {
  std::optional<Coeff> prime;
  std::string window_text;
  std::optional<std::uint64_t> seed;
  std::string output;

  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<std::size_t> cycle;
  std::vector<std::string> vars;
  std::vector<std::string> entries;
  std::size_t k = 0;
  std::size_t index = 0;
  bool witnesses = false;
  bool one_relation = false;
  std::vector<std::size_t> determinantal;
  std::vector<std::string> files;
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  void emit(const Json& j) {
    if (opt_.output.empty()) {
      out_ << j.dump(2) << "\n";
      return;
    }
    std::ofstream f(opt_.output);
    if (!f) throw std::runtime_error("cannot write " + opt_.output);
    f << j.dump(2) << "\n";
  }

  /// Loads input file i, sharing one ring across inputs.
  FPModule load(std::size_t i) {
    if (i >= opt_.files.size()) throw UsageError("expected at least " + std::to_string(i + 1) + " module file(s)");
    Json j = read_json_file(opt_.files[i]);
    FPModule m = module_from_json(j, ring_);
    if (opt_.prime && m.ring()->prime() != *opt_.prime) {
      throw SchemaError("ring.prime", "is " + std::to_string(m.ring()->prime()) + " but --prime asks for " +
                                          std::to_string(*opt_.prime));
    }
    ring_ = m.ring();
    return m;
  }

  void expect_files(std::size_t count) {
    if (opt_.files.size() != count) {
      throw UsageError("expected " + std::to_string(count) + " module file(s), got " + std::to_string(opt_.files.size()));
    }
  }

  Coeff prime() const { return opt_.prime.value_or(PrimeField::kDefaultPrime); }
  std::optional<DegreeWindow> window() const { return parse_window(opt_.window_text); }
  std::uint64_t seed() const { return opt_.seed ? *opt_.seed : default_seed(); }

  int construct(const std::string& what) {
    if (what == "koszul") {
      if (opt_.n == 0) throw UsageError("--n must be positive");
      if (opt_.cycle) {
        emit(module_to_json(koszul_cycles(opt_.n, *opt_.cycle, prime())));
      } else {
        emit(resolution_to_json(koszul_complex(opt_.n, prime())));
      }
    } else if (what == "det") {
      emit(module_to_json(generic_determinantal(opt_.n, opt_.m, prime()).module));
    } else if (what == "one-relation") {
      auto ring = make_ring(opt_.vars, prime());
      std::vector<Polynomial> ps;
      for (const auto& e : opt_.entries) ps.push_back(parse_polynomial(e, ring));
      emit(module_to_json(one_relation_module(ps).module));
    } else if (what == "syzygy") {
      expect_files(1);
      emit(module_to_json(perfect_syzygy(load(0), opt_.k)));
    }
    return kOk;
  }

  int compute(const std::string& what) {
    auto with_witnesses = [&](Json j, const HomModule& h) {
      if (opt_.witnesses) {
        Json ws = Json::array();
        for (const auto& w : h.witnesses()) ws.push_back(morphism_to_json(w));
        j["witnesses"] = std::move(ws);
      }
      return j;
    };
    if (what == "hom") {
      expect_files(2);
      auto a = load(0);
      auto b = load(1);
      HomModule h(a, b);
      emit(with_witnesses(module_to_json(h.module()), h));
    } else if (what == "end") {
      expect_files(1);
      EndAlgebra lambda(load(0));
      Json j = module_to_json(lambda.underlying());
      j["identity"] = vector_to_json(lambda.identity());
      emit(with_witnesses(std::move(j), lambda.hom()));
    } else if (what == "dual") {
      expect_files(1);
      auto d = dual(load(0));
      emit(with_witnesses(module_to_json(d.module()), d));
    } else if (what == "adual") {
      expect_files(1);
      emit(module_to_json(auslander_dual(load(0))));
    } else if (what == "tensor") {
      expect_files(2);
      auto a = load(0);
      emit(module_to_json(tensor(a, load(1))));
    } else if (what == "trace-ideal") {
      expect_files(1);
      auto t = trace_ideal(load(0));
      Json j;
      j["ring"] = ring_to_json(*ring_);
      Json gens = Json::array();
      for (const auto& g : t.generators) gens.push_back(g.to_string());
      j["generators"] = std::move(gens);
      j["contains_one"] = t.contains_one;
      emit(j);
    } else if (what == "resolution") {
      expect_files(1);
      emit(resolution_to_json(free_resolution(load(0))));
    } else if (what == "hilbert") {
      expect_files(1);
      auto m = load(0);
      auto w = window().value_or(default_window({m}));
      emit(hilbert_to_json(hilbert_function(m, w.lo, w.hi)));
    } else if (what == "rank") {
      expect_files(1);
      emit(Json{{"rank", rank(load(0))}});
    } else if (what == "depth") {
      expect_files(1);
      auto m = load(0);
      emit(Json{{"depth", depth(m)}, {"projective_dimension", projective_dimension(m)}});
    } else if (what == "ext") {
      expect_files(1);
      emit(module_to_json(ext(load(0), opt_.index)));
    } else if (what == "tor") {
      expect_files(2);
      auto a = load(0);
      emit(module_to_json(tor(a, load(1), opt_.index)));
    }
    return kOk;
  }

  int verify(const std::string& what) {
    if (what == "ausbr0") {
      expect_files(1);
      return sequence(verify_ausbr0(load(0), window()));
    }
    if (what == "adual") {
      expect_files(2);
      auto e = load(0);
      return sequence(verify_adual(e, load(1), window()));
    }
    if (what == "perfect-syzygy") {
      expect_files(1);
      return sequence(verify_perfect_syzygy_sequence(load(0), opt_.k, window()));
    }
    if (what == "bounds") {
      expect_files(1);
      auto e = load(0);
      BoundContext ctx;
      if (opt_.one_relation) {
        if (e.relations().size() != 1) throw UsageError("--one-relation needs a module with exactly one relation");
        std::vector<Polynomial> ideal;
        for (const auto& p : e.relations()[0].entries()) {
          if (!p.is_zero()) ideal.push_back(p);
        }
        ctx.one_relation_ideal = std::move(ideal);
      }
      if (!opt_.determinantal.empty()) ctx.determinantal = std::make_pair(opt_.determinantal[0], opt_.determinantal[1]);
      auto rep = generator_bound_report(e, ctx);
      emit(bound_to_json(rep));
      return rep.pass() ? kOk : kVerificationFailed;
    }
    if (what == "transition") {
      expect_files(2);
      auto a = load(0);
      auto t = check_transition(a, load(1));
      emit(transition_to_json(t));
      return t.holds ? kOk : kVerificationFailed;
    }
    if (what == "corpus") {
      if (opt_.files.size() != 1) throw UsageError("verify corpus expects one manifest file");
      auto res = run_corpus(opt_.files[0], seed());
      emit(res.summary);
      return res.exit_code;
    }
    return kOk;
  }

  int report(const std::string& what) {
    if (what == "is-local") {
      expect_files(1);
      emit(profile_to_json(is_local_module(load(0))));
    } else if (what == "radical-profile") {
      expect_files(1);
      auto e = load(0);
      if (nu(e) == 0) throw PreconditionError("radical profile is undefined for the zero module");
      EndAlgebra lambda(e);
      const PrimeField& F = e.ring()->field();
      auto bar = bar_algebra(lambda);
      auto rad = fd_radical(F, bar);
      Json j;
      j["profile"] = profile_to_json(radical_profile(F, bar));
      j["nu"] = lambda.module().num_generators();
      j["nu_end"] = lambda.underlying().num_generators();
      Json bb = Json::array();
      for (const auto& b : bar.basis) bb.push_back(matrix_to_json(b));
      j["bar_basis"] = std::move(bb);
      Json rb = Json::array();
      for (const auto& r : rad) rb.push_back(matrix_to_json(r));
      j["radical_basis"] = std::move(rb);
      j["free_summand"] = has_free_summand(e);
      j["j1_in_j0"] = contained_in(j1(lambda), j0(lambda));
      emit(j);
    } else if (what == "radical-blocks") {
      expect_files(2);
      auto a = load(0);
      emit(block_profile_to_json(radical_block_profile(a, load(1))));
    } else if (what == "generators") {
      expect_files(1);
      auto e = minimalize(load(0)).module;
      Json j;
      j["nu"] = e.num_generators();
      j["generator_degrees"] = e.ambient().degrees;
      j["relation_degrees"] = e.relation_degrees();
      j["nu_dual"] = dual(e).module().num_generators();
      j["nu_end"] = hom(e, e).module().num_generators();
      emit(j);
    }
    return kOk;
  }

 private:
  int sequence(const SequenceReport& r) {
    emit(report_to_json(r));
    return r.pass() ? kOk : kVerificationFailed;
  }

  const Options& opt_;
  std::ostream& out_;
  RingPtr ring_;
};

}  // namespace

std::vector<CorpusFixture> load_corpus(const std::string& manifest_path) {
  Json manifest = read_json_file(manifest_path);
  fs::path base = fs::path(manifest_path).parent_path();
  if (!manifest.is_object() || !manifest.contains("fixtures") || !manifest["fixtures"].is_array()) {
    throw SchemaError("fixtures", "expected an array");
  }
  std::vector<CorpusFixture> out;
  for (std::size_t i = 0; i < manifest["fixtures"].size(); ++i) {
    const Json& fj = manifest["fixtures"][i];
    std::string path = "fixtures[" + std::to_string(i) + "]";
    if (!fj.is_object() || !fj.contains("name") || !fj["name"].is_string()) throw SchemaError(path + ".name", "missing");
    if (!fj.contains("module")) throw SchemaError(path + ".module", "missing");
    if (!fj.contains("expect") || !fj["expect"].is_object()) throw SchemaError(path + ".expect", "expected an object");
    Fixture fx = build_fixture(fj["module"], base, path + ".module");
    out.push_back({fj["name"].get<std::string>(), std::move(fx.module), std::move(fx.context), fj["expect"]});
  }
  return out;
}

CorpusResult run_corpus(const std::string& manifest_path, std::uint64_t seed) {
  CorpusResult res;
  Json fixtures = Json::array();
  Json failed = Json::array();
  auto corpus = load_corpus(manifest_path);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& c = corpus[i];
    Fixture fx{c.module, c.context};
    Json checks = Json::array();
    bool ok = true;
    for (const auto& [check, expected] : c.expect.items()) {
      Json actual = evaluate_check(check, fx, seed, "fixtures[" + std::to_string(i) + "].expect." + check);
      bool pass = actual == expected;
      ok = ok && pass;
      checks.push_back(Json{{"check", check}, {"expected", expected}, {"actual", actual}, {"pass", pass}});
    }
    fixtures.push_back(Json{{"name", c.name}, {"pass", ok}, {"checks", std::move(checks)}});
    if (!ok) failed.push_back(c.name);
  }
  res.exit_code = failed.empty() ? kOk : kVerificationFailed;
  res.summary = Json{{"fixtures", std::move(fixtures)}, {"failed", std::move(failed)}, {"pass", res.exit_code == kOk}};
  return res;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Endomorphism rings of finitely presented graded modules over F_p[x1..xn]", "endoring"};
  app.require_subcommand(1, 1);
  app.add_option("--prime", opt.prime, "Field characteristic for constructions (inputs must agree)");
  app.add_option("--hf-window", opt.window_text, "Hilbert function comparison window lo:hi");
  app.add_option("--seed", opt.seed, "Seed for randomized checks (default: $ENDORING_SEED or fixed)");
  app.add_option("-o,--output", opt.output, "Write JSON here instead of standard output");

  std::string verb;
  std::string sub;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* c = parent->add_subcommand(name, help);
    c->fallthrough();
    c->callback([&, name, parent] {
      verb = parent->get_name();
      sub = name;
    });
    return c;
  };
  auto add_files = [&](CLI::App* c, const std::string& what) {
    c->add_option("files", opt.files, what)->required();
  };

  auto* construct = app.add_subcommand("construct", "Build a module from a named family");
  construct->require_subcommand(1, 1);
  construct->fallthrough();
  {
    auto* c = leaf(construct, "koszul", "Koszul complex on n variables, or its cycles with --cycle");
    c->add_option("--n", opt.n, "Number of variables")->required();
    c->add_option("--cycle", opt.cycle, "Emit the cycle module Z_i instead of the complex");
    c = leaf(construct, "det", "Cokernel of the generic m×n matrix");
    c->add_option("--n", opt.n, "Columns")->required();
    c->add_option("--m", opt.m, "Rows")->required();
    c = leaf(construct, "one-relation", "Cokernel of one column R -> R^n");
    c->add_option("--vars", opt.vars, "Variable names")->required();
    c->add_option("--entries", opt.entries, "Entries of the column")->required();
    c = leaf(construct, "syzygy", "k-th syzygy of a perfect module");
    c->add_option("--k", opt.k, "Syzygy index")->required();
    add_files(c, "Module JSON");
  }

  auto* compute = app.add_subcommand("compute", "Compute a derived module or invariant");
  compute->require_subcommand(1, 1);
  compute->fallthrough();
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"hom", "Hom(A, B)"},
           {"end", "End(E) with the coordinates of the identity"},
           {"dual", "E* = Hom(E, R)"},
           {"adual", "Auslander dual D(E)"},
           {"tensor", "A ⊗ B"},
           {"trace-ideal", "Trace ideal of E"},
           {"resolution", "Minimal free resolution"},
           {"hilbert", "Hilbert function on a window"},
           {"rank", "Rank"},
           {"depth", "Depth and projective dimension"},
           {"ext", "Ext^i(E, R)"},
           {"tor", "Tor_i(A, B)"}}) {
    auto* c = leaf(compute, name, help);
    add_files(c, "Module JSON file(s)");
    if (name == "hom" || name == "end" || name == "dual") {
      c->add_flag("--witnesses", opt.witnesses, "Include one witness morphism per generator");
    }
    if (name == "ext" || name == "tor") c->add_option("--i", opt.index, "Homological index")->required();
  }

  auto* verify = app.add_subcommand("verify", "Check an exact sequence or bound; exit 1 on failure");
  verify->require_subcommand(1, 1);
  verify->fallthrough();
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"ausbr0", "E*⊗E -> End E -> Tor_1(D(E), E) -> 0"},
           {"adual", "0 -> Tor_2(D(E),X) -> E*⊗X -> Hom(E,X) -> Tor_1(D(E),X) -> 0"},
           {"perfect-syzygy", "0 -> E*⊗E -> End E -> End M -> 0 for the k-th syzygy E of M"},
           {"bounds", "nu(End E) <= nu(E) nu(E*) + 1, and the one-relation bounds"},
           {"transition", "Transition conditions between two modules"},
           {"corpus", "Run a fixture manifest"}}) {
    auto* c = leaf(verify, name, help);
    add_files(c, name == "corpus" ? "Manifest JSON" : "Module JSON file(s)");
    if (name == "perfect-syzygy") c->add_option("--k", opt.k, "Syzygy index")->required();
    if (name == "bounds") {
      c->add_flag("--one-relation", opt.one_relation, "Also check the one-relation bounds");
      c->add_option("--determinantal", opt.determinantal, "Record the comparison for the generic (n, m) module")
          ->expected(2);
    }
  }

  auto* report = app.add_subcommand("report", "Describe the endomorphism ring");
  report->require_subcommand(1, 1);
  report->fallthrough();
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"is-local", "Radical profile and locality verdict"},
           {"radical-profile", "Bar algebra, its radical and the J0/J1 containment"},
           {"radical-blocks", "Block description of the radical of End(E1 ⊕ E2)"},
           {"generators", "Generator counts of E, E* and End E"}}) {
    auto* c = leaf(report, name, help);
    add_files(c, "Module JSON file(s)");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    Runner runner(opt, out);
    if (verb == "construct") return runner.construct(sub);
    if (verb == "compute") return runner.compute(sub);
    if (verb == "verify") return runner.verify(sub);
    if (verb == "report") return runner.report(sub);
    err << "error: no command given\n";
    return kUsageError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace endoring::cli
