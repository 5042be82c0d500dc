#include "endoring/json_io.hpp"

#include "endoring/errors.hpp"

namespace endoring {

namespace {

const Json& field(const Json& j, const std::string& name, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path.empty() ? "<root>" : path, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw SchemaError(path.empty() ? name : path + "." + name, "missing");
  return *it;
}

std::string join(const std::string& path, const std::string& name) { return path.empty() ? name : path + "." + name; }

std::vector<int> int_list(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) throw SchemaError(path + "[" + std::to_string(i) + "]", "expected an integer");
    out.push_back(j[i].get<int>());
  }
  return out;
}

Polynomial poly(const Json& j, const RingPtr& ring, const std::string& path) {
  if (j.is_number_integer()) return Polynomial::from_int(ring, j.get<std::int64_t>());
  if (!j.is_string()) throw SchemaError(path, "expected a polynomial string");
  try {
    return parse_polynomial(j.get<std::string>(), ring);
  } catch (const ParseError& e) {
    throw SchemaError(path, e.what());
  }
}

std::vector<VectorPoly> columns(const Json& j, const RingPtr& ring, std::size_t rank, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of columns");
  std::vector<VectorPoly> out;
  for (std::size_t c = 0; c < j.size(); ++c) {
    std::string cp = path + "[" + std::to_string(c) + "]";
    if (!j[c].is_array()) throw SchemaError(cp, "expected an array of polynomials");
    if (j[c].size() != rank) {
      throw SchemaError(cp, "has " + std::to_string(j[c].size()) + " entries, expected " + std::to_string(rank));
    }
    std::vector<Polynomial> entries;
    for (std::size_t i = 0; i < rank; ++i) entries.push_back(poly(j[c][i], ring, cp + "[" + std::to_string(i) + "]"));
    out.push_back(VectorPoly::from_entries(ring, entries));
  }
  return out;
}

FPModule module_at(const Json& j, const RingPtr& ring, const std::string& path) {
  auto degrees = int_list(field(j, "generator_degrees", path), join(path, "generator_degrees"));
  auto rels = columns(field(j, "relations", path), ring, degrees.size(), join(path, "relations"));
  try {
    return FPModule(ring, FreeModule{std::move(degrees)}, std::move(rels));
  } catch (const InhomogeneousError& e) {
    throw SchemaError(join(path, "relations"), e.what());
  }
}

Json module_body(const FPModule& m) {
  Json j;
  j["generator_degrees"] = m.ambient().degrees;
  Json rels = Json::array();
  for (const auto& v : m.relations()) rels.push_back(vector_to_json(v));
  j["relations"] = std::move(rels);
  return j;
}

Json hf_values(const HilbertFunction& h) { return Json(h.values); }

}  // namespace

Json ring_to_json(const Ring& ring) {
  Json j;
  j["prime"] = ring.prime();
  j["vars"] = ring.names();
  if (!ring.standard_grading()) j["weights"] = ring.weights();
  return j;
}

RingPtr ring_from_json(const Json& j) {
  const Json& r = field(j, "ring", "");
  const Json& p = field(r, "prime", "ring");
  if (!p.is_number_unsigned()) throw SchemaError("ring.prime", "expected a positive integer");
  const Json& vars = field(r, "vars", "ring");
  if (!vars.is_array()) throw SchemaError("ring.vars", "expected an array of names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!vars[i].is_string()) throw SchemaError("ring.vars[" + std::to_string(i) + "]", "expected a string");
    names.push_back(vars[i].get<std::string>());
  }
  std::vector<int> weights;
  if (r.contains("weights")) weights = int_list(r["weights"], "ring.weights");
  try {
    return make_ring(std::move(names), p.get<Coeff>(), std::move(weights));
  } catch (const std::invalid_argument& e) {
    throw SchemaError("ring", e.what());
  }
}

Json module_to_json(const FPModule& m) {
  Json j;
  j["ring"] = ring_to_json(*m.ring());
  Json body = module_body(m);
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

FPModule module_from_json(const Json& j, const RingPtr& ring) {
  RingPtr r = ring_from_json(j);
  if (ring) {
    if (!(*r == *ring)) throw SchemaError("ring", "does not match the ring of the other inputs");
    r = ring;
  }
  return module_at(j, r, "");
}

Json morphism_to_json(const ModuleMorphism& f) {
  Json j;
  j["ring"] = ring_to_json(*f.source().ring());
  j["source"] = module_body(f.source());
  j["target"] = module_body(f.target());
  Json cols = Json::array();
  for (const auto& v : f.images()) cols.push_back(vector_to_json(v));
  j["matrix"] = std::move(cols);
  j["shift"] = f.shift();
  return j;
}

ModuleMorphism morphism_from_json(const Json& j) {
  RingPtr ring = ring_from_json(j);
  FPModule source = module_at(field(j, "source", ""), ring, "source");
  FPModule target = module_at(field(j, "target", ""), ring, "target");
  auto images = columns(field(j, "matrix", ""), ring, target.num_generators(), "matrix");
  if (images.size() != source.num_generators()) throw SchemaError("matrix", "needs one column per source generator");
  const Json& s = field(j, "shift", "");
  if (!s.is_number_integer()) throw SchemaError("shift", "expected an integer");
  try {
    return ModuleMorphism(source, target, std::move(images), s.get<int>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError("matrix", e.what());
  }
}

Json vector_to_json(const VectorPoly& v) {
  Json col = Json::array();
  for (const auto& p : v.entries()) col.push_back(p.to_string());
  return col;
}

Json hilbert_to_json(const HilbertFunction& h) {
  Json j;
  j["lo"] = h.lo;
  j["hi"] = h.hi;
  j["values"] = h.values;
  return j;
}

Json resolution_to_json(const Resolution& res) {
  Json j;
  j["ring"] = ring_to_json(*res.ring);
  j["betti"] = res.betti();
  j["complete"] = res.complete;
  Json mods = Json::array();
  for (const auto& f : res.modules) mods.push_back(f.degrees);
  j["degrees"] = std::move(mods);
  Json diffs = Json::array();
  for (const auto& cols : res.differentials) {
    Json d = Json::array();
    for (const auto& v : cols) d.push_back(vector_to_json(v));
    diffs.push_back(std::move(d));
  }
  j["differentials"] = std::move(diffs);
  return j;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

Json report_to_json(const SequenceReport& r) {
  Json j;
  j["id"] = r.id;
  j["status"] = r.status;
  j["pass"] = r.pass();
  Json spots = Json::array();
  for (const auto& s : r.spots) {
    Json sj;
    sj["name"] = s.name;
    sj["window"] = {s.left.lo, s.left.hi};
    sj["hf_left"] = hf_values(s.left);
    sj["hf_right"] = hf_values(s.right);
    sj["pass"] = s.pass;
    if (!s.note.empty()) sj["note"] = s.note;
    spots.push_back(std::move(sj));
  }
  j["spots"] = std::move(spots);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json profile_to_json(const RadicalProfile& p) {
  Json j;
  j["dim_bar"] = p.dim_bar;
  j["dim_radical"] = p.dim_radical;
  j["num_blocks"] = p.num_blocks;
  j["block_dims"] = p.block_dims;
  j["is_local"] = p.is_local;
  return j;
}

Json transition_to_json(const TransitionReport& t) {
  Json j;
  j["holds"] = t.holds;
  j["pairs_checked"] = t.pairs_checked;
  if (!t.failure.empty()) j["failure"] = t.failure;
  return j;
}

Json block_profile_to_json(const RadicalBlockProfile& p) {
  Json j;
  j["transition"] = transition_to_json(p.transition);
  j["applicable"] = p.applicable;
  j["status"] = !p.applicable ? "skipped" : (p.pass() ? "pass" : "fail");
  if (p.applicable) {
    Json blocks = Json::array();
    for (const auto& b : p.blocks) {
      Json bj;
      bj["name"] = b.name;
      bj["generators"] = b.generators;
      bj["bar_dim"] = b.bar_dim;
      bj["in_radical"] = b.in_radical;
      blocks.push_back(std::move(bj));
    }
    j["blocks"] = std::move(blocks);
    j["profile"] = profile_to_json(p.profile);
    j["spans_radical"] = p.spans_radical;
  }
  return j;
}

Json bound_to_json(const BoundReport& b) {
  Json j;
  j["nu_module"] = b.nu_module;
  j["nu_dual"] = b.nu_dual;
  j["nu_end"] = b.nu_end;
  j["upper"] = b.upper;
  j["upper_holds"] = b.upper_holds;
  if (b.one_relation) {
    Json o;
    o["beta0"] = b.one_relation->beta0;
    o["beta1"] = b.one_relation->beta1;
    o["lower"] = b.one_relation->lower;
    o["upper"] = b.one_relation->upper;
    o["holds"] = b.one_relation->holds;
    j["one_relation"] = std::move(o);
  }
  if (b.determinantal) {
    Json d;
    d["n"] = b.determinantal->n;
    d["m"] = b.determinantal->m;
    d["formula"] = b.determinantal->formula;
    d["matches_product"] = b.determinantal->matches_product;
    d["matches_end"] = b.determinantal->matches_end;
    j["determinantal_observation"] = std::move(d);
  }
  j["pass"] = b.pass();
  return j;
}

}  // namespace endoring
