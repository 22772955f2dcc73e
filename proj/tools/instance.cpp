#include "instance.hpp"

#include <fstream>
#include <random>
#include <set>

#include "mgreg/errors.hpp"
#include "mgreg/field.hpp"

namespace mgreg::cli {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw SchemaError(where + " must be an object");
  for (const auto& item : obj.items())
    if (!allowed.count(item.key())) throw SchemaError("unknown field '" + item.key() + "' in " + where);
}

const json& required(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError("missing field '" + key + "' in " + where);
  return *it;
}

long as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw SchemaError(where + " must be an integer");
  return v.get<long>();
}

IntVec as_vec(const json& v, std::size_t size, const std::string& where) {
  if (!v.is_array() || v.size() != size)
    throw SchemaError(where + " must be an array of " + std::to_string(size) + " integers");
  IntVec out(size);
  for (std::size_t i = 0; i < size; ++i) out[i] = as_int(v[i], where);
  return out;
}

/// A vector, or a single integer repeated.
IntVec as_vec_or_scalar(const json& v, std::size_t size, const std::string& where) {
  if (v.is_number_integer()) return IntVec(size, v.get<long>());
  return as_vec(v, size, where);
}

std::vector<Degree> as_degrees(const json& v, std::size_t k, const std::string& where) {
  if (!v.is_array()) throw SchemaError(where + " must be an array");
  std::vector<Degree> out;
  for (const auto& d : v) out.push_back(as_vec(d, k, where));
  return out;
}

Polynomial as_poly(const json& v, const std::vector<std::string>& names, const std::string& where) {
  if (v.is_number_integer()) return parse_polynomial(std::to_string(v.get<long>()), names);
  if (!v.is_string()) throw SchemaError(where + " must be a polynomial string");
  return parse_polynomial(v.get<std::string>(), names);
}

const std::set<std::string> kTaskKinds = {"support", "regularity", "betti", "hilbert", "verify", "plot"};

}  // namespace

FieldSpec parse_field(const std::string& text) {
  if (text == "Q") return {};
  std::string digits = text.rfind("Fp:", 0) == 0 ? text.substr(3) : text;
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw SchemaError("field must be Q, Fp:p or a prime, got '" + text + "'");
  unsigned long p = std::stoul(digits);
  if (p < 2 || p >= (1UL << 31)) throw SchemaError("characteristic out of range: " + digits);
  for (unsigned long q = 2; q * q <= p; ++q)
    if (p % q == 0) throw SchemaError("characteristic is not prime: " + digits);
  return {false, static_cast<std::uint32_t>(p)};
}

bool Instance::monomial_quotient() const {
  return !presentation && std::all_of(quotient.begin(), quotient.end(), [](const Polynomial& p) { return p.is_monomial(); });
}

Instance parse_instance(const json& doc, const std::string& fallback_name) {
  reject_unknown(doc,
                 {"name", "field", "variables", "degrees", "ideal_B", "module", "box", "tasks", "annihilator_witness"},
                 "instance");
  Instance inst;
  inst.name = fallback_name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw SchemaError("name must be a string");
    inst.name = doc["name"].get<std::string>();
  }
  if (inst.name.empty() || inst.name.find_first_of("/\\ ") != std::string::npos)
    throw SchemaError("name must be a nonempty identifier without separators");

  if (doc.contains("field")) {
    const json& f = doc["field"];
    if (f.is_string()) {
      inst.field = parse_field(f.get<std::string>());
    } else if (f.is_object()) {
      reject_unknown(f, {"Fp"}, "field");
      inst.field = parse_field(std::to_string(as_int(required(f, "Fp", "field"), "field.Fp")));
    } else {
      throw SchemaError("field must be \"Q\" or {\"Fp\": p}");
    }
  }

  const json& vars = required(doc, "variables", "instance");
  if (!vars.is_array() || vars.empty()) throw SchemaError("variables must be a nonempty array of names");
  std::vector<std::string> names;
  for (const auto& v : vars) {
    if (!v.is_string()) throw SchemaError("variable names must be strings");
    names.push_back(v.get<std::string>());
  }
  const std::size_t n = names.size();

  const json& deg = required(doc, "degrees", "instance");
  if (!deg.is_array() || deg.empty()) throw SchemaError("degrees must be a k x n matrix");
  const std::size_t k = deg.size();
  std::vector<Degree> cols(n, Degree(k));
  for (std::size_t r = 0; r < k; ++r) {
    IntVec row = as_vec(deg[r], n, "degrees row");
    for (std::size_t c = 0; c < n; ++c) cols[c][r] = row[c];
  }
  inst.grading = std::make_shared<const Grading>(cols, names);

  auto ideal_of = [&](const json& v, const std::string& where) {
    if (!v.is_array()) throw SchemaError(where + " must be an array of exponent vectors");
    std::vector<Exponent> gens;
    for (const auto& e : v) {
      Exponent x = as_vec(e, n, where);
      if (!x.nonnegative()) throw SchemaError(where + " has a negative exponent");
      gens.push_back(x);
    }
    return MonomialIdeal(n, gens);
  };
  inst.b = ideal_of(required(doc, "ideal_B", "instance"), "ideal_B");
  if (doc.contains("annihilator_witness")) inst.witness = ideal_of(doc["annihilator_witness"], "annihilator_witness");

  const json& mod = required(doc, "module", "instance");
  reject_unknown(mod, {"quotient", "presentation"}, "module");
  if (mod.contains("quotient") == mod.contains("presentation"))
    throw SchemaError("module needs exactly one of quotient, presentation");
  if (mod.contains("quotient")) {
    const json& q = mod["quotient"];
    if (!q.is_array()) throw SchemaError("module.quotient must be an array");
    for (const auto& p : q) {
      Polynomial f = as_poly(p, names, "module.quotient");
      if (f.is_zero()) continue;
      if (!f.homogeneous_degree(*inst.grading)) throw SchemaError("quotient generator is not homogeneous");
      inst.quotient.push_back(f);
    }
  } else {
    const json& p = mod["presentation"];
    reject_unknown(p, {"row_shifts", "col_shifts", "entries"}, "module.presentation");
    GradedMatrix m;
    m.row_shifts = as_degrees(required(p, "row_shifts", "presentation"), k, "row_shifts");
    m.col_shifts = as_degrees(required(p, "col_shifts", "presentation"), k, "col_shifts");
    const json& e = required(p, "entries", "presentation");
    if (!e.is_array() || e.size() != m.row_shifts.size()) throw SchemaError("entries must have one row per row shift");
    for (const auto& row : e) {
      if (!row.is_array() || row.size() != m.col_shifts.size())
        throw SchemaError("entries rows must have one entry per column shift");
      std::vector<Polynomial> r;
      for (const auto& x : row) r.push_back(as_poly(x, names, "entries"));
      m.entries.push_back(std::move(r));
    }
    inst.presentation = std::move(m);
  }

  const json& box = required(doc, "box", "instance");
  reject_unknown(box, {"lo", "hi", "padding"}, "box");
  inst.box = Box(as_vec_or_scalar(required(box, "lo", "box"), k, "box.lo"),
                 as_vec_or_scalar(required(box, "hi", "box"), k, "box.hi"));
  if (inst.box.empty()) throw SchemaError("box is empty");
  if (box.contains("padding")) {
    inst.padding = as_vec_or_scalar(box["padding"], k, "box.padding");
    if (!inst.padding->nonnegative()) throw SchemaError("box.padding must be nonnegative");
  }

  if (doc.contains("tasks")) {
    const json& t = doc["tasks"];
    if (!t.is_array()) throw SchemaError("tasks must be an array");
    for (const auto& item : t) {
      reject_unknown(item, {"kind", "parameters"}, "task");
      const json& kind = required(item, "kind", "task");
      if (!kind.is_string() || !kTaskKinds.count(kind.get<std::string>()))
        throw SchemaError("unknown task kind " + kind.dump());
      Task task{kind.get<std::string>(), json::object()};
      if (item.contains("parameters")) {
        if (!item["parameters"].is_object()) throw SchemaError("task parameters must be an object");
        task.parameters = item["parameters"];
      }
      inst.tasks.push_back(std::move(task));
    }
  }
  return inst;
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
  return parse_instance(doc, path.stem().string());
}

template <class F>
std::shared_ptr<const GradedModule<F>> build_module(const Instance& inst, F field) {
  const std::size_t n = static_cast<std::size_t>(inst.grading->num_vars());
  if (inst.presentation) {
    auto m = std::make_shared<PresentedModule<F>>(inst.grading, field, *inst.presentation);
    if (inst.witness) m->set_annihilator_witness(*inst.witness);
    return m;
  }
  if (inst.monomial_quotient()) {
    std::vector<Exponent> gens;
    for (const auto& p : inst.quotient) gens.push_back(p.terms.begin()->first);
    return std::make_shared<MonomialQuotient<F>>(inst.grading, field, MonomialIdeal(n, gens));
  }
  auto m = PresentedModule<F>::quotient(inst.grading, field, inst.quotient);
  if (inst.witness) m->set_annihilator_witness(*inst.witness);
  return m;
}

template std::shared_ptr<const GradedModule<PrimeField>> build_module(const Instance&, PrimeField);
template std::shared_ptr<const GradedModule<RationalField>> build_module(const Instance&, RationalField);

namespace {

const json kBigradedDegrees = json::array({{1, 1, 0, 0}, {0, 0, 1, 1}});
const json kIrrelevant = json::array({{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}});
const json kMaximal = json::array({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});

json default_tasks() {
  return json::array({{{"kind", "support"}},
                      {{"kind", "regularity"}, {"parameters", {{"level", 0}, {"flavor", "weak"}}}},
                      {{"kind", "betti"}},
                      {{"kind", "verify"}},
                      {{"kind", "plot"}}});
}

std::string monomial_string(const std::vector<std::string>& names, const std::vector<int>& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::vector<std::vector<int>> random_monomials(std::mt19937_64& rng, int nvars) {
  const int count = 1 + static_cast<int>(rng() % 4);
  std::vector<std::vector<int>> gens;
  while (static_cast<int>(gens.size()) < count) {
    const int degree = 1 + static_cast<int>(rng() % 4);
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    for (int d = 0; d < degree; ++d) ++e[rng() % static_cast<std::uint64_t>(nvars)];
    if (std::find(gens.begin(), gens.end(), e) == gens.end()) gens.push_back(e);
  }
  return gens;
}

}  // namespace

json example_instance(bool irrelevant) {
  json t = default_tasks();
  if (irrelevant) t.push_back({{"kind", "hilbert"}});
  return {{"name", irrelevant ? "pairs_mixed" : "pairs_maximal"},
          {"field", "Q"},
          {"variables", {"X0", "X1", "Y0", "Y1"}},
          {"degrees", kBigradedDegrees},
          {"ideal_B", irrelevant ? kIrrelevant : kMaximal},
          {"module", {{"quotient", {"X0*X1", "Y0*Y1"}}}},
          {"box", {{"lo", {-4, -4}}, {"hi", {6, 6}}}},
          {"tasks", t}};
}

json hypersurface_instance(bool reducible) {
  return {{"name", reducible ? "hypersurface_f1" : "hypersurface_f2"},
          {"field", "Q"},
          {"variables", {"X1", "X2", "Y1", "Y2"}},
          {"degrees", kBigradedDegrees},
          {"ideal_B", kIrrelevant},
          {"module", {{"quotient", {reducible ? "X1*Y1" : "X1*Y1 + X2*Y2"}}}},
          {"box", {{"lo", {-5, -5}}, {"hi", {5, 5}}}},
          {"tasks", default_tasks()}};
}

std::vector<json> random_instances(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  const std::vector<std::string> names = {"X0", "X1", "Y0", "Y1"};
  std::vector<json> out;
  for (int idx = 0; idx < count; ++idx) {
    json gens = json::array();
    for (const auto& e : random_monomials(rng, 4)) gens.push_back(monomial_string(names, e));
    char name[32];
    std::snprintf(name, sizeof name, "random_%02d", idx);
    out.push_back({{"name", name},
                   {"field", {{"Fp", 32003}}},
                   {"variables", names},
                   {"degrees", kBigradedDegrees},
                   {"ideal_B", idx % 2 == 0 ? kIrrelevant : kMaximal},
                   {"module", {{"quotient", gens}}},
                   {"box", {{"lo", {-3, -3}}, {"hi", {4, 4}}}},
                   {"tasks", default_tasks()}});
  }
  return out;
}

std::vector<json> random_z_instances(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<json> out;
  for (int idx = 0; idx < count; ++idx) {
    const int n = 2 + static_cast<int>(rng() % 3);
    std::vector<std::string> names;
    json ones = json::array(), maximal = json::array();
    for (int i = 0; i < n; ++i) {
      names.push_back("x" + std::to_string(i + 1));
      ones.push_back(1);
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(i)] = 1;
      maximal.push_back(e);
    }
    json gens = json::array();
    for (const auto& e : random_monomials(rng, n)) gens.push_back(monomial_string(names, e));
    char name[32];
    std::snprintf(name, sizeof name, "zgraded_%02d", idx);
    out.push_back({{"name", name},
                   {"field", "Q"},
                   {"variables", names},
                   {"degrees", json::array({ones})},
                   {"ideal_B", maximal},
                   {"module", {{"quotient", gens}}},
                   {"box", {{"lo", {-4}}, {"hi", {8}}}},
                   {"tasks", json::array()}});
  }
  return out;
}

std::vector<json> builtin_corpus(std::uint64_t seed, int count) {
  std::vector<json> out = {example_instance(true), example_instance(false), hypersurface_instance(true),
                           hypersurface_instance(false)};
  for (auto& j : random_instances(seed, count)) out.push_back(std::move(j));
  return out;
}

}  // namespace mgreg::cli
