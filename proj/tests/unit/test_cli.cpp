#include <doctest.h>

#include "instance.hpp"
#include "mgreg/errors.hpp"
#include "mgreg/field.hpp"
#include "render.hpp"

using namespace mgreg;
using namespace mgreg::cli;
using nlohmann::json;

namespace {

json minimal_doc() {
  return json::parse(R"({"variables": ["x", "y"], "degrees": [[1, 1]], "ideal_B": [[1, 0], [0, 1]],
                         "module": {"quotient": ["x^2"]}, "box": {"lo": -2, "hi": 4}})");
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("instance parsing") {
  auto inst = parse_instance(minimal_doc(), "fallback");
  CHECK(inst.name == "fallback");
  CHECK(inst.field.rational);
  CHECK(inst.box == Box(Degree{-2}, Degree{4}));
  CHECK(inst.monomial_quotient());
  CHECK(inst.tasks.empty());
  auto m = build_module(inst, PrimeField(101));
  CHECK(m->dim({3}) == 2);

  json d = minimal_doc();
  d["field"] = {{"Fp", 7}};
  d["module"] = {{"quotient", {"x*y - y^2"}}};
  d["tasks"] = {{{"kind", "support"}, {"parameters", {{"i", {0, 1}}}}}};
  inst = parse_instance(d, "f");
  CHECK(inst.field.p == 7);
  CHECK(!inst.monomial_quotient());
  CHECK(inst.tasks.size() == 1);
  CHECK(build_module(inst, PrimeField(7))->dim({2}) == 2);
}

TEST_CASE("instance schema errors") {
  auto rejects = [](json d) { CHECK_THROWS_AS(parse_instance(d, "x"), SchemaError); };
  json d = minimal_doc();
  d["extra"] = 1;
  rejects(d);
  d = minimal_doc();
  d["box"]["step"] = 1;
  rejects(d);
  d = minimal_doc();
  d.erase("ideal_B");
  rejects(d);
  d = minimal_doc();
  d["degrees"] = {{1}};
  rejects(d);
  d = minimal_doc();
  d["field"] = {{"Fp", 12}};
  rejects(d);
  d = minimal_doc();
  d["tasks"] = {{{"kind", "draw"}}};
  rejects(d);
  d = minimal_doc();
  d["module"] = {{"quotient", {"x + y^2"}}};
  rejects(d);
  d = minimal_doc();
  d["module"]["presentation"] = json::object();
  rejects(d);
  d = minimal_doc();
  d["module"] = {{"quotient", {"x +* y"}}};
  CHECK_THROWS_AS(parse_instance(d, "x"), ParseError);
}

TEST_CASE("field strings") {
  CHECK(parse_field("Q").rational);
  CHECK(parse_field("Fp:32003").p == 32003);
  CHECK(parse_field("5").p == 5);
  CHECK_THROWS_AS(parse_field("Fp:9"), SchemaError);
  CHECK_THROWS_AS(parse_field("R"), SchemaError);
}

TEST_CASE("built-in corpus") {
  auto a = builtin_corpus(11, 10), b = builtin_corpus(11, 10);
  REQUIRE(a.size() == 14);
  CHECK(a == b);
  CHECK(builtin_corpus(12, 10) != a);
  int random = 0;
  for (const auto& doc : a) {
    auto inst = parse_instance(doc, "x");
    if (inst.name.rfind("random_", 0) != 0) continue;
    ++random;
    CHECK(inst.monomial_quotient());
    CHECK(inst.quotient.size() >= 1);
    CHECK(inst.quotient.size() <= 4);
    for (const auto& p : inst.quotient) CHECK(p.terms.begin()->first.sum() <= 4);
  }
  CHECK(random == 10);
  for (const auto& doc : random_z_instances(3, 5)) CHECK(parse_instance(doc, "z").grading->rank() == 1);
}

TEST_CASE("plots have one cell per lattice point") {
  auto inst = parse_instance(hypersurface_instance(true), "x");
  auto m = build_module(inst, RationalField{});
  LocalCohomology<RationalField> lc(m, inst.b);
  const Box box = Box::cube(2, -2, 2);
  auto table = cohomology_table(lc, box);
  const std::string csv = support_csv(table, 1, 1);
  CHECK(count(csv, "\n") == 1 + box.size());
  const std::string svg = support_svg(table, 1, "F1");
  CHECK(count(svg, "<rect ") == box.size());
  // every CSV row reappears as a cell annotation
  for (const auto& p : box.points()) {
    const std::string cell = p.str() + " dim=" + std::to_string(table.dim(1, p));
    CHECK(svg.find(cell) != std::string::npos);
  }
  const std::string ascii = support_ascii(table, 1);
  CHECK(count(ascii, "\n") == 5);
  CHECK(count(ascii, "#") == 8);  // a in {-2,-1}, b in {1,2} and the mirror image
}
