#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mgreg/module.hpp"

namespace mgreg::cli {

struct FieldSpec {
  bool rational = true;
  std::uint32_t p = 0;

  std::string str() const { return rational ? "Q" : "Fp:" + std::to_string(p); }
};

/// "Q", "Fp:p" or a bare prime.
FieldSpec parse_field(const std::string& text);

struct Task {
  std::string kind;  // support | regularity | betti | hilbert | verify | plot
  nlohmann::json parameters = nlohmann::json::object();
};

/// A parsed and validated instance file.
struct Instance {
  std::string name;
  FieldSpec field;
  std::shared_ptr<const Grading> grading;
  MonomialIdeal b;
  std::vector<Polynomial> quotient;  // used when `presentation` is empty
  std::optional<GradedMatrix> presentation;
  std::optional<MonomialIdeal> witness;
  Box box;
  std::optional<Degree> padding;
  std::vector<Task> tasks;

  bool monomial_quotient() const;
};

/// Throws SchemaError (or ParseError from polynomial strings) on malformed
/// input, including unknown fields.
Instance parse_instance(const nlohmann::json& doc, const std::string& fallback_name);
Instance load_instance(const std::filesystem::path& path);

template <class F>
std::shared_ptr<const GradedModule<F>> build_module(const Instance& inst, F field);

/// R/(X0X1, Y0Y1) with B = m_X cap m_Y (`irrelevant`) or the maximal ideal,
/// and the two (1,1) hypersurfaces with B = m_X cap m_Y.
nlohmann::json example_instance(bool irrelevant);
nlohmann::json hypersurface_instance(bool reducible);
/// Bigraded k[X0,X1,Y0,Y1]/J with 1..4 monomial generators of total
/// degree 1..4; B alternates between m_X cap m_Y and the maximal ideal.
std::vector<nlohmann::json> random_instances(std::uint64_t seed, int count);
/// Standard Z-graded k[x1..xn]/J, n <= 4, B the maximal ideal.
std::vector<nlohmann::json> random_z_instances(std::uint64_t seed, int count);
/// Golden instances followed by `count` random ones.
std::vector<nlohmann::json> builtin_corpus(std::uint64_t seed, int count);

}  // namespace mgreg::cli
