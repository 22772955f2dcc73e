#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "instance.hpp"
#include "mgreg/errors.hpp"
#include "mgreg/field.hpp"
#include "mgreg/hilbert.hpp"
#include "mgreg/koszul.hpp"
#include "render.hpp"

namespace fs = std::filesystem;
using namespace mgreg;
using namespace mgreg::cli;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kUncertified = 2;
constexpr int kUsage = 64;
constexpr int kFailure = 70;

struct Options {
  std::vector<std::string> files;
  std::string box, padding, field, flavor = "weak", path = "P2", i_range, what = "both";
  int tmax = 12, window = 2, level = 0;
  bool allow_uncertified = false, ascii = false;
  std::string out = ".";
  std::uint64_t seed = 20240917;
  int count = 10;
};

Flavor parse_flavor(const std::string& s) {
  if (s == "weak") return Flavor::Weak;
  if (s == "very-weak" || s == "veryweak" || s == "very_weak") return Flavor::VeryWeak;
  throw SchemaError("flavor must be weak or very-weak, got '" + s + "'");
}

LcPath parse_path(const std::string& s) {
  if (s == "P1") return LcPath::P1;
  if (s == "P2") return LcPath::P2;
  if (s == "P3") return LcPath::P3;
  throw SchemaError("path must be P1, P2 or P3, got '" + s + "'");
}

IntVec parse_vec(const std::string& s, std::size_t k) {
  std::vector<long> v;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stol(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw SchemaError("not an integer: '" + part + "'");
    }
  }
  if (v.size() == 1) return IntVec(k, v[0]);
  if (v.size() != k) throw SchemaError("expected " + std::to_string(k) + " coordinates in '" + s + "'");
  return IntVec(v);
}

/// "lo:hi" where each side is an integer or a comma-separated vector.
Box parse_box(const std::string& s, std::size_t k) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw SchemaError("box must look like lo:hi, got '" + s + "'");
  Box b(parse_vec(s.substr(0, colon), k), parse_vec(s.substr(colon + 1), k));
  if (b.empty()) throw SchemaError("box is empty");
  return b;
}

std::pair<int, int> parse_range(const std::string& s) {
  auto colon = s.find(':');
  IntVec lo = parse_vec(s.substr(0, colon), 1);
  IntVec hi = colon == std::string::npos ? lo : parse_vec(s.substr(colon + 1), 1);
  return {static_cast<int>(lo[0]), static_cast<int>(hi[0])};
}

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw SchemaError("cannot write " + p.string());
  out << content;
  std::cout << "wrote " << p.string() << "\n";
}

template <class T>
T param(const json& params, const char* key, T fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw SchemaError(std::string("bad task parameter '") + key + "'");
  }
}

std::pair<int, int> i_bounds(const json& params, const Options& opt, int length) {
  std::pair<int, int> r{0, length};
  if (!opt.i_range.empty()) r = parse_range(opt.i_range);
  if (params.contains("i")) {
    const json& v = params["i"];
    if (v.is_number_integer()) r = {v.get<int>(), v.get<int>()};
    else if (v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer())
      r = {v[0].get<int>(), v[1].get<int>()};
    else throw SchemaError("task parameter i must be an integer or [lo, hi]");
  }
  r.first = std::max(r.first, 0);
  r.second = std::min(r.second, length);
  return r;
}

bool has_unstabilized(const CohomologyTable& t, int i_lo, int i_hi) {
  for (const auto& cell : t.cells)
    for (int i = i_lo; i <= i_hi; ++i)
      if (cell[static_cast<std::size_t>(i)].status == EntryStatus::TMaxReached) return true;
  return false;
}

template <class F>
class Runner {
 public:
  Runner(const Instance& inst, const Options& opt, F field)
      : inst_(inst), opt_(opt), m_(build_module(inst, field)),
        lc_(m_, inst.b, LcOptions{opt.tmax, opt.window, parse_path(opt.path)}) {}

  int run(const Task& task) {
    const json& p = task.parameters;
    if (task.kind == "support") return support(p);
    if (task.kind == "regularity") return regularity(p);
    if (task.kind == "betti") return betti();
    if (task.kind == "hilbert") return hilbert();
    if (task.kind == "verify") return verify();
    return plot(p);
  }

 private:
  const Instance& inst_;
  const Options& opt_;
  std::shared_ptr<const GradedModule<F>> m_;
  LocalCohomology<F> lc_;
  std::optional<BettiData> betti_;

  fs::path out(const std::string& suffix) const { return fs::path(opt_.out) / (inst_.name + suffix); }
  int gate(bool uncertified) const { return uncertified && !opt_.allow_uncertified ? kUncertified : kOk; }

  const BettiData& betti_data_cached() {
    if (!betti_) betti_ = betti_data(*m_);
    return *betti_;
  }

  RegularityRegion region(int level, Flavor flavor) {
    const Grading& g = m_->grading();
    auto table = cohomology_table(lc_, required_table_box(g, lc_.length(), level, flavor, inst_.box));
    return regularity_region(lc_, table, level, flavor, inst_.box, &betti_data_cached());
  }

  int support(const json& p) {
    auto [lo, hi] = i_bounds(p, opt_, lc_.length());
    auto table = cohomology_table(lc_, inst_.box);
    write_file(out("_support.csv"), support_csv(table, lo, hi));
    bool bad = has_unstabilized(table, lo, hi);
    if (bad) std::cout << inst_.name << ": unstabilized entries present\n";
    return gate(bad);
  }

  int regularity(const json& p) {
    const int level = param(p, "level", opt_.level);
    const Flavor flavor = parse_flavor(param(p, "flavor", opt_.flavor));
    auto reg = region(level, flavor);
    const std::string tag = "_reg" + std::to_string(level) + "_" + to_string(flavor);
    write_file(out(tag + ".csv"), regularity_csv(reg));
    std::cout << inst_.name << ": reg^" << level << " generators";
    for (const auto& gen : reg.generators(m_->grading()))
      std::cout << " " << gen.point.str() << (gen.boundary ? "(boundary)" : "");
    std::cout << "; uncertified points " << reg.uncertified_count() << "\n";
    if (reg.form) std::cout << inst_.name << ": exact form " << reg.form->str() << "\n";
    return gate(reg.uncertified_count() > 0);
  }

  int betti() {
    const auto supports = betti_supports(*m_);
    std::vector<BettiEntry> entries;
    for (std::size_t j = 0; j < supports.size(); ++j)
      for (const auto& g : supports[j])
        entries.push_back({static_cast<int>(j), g, tor_dim(*m_, static_cast<int>(j), g)});
    write_file(out("_betti.csv"), betti_csv(entries, m_->grading().zero().size()));
    const bool exact = m_->betti_window().exact;
    std::cout << inst_.name << ": Betti window " << m_->betti_window().box.str() << (exact ? " (proven)" : " (estimated)")
              << "\n";
    return gate(!exact);
  }

  int hilbert() {
    const Grading& g = m_->grading();
    if (!hilbert_setting(g, inst_.b)) {
      std::cerr << inst_.name << ": Hilbert polynomial needs a standard multigrading with B the product of the block ideals\n";
      return kUsage;
    }
    auto table = cohomology_table(lc_, required_table_box(g, lc_.length(), 0, Flavor::Weak, inst_.box));
    auto reg = regularity_region(lc_, table, 0, Flavor::Weak, inst_.box, &betti_data_cached());
    try {
      auto res = hilbert_analysis(inst_.name, lc_, table, reg, inst_.box);
      write_file(out("_hilbert.txt"), hilbert_report(inst_.name, res));
      std::cout << inst_.name << ": P_M = " << res.polynomial.expanded_str() << "\n";
      return any_failed(res.checks) ? kFailure : kOk;
    } catch (const UncertifiedEntry& e) {
      std::cerr << inst_.name << ": " << e.what() << "\n";
      return opt_.allow_uncertified ? kOk : kUncertified;
    }
  }

  int verify() {
    VerifyOptions vo;
    vo.lc = lc_.options();
    vo.lower_padding = inst_.padding;
    auto reports = verify_theorems(inst_.name, m_, inst_.b, inst_.box, vo);
    write_file(out("_verify.json"), verify_json(reports));
    for (const auto& r : reports) {
      std::cout << to_string(r.status) << " " << r.instance_id << " " << r.theorem_id;
      if (r.witness) std::cout << " at " << r.witness->str();
      std::cout << "\n";
    }
    return any_failed(reports) ? kFailure : kOk;
  }

  int plot(const json& p) {
    if (!plottable(inst_.box)) {
      std::cout << inst_.name << ": plots need a grading group of rank 1 or 2\n";
      return kOk;
    }
    const std::string what = param(p, "what", opt_.what);
    if (what != "support" && what != "regularity" && what != "both")
      throw SchemaError("plot parameter what must be support, regularity or both");
    int code = kOk;
    if (what != "regularity") {
      auto [lo, hi] = i_bounds(p, opt_, lc_.length());
      auto table = cohomology_table(lc_, inst_.box);
      for (int i = lo; i <= hi; ++i) {
        const std::string title = inst_.name + " Supp H^" + std::to_string(i);
        if (opt_.ascii) std::cout << title << "\n" << support_ascii(table, i);
        else write_file(out("_H" + std::to_string(i) + ".svg"), support_svg(table, i, title));
      }
      code = std::max(code, gate(has_unstabilized(table, lo, hi)));
    }
    if (what != "support") {
      const int level = param(p, "level", opt_.level);
      const Flavor flavor = parse_flavor(param(p, "flavor", opt_.flavor));
      auto reg = region(level, flavor);
      const std::string title = inst_.name + " reg^" + std::to_string(level) + " (" + to_string(flavor) + ")";
      if (opt_.ascii) std::cout << title << "\n" << regularity_ascii(reg, m_->grading());
      else
        write_file(out("_reg" + std::to_string(level) + "_" + to_string(flavor) + ".svg"),
                   regularity_svg(reg, m_->grading(), title));
    }
    return code;
  }
};

template <class F>
int run_tasks(const Instance& inst, const Options& opt, F field, const std::vector<Task>& tasks) {
  Runner<F> runner(inst, opt, field);
  int code = kOk;
  for (const auto& t : tasks) code = std::max(code, runner.run(t));
  return code;
}

int run_instance(const std::string& file, const std::string& command, const Options& opt) {
  Instance inst = load_instance(file);
  const std::size_t k = inst.box.rank();
  if (!opt.box.empty()) inst.box = parse_box(opt.box, k);
  if (!opt.padding.empty()) inst.padding = parse_vec(opt.padding, k);
  if (!opt.field.empty()) inst.field = parse_field(opt.field);
  parse_flavor(opt.flavor);
  parse_path(opt.path);

  std::vector<Task> tasks = command == "run" ? inst.tasks : std::vector<Task>{Task{command}};
  if (tasks.empty()) return kOk;
  fs::create_directories(opt.out);
  if (inst.field.rational) return run_tasks(inst, opt, RationalField{}, tasks);
  return run_tasks(inst, opt, PrimeField(inst.field.p), tasks);
}

int write_corpus(const Options& opt) {
  fs::create_directories(opt.out);
  for (const auto& doc : builtin_corpus(opt.seed, opt.count))
    write_file(fs::path(opt.out) / (doc["name"].get<std::string>() + ".json"), doc.dump(2) + "\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local cohomology, regularity regions and Betti supports of multigraded modules"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--box", opt.box, "Box override lo:hi, each side an integer or comma-separated vector");
  app.add_option("--padding", opt.padding, "Lower padding for the theorem checks");
  app.add_option("--tmax", opt.tmax, "Largest Frobenius stage")->capture_default_str();
  app.add_option("--window", opt.window, "Stabilization window")->capture_default_str();
  app.add_option("--field", opt.field, "Field override: Q, Fp:p or p");
  app.add_option("--flavor", opt.flavor, "weak or very-weak")->capture_default_str();
  app.add_option("--level", opt.level, "Regularity level")->capture_default_str();
  app.add_option("--path", opt.path, "Local cohomology path P1, P2 or P3")->capture_default_str();
  app.add_flag("--allow-uncertified", opt.allow_uncertified, "Do not exit with 2 on uncertified data");
  app.add_flag("--ascii", opt.ascii, "Print plots as text instead of writing SVG");
  app.add_option("--out", opt.out, "Output directory")->capture_default_str();

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"support", "Table of dim H^i_B(M) on the box (CSV)"},
      {"regularity", "Regularity region on the box (CSV)"},
      {"betti", "Nonzero graded Betti numbers (CSV)"},
      {"hilbert", "Hilbert polynomial and its checks"},
      {"verify", "Run every theorem check (JSON report)"},
      {"plot", "SVG or ASCII plots of supports and regions"},
      {"run", "Run the tasks listed in each instance file"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("instances", opt.files, "Instance JSON files")->required()->check(CLI::ExistingFile);
    if (name == "support" || name == "plot") sub->add_option("--i", opt.i_range, "Cohomological indices lo:hi");
    if (name == "plot") sub->add_option("--what", opt.what, "support, regularity or both");
  }
  auto* corpus = app.add_subcommand("corpus", "Write the built-in instance corpus as JSON files");
  corpus->add_option("--seed", opt.seed, "Seed for the random instances")->capture_default_str();
  corpus->add_option("--count", opt.count, "Number of random instances")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "corpus") return write_corpus(opt);
    int code = kOk;
    for (const auto& f : opt.files) code = std::max(code, run_instance(f, command, opt));
    return code;
  } catch (const SchemaError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const NoPositiveFunctional& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailure;
  }
}
