#include "render.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

namespace mgreg::cli {

namespace {

constexpr int kCell = 28;
constexpr int kMargin = 40;

void degree_header(std::ostringstream& out, std::size_t k) {
  for (std::size_t c = 0; c < k; ++c) out << ",g" << c + 1;
}

void degree_fields(std::ostringstream& out, const Degree& g) {
  for (long x : g) out << "," << x;
}

std::string degree_label(const Degree& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

/// Grid geometry for boxes of rank 1 or 2: columns follow g1, rows follow
/// g2 with the largest value on top.
struct Grid {
  long x_lo, x_hi, y_lo, y_hi;
  explicit Grid(const Box& b)
      : x_lo(b.lo[0]), x_hi(b.hi[0]), y_lo(b.rank() > 1 ? b.lo[1] : 0), y_hi(b.rank() > 1 ? b.hi[1] : 0) {}
  long cols() const { return x_hi - x_lo + 1; }
  long rows() const { return y_hi - y_lo + 1; }
  int x(long a) const { return kMargin + static_cast<int>(a - x_lo) * kCell; }
  int y(long b) const { return kMargin / 2 + static_cast<int>(y_hi - b) * kCell; }
  Degree at(long a, long b, std::size_t rank) const { return rank > 1 ? Degree{a, b} : Degree{a}; }
  int width() const { return kMargin + static_cast<int>(cols()) * kCell + kMargin / 2; }
  int height() const { return kMargin / 2 + static_cast<int>(rows()) * kCell + kMargin; }
};

void svg_open(std::ostringstream& out, const Grid& grid, const std::string& title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << grid.width() << "\" height=\"" << grid.height() + 16
      << "\" font-family=\"monospace\" font-size=\"10\">\n";
  out << "<title>" << escape(title) << "</title>\n";
  out << "<text x=\"" << kMargin << "\" y=\"12\">" << escape(title) << "</text>\n";
  out << "<g transform=\"translate(0,16)\">\n";
}

void svg_axes(std::ostringstream& out, const Grid& grid, std::size_t rank) {
  const int base = grid.y(grid.y_lo) + kCell + 14;
  for (long a = grid.x_lo; a <= grid.x_hi; ++a)
    out << "<text x=\"" << grid.x(a) + kCell / 2 << "\" y=\"" << base << "\" text-anchor=\"middle\">" << a
        << "</text>\n";
  if (rank > 1)
    for (long b = grid.y_lo; b <= grid.y_hi; ++b)
      out << "<text x=\"" << kMargin - 6 << "\" y=\"" << grid.y(b) + kCell / 2 + 4 << "\" text-anchor=\"end\">" << b
          << "</text>\n";
}

void svg_close(std::ostringstream& out) { out << "</g>\n</svg>\n"; }

}  // namespace

std::string support_csv(const CohomologyTable& table, int i_lo, int i_hi) {
  std::ostringstream out;
  out << "i";
  degree_header(out, table.box.rank());
  out << ",dim,status,path,t_stab\n";
  const auto pts = table.box.points();
  for (int i = i_lo; i <= i_hi; ++i)
    for (const auto& g : pts) {
      const LcEntry& e = table.at(i, g);
      out << i;
      degree_fields(out, g);
      out << "," << e.dim << "," << to_string(e.status) << "," << to_string(e.path) << "," << e.t_stab << "\n";
    }
  return out.str();
}

std::string regularity_csv(const RegularityRegion& reg) {
  std::ostringstream out;
  degree_header(out, reg.box.rank());
  out << ",in_region,certified,weak\n";
  for (const auto& g : reg.box.points()) {
    std::ostringstream row;
    degree_fields(row, g);
    out << row.str().substr(1) << "," << (reg.contains(g) ? 1 : 0) << "," << (reg.is_certified(g) ? 1 : 0) << ","
        << (reg.is_weak(g) ? 1 : 0) << "\n";
  }
  return out.str();
}

std::string betti_csv(const std::vector<BettiEntry>& entries, std::size_t k) {
  std::ostringstream out;
  out << "j";
  degree_header(out, k);
  out << ",dim\n";
  for (const auto& e : entries) {
    out << e.j;
    degree_fields(out, e.degree);
    out << "," << e.dim << "\n";
  }
  return out.str();
}

std::string verify_json(const std::vector<CheckReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json w = nullptr;
    if (r.witness) w = r.witness->values();
    arr.push_back({{"theorem_id", r.theorem_id},
                   {"instance_id", r.instance_id},
                   {"status", to_string(r.status)},
                   {"witness", w},
                   {"detail", r.detail},
                   {"points_checked", r.points_checked}});
  }
  return arr.dump(2) + "\n";
}

std::string hilbert_report(const std::string& name, const HilbertResult& result) {
  std::ostringstream out;
  out << "instance: " << name << "\n";
  out << "fit_grid: " << result.fit_grid.str() << "\n";
  out << "sampled_in_regularity: " << (result.sampled_in_regularity ? "yes" : "no") << "\n";
  out << "binomial_form: " << result.polynomial.binomial_str() << "\n";
  out << "expanded_form: " << result.polynomial.expanded_str() << "\n";
  for (const auto& c : result.checks) {
    out << "check " << c.theorem_id << ": " << to_string(c.status);
    if (c.witness) out << " at " << degree_label(*c.witness);
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  return out.str();
}

bool plottable(const Box& box) { return box.rank() == 1 || box.rank() == 2; }

std::string support_svg(const CohomologyTable& table, int i, const std::string& title) {
  const Grid grid(table.box);
  const std::size_t rank = table.box.rank();
  std::ostringstream out;
  svg_open(out, grid, title);
  for (long b = grid.y_hi; b >= grid.y_lo; --b)
    for (long a = grid.x_lo; a <= grid.x_hi; ++a) {
      const Degree g = grid.at(a, b, rank);
      const LcEntry& e = table.at(i, g);
      const char* fill = e.dim > 0 ? (e.trusted() ? "#2b6cb0" : "#dd6b20") : (e.trusted() ? "#ffffff" : "#fbd38d");
      out << "<rect x=\"" << grid.x(a) << "\" y=\"" << grid.y(b) << "\" width=\"" << kCell << "\" height=\"" << kCell
          << "\" fill=\"" << fill << "\" stroke=\"#a0aec0\"" << (e.trusted() ? "" : " stroke-dasharray=\"3,2\"")
          << "><title>" << degree_label(g) << " dim=" << e.dim << " status=" << to_string(e.status)
          << "</title></rect>\n";
      out << "<text x=\"" << grid.x(a) + kCell / 2 << "\" y=\"" << grid.y(b) + kCell / 2 + 4
          << "\" text-anchor=\"middle\" fill=\"" << (e.dim > 0 ? "#ffffff" : "#a0aec0") << "\">" << e.dim
          << "</text>\n";
    }
  svg_axes(out, grid, rank);
  svg_close(out);
  return out.str();
}

std::string regularity_svg(const RegularityRegion& reg, const Grading& grading, const std::string& title) {
  const Grid grid(reg.box);
  const std::size_t rank = reg.box.rank();
  std::set<Degree> gens;
  for (const auto& gen : reg.generators(grading)) gens.insert(gen.point);
  std::ostringstream out;
  svg_open(out, grid, title);
  for (long b = grid.y_hi; b >= grid.y_lo; --b)
    for (long a = grid.x_lo; a <= grid.x_hi; ++a) {
      const Degree g = grid.at(a, b, rank);
      const bool in = reg.contains(g), cert = reg.is_certified(g);
      const char* fill = in ? (cert ? "#38a169" : "#9ae6b4") : "#ffffff";
      out << "<rect x=\"" << grid.x(a) << "\" y=\"" << grid.y(b) << "\" width=\"" << kCell << "\" height=\"" << kCell
          << "\" fill=\"" << fill << "\" stroke=\"#cbd5e0\"" << (in && !cert ? " stroke-dasharray=\"3,2\"" : "")
          << "><title>" << degree_label(g) << " in_region=" << (in ? 1 : 0) << " certified=" << (cert ? 1 : 0)
          << "</title></rect>\n";
    }
  // staircase: edges between member cells and non-member neighbours
  auto member = [&](long a, long b) {
    if (a < grid.x_lo || a > grid.x_hi || b < grid.y_lo || b > grid.y_hi) return true;
    return reg.contains(grid.at(a, b, rank));
  };
  for (long b = grid.y_hi; b >= grid.y_lo; --b)
    for (long a = grid.x_lo; a <= grid.x_hi; ++a) {
      if (!reg.contains(grid.at(a, b, rank))) continue;
      const int x0 = grid.x(a), y0 = grid.y(b), x1 = x0 + kCell, y1 = y0 + kCell;
      auto edge = [&](int ax, int ay, int bx, int by) {
        out << "<line x1=\"" << ax << "\" y1=\"" << ay << "\" x2=\"" << bx << "\" y2=\"" << by
            << "\" stroke=\"#1a202c\" stroke-width=\"2\"/>\n";
      };
      if (!member(a - 1, b)) edge(x0, y0, x0, y1);
      if (rank > 1 && !member(a, b - 1)) edge(x0, y1, x1, y1);
    }
  for (const auto& g : gens)
    out << "<text x=\"" << grid.x(g[0]) + 2 << "\" y=\"" << grid.y(rank > 1 ? g[1] : 0) + kCell / 2 + 4
        << "\" font-weight=\"bold\" font-size=\"8\">" << degree_label(g) << "</text>\n";
  svg_axes(out, grid, rank);
  svg_close(out);
  return out.str();
}

std::string support_ascii(const CohomologyTable& table, int i) {
  const Grid grid(table.box);
  const std::size_t rank = table.box.rank();
  std::ostringstream out;
  for (long b = grid.y_hi; b >= grid.y_lo; --b) {
    if (rank > 1) out << (b >= 0 ? " " : "") << b << (b > -10 && b < 10 ? "  " : " ") << "| ";
    for (long a = grid.x_lo; a <= grid.x_hi; ++a) {
      const LcEntry& e = table.at(i, grid.at(a, b, rank));
      out << (e.dim > 0 ? (e.trusted() ? '#' : '+') : (e.trusted() ? '.' : '?'));
    }
    out << "\n";
  }
  return out.str();
}

std::string regularity_ascii(const RegularityRegion& reg, const Grading& grading) {
  const Grid grid(reg.box);
  const std::size_t rank = reg.box.rank();
  std::set<Degree> gens;
  for (const auto& gen : reg.generators(grading)) gens.insert(gen.point);
  std::ostringstream out;
  for (long b = grid.y_hi; b >= grid.y_lo; --b) {
    if (rank > 1) out << (b >= 0 ? " " : "") << b << (b > -10 && b < 10 ? "  " : " ") << "| ";
    for (long a = grid.x_lo; a <= grid.x_hi; ++a) {
      const Degree g = grid.at(a, b, rank);
      char c = '.';
      if (reg.contains(g)) c = gens.count(g) ? '*' : (reg.is_certified(g) ? 'R' : 'r');
      out << c;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace mgreg::cli
