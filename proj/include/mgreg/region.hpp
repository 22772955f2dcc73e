#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mgreg/grading.hpp"
#include "mgreg/int_vec.hpp"

namespace mgreg {

/// Closed integer box lo <= g <= hi.
struct Box {
  Degree lo, hi;

  Box() = default;
  Box(Degree l, Degree h) : lo(std::move(l)), hi(std::move(h)) {}
  static Box cube(std::size_t k, long lo, long hi) { return Box(Degree(k, lo), Degree(k, hi)); }

  std::size_t rank() const { return lo.size(); }
  bool empty() const;
  bool contains(const Degree& g) const;
  std::size_t size() const;
  std::size_t index(const Degree& g) const;
  Degree point(std::size_t idx) const;
  /// Points in lexicographic order.
  std::vector<Degree> points() const;
  Box intersect(const Box& o) const;
  Box expanded(const Degree& down, const Degree& up) const { return Box(lo - down, hi + up); }
  bool operator==(const Box&) const = default;
  std::string str() const;
};

/// Integer interval; a missing bound means unbounded in that direction.
struct Interval {
  std::optional<long> lo, hi;
  bool contains(long x) const { return (!lo || x >= *lo) && (!hi || x <= *hi); }
  bool empty() const { return lo && hi && *lo > *hi; }
  bool contains(const Interval& o) const;
  Interval intersect(const Interval& o) const;
  bool operator==(const Interval&) const = default;
};

struct IntervalProduct {
  std::vector<Interval> factors;

  bool contains(const Degree& g) const;
  bool empty() const;
  bool contains(const IntervalProduct& o) const;
  IntervalProduct intersect(const IntervalProduct& o) const;
  IntervalProduct translate(const Degree& s) const;
  bool operator==(const IntervalProduct&) const = default;
};

/// Finite union of interval products: an exact description of regions that
/// are unbounded in some directions.
class InfiniteForm {
 public:
  InfiniteForm() = default;
  explicit InfiniteForm(std::size_t k) : k_(k) {}
  static InfiniteForm all(std::size_t k);
  static InfiniteForm none(std::size_t k) { return InfiniteForm(k); }
  /// base + Z^k_{>=0}
  static InfiniteForm orthant(const Degree& base);
  static InfiniteForm single(IntervalProduct p);
  static InfiniteForm point(const Degree& g);

  std::size_t rank() const { return k_; }
  const std::vector<IntervalProduct>& parts() const { return parts_; }
  bool contains(const Degree& g) const;
  bool is_empty() const { return parts_.empty(); }

  InfiniteForm unite(const InfiniteForm& o) const;
  InfiniteForm intersect(const InfiniteForm& o) const;
  InfiniteForm complement() const;
  InfiniteForm translate(const Degree& s) const;
  InfiniteForm minkowski(const std::vector<Degree>& shifts) const;
  /// Down-closure with respect to Z^k_{>=0}.
  InfiniteForm down_closure() const;
  /// Up-closure with respect to Z^k_{>=0}.
  InfiniteForm up_closure() const;
  std::string str() const;

 private:
  std::size_t k_ = 0;
  std::vector<IntervalProduct> parts_;
  void add(IntervalProduct p);
};

/// Finite window onto a subset of Z^k. Membership is known on `exact`
/// (a sub-box of `box`); outside it the stored bits are only a truncated
/// view. An attached InfiniteForm, when present, is authoritative.
class LatticeRegion {
 public:
  LatticeRegion() = default;
  explicit LatticeRegion(Box box);
  static LatticeRegion from_predicate(const Box& box, const std::function<bool(const Degree&)>& pred);
  static LatticeRegion from_form(const Box& box, InfiniteForm form);

  const Box& box() const { return box_; }
  const Box& exact_box() const { return exact_; }
  const std::optional<InfiniteForm>& form() const { return form_; }
  void set_exact_box(Box b) { exact_ = std::move(b); }

  bool contains(const Degree& g) const;
  /// nullopt when g lies outside the exact box and no form is attached.
  std::optional<bool> lookup(const Degree& g) const;
  void set(const Degree& g, bool v);
  std::size_t count() const;
  std::vector<Degree> points() const;

  LatticeRegion unite(const LatticeRegion& o) const;
  LatticeRegion intersect(const LatticeRegion& o) const;
  LatticeRegion complement() const;
  /// Region + s viewed through the same box.
  LatticeRegion translate(const Degree& s) const;
  /// Union of translates by each shift; shrinks the exact box unless a form
  /// is attached. Throws InsufficientPadding if nothing stays exact.
  LatticeRegion minkowski(const std::vector<Degree>& shifts) const;
  /// Same region restricted to a sub-box.
  LatticeRegion restrict_to(const Box& b) const;

  /// Points g of the region with g - deg(x_i) outside the region for all i.
  /// Points on the lower boundary of the box whose predecessor leaves the
  /// box are reported with `boundary = true`.
  struct Generator {
    Degree point;
    bool boundary = false;
  };
  /// Throws NotStable when the region is not C-stable inside the box.
  std::vector<Generator> minimal_generators(const Grading& grading) const;
  /// g in region implies g + deg(x_i) in region whenever both lie in the box.
  bool is_stable(const Grading& grading) const;

  bool same_points(const LatticeRegion& o) const;

 private:
  Box box_, exact_;
  std::vector<char> bits_;
  std::optional<InfiniteForm> form_;
  void check_same_box(const LatticeRegion& o) const;
};

/// points + C clipped to the box; carries an InfiniteForm for standard
/// multigradings.
LatticeRegion stable_closure(const std::vector<Degree>& points, const Box& box, const Grading& grading);

}  // namespace mgreg
