#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mgreg/grading.hpp"
#include "mgreg/linalg.hpp"
#include "mgreg/monomial_ideal.hpp"
#include "mgreg/polynomial.hpp"
#include "mgreg/region.hpp"

namespace mgreg {

/// Box known to contain the supports of all Tor_j(M, k); `exact` means
/// the containment is proven rather than estimated.
struct BettiWindow {
  Box box;
  bool exact = false;
};

/// Graded-piece oracle: dimensions of M_g with a fixed ordered basis and the
/// action of monomials between pieces.
template <class F>
class GradedModule {
 public:
  using Elem = typename F::Elem;
  using Matrix = SparseMatrix<F>;

  GradedModule(std::shared_ptr<const Grading> grading, F field)
      : grading_(std::move(grading)), field_(std::move(field)) {}
  virtual ~GradedModule() = default;
  GradedModule(const GradedModule&) = delete;
  GradedModule& operator=(const GradedModule&) = delete;

  const Grading& grading() const { return *grading_; }
  const std::shared_ptr<const Grading>& grading_ptr() const { return grading_; }
  const F& field() const { return field_; }

  virtual int dim(const Degree& g) const = 0;
  /// Matrix of multiplication by x^e from M_g to M_{g + deg e}.
  virtual Matrix act(const Degree& g, const Exponent& e) const = 0;
  virtual std::vector<std::string> basis_labels(const Degree& g) const;
  /// Degrees of a generating set.
  virtual std::vector<Degree> generator_degrees() const = 0;
  /// A finite set containing every shift of a free resolution, when known.
  virtual std::optional<std::vector<Degree>> resolution_shifts() const { return std::nullopt; }
  virtual BettiWindow betti_window() const = 0;
  /// Monomial ideal contained in ann(M).
  virtual MonomialIdeal annihilator_witness() const {
    return MonomialIdeal::zero(static_cast<std::size_t>(grading_->num_vars()));
  }
  virtual std::string describe() const = 0;

  Matrix mult_map(const Degree& g, int var) const;
  Matrix act_poly(const Degree& g, const Polynomial& p) const;

 protected:
  Exponent unit(int var) const;

 private:
  std::shared_ptr<const Grading> grading_;
  F field_;
};

/// R/J for a monomial ideal J (J = 0 gives R itself).
template <class F>
class MonomialQuotient : public GradedModule<F> {
 public:
  using typename GradedModule<F>::Matrix;
  MonomialQuotient(std::shared_ptr<const Grading> grading, F field, MonomialIdeal ideal);

  int dim(const Degree& g) const override;
  Matrix act(const Degree& g, const Exponent& e) const override;
  std::vector<std::string> basis_labels(const Degree& g) const override;
  std::vector<Degree> generator_degrees() const override { return {this->grading().zero()}; }
  std::optional<std::vector<Degree>> resolution_shifts() const override;
  BettiWindow betti_window() const override;
  MonomialIdeal annihilator_witness() const override { return ideal_; }
  std::string describe() const override;
  const MonomialIdeal& ideal() const { return ideal_; }

 private:
  struct Piece {
    std::vector<Exponent> basis;
    std::unordered_map<Exponent, int, IntVecHash> index;
  };
  MonomialIdeal ideal_;
  mutable std::mutex mu_;
  mutable std::map<Degree, std::shared_ptr<const Piece>> cache_;
  std::shared_ptr<const Piece> piece(const Degree& g) const;
};

/// Graded matrix of homogeneous polynomials; entry (r, c) has degree
/// col_shifts[c] - row_shifts[r].
struct GradedMatrix {
  std::vector<Degree> row_shifts;
  std::vector<Degree> col_shifts;
  std::vector<std::vector<Polynomial>> entries;  // entries[r][c]
};

/// coker(sum_c R(-col_c) -> sum_r R(-row_r)).
template <class F>
class PresentedModule : public GradedModule<F> {
 public:
  using typename GradedModule<F>::Matrix;
  using Elem = typename F::Elem;
  /// Throws SchemaError when an entry is not homogeneous of the right degree.
  PresentedModule(std::shared_ptr<const Grading> grading, F field, GradedMatrix presentation);

  /// R/(f_1, ..., f_m) for homogeneous polynomials.
  static std::shared_ptr<PresentedModule> quotient(std::shared_ptr<const Grading> grading, F field,
                                                   const std::vector<Polynomial>& gens);

  int dim(const Degree& g) const override;
  Matrix act(const Degree& g, const Exponent& e) const override;
  std::vector<std::string> basis_labels(const Degree& g) const override;
  std::vector<Degree> generator_degrees() const override { return pres_.row_shifts; }
  std::optional<std::vector<Degree>> resolution_shifts() const override;
  BettiWindow betti_window() const override;
  MonomialIdeal annihilator_witness() const override;
  std::string describe() const override;

  void set_annihilator_witness(MonomialIdeal w) { witness_ = std::move(w); }
  const GradedMatrix& presentation() const { return pres_; }
  /// dim F0_g - rank of the presentation matrix in degree g.
  int free_dim(const Degree& g) const;
  int relation_rank(const Degree& g) const;

 private:
  struct Piece {
    int free_dim = 0;
    std::vector<int> row_offset;
    std::vector<std::shared_ptr<const std::vector<Exponent>>> monos;
    std::vector<std::unordered_map<Exponent, int, IntVecHash>> index;
    std::vector<int> pivot_of;  // free index -> echelon row or -1
    std::vector<std::vector<std::pair<int, Elem>>> echelon;
    std::vector<int> std_basis;
    std::vector<int> std_pos;  // free index -> position in std_basis or -1
  };
  GradedMatrix pres_;
  std::optional<MonomialIdeal> witness_;
  mutable std::mutex mu_;
  mutable std::map<Degree, std::shared_ptr<const Piece>> cache_;
  std::shared_ptr<const Piece> piece(const Degree& g) const;
  std::vector<std::pair<int, Elem>> reduce(const Piece& p, std::map<int, Elem> v) const;
};

/// C-stable subset of Z^k used for truncations.
struct StableSet {
  enum class Kind { All, Empty, Generated };
  Kind kind = Kind::All;
  std::vector<Degree> generators;  // S = union of g + C

  static StableSet all() { return {Kind::All, {}}; }
  static StableSet empty() { return {Kind::Empty, {}}; }
  static StableSet generated(std::vector<Degree> gens) { return {Kind::Generated, std::move(gens)}; }
  bool contains(const Degree& g, const Grading& grading) const;
  LatticeRegion region(const Box& box, const Grading& grading) const;
  std::string str() const;
};

/// Truncation M_S: pieces of degree in S, zero elsewhere.
template <class F>
class TruncatedModule : public GradedModule<F> {
 public:
  using typename GradedModule<F>::Matrix;
  TruncatedModule(std::shared_ptr<const GradedModule<F>> base, StableSet set);

  int dim(const Degree& g) const override;
  Matrix act(const Degree& g, const Exponent& e) const override;
  std::vector<std::string> basis_labels(const Degree& g) const override;
  std::vector<Degree> generator_degrees() const override;
  BettiWindow betti_window() const override;
  MonomialIdeal annihilator_witness() const override { return base_->annihilator_witness(); }
  std::string describe() const override;

  const GradedModule<F>& base() const { return *base_; }
  const StableSet& set() const { return set_; }
  bool in_set(const Degree& g) const { return set_.contains(g, this->grading()); }

 private:
  std::shared_ptr<const GradedModule<F>> base_;
  StableSet set_;
};

/// M[s] with M[s]_g = M_{s+g}.
template <class F>
class ShiftedModule : public GradedModule<F> {
 public:
  using typename GradedModule<F>::Matrix;
  ShiftedModule(std::shared_ptr<const GradedModule<F>> base, Degree shift);

  int dim(const Degree& g) const override { return base_->dim(g + shift_); }
  Matrix act(const Degree& g, const Exponent& e) const override { return base_->act(g + shift_, e); }
  std::vector<std::string> basis_labels(const Degree& g) const override { return base_->basis_labels(g + shift_); }
  std::vector<Degree> generator_degrees() const override;
  std::optional<std::vector<Degree>> resolution_shifts() const override;
  BettiWindow betti_window() const override;
  MonomialIdeal annihilator_witness() const override { return base_->annihilator_witness(); }
  std::string describe() const override;

 private:
  std::shared_ptr<const GradedModule<F>> base_;
  Degree shift_;
};

/// The zero module.
template <class F>
class ZeroModule : public GradedModule<F> {
 public:
  using typename GradedModule<F>::Matrix;
  using GradedModule<F>::GradedModule;
  int dim(const Degree&) const override { return 0; }
  Matrix act(const Degree&, const Exponent&) const override { return Matrix(0, 0); }
  std::vector<Degree> generator_degrees() const override { return {}; }
  std::optional<std::vector<Degree>> resolution_shifts() const override { return std::vector<Degree>{}; }
  BettiWindow betti_window() const override;
  MonomialIdeal annihilator_witness() const override;
  std::string describe() const override { return "0"; }
};

}  // namespace mgreg
