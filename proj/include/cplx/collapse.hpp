#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cplx/complex.hpp"
#include "cplx/face_lattice.hpp"

namespace cplx {

struct CollapsePair {
  Simplex free_face;
  Simplex coface;
  friend bool operator==(const CollapsePair&, const CollapsePair&) = default;
};

// One removal: an elementary collapse, or a single maximal face declared critical.
struct CollapseStep {
  Simplex face;
  std::optional<Simplex> coface;
  bool critical() const { return !coface.has_value(); }
  friend bool operator==(const CollapseStep&, const CollapseStep&) = default;
};

enum class TargetKind { Point, Subcomplex, Empty };

struct CollapseTarget {
  TargetKind kind = TargetKind::Point;
  SimplicialComplex complex;
  static CollapseTarget point() { return {}; }
  static CollapseTarget empty() { return {TargetKind::Empty, {}}; }
  static CollapseTarget subcomplex(SimplicialComplex c) { return {TargetKind::Subcomplex, std::move(c)}; }
  std::string str() const;
};

struct CollapseCertificate {
  CollapseTarget target;
  std::vector<CollapseStep> steps;
  std::vector<Simplex> critical_faces() const;
};

struct VerifyReport {
  bool ok = false;
  // 0-based index of the first illegal step; equals steps.size() when the residue is wrong.
  std::optional<std::size_t> failed_step;
  std::string reason;
  SimplicialComplex residue;
  std::vector<Simplex> critical;
  // ok and no critical steps
  bool is_collapse() const { return ok && critical.empty(); }
};

std::vector<CollapsePair> free_pairs(const SimplicialComplex& c);
VerifyReport verify_certificate(const SimplicialComplex& c, const CollapseCertificate& cert);
// Complex left after the first n steps; throws on an illegal step.
SimplicialComplex residue_after(const SimplicialComplex& c, const CollapseCertificate& cert, std::size_t n);

CollapseCertificate parse_clps(std::string_view text);
CollapseCertificate read_clps(const std::string& path);
std::string emit_clps(const CollapseCertificate& cert);

enum class CollapseStrategy { Uniform, Lookahead };
std::string to_string(CollapseStrategy s);

struct SearchOptions {
  std::uint64_t seed = 1;
  int restarts = 100;
  CollapseStrategy strategy = CollapseStrategy::Uniform;
  bool parallel = true;
};

struct SearchResult {
  std::optional<CollapseCertificate> certificate;
  // Restarts whose outcome was computed. With parallel runs this can exceed winner + 1.
  int restarts_run = 0;
  // Lowest successful restart index; the same for serial and parallel runs.
  std::optional<int> winner;
  std::uint64_t winner_seed = 0;
};

// Randomized collapse onto the target, restarting on dead ends.
// Failure is inconclusive, never a proof of non-collapsibility.
SearchResult search_collapse(const SimplicialComplex& c, const CollapseTarget& target, const SearchOptions& opt);

// Collapse with random free pairs until none is left. Keeps the homotopy type.
SimplicialComplex collapse_until_stuck(const SimplicialComplex& c, std::uint64_t seed);

namespace detail {

// Mutable collapse state over a face lattice.
class CollapseState {
 public:
  explicit CollapseState(const FaceLattice& lat);
  void protect(int id);

  bool alive(int id) const { return alive_[id] != 0; }
  int alive_count() const { return alive_total_; }
  int up_count(int id) const { return up_[id]; }
  bool is_free(int id) const { return alive_[id] && !protected_[id] && up_[id] == 1; }
  int free_count() const { return static_cast<int>(free_.size()); }
  int free_at(std::size_t i) const { return free_[i]; }
  int coface_of(int id) const;
  // Highest dimension with a live face, -1 when nothing is left.
  int top_alive_dim() const;
  int alive_of_dim(int k, std::size_t i) const { return by_dim_[k][i]; }
  std::size_t alive_count_of_dim(int k) const { return by_dim_[k].size(); }

  void collapse(int free_id);
  void remove_maximal(int id);
  // Number of faces that would become free by collapsing free_id.
  int lookahead_score(int free_id) const;

  std::vector<int> alive_ids() const;
  SimplicialComplex residue() const;

 private:
  void remove(int id);
  void refresh(int id);

  const FaceLattice& lat_;
  std::vector<char> alive_, protected_;
  std::vector<int> up_;
  std::vector<int> free_, free_pos_;
  std::vector<std::vector<int>> by_dim_;
  std::vector<int> dim_pos_;
  int alive_total_ = 0;
};

}  // namespace detail

}  // namespace cplx
