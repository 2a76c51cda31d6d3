#pragma once

// Buildings presented by finite atlases: charts, pairwise convex gluing
// regions with affine Weyl transitions, and the point algebra on top.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lambda/errors.hpp"
#include "lambda/model_space.hpp"

namespace lb {

// Unvalidated atlas as read from a file.

struct RawHalfApartment {
  Root root;
  std::optional<GroupValue> offset;
};

/// A region is the union of its pieces; a single piece is the usual case.
struct RegionSpec {
  std::vector<std::vector<RawHalfApartment>> pieces;
};

/// Exactly one of word (0-based simple reflection indices) or matrix is set.
struct TransitionSpec {
  std::optional<std::vector<std::size_t>> word;
  std::optional<IntMatrix> matrix;
  std::vector<GroupValue> translation;
};

/// Z_fg in f-coordinates and w_fg with (f, a) ≡ (g, w_fg·a) on Z_fg.
struct GluingSpec {
  std::string from;
  std::string to;
  RegionSpec region;
  TransitionSpec transition;
};

struct AtlasSpec {
  RootType type = RootType::A;
  std::size_t rank = 1;
  std::size_t group_rank = 1;
  std::vector<std::string> charts;
  std::vector<GluingSpec> gluings;
};

struct Gluing {
  ConvexSet region;
  AffineMap map;
};

struct BuildingPoint {
  std::string chart;
  Point coords;
};

/// Chambers (chart, spherical chamber w̄) grouped into classes.
struct ChamberClasses {
  std::vector<std::pair<std::size_t, std::size_t>> raw;
  /// Class id per raw chamber; ids are assigned by first appearance.
  std::vector<std::size_t> class_of;
  std::size_t count = 0;
  /// Unordered adjacent class pairs (a < b).
  std::set<std::pair<std::size_t, std::size_t>> adjacency;
};

struct AxiomVerdict {
  std::string status;  // "pass", "pass(witnesses)" or "fail"
  Witness witness;
  bool passed() const { return status != "fail"; }
};

struct AxiomReport {
  std::map<std::string, AxiomVerdict> verdicts;  // keys "A1".."A6"
  bool passed() const;
};

class ChartComplex {
 public:
  /// Checks the atlas and builds the complex. Throws BuildingError with codes
  /// InvalidInput, DuplicateChart, UnknownChart, ConvexityViolation,
  /// EmptyRegion, InconsistentTransition, InverseMismatch or
  /// CocycleViolation, each carrying a witness.
  static ChartComplex validate(const AtlasSpec& spec);

  const ModelSpace& space() const { return space_; }
  /// Chart ids in lexicographic order.
  const std::vector<std::string>& charts() const { return charts_; }
  std::size_t chart_index(const std::string& id) const;
  /// Gluing from chart f to chart g (both orientations are stored).
  const Gluing* gluing(std::size_t f, std::size_t g) const;
  /// One entry per unordered glued pair, first chart smaller.
  AtlasSpec to_spec() const;

  void check(const BuildingPoint& p) const;
  std::optional<Point> try_transport(const BuildingPoint& p, std::size_t g) const;
  /// Throws BuildingError NotInChart.
  Point transport(const BuildingPoint& p, const std::string& chart) const;
  bool equal(const BuildingPoint& p, const BuildingPoint& q) const;
  std::vector<std::size_t> charts_containing(const BuildingPoint& p) const;
  /// Representative in the smallest chart containing p.
  BuildingPoint canonical(const BuildingPoint& p) const;
  /// Throws BuildingError NoCommonChart.
  GroupValue distance(const BuildingPoint& p, const BuildingPoint& q) const;

  /// Whether the germ (given in chart f) lies in chart g.
  bool germ_in_chart(std::size_t f, const Germ& mu, std::size_t g) const;
  /// r_{A,μ}(p) with μ given in A-coordinates. Throws BuildingError
  /// NoChartContainingGermAndPoint.
  BuildingPoint retract(const std::string& a, const Germ& mu, const BuildingPoint& p) const;

  ChamberClasses residue(const BuildingPoint& p) const;
  ChamberClasses boundary() const;

  AxiomReport check_axioms(const std::vector<BuildingPoint>& witnesses) const;

 private:
  ChartComplex(ModelSpace space, std::vector<std::string> charts)
      : space_(std::move(space)), charts_(std::move(charts)) {}

  void check_cocycles() const;
  ChamberClasses classify(std::vector<std::pair<std::size_t, std::size_t>> raw,
                          const std::vector<std::pair<std::size_t, std::size_t>>& identified) const;

  ModelSpace space_;
  std::vector<std::string> charts_;
  std::map<std::pair<std::size_t, std::size_t>, Gluing> gluings_;
};

}  // namespace lb
