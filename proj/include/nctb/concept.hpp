#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nctb/balls.hpp"
#include "nctb/vertex_set.hpp"

namespace nctb {

/// A finite concept class: distinct subsets of a ground set 0..ground-1.
struct ConceptClass {
  int ground = 0;
  std::vector<VertexSet> concepts;
  /// Optional tag per concept; empty or same length as `concepts`.
  std::vector<std::string> labels;

  std::size_t size() const { return concepts.size(); }
  /// Throws ValidationError on duplicates or ids outside the ground set.
  void validate() const;
};

/// Sign vector with positive part T+ and negative part T-.
struct SignedSample {
  VertexSet positive;
  VertexSet negative;

  SignedSample() = default;
  explicit SignedSample(int universe) : positive(universe), negative(universe) {}
  SignedSample(VertexSet pos, VertexSet neg) : positive(std::move(pos)), negative(std::move(neg)) {}
  static SignedSample positive_only(VertexSet pos) {
    int n = pos.universe();
    return SignedSample(std::move(pos), VertexSet(n));
  }

  VertexSet support() const { return positive | negative; }
  int size() const { return positive.count() + negative.count(); }
  bool is_positive_only() const { return negative.empty(); }

  friend bool operator==(const SignedSample &, const SignedSample &) = default;
};

/// One sample per concept, index-aligned with a ConceptClass.
struct TeachingMap {
  std::vector<SignedSample> samples;

  std::size_t count() const { return samples.size(); }
  /// Largest support over all concepts.
  int size() const;
  bool positive_only() const;
  friend bool operator==(const TeachingMap &, const TeachingMap &) = default;
};

enum class ViolationKind { clash, inclusion_broken, not_realizable };

const char *to_string(ViolationKind kind);

/// For per-concept violations `second == first`.
struct Violation {
  int first = 0;
  int second = 0;
  ViolationKind kind = ViolationKind::clash;
  friend bool operator==(const Violation &, const Violation &) = default;
};

struct VerificationReport {
  bool ok = true;
  int size = 0;
  bool positive_only = false;
  std::vector<Violation> violations;
};

/// X is realizable by c: positives inside c, negatives outside.
bool realizable(const SignedSample &sample, const VertexSet &c);

/// Two distinct concepts clash when each one realizes the other's sample,
/// i.e. they agree on the union of both supports.
bool clashes(const SignedSample &a, const SignedSample &b, const VertexSet &ca, const VertexSet &cb);

/// Checks realizability, the inclusion condition (when positive_only) and all
/// pairs for clashes. Violations come in lexicographic pair order.
VerificationReport verify(const ConceptClass &cc, const TeachingMap &tm, bool positive_only, int threads = 1);

/// As verify, but a ball pair is only checked when its Hausdorff distance
/// exceeds rho.
VerificationReport verify_approx(const BallFamily &family, const TeachingMap &tm, int rho, const DistanceMatrix &d);

/// One concept per distinct ball, labelled with its canonical (center,radius).
ConceptClass balls_as_concept_class(const BallFamily &family, int ground);

struct ExampleClass {
  ConceptClass concepts;
  TeachingMap map;
};

/// The 5-cycle class: non-adjacent pairs {i, i+2} then 2-paths {i, i+1, i+2}
/// (indices mod 5, increasing index taken as counterclockwise). A 2-path is
/// taught by its first edge {i, i+1}; a pair by itself.
ExampleClass c5_example_class();

} // namespace nctb
