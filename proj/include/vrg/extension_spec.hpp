#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vrg/poly.hpp"

namespace vrg {

/// A = Q[f_1..f_n] inside B = Q[X_1..X_n] with weighted-homogeneous f_i.
///
/// Besides B the spec owns two derived rings: the tag ring Q[y_1..y_n]
/// (y_i of weight a_i = deg f_i) standing for A, and the joint ring
/// Q[X_1..X_n, y_1..y_n] used for elimination.
class ExtensionSpec {
 public:
  /// Throws InvalidSpec unless there are exactly n nonconstant
  /// weighted-homogeneous generators over the n-variable ring.
  ExtensionSpec(Ring ring, std::vector<Poly> generators, std::vector<std::string> labels = {});

  std::size_t n() const noexcept { return generators_.size(); }
  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Poly>& generators() const noexcept { return generators_; }
  const std::vector<int>& gen_weights() const noexcept { return gen_weights_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  const Ring& tag_ring() const noexcept { return tag_ring_; }
  const Ring& joint_ring() const noexcept { return joint_ring_; }

  Poly embed_base(const Poly& p) const;
  Poly embed_tag(const Poly& p) const;
  /// The tag-ring image of a joint polynomial free of X variables.
  std::optional<Poly> extract_tag(const Poly& p) const;
  /// p(f_1, ..., f_n) for p in the tag ring.
  Poly pullback(const Poly& tag_poly) const;
  /// y_i - f_i in the joint ring.
  std::vector<Poly> tag_relations() const;

 private:
  Ring ring_;
  std::vector<Poly> generators_;
  std::vector<int> gen_weights_;
  std::vector<std::string> labels_;
  Ring tag_ring_;
  Ring joint_ring_;
};

/// Builds a spec from variable names, weights and generator expressions.
ExtensionSpec make_spec(std::vector<std::string> names, std::vector<int> weights,
                        const std::vector<std::string>& generators,
                        std::vector<std::string> labels = {});

}  // namespace vrg
