#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "dunkl/errors.hpp"

namespace dunkl {

enum class FamilyTag { A1Product, A2, B2, Dihedral, Custom };

std::string family_name(FamilyTag tag);

/// A finite root system with positive roots normalized to |alpha|^2 = 2 and a
/// G-invariant multiplicity function. Immutable after construction.
struct RootSystem {
  int dimension = 0;
  Eigen::MatrixXd positive_roots;  // dimension x |R_+|, one root per column
  Eigen::VectorXd multiplicity;    // k_alpha per positive root
  std::vector<int> orbit;          // orbit id per positive root
  FamilyTag family = FamilyTag::Custom;
  int dihedral_order = 0;  // m for FamilyTag::Dihedral, else 0

  int num_positive_roots() const { return static_cast<int>(positive_roots.cols()); }
  int num_orbits() const;
  double gamma() const { return multiplicity.sum(); }
  double effective_dimension() const { return dimension + 2.0 * gamma(); }
  bool is_product() const { return family == FamilyTag::A1Product; }
  bool trivial_multiplicity() const { return multiplicity.size() == 0 || multiplicity.maxCoeff() == 0.0; }
};

struct ReflectionGroup {
  std::vector<Eigen::MatrixXd> elements;  // sorted by entries, contains identity
  int order() const { return static_cast<int>(elements.size()); }
};

/// Sign pattern epsilon over the positive roots labelling a Weyl chamber.
struct ChamberSign {
  Eigen::VectorXi signs;  // +-1 per positive root
  bool operator==(const ChamberSign& other) const { return signs == other.signs; }
};

struct Chamber {
  ChamberSign sign;
  Eigen::VectorXd representative;  // interior unit vector
};

RootSystem build_root_system(FamilyTag family, int dimension,
                             const std::vector<double>& orbit_multiplicities,
                             int dihedral_order = 0);

/// CUSTOM construction from an explicit root list (any lengths; rescaled).
RootSystem build_custom_root_system(const Eigen::MatrixXd& roots,
                                    const std::vector<double>& orbit_multiplicities);

/// Parses {"family": ..., "dimension": ..., "multiplicities": [...], "roots": [[...]]}.
RootSystem load_root_system_json(const std::string& json_text);
RootSystem load_root_system_file(const std::string& path);

/// Inline shorthand: a1:k=1, a1x3:k=1,0.5,2, a2:k=1, b2:k=1,0.5, i2m:m=5,k=1,
/// or a path to a JSON file.
RootSystem parse_root_system_spec(const std::string& spec);

std::string root_system_to_json(const RootSystem& rs);

Eigen::VectorXd reflect(const Eigen::VectorXd& root, const Eigen::VectorXd& point);

ReflectionGroup generate_group(const RootSystem& rs, int cap = 1024);

ChamberSign chamber_sign(const RootSystem& rs, const Eigen::VectorXd& point);

/// All Weyl chambers with interior representatives; count equals |G|.
std::vector<Chamber> enumerate_chambers(const RootSystem& rs);

double weight(const RootSystem& rs, const Eigen::VectorXd& point);

}  // namespace dunkl
