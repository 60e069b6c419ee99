#include "dunkl/root_system.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace dunkl {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonClosedSystem: return "NON_CLOSED_SYSTEM";
    case ErrorCode::NegativeMultiplicity: return "NEGATIVE_MULTIPLICITY";
    case ErrorCode::ZeroRoot: return "ZERO_ROOT";
    case ErrorCode::ClosureOverflow: return "CLOSURE_OVERFLOW";
    case ErrorCode::OnWall: return "ON_WALL";
    case ErrorCode::NoConvergence: return "NO_CONVERGENCE";
    case ErrorCode::UnboundedDomain: return "UNBOUNDED_DOMAIN";
    case ErrorCode::UnsupportedShape: return "UNSUPPORTED_SHAPE";
    case ErrorCode::UnsupportedRootSystem: return "UNSUPPORTED_ROOT_SYSTEM";
    case ErrorCode::ArgumentTooLarge: return "ARGUMENT_TOO_LARGE";
    case ErrorCode::NonpositiveTime: return "NONPOSITIVE_TIME";
    case ErrorCode::NegativeTime: return "NEGATIVE_TIME";
    case ErrorCode::NonnegativeS: return "NONNEGATIVE_S";
    case ErrorCode::ParameterRange: return "PARAMETER_RANGE";
    case ErrorCode::DivergentIntegral: return "DIVERGENT_INTEGRAL";
    case ErrorCode::NegativeMass: return "NEGATIVE_MASS";
    case ErrorCode::UnboundedField: return "UNBOUNDED_FIELD";
    case ErrorCode::UnknownCheck: return "UNKNOWN_CHECK";
    case ErrorCode::Validation: return "VALIDATION";
  }
  return "UNKNOWN";
}

std::string family_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::A1Product: return "A1_PRODUCT";
    case FamilyTag::A2: return "A2";
    case FamilyTag::B2: return "B2";
    case FamilyTag::Dihedral: return "DIHEDRAL_M";
    case FamilyTag::Custom: return "CUSTOM";
  }
  return "CUSTOM";
}

namespace {

constexpr double kMatrixTol = 1e-9;

// Generic direction used to order roots into a positive subsystem and to seed
// chamber enumeration; irrational slopes keep it off every wall.
Eigen::VectorXd generic_direction(int dim) {
  Eigen::VectorXd c(dim);
  for (int i = 0; i < dim; ++i) c[i] = 1.0 / (1.0 + i * std::numbers::pi / 7.0);
  return c;
}

bool same_vector(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double tol) {
  return (a - b).lpNorm<Eigen::Infinity>() <= tol;
}

bool vector_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > kMatrixTol) return a[i] < b[i];
  }
  return false;
}

bool matrix_less(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (std::abs(a(i, j) - b(i, j)) > kMatrixTol) return a(i, j) < b(i, j);
    }
  return false;
}

Eigen::MatrixXd reflection_matrix(const Eigen::VectorXd& root) {
  const int n = static_cast<int>(root.size());
  return Eigen::MatrixXd::Identity(n, n) - (2.0 / root.squaredNorm()) * root * root.transpose();
}

// Normalizes, drops +-duplicates, orients along a generic direction, sorts.
Eigen::MatrixXd canonical_positive_roots(const Eigen::MatrixXd& raw) {
  const int dim = static_cast<int>(raw.rows());
  const Eigen::VectorXd c = generic_direction(dim);
  std::vector<Eigen::VectorXd> roots;
  for (int j = 0; j < raw.cols(); ++j) {
    Eigen::VectorXd r = raw.col(j);
    const double len = r.norm();
    if (len < 1e-14) throw Error(ErrorCode::ZeroRoot, "root " + std::to_string(j) + " is zero");
    r *= std::sqrt(2.0) / len;
    if (c.dot(r) < 0) r = -r;
    bool duplicate = false;
    for (const auto& s : roots) {
      if (same_vector(r, s, kMatrixTol)) duplicate = true;
    }
    if (!duplicate) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end(), vector_less);
  Eigen::MatrixXd out(dim, static_cast<Eigen::Index>(roots.size()));
  for (size_t j = 0; j < roots.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = roots[j];
  return out;
}

void check_reflection_closed(const Eigen::MatrixXd& positive) {
  for (int a = 0; a < positive.cols(); ++a) {
    const Eigen::MatrixXd sigma = reflection_matrix(positive.col(a));
    for (int b = 0; b < positive.cols(); ++b) {
      const Eigen::VectorXd image = sigma * positive.col(b);
      bool found = false;
      for (int c = 0; c < positive.cols(); ++c) {
        if (same_vector(image, positive.col(c), kMatrixTol) ||
            same_vector(image, Eigen::VectorXd(-positive.col(c)), kMatrixTol)) {
          found = true;
          break;
        }
      }
      if (!found)
        throw Error(ErrorCode::NonClosedSystem,
                    "sigma_" + std::to_string(a) + " maps root " + std::to_string(b) +
                        " outside the system");
    }
  }
}

std::vector<int> compute_orbits(const Eigen::MatrixXd& positive, const ReflectionGroup& group) {
  const int m = static_cast<int>(positive.cols());
  std::vector<int> orbit(m, -1);
  int next = 0;
  for (int a = 0; a < m; ++a) {
    if (orbit[a] >= 0) continue;
    orbit[a] = next;
    for (const auto& g : group.elements) {
      const Eigen::VectorXd image = g * positive.col(a);
      for (int b = 0; b < m; ++b) {
        if (same_vector(image, positive.col(b), kMatrixTol) ||
            same_vector(image, Eigen::VectorXd(-positive.col(b)), kMatrixTol)) {
          if (orbit[b] < 0) orbit[b] = next;
        }
      }
    }
    ++next;
  }
  return orbit;
}

Eigen::VectorXd expand_multiplicities(const std::vector<double>& values,
                                      const std::vector<int>& orbit) {
  int norbits = 0;
  for (int id : orbit) norbits = std::max(norbits, id + 1);
  std::vector<double> per_orbit;
  if (values.size() == 1) {
    per_orbit.assign(static_cast<size_t>(norbits), values[0]);
  } else if (static_cast<int>(values.size()) == norbits) {
    per_orbit = values;
  } else if (values.size() == orbit.size()) {
    // Per-root input; must be orbit-constant.
    per_orbit.assign(static_cast<size_t>(norbits), -1.0);
    for (size_t i = 0; i < orbit.size(); ++i) {
      double& slot = per_orbit[static_cast<size_t>(orbit[i])];
      if (slot < 0) slot = values[i];
      else if (std::abs(slot - values[i]) > 1e-12)
        throw Error(ErrorCode::Validation, "multiplicity is not constant on orbits");
    }
  } else {
    throw Error(ErrorCode::Validation,
                "expected 1, " + std::to_string(norbits) + " (orbits) or " +
                    std::to_string(orbit.size()) + " (roots) multiplicity values, got " +
                    std::to_string(values.size()));
  }
  for (double k : per_orbit) {
    if (k < 0) throw Error(ErrorCode::NegativeMultiplicity, "k must be nonnegative");
  }
  Eigen::VectorXd per_root(orbit.size());
  for (size_t i = 0; i < orbit.size(); ++i) per_root[static_cast<Eigen::Index>(i)] = per_orbit[static_cast<size_t>(orbit[i])];
  return per_root;
}

RootSystem finish(FamilyTag family, Eigen::MatrixXd positive,
                  const std::vector<double>& multiplicities, int dihedral_order) {
  RootSystem rs;
  rs.dimension = static_cast<int>(positive.rows());
  rs.positive_roots = std::move(positive);
  rs.family = family;
  rs.dihedral_order = dihedral_order;
  check_reflection_closed(rs.positive_roots);
  rs.multiplicity = Eigen::VectorXd::Zero(rs.num_positive_roots());  // placeholder for closure
  const ReflectionGroup group = generate_group(rs);
  rs.orbit = compute_orbits(rs.positive_roots, group);
  rs.multiplicity = expand_multiplicities(multiplicities, rs.orbit);
  return rs;
}

}  // namespace

int RootSystem::num_orbits() const {
  int n = 0;
  for (int id : orbit) n = std::max(n, id + 1);
  return n;
}

RootSystem build_root_system(FamilyTag family, int dimension,
                             const std::vector<double>& orbit_multiplicities,
                             int dihedral_order) {
  if (dimension < 1) throw Error(ErrorCode::Validation, "dimension must be >= 1");
  if (orbit_multiplicities.empty())
    throw Error(ErrorCode::Validation, "at least one multiplicity value required");
  const double s2 = std::sqrt(2.0);
  switch (family) {
    case FamilyTag::A1Product: {
      Eigen::MatrixXd roots = s2 * Eigen::MatrixXd::Identity(dimension, dimension);
      return finish(family, canonical_positive_roots(roots), orbit_multiplicities, 0);
    }
    case FamilyTag::A2: {
      if (dimension != 2) throw Error(ErrorCode::Validation, "A2 requires dimension 2");
      Eigen::MatrixXd roots(2, 3);
      for (int j = 0; j < 3; ++j) {
        const double phi = j * std::numbers::pi / 3.0;
        roots.col(j) << s2 * std::cos(phi), s2 * std::sin(phi);
      }
      return finish(family, canonical_positive_roots(roots), orbit_multiplicities, 0);
    }
    case FamilyTag::B2: {
      if (dimension != 2) throw Error(ErrorCode::Validation, "B2 requires dimension 2");
      Eigen::MatrixXd roots(2, 4);
      roots.col(0) << 1, 0;   // axis orbit (rescaled to sqrt2*e1)
      roots.col(1) << 0, 1;
      roots.col(2) << 1, 1;   // diagonal orbit
      roots.col(3) << 1, -1;
      return finish(family, canonical_positive_roots(roots), orbit_multiplicities, 0);
    }
    case FamilyTag::Dihedral: {
      if (dimension != 2) throw Error(ErrorCode::Validation, "dihedral requires dimension 2");
      if (dihedral_order < 3) throw Error(ErrorCode::Validation, "dihedral order m must be >= 3");
      Eigen::MatrixXd roots(2, dihedral_order);
      for (int j = 0; j < dihedral_order; ++j) {
        const double phi = j * std::numbers::pi / dihedral_order;
        roots.col(j) << s2 * std::cos(phi), s2 * std::sin(phi);
      }
      return finish(family, canonical_positive_roots(roots), orbit_multiplicities, dihedral_order);
    }
    case FamilyTag::Custom:
      throw Error(ErrorCode::Validation, "CUSTOM requires an explicit root list");
  }
  throw Error(ErrorCode::Validation, "unknown family");
}

RootSystem build_custom_root_system(const Eigen::MatrixXd& roots,
                                    const std::vector<double>& orbit_multiplicities) {
  if (roots.cols() < 1) throw Error(ErrorCode::Validation, "empty root list");
  return finish(FamilyTag::Custom, canonical_positive_roots(roots), orbit_multiplicities, 0);
}

Eigen::VectorXd reflect(const Eigen::VectorXd& root, const Eigen::VectorXd& point) {
  const double nn = root.squaredNorm();
  if (nn < 1e-28) throw Error(ErrorCode::ZeroRoot, "reflection root is zero");
  return point - (2.0 * root.dot(point) / nn) * root;
}

ReflectionGroup generate_group(const RootSystem& rs, int cap) {
  std::vector<Eigen::MatrixXd> elements;
  elements.push_back(Eigen::MatrixXd::Identity(rs.dimension, rs.dimension));
  std::vector<Eigen::MatrixXd> generators;
  for (int j = 0; j < rs.num_positive_roots(); ++j)
    generators.push_back(reflection_matrix(rs.positive_roots.col(j)));

  auto contains = [&elements](const Eigen::MatrixXd& m) {
    for (const auto& e : elements)
      if ((e - m).lpNorm<Eigen::Infinity>() <= kMatrixTol) return true;
    return false;
  };

  size_t frontier = 0;
  while (frontier < elements.size()) {
    const Eigen::MatrixXd current = elements[frontier++];
    for (const auto& g : generators) {
      const Eigen::MatrixXd product = g * current;
      if (!contains(product)) {
        if (static_cast<int>(elements.size()) >= cap)
          throw Error(ErrorCode::ClosureOverflow,
                      "group closure exceeded cap " + std::to_string(cap));
        elements.push_back(product);
      }
    }
  }
  std::sort(elements.begin(), elements.end(), matrix_less);
  ReflectionGroup group;
  group.elements = std::move(elements);
  return group;
}

ChamberSign chamber_sign(const RootSystem& rs, const Eigen::VectorXd& point) {
  const double scale = point.norm();
  ChamberSign sign;
  sign.signs.resize(rs.num_positive_roots());
  for (int j = 0; j < rs.num_positive_roots(); ++j) {
    const double ip = rs.positive_roots.col(j).dot(point);
    if (std::abs(ip) < 1e-12 * scale)
      throw Error(ErrorCode::OnWall, "point lies on the wall of root " + std::to_string(j));
    sign.signs[j] = ip > 0 ? 1 : -1;
  }
  return sign;
}

std::vector<Chamber> enumerate_chambers(const RootSystem& rs) {
  const ReflectionGroup group = generate_group(rs);
  const Eigen::VectorXd seed = generic_direction(rs.dimension).normalized();
  std::vector<Chamber> chambers;
  for (const auto& g : group.elements) {
    Eigen::VectorXd rep = g * seed;
    ChamberSign sign = chamber_sign(rs, rep);
    bool known = false;
    for (const auto& c : chambers)
      if (c.sign == sign) known = true;
    if (!known) chambers.push_back({sign, rep});
  }
  std::sort(chambers.begin(), chambers.end(), [](const Chamber& a, const Chamber& b) {
    return vector_less(a.representative, b.representative);
  });
  return chambers;
}

double weight(const RootSystem& rs, const Eigen::VectorXd& point) {
  double w = 1.0;
  for (int j = 0; j < rs.num_positive_roots(); ++j) {
    const double k = rs.multiplicity[j];
    if (k == 0.0) continue;
    w *= std::pow(std::abs(rs.positive_roots.col(j).dot(point)), 2.0 * k);
  }
  return w;
}

namespace {

FamilyTag parse_family(const std::string& name) {
  if (name == "A1_PRODUCT" || name == "a1_product") return FamilyTag::A1Product;
  if (name == "A2" || name == "a2") return FamilyTag::A2;
  if (name == "B2" || name == "b2") return FamilyTag::B2;
  if (name == "DIHEDRAL_M" || name == "dihedral") return FamilyTag::Dihedral;
  if (name == "CUSTOM" || name == "custom") return FamilyTag::Custom;
  throw Error(ErrorCode::Validation, "unknown family tag '" + name + "'");
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) values.push_back(std::stod(item));
  }
  return values;
}

}  // namespace

RootSystem load_root_system_json(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Validation, std::string("bad root-system JSON: ") + e.what());
  }
  const FamilyTag family = parse_family(doc.value("family", std::string("CUSTOM")));
  const int dim = doc.value("dimension", 0);
  std::vector<double> mult;
  if (doc.contains("multiplicities")) {
    if (doc["multiplicities"].is_array()) {
      mult = doc["multiplicities"].get<std::vector<double>>();
    } else if (doc["multiplicities"].is_object()) {
      std::vector<std::pair<int, double>> entries;
      for (auto& [key, value] : doc["multiplicities"].items())
        entries.emplace_back(std::stoi(key), value.get<double>());
      std::sort(entries.begin(), entries.end());
      for (auto& [id, k] : entries) mult.push_back(k);
    }
  }
  if (mult.empty()) throw Error(ErrorCode::Validation, "multiplicities missing");
  if (family == FamilyTag::Custom) {
    if (!doc.contains("roots")) throw Error(ErrorCode::Validation, "CUSTOM requires roots");
    const auto rows = doc["roots"].get<std::vector<std::vector<double>>>();
    if (rows.empty()) throw Error(ErrorCode::Validation, "empty root list");
    const int n = static_cast<int>(rows[0].size());
    Eigen::MatrixXd roots(n, static_cast<Eigen::Index>(rows.size()));
    for (size_t j = 0; j < rows.size(); ++j) {
      if (static_cast<int>(rows[j].size()) != n)
        throw Error(ErrorCode::Validation, "ragged root list");
      for (int i = 0; i < n; ++i) roots(i, static_cast<Eigen::Index>(j)) = rows[j][static_cast<size_t>(i)];
    }
    return build_custom_root_system(roots, mult);
  }
  return build_root_system(family, dim, mult, doc.value("m", 0));
}

RootSystem load_root_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Validation, "cannot open root-system file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_root_system_json(buffer.str());
}

RootSystem parse_root_system_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  std::string tail = colon == std::string::npos ? "" : spec.substr(colon + 1);

  auto get_k = [&tail]() -> std::vector<double> {
    const auto pos = tail.find("k=");
    if (pos == std::string::npos) return {1.0};
    std::string rest = tail.substr(pos + 2);
    const auto stop = rest.find(';');
    if (stop != std::string::npos) rest = rest.substr(0, stop);
    return parse_number_list(rest);
  };

  if (head == "a1") return build_root_system(FamilyTag::A1Product, 1, get_k());
  if (head.rfind("a1x", 0) == 0) {
    const int n = std::stoi(head.substr(3));
    return build_root_system(FamilyTag::A1Product, n, get_k());
  }
  if (head == "a2") return build_root_system(FamilyTag::A2, 2, get_k());
  if (head == "b2") return build_root_system(FamilyTag::B2, 2, get_k());
  if (head == "i2m") {
    const auto mpos = tail.find("m=");
    if (mpos == std::string::npos) throw Error(ErrorCode::Validation, "i2m requires m=<order>");
    const int m = std::stoi(tail.substr(mpos + 2));
    return build_root_system(FamilyTag::Dihedral, 2, get_k(), m);
  }
  // Fall back to a JSON file path.
  return load_root_system_file(spec);
}

std::string root_system_to_json(const RootSystem& rs) {
  nlohmann::json doc;
  doc["family"] = family_name(rs.family);
  doc["dimension"] = rs.dimension;
  std::vector<std::vector<double>> roots;
  for (int j = 0; j < rs.num_positive_roots(); ++j) {
    std::vector<double> r(static_cast<size_t>(rs.dimension));
    for (int i = 0; i < rs.dimension; ++i) r[static_cast<size_t>(i)] = rs.positive_roots(i, j);
    roots.push_back(std::move(r));
  }
  doc["roots"] = roots;
  std::vector<double> per_orbit(static_cast<size_t>(rs.num_orbits()));
  for (int j = 0; j < rs.num_positive_roots(); ++j)
    per_orbit[static_cast<size_t>(rs.orbit[static_cast<size_t>(j)])] = rs.multiplicity[j];
  doc["multiplicities"] = per_orbit;
  doc["gamma"] = rs.gamma();
  doc["effective_dimension"] = rs.effective_dimension();
  if (rs.family == FamilyTag::Dihedral) doc["m"] = rs.dihedral_order;
  return doc.dump();
}

}  // namespace dunkl
