#pragma once

#include <cstdint>
#include <vector>

#include "dunkl/fields.hpp"

namespace dunkl {

ScalarField make_gaussian(int dim);
/// x_1 * gaussian; odd under the first reflection of every product system.
ScalarField make_odd_gaussian(int dim);
/// Radial (a + b r^{p'})^{1 - d/p}; the extremal profile viewed as a field.
ScalarField make_talenti_field(int dim, double a, double b, double p, double d);
ScalarField make_bump(const Eigen::VectorXd& center, double radius);
/// Sum of `count` seeded anisotropic-free Gaussian lumps; analytic derivatives.
ScalarField make_gaussian_mixture(int dim, std::uint64_t seed, int count);
/// Smoothed indicator of the interval (a,b), transition width eta centred on
/// the endpoints; dimension 1.
ScalarField make_smoothed_indicator(double a, double b, double eta);

/// CLI field names: gaussian, odd-gaussian, talenti:a,b,p (d from rs),
/// bump:c1,...,cN,radius, random-mixture:seed,count, indicator:a,b,eta.
ScalarField parse_field_spec(const std::string& spec, const RootSystem& rs);

/// The 8-field analytic family used by the verification suite: gaussian,
/// odd-gaussian, talenti extremal, two bumps, three seeded mixtures.
std::vector<ScalarField> default_test_family(const RootSystem& rs, std::uint64_t seed,
                                             int mixture_count = 3);

/// Smooth fields compactly supported inside the given Weyl chamber.
std::vector<ScalarField> chamber_test_family(const RootSystem& rs, const Chamber& chamber,
                                             std::uint64_t seed, int count);

/// True when |f|^p is mu_k-integrable on the full space judging by the decay
/// declaration (effective dimension d).
bool lp_integrable(const ScalarField& field, double p, double effective_dim);

}  // namespace dunkl
