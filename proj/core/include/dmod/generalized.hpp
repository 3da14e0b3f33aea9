#pragma once

#include <optional>
#include <vector>

#include "dmod/options.hpp"
#include "dmod/polynomial.hpp"
#include "dmod/rational.hpp"
#include "dmod/univariate.hpp"
#include "dmod/weyl.hpp"

namespace dmod {

enum class GeneralBMethod { StarIdeal, InitialIdeal };

/// The input list f with zero entries dropped; all entries share one commutative ring.
/// Throws PreconditionError when nothing nonzero is left.
std::vector<Polynomial> normalizedGenerators(const std::vector<Polynomial>& f, const char* what);

/// I_f* for f = (f_1..f_r) in D_Y with r = f.size() t-variables.
std::vector<Polynomial> starOfIf(const WeylAlgebra& D, const std::vector<Polynomial>& f, const Options& options = {});

/// {f^alpha : |alpha| = m}, alpha in graded lex order.
std::vector<Polynomial> powersOfDegree(const std::vector<Polynomial>& f, unsigned m);

/// Generalized Bernstein–Sato polynomial b_{f,g}.
BPoly generalB(const std::vector<Polynomial>& f, const Polynomial& g,
               GeneralBMethod method = GeneralBMethod::StarIdeal, const Options& options = {});

/// m-generalized Bernstein–Sato polynomial b^(m)_{f,g}.
BPoly generalBm(const std::vector<Polynomial>& f, const Polynomial& g, unsigned m, const Options& options = {});

/// Smallest root of b(-s), or nullopt when b = 1.
std::optional<Rational> minimalNegatedRoot(const BPoly& b);

/// g in J(f^c), decided by comparing c with the roots of b_{f,g}(-s), or of
/// b^(m)_{f,g}(-s) when m is given (then c < m + lct(f) is required).
bool inMultiplierIdealViaBS(const std::vector<Polynomial>& f, const Polynomial& g, const Rational& c,
                            std::optional<unsigned> m = std::nullopt, const Options& options = {});

/// For a complete intersection of codimension r = f.size(): rational
/// singularities iff lct = r and r is a simple root of b_f(-s).
/// The codimension is checked; the complete-intersection property is assumed.
bool hasRationalSingularities(const std::vector<Polynomial>& f, const Options& options = {});

}  // namespace dmod
