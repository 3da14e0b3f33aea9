#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dmod/generalized.hpp"
#include "dmod/options.hpp"
#include "dmod/polynomial.hpp"
#include "dmod/rational.hpp"
#include "dmod/univariate.hpp"
#include "dmod/weyl.hpp"

namespace dmod {

/// A log-canonical threshold; std::nullopt encodes +infinity (the unit ideal).
using Threshold = std::optional<Rational>;

/// lct of <f>: the minimal root of b^(1)_{f,1}(-s).
Threshold lct(const std::vector<Polynomial>& f, const Options& options = {});

enum class MultiplierMethod { Syzygy, LinearAlgebra };

struct MultiplierIdealResult {
  std::vector<Polynomial> generators;  // reduced Gröbner basis in the ring of f
  bool partial = false;                // linear-algebra route stopped at dmax before closing up
  unsigned m = 0;                      // the m of the m-generalized b-function used
};

/// Jumping coefficient xi and J(f^xi), constant on [xi, next).
struct JumpPiece {
  Rational from;
  std::optional<Rational> to;
  std::vector<Polynomial> generators;
};

struct JumpingData {
  Threshold lct;
  std::vector<Rational> jumps;
  std::vector<Rational> rejected;  // roots of b^(m)(-s) in range that are not jumps
  std::vector<JumpPiece> ideals;
};

/// Everything here depends only on the ideal <f>, so the session works with
/// minimalGenerators(f): each generator costs a pair of Weyl variables.
/// Caches the expensive intermediate objects for one ideal <f>: I_f*, the
/// m-generalized b-functions, the ideals J_f(m) in K[x,s] and the Gröbner
/// bases used by the linear-algebra route.
class MultiplierSession {
 public:
  explicit MultiplierSession(std::vector<Polynomial> f, Options options = {});

  const std::vector<Polynomial>& f() const { return f_; }
  const WeylAlgebra& algebra() const { return D_; }
  Threshold lct();
  /// m with c < lct + m, following the multiplier-ideal algorithm's rule.
  unsigned mFor(const Rational& c);
  const BPoly& bm(unsigned m);
  /// Generators of J_f(m) ⊂ K[x,s] (ring xsRing()).
  const std::vector<Polynomial>& jIdeal(unsigned m);
  const RingPtr& xsRing() const { return xs_; }
  /// Factors of b^(m) whose roots r satisfy -r > c.
  BPoly bPrime(unsigned m, const Rational& c);

  MultiplierIdealResult ideal(const Rational& c);
  /// dmax = nullopt: default 2 * max degree of f; dmax = kUnbounded: no limit.
  MultiplierIdealResult idealLA(const Rational& c, std::optional<unsigned> dmax = std::nullopt);
  JumpingData jumping(const Rational& lo, const Rational& hi);

  static constexpr unsigned kUnbounded = ~0u;

  /// Route for J_f(m). Annihilator (one generator only): eliminate dx from
  /// Ann f^s + D_X[s] f^m. Psi (one generator only): eliminate dx from
  /// I_f* + <f>^m and apply psi. Elimination: adjoin s - sigma to I_f* + <f>^m
  /// and eliminate dx, t, dt. Automatic picks Annihilator for one generator.
  enum class JRoute { Automatic, Annihilator, Psi, Elimination };
  void setJRoute(JRoute r) { route_ = r; }

 private:
  /// Where I_f* + <f>^m is represented: the weight-zero part D_X[s] with
  /// Ann f^s for one generator, D_Y with I_f* otherwise. x_i has index i in both.
  struct Model {
    RingPtr ring;
    std::vector<Polynomial> base;
    Polynomial sigma;
    std::size_t sIndex = 0;  // variable index of sigma, when it is a variable
    std::vector<std::size_t> dx;
  };
  const Model& model();
  const std::vector<Polynomial>& star();
  const std::vector<Polynomial>& laBasis(unsigned m);
  std::vector<Polynomial> withPowers(const std::vector<Polynomial>& base, unsigned m);

  std::vector<Polynomial> f_;
  Options options_;
  WeylAlgebra D_;
  RingPtr xs_;
  JRoute route_ = JRoute::Automatic;
  std::optional<Model> model_;
  std::optional<std::vector<Polynomial>> star_;
  std::optional<Threshold> lct_;
  std::map<unsigned, BPoly> bm_;
  std::map<unsigned, std::vector<Polynomial>> j_;
  std::map<unsigned, std::vector<Polynomial>> la_;
  std::map<std::string, std::vector<Polynomial>> ideals_;  // keyed by m and b'
};

std::vector<Polynomial> multiplierIdeal(const std::vector<Polynomial>& f, const Rational& c,
                                        const Options& options = {});

MultiplierIdealResult multiplierIdealLA(const std::vector<Polynomial>& f, const Rational& c,
                                        std::optional<unsigned> dmax = std::nullopt, const Options& options = {});

/// Jumping coefficients in (lo, hi] with the ideals between them.
JumpingData jumpingCoefficients(const std::vector<Polynomial>& f, const Rational& lo, const Rational& hi,
                                const Options& options = {});

}  // namespace dmod
