#pragma once

#include <cstddef>
#include <vector>

#include "dmod/options.hpp"
#include "dmod/polynomial.hpp"
#include "dmod/univariate.hpp"
#include "dmod/weyl.hpp"

namespace dmod {

enum class BMethod { InitialIdeal, Annihilator };

/// Minimal monic b with b(sigma)*g in the left ideal generated by `gens`.
/// `g` and `sigma` live in the ring of the generators; sigma is usually the
/// element -sum dt_i t_i or a central variable s. Normal forms of sigma^i g
/// are computed incrementally against one Gröbner basis and the first linear
/// dependency gives b. Throws IterationCapExceeded past options.iterationCap.
BPoly linearAlgebraTrick(const Polynomial& g, const std::vector<Polynomial>& gens, const Polynomial& sigma,
                         const Options& options = {});

/// Same, with the Gröbner basis already computed (in the ring order of its elements).
BPoly linearAlgebraTrickWithBasis(const Polynomial& g, const std::vector<Polynomial>& basis, const Polynomial& sigma,
                                  const Options& options = {});

/// Ann_{D[s]} f^s in D_X[s] = K<x, dx>[s].
struct Annihilator {
  RingPtr ring;         // variables x..., dx..., s
  std::size_t s = 0;    // index of s
  std::vector<Polynomial> generators;
};

Annihilator annFs(const Polynomial& f, const Options& options = {});

/// Global Bernstein–Sato polynomial of f.
BPoly globalBFunction(const Polynomial& f, BMethod method = BMethod::InitialIdeal, const Options& options = {});

}  // namespace dmod
