#include "phaseless/oracle.hpp"

#include "phaseless/error.hpp"
#include "phaseless/interpolation.hpp"

namespace phaseless {

SolutionSet oracle_enumerate(const Instance& instance,
                             const OracleOptions& options) {
  validate(instance, /*require_solver_range=*/false);
  const auto support = static_cast<std::size_t>(instance.n) + 1;
  if (instance.points.size() < support) {
    throw Error(ErrorCode::InvalidInstance,
                "the oracle needs at least n + 1 points");
  }
  if (instance.n > options.max_degree) {
    throw Error(ErrorCode::TooLarge,
                "degree bound " + std::to_string(instance.n) +
                    " exceeds the oracle guard " +
                    std::to_string(options.max_degree));
  }

  std::vector<Rat> xs;
  for (std::size_t i = 0; i < support; ++i) xs.push_back(instance.points[i].x);
  const std::vector<UPoly> basis = lagrange_basis(xs);
  std::vector<UPoly> scaled;  // y_j l_j
  for (std::size_t j = 0; j < support; ++j) {
    scaled.push_back(basis[j] * instance.points[j].y);
  }

  // Only coordinates with y != 0 carry a sign choice.
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < support; ++j) {
    if (!instance.points[j].y.is_zero()) free.push_back(j);
  }
  std::size_t first_free = 0;
  if (options.fix_first_sign && !free.empty() && free.front() == 0) {
    first_free = 1;
  }

  std::vector<UPoly> found;
  const std::size_t varying = free.size() - first_free;
  for (unsigned long mask = 0; mask < (1UL << varying); ++mask) {
    UPoly q;
    std::size_t bit = 0;
    for (std::size_t f = 0; f < free.size(); ++f) {
      const std::size_t j = free[f];
      bool negative = false;
      if (f >= first_free) negative = ((mask >> bit++) & 1UL) != 0;
      if (negative) {
        q -= scaled[j];
      } else {
        q += scaled[j];
      }
    }
    if (verify(q, instance)) found.push_back(q);
  }
  return make_solution_set(std::move(found));
}

bool is_ambiguous(const Instance& instance, const OracleOptions& options) {
  return oracle_enumerate(instance, options).size() >= 2;
}

}  // namespace phaseless
