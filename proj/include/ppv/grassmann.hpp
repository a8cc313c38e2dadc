#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ppv/catalog.hpp"
#include "ppv/embed.hpp"

namespace ppv {

/// Euler characteristic of one iso-class stratum of a submodule variety.
struct Stratum {
    int class_id;
    long chi;
};

/// A variety stratified by the iso-class of the witness module, with the
/// exact Euler characteristic of each stratum. Sorted by class id; classes
/// are kept even at chi = 0 when their point counts were not identically 0.
using StratifiedSum = std::vector<Stratum>;

/// Interpolate the counting polynomial through all but the last (prime,
/// count) pair, validate it on the held-out last pair, and return its value
/// at 1 (the Euler characteristic of a polynomial-count variety).
/// Requires counts.size() >= degree_bound + 2; throws ConfigError otherwise
/// and NonPolynomialCount when validation or integrality fails.
long chi_from_counts(const std::vector<std::pair<std::uint32_t, long>>& counts,
                     int degree_bound);

/// Cached evaluator for the two submodule varieties. All arithmetic is exact;
/// chi values come from point counts over the catalog's fingerprint primes
/// excluding 2 and 3 (small fields distort class fingerprints least there).
class GrassEngine {
  public:
    explicit GrassEngine(const Catalog& cat,
                         std::vector<std::uint32_t> primes = {5, 7, 11, 13, 17});

    const Catalog& catalog() const { return *cat_; }
    const std::vector<std::uint32_t>& primes() const { return primes_; }

    /// Strata of the variety of submodules y of x with x/y isomorphic to
    /// s_i: hyperplanes in V_i containing every incoming arrow image.
    const StratifiedSum& down(int class_id, int i);

    /// Strata of the variety of submodules y of q_nu with x <= y and y/x
    /// isomorphic to s_i: lines in the s_i-socle of q_nu / x.
    const StratifiedSum& up(int class_id, const Weight& nu, int i);

    /// The rational injectives (by vertex) used for all embeddings.
    const std::vector<QModule>& injectives() const { return inj_q_; }
    const std::vector<PModule>& injectives_mod_p(std::uint32_t p);

  private:
    /// run-length encoding of a class's summand list: (indec id, multiplicity)
    using Groups = std::vector<std::pair<int, int>>;

    const Catalog* cat_;
    std::vector<std::uint32_t> primes_;
    std::vector<QModule> inj_q_;
    std::map<std::uint32_t, std::vector<PModule>> inj_p_;
    std::map<std::pair<int, std::uint32_t>, PModule> rep_p_;
    std::map<std::pair<int, int>, StratifiedSum> down_cache_;
    std::map<std::tuple<int, Weight, int>, StratifiedSum> up_cache_;

    const PModule& rep_mod_p(int class_id, std::uint32_t p);
    /// configured primes, extended from a fixed pool until the interpolation
    /// has degree_bound + 2 sample points
    std::vector<std::uint32_t> primes_for(int degree_bound) const;
    Groups groups_of(int class_id) const;
};

}  // namespace ppv
