#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ppv/module.hpp"
#include "ppv/quiver.hpp"

namespace ppv {

/// Complete classification of nilpotent modules with dimension vector of
/// height at most the cutoff, for representation-finite graphs at desk scale.
///
/// Classes are labeled by their Krull-Schmidt decomposition into catalog
/// indecomposables. The fingerprint of a module is (dim vector, hom
/// dimensions from every catalog indecomposable); per-field fingerprint
/// tables are validated injective when the catalog is frozen, so fingerprint
/// lookup decides isomorphism for every supported coefficient field.
class Catalog {
  public:
    struct Indec {
        std::string name;  // s<i>, q<i>, or m<k>
        QModule rep;       // rational representative with entries in {0, 1, -1}
    };
    struct Class {
        DimVector beta;
        std::vector<int> parts;  // sorted indecomposable ids (a multiset)
        QModule rep;             // direct sum of part representatives
        std::string name;        // "q1+s1" style
    };

    const DoubleQuiver& quiver() const { return *dq_; }
    int cutoff() const { return cutoff_; }
    const std::vector<Indec>& indecomposables() const { return indecs_; }
    const std::vector<Class>& classes() const { return classes_; }
    const std::vector<int>& classes_of(const DimVector& beta) const;
    bool covers(const DimVector& beta) const;

    /// Class id of x by fingerprint lookup (field tag 0 = rationals).
    /// Throws CatalogMissing when dim(x) is outside the catalog and
    /// DecompositionFailed when no class matches.
    int classify(const QModule& x) const;
    int classify(const PModule& x) const;

    /// Krull-Schmidt decomposition as sorted indecomposable ids.
    const std::vector<int>& decompose(const QModule& x) const { return classes_[classify(x)].parts; }
    const std::vector<int>& decompose(const PModule& x) const { return classes_[classify(x)].parts; }

    bool iso_test(const QModule& x, const QModule& y) const;
    bool iso_test(const PModule& x, const PModule& y) const;

    /// Class id for a multiset of indecomposable ids.
    int class_of_parts(std::vector<int> parts) const;
    /// Class id of (class x) ⊕ s_i.
    int class_add_simple(int class_id, int i) const;

    /// Indecomposable representative reduced to F_p (cached per prime).
    const PModule& indec_mod_p(int id, std::uint32_t p) const;

    friend Catalog build_catalog(const DoubleQuiver& dq, int height_cutoff,
                                 const std::vector<std::uint32_t>& fingerprint_primes,
                                 bool crosscheck_f3);

  private:
    const DoubleQuiver* dq_ = nullptr;
    int cutoff_ = 0;
    std::vector<Indec> indecs_;
    std::vector<Class> classes_;
    std::map<DimVector, std::vector<int>> by_beta_;
    std::map<std::vector<int>, int> parts_index_;  // sorted parts -> class id
    // field tag (0 = Q, else prime) -> fingerprint -> class id; fingerprint
    // is beta followed by hom_dim(indec_k, x) for every k. Tables are built
    // lazily per field once the class list is frozen, each validated
    // injective on first use.
    mutable std::map<std::uint32_t, std::map<std::vector<int>, int>> tables_;
    mutable std::map<std::uint32_t, std::vector<PModule>> indec_cache_;
    bool frozen_ = false;

    void ensure_table(std::uint32_t tag) const;

    template <class F>
    std::vector<int> fingerprint_of(const LambdaModule<F>& x) const;
    template <class F>
    int classify_impl(const LambdaModule<F>& x, std::uint32_t tag) const;
};

/// Enumerate, classify, lift, and freeze. Enumeration runs over F_2 with one
/// arrow matrix held in rank normal form; indecomposability is decided by
/// matching against direct sums of smaller indecomposables; representatives
/// are lifted to sign vectors over the rationals; class counts are
/// re-derived over F_3 as an independent check (LiftMismatch on disagreement).
Catalog build_catalog(const DoubleQuiver& dq, int height_cutoff,
                      const std::vector<std::uint32_t>& fingerprint_primes =
                          {2, 3, 5, 7, 11, 13, 17},
                      bool crosscheck_f3 = true);

/// All iso-classes of nilpotent modules with dimension vector beta over F_p,
/// by exhaustive enumeration (exposed for tests and the F_3 crosscheck).
std::vector<PModule> enumerate_classes_mod_p(const DoubleQuiver& dq, const DimVector& beta,
                                             std::uint32_t p);

}  // namespace ppv
