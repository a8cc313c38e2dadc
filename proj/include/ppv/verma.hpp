#pragma once

#include <optional>
#include <string>

#include "ppv/hall.hpp"

namespace ppv {

/// A formal rational combination of delta functionals of iso-classes, all of
/// one dimension vector. Terms are sorted by class id; zero coefficients are
/// dropped. The slice may have negative entries only when the sum is empty.
struct DeltaSum {
    DimVector beta;
    std::vector<std::pair<int, mpq_class>> terms;

    bool operator==(const DeltaSum&) const = default;
};

/// Outcome of one relation family on one weight slice. Defects are exact
/// rationals; a slice passes exactly when its worst defect is zero.
struct OperatorReport {
    std::string relation;
    DimVector slice;
    mpq_class defect;                     // max |defect| over the slice
    std::vector<std::string> witnesses;   // first few failing instances
    bool pass() const { return defect == 0; }
};

/// One row of a graded character table.
struct CharacterRow {
    DimVector beta;
    long verma_dim;    // Kostant count
    long l_dim;        // irreducible multiplicity (-1 when lambda not dominant)
    long freudenthal;  // independent crosscheck (-1 when not dominant)
};

/// The highest-weight representation machinery for one weight lambda:
/// dual operators on delta sums, primal operators on word-basis elements,
/// the irreducible sub/quotient, and the relation verification harness.
class VermaEngine {
  public:
    VermaEngine(HallEngine& hall, Weight lambda);

    const Weight& lambda() const { return lambda_; }
    const Catalog& catalog() const { return hall_->catalog(); }

    DeltaSum delta(int class_id) const;
    DeltaSum delta_zero() const;  // the functional of the zero module

    /// Linear extension of delta_x -> sum of chi * delta_y over the
    /// quotient-by-s_i strata of x; lands on beta - alpha_i.
    DeltaSum e_star(int i, const DeltaSum& d);
    /// Per term: strata of one-step extensions inside q_nu with
    /// nu = choose_nu(x, lambda) + nu_extra, minus ((nu - lambda); alpha_i)
    /// times delta_{x + s_i}; lands on beta + alpha_i.
    DeltaSum f_star(int i, const DeltaSum& d, const Weight& nu_extra = {});
    /// Scalar multiplication by (lambda - beta; alpha_i).
    DeltaSum h_star(int i, const DeltaSum& d) const;

    /// Coordinates of a delta sum as a functional: values on every word of
    /// its slice, in lexicographic word order.
    std::vector<mpq_class> eval_vector(const DeltaSum& d);
    /// Pairing of a delta sum with an element of the same slice.
    mpq_class pair(const DeltaSum& d, const MElem& f);

    /// Lowering operator: left concatenation with the one-letter word.
    MElem primal_F(int i, const MElem& f);
    /// Raising operator via pointwise one-step extension counts with
    /// nu = choose_nu(x, lambda) + nu_extra per class, solved back into the
    /// word basis below. Throws DimMismatch when the slice has no letter i.
    MElem primal_E(int i, const MElem& f, const Weight& nu_extra = {});
    /// Scalar multiplication by (lambda - beta; alpha_i).
    MElem primal_H(int i, const MElem& f) const;

    /// Classes whose socle fits under lambda (the submodules of q_lambda).
    std::vector<int> embeddable_classes(const DimVector& beta) const;
    /// Values of f on exactly the embeddable classes of its slice, in
    /// catalog order: the restriction map onto the irreducible quotient.
    std::vector<mpq_class> restrict_r_lambda(const MElem& f);
    /// Graded dimension of the irreducible: rank of the delta functionals of
    /// the embeddable classes. Requires dominant lambda.
    long l_lambda_dim(const DimVector& beta);

    /// All relation families on every admissible slice up to the cutoff.
    std::vector<OperatorReport> verify_relations(int cutoff);

    /// Graded dimensions of M(lambda) and (for dominant lambda) L(lambda).
    std::vector<CharacterRow> character(int cutoff);

    /// (F*_i)^{(lambda; alpha_i)+1} delta_0 must vanish as a functional for
    /// dominant lambda, along with the highest-weight laws on delta_0.
    OperatorReport integrability_check();

  private:
    HallEngine* hall_;
    Weight lambda_;
    CartanMatrix cartan_;

    DeltaSum normalized(DimVector beta, std::map<int, mpq_class> acc) const;
    bool is_embeddable(int class_id) const;
};

}  // namespace ppv
