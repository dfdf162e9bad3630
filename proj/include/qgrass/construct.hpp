#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qgrass/grassmann.hpp"
#include "qgrass/homext.hpp"
#include "qgrass/isomorphism.hpp"

namespace qgrass {

// Kronecker families on K(3) (arrows a1, a2, a3 from "1" to "2").

// dims (n,n); a1 = I, a2 = diag(lambda), a3 the cyclic shift e_i -> e_{i+1}.
// Throws InvalidArgument for n < 2 and DistinctnessViolated unless the
// lambdas are nonzero and pairwise distinct.
Representation case2_X(const std::vector<Scalar>& lambdas, const Field& field);
// lambda_i = i for i = 1..n; needs p > n over F_p.
std::vector<Scalar> default_lambdas(std::size_t n, const Field& field);
// dims (1,1); a1 = 1, a2 = a3 = 0.
Representation case2_Y(const Field& field);
// dims (2,2); a1 = I, a2 = diag(l1,l2), a3 sends e_1 to e_2 and kills e_2.
Representation remark_Xprime(const Scalar& l1, const Scalar& l2, const Field& field);

// Exceptional K(2) module of dims (m, m+1) with arrows [I;0] and [0;I].
Representation kronecker_preprojective(std::size_t m, const Field& field);

struct Case1Pair {
  Representation x;
  Representation y;
  std::size_t n = 0;
  // False when the supplied module is a brick with self-extensions.
  bool exceptional = true;
};

// For a source omega: x is x_on_rest extended by zero, y = S(omega), and n is
// the sum of dim x at the heads of the arrows leaving omega. For a sink the
// pair is built on the opposite quiver and dualized back, which swaps roles:
// x = S(omega) and y is the extension by zero. Throws InvalidArgument when
// omega is neither, when x_on_rest does not live on q minus omega, or when
// it is not a brick; NotOrthogonalBricks if the pair fails orthogonality.
Case1Pair case1_pair(QuiverPtr q, const std::string& omega, const Representation& x_on_rest);

// Orthogonal bricks x, y with a fixed basis of Ext^1(y, x).
struct EtaContext {
  std::shared_ptr<const Representation> x;
  std::shared_ptr<const Representation> y;
  std::size_t n = 0;
  std::vector<ExtCocycle> cocycles;
  DimVector xdim;
  DimVector ydim;
  QuiverPtr kronecker;  // K(n)
};

// Throws NotOrthogonalBricks or ZeroExt.
EtaContext make_eta_context(const Representation& x, const Representation& y);

// 0 -> X^a --mu--> M --pi--> Y^b -> 0.
struct EtaWitness {
  std::shared_ptr<const Representation> m;
  std::size_t a = 0;
  std::size_t b = 0;
  Morphism mu;
  Morphism pi;
};

// N lives on K(n): the source space V1 has dim b (Y side), the sink space V2
// has dim a (X side) and gamma_i: V1 -> V2 is the i-th arrow. At each vertex
//   M_v = (V2 (x) X_v) + (V1 (x) Y_v),
// both blocks copy-major, and for an arrow alpha
//   M_alpha = [[I_a (x) X_alpha, sum_i gamma_i (x) eps_i,alpha], [0, I_b (x) Y_alpha]].
// Throws DimensionMismatch when N is not on K(n) over the context field.
EtaWitness build_eta(const EtaContext& ctx, const Representation& n_rep);

// pi mu = 0 and rank mu + rank pi = dim M at every vertex.
bool witness_is_exact(const EtaWitness& w);

// u has dims x + y, is indecomposable, and contains a copy of X with
// quotient isomorphic to Y.
bool is_E_bristle(const EtaContext& ctx, const Representation& u, const SearchOptions& opts = {});

struct CheckOptions {
  EnumerationOptions enumeration;
  SearchOptions search;
};

struct ConditionCReport {
  DimVector dimvec;
  std::uint64_t checked = 0;
  std::vector<SubmodulePoint> violations;
  bool holds() const { return violations.empty(); }
};

// Every submodule of M with dims x + y must be an E-bristle. Throws
// NotReduced if Y is a summand of M, InvalidArgument over Q.
ConditionCReport check_condition_C(const EtaContext& ctx, const EtaWitness& witness,
                                   const CheckOptions& opts = {});

struct Lemma1Report {
  std::size_t a = 0;
  DimVector dimvec;
  std::uint64_t count = 0;
  std::vector<SubmodulePoint> failures;
  bool holds() const { return failures.empty(); }
};

// Every submodule of X^a with dims x is isomorphic to X.
Lemma1Report check_lemma1(const Representation& x, std::size_t a, const CheckOptions& opts = {});

struct Lemma2Row {
  std::size_t w = 0;
  std::uint64_t count = 0;
  std::optional<std::size_t> s;  // w / n when n divides w
  std::vector<SubmodulePoint> failures;
};

struct Lemma2Report {
  std::size_t n = 0;
  std::size_t a = 0;
  std::vector<Lemma2Row> rows;
  bool holds() const;
};

// For w = 0..a n, each (w,w) submodule of X^a is isomorphic to X^(w/n), and
// there are none unless n divides w. x must have dims (n,n).
Lemma2Report check_lemma2(const Representation& x, std::size_t a, const CheckOptions& opts = {});

struct FullnessReport {
  std::size_t hom_eta = 0;
  std::size_t hom_kronecker = 0;
  bool equal() const { return hom_eta == hom_kronecker; }
};

FullnessReport check_eta_fullness(const EtaContext& ctx, const Representation& n1,
                                  const Representation& n2);

struct BijectionReport {
  std::uint64_t lhs = 0;  // |G_(1,1)(N)|
  std::uint64_t rhs = 0;  // |G_(x+y)(eta N)|
  bool equal() const { return lhs == rhs; }
};

// Throws NotReduced unless N is reduced.
BijectionReport check_bijection(const EtaContext& ctx, const Representation& n_rep,
                                const CheckOptions& opts = {});

// The Remark instance: X' = remark_Xprime(1,2), Y = case2_Y and N the
// indecomposable reduced K(2) module with sink dimension 2 and source
// dimension b in {1,2,3}.
Representation remark_kronecker_module(std::size_t b, const Field& field);

struct RemarkReport {
  std::size_t b = 0;
  EtaWitness witness;
  SubmodulePoint x_plus_v;  // X (+) V inside mu(X^2)
  bool x_plus_v_is_bristle = true;
  ConditionCReport condition;
  bool x_plus_v_among_violations = false;
  BijectionReport counts;
};

// Throws InvalidArgument unless p >= 3 and b is 1, 2 or 3.
RemarkReport remark_counterexample_demo(const Field& field, std::size_t b = 2,
                                        const CheckOptions& opts = {});

// Case 1 on K(2) plus a source w with one arrow c: w -> 2, X the extension by
// zero of kronecker_preprojective(1).
QuiverPtr case1_quiver();
Case1Pair case1_default_pair(const Field& field);

}  // namespace qgrass
