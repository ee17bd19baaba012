#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "specpick/blaschke.hpp"

namespace specpick {

/// Interpolation datum (zeta, W): a node in the disc and a target in the spectral unit ball.
struct DataPoint {
  Cplx node;
  std::variant<Matrix, JordanSpec> target;

  int dimension() const;
  /// Minimal-polynomial data of the target; exact for a JordanSpec.
  SpectralData spectral_data(const Tolerances& tol = {}) const;
  /// Throws DomainError when the node or a target eigenvalue leaves the open disc.
  void validate(const Tolerances& tol = {}) const;
};

/// Three data points with distinct nodes and a shared dimension n >= 2.
struct ThreePointData {
  std::array<DataPoint, 3> points;

  int dimension() const { return points[0].dimension(); }
  /// Throws InvalidArgument on repeated nodes or mixed sizes.
  void validate(const Tolerances& tol = {}) const;
};

enum class Status { Infeasible, Inconclusive };

/// Outcome of one side condition. Borderline means the decision sits within
/// report_tol (or the matching tolerance) of its threshold.
enum class Branch { Holds, Fails, Borderline };

const char* to_string(Status s);
const char* to_string(Branch b);

/// Common verdict envelope; `report` carries the checker's intermediates.
template <typename Report>
struct Verdict {
  Status status = Status::Inconclusive;
  bool borderline = false;
  Report report;
  std::vector<std::string> notes;

  bool infeasible() const { return status == Status::Infeasible; }
};

struct TwoPointReport {
  SpectralData spectrum1, spectrum2;
  double term12 = 0.0;  // max over sigma(W2) of the product over sigma(W1)
  double term21 = 0.0;
  double lhs = 0.0, rhs = 0.0, margin = 0.0;  // margin = lhs - rhs
};
using TwoPointVerdict = Verdict<TwoPointReport>;

/// Product of Mobius distances to the spectrum of W1 raised to m(lambda),
/// maximised over sigma(W2), in both directions, against M(zeta1, zeta2).
TwoPointVerdict check_two_point(const DataPoint& p1, const DataPoint& p2, const Tolerances& tol = {});

/// Point of sigma(B_k(W_j)) = B_k(sigma(W_j)) with its exponent q(nu, j, k).
struct ImagePoint {
  Cplx value;
  int q = 1;
};

struct ThetaCandidate {
  double theta = 0.0;
  Cplx source;        // the eigenvalue of W_G that produced it
  Branch containment = Branch::Fails;
  double worst_match = 0.0;  // largest distance from a preimage point to the spectrum
};

struct KBranchReport {
  int k = 0, g = 0, l = 0;  // 1-based
  BlaschkeProduct blaschke;
  Cplx psi_g, psi_l;
  double rhs = 0.0;  // M(zeta_L, zeta_G)
  std::vector<ImagePoint> image_g, image_l;
  double radius_excess = 0.0;  // max |nu| - |psi_k(zeta_j)| over both images
  std::optional<double> product_lg, product_gl, lhs, margin;
  Branch branch1 = Branch::Holds;
  std::vector<ThetaCandidate> candidates;
  std::optional<double> theta0;
  Branch branch2 = Branch::Fails;
};

struct ThreePointWitness {
  int k = 0;
  double margin = 0.0;
  std::vector<ThetaCandidate> candidates;
};

struct ThreePointReport {
  std::array<SpectralData, 3> spectra;
  std::array<KBranchReport, 3> branches;
  std::optional<ThreePointWitness> witness;
};
using ThreePointVerdict = Verdict<ThreePointReport>;

/// max floor((m(j, lambda) - 1) / (ord_lambda B_k' + 1)) + 1 over lambda in
/// sigma(W_j) with |B_k(lambda) - nu| <= cluster_tol. Indices are 1-based.
/// Throws InvalidArgument when no eigenvalue lies on the fibre.
int q_exponent(Cplx nu, int j, int k, const ThreePointData& data, const Tolerances& tol = {});

/// Three-point necessary condition. For each k either the disc containments
/// and the max-product inequality hold, or some theta0 makes both preimages
/// B_k^{-1}{e^{i theta0} psi_k(zeta)} land in the spectra. Infeasible only
/// when both alternatives fail decisively for some k.
ThreePointVerdict check_three_point(const ThreePointData& data, const Tolerances& tol = {});

struct BaribeauKamaraReport {
  int base = 1, j1 = 2, j2 = 3, nu = 0;
  BlaschkeProduct blaschke;
  std::vector<Cplx> set1, set2;        // scaled spectra inside the disc
  std::vector<Cplx> excluded;          // within report_tol of the circle or outside
  std::optional<double> lhs, margin;
  double rhs = 0.0;  // M(zeta_j1, zeta_j2)^(1/nu)
};
using BaribeauKamaraVerdict = Verdict<BaribeauKamaraReport>;

/// Hausdorff-Mobius distance between sigma(B_k(W_j)) / psi_k(zeta_j), cut to
/// the disc, for the two j != base, against M^(1/nu). nu defaults to n.
BaribeauKamaraVerdict check_baribeau_kamara(const ThreePointData& data, int base = 1,
                                            std::optional<int> nu_override = std::nullopt,
                                            const Tolerances& tol = {});

struct ConstraintCheck {
  std::string name;
  bool passed = false;
};

struct ExampleData {
  ThreePointData data;
  std::vector<Cplx> alpha, beta;
  double lower = 0.0, upper = 0.0;  // |b| M^(1/2) and the bound on |beta_i|, i >= 2
  std::vector<ConstraintCheck> constraints;
};

/// {(0, 0), (a, sum alpha_j N^j), (b, diag beta)} with alpha_j = 0 for
/// j <= n - 3 and alpha_{n-2} != 0. Omitted betas are picked with moduli
/// spread inside (|b| M(a,b)^(1/2), min{|b| M^(1/n), |b|^(1/2n) M^(1/2)}).
/// Throws ConstraintError listing every failed constraint.
ExampleData generate_example(int n, Cplx a, Cplx b, std::optional<std::vector<Cplx>> beta = std::nullopt,
                             std::optional<std::vector<Cplx>> alpha = std::nullopt, const Tolerances& tol = {});

/// The beta constraints, each evaluated; squares count as distinct when more
/// than cluster_tol apart.
std::vector<ConstraintCheck> example_constraints(int n, Cplx a, Cplx b, const std::vector<Cplx>& beta,
                                                 const Tolerances& tol = {});

}  // namespace specpick
