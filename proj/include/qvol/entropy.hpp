#pragma once

#include <string>

#include "qvol/state.hpp"
#include "qvol/types.hpp"

namespace qvol {

/// Width of the q -> 1 branch that switches to the von Neumann evaluation.
inline constexpr double kVonNeumannBranchWidth = 1e-6;

/// The entropic index q: a finite real > 0 or the q -> infinity limit.
class EntropyOrder {
 public:
  static EntropyOrder finite(double q) {
    if (!(q > 0.0)) {
      throw InvalidConfig("EntropyOrder: finite q must be > 0, got " + std::to_string(q));
    }
    return EntropyOrder(q, false);
  }
  static EntropyOrder infinity() { return EntropyOrder(0.0, true); }

  bool is_infinite() const { return infinite_; }
  double value() const { return q_; }  // meaningful only when finite

  friend bool operator==(const EntropyOrder& a, const EntropyOrder& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.q_ == b.q_);
  }

 private:
  EntropyOrder(double q, bool infinite) : q_(q), infinite_(infinite) {}
  double q_;
  bool infinite_;
};

enum class EntropyKind { Tsallis, Renyi, VonNeumann };

/// Entropic index plus family selector. VonNeumann is only valid at q = 1.
struct EntropyParams {
  EntropyOrder order;
  EntropyKind kind;

  EntropyParams(EntropyOrder order_, EntropyKind kind_) : order(order_), kind(kind_) {
    if (kind == EntropyKind::VonNeumann &&
        (order.is_infinite() || std::abs(order.value() - 1.0) > kVonNeumannBranchWidth)) {
      throw InvalidConfig("EntropyParams: VonNeumann kind requires q = 1");
    }
  }

  static EntropyParams tsallis(double q) {
    return {EntropyOrder::finite(q), EntropyKind::Tsallis};
  }
  static EntropyParams renyi(double q) { return {EntropyOrder::finite(q), EntropyKind::Renyi}; }
};

/// omega_q = sum_i p_i^q. Zero entries contribute nothing for q >= 1.
double omega_q(const Spectrum& s, double q);

/// ln(omega_q), evaluated in log space so large q never underflows.
double log_omega_q(const Spectrum& s, double q);

/// -sum p_i ln p_i with 0 ln 0 := 0.
double von_neumann_entropy(const Spectrum& s);

/// (1 - omega_q) / (q - 1); von Neumann value inside the q -> 1 branch;
/// the q -> infinity limit is 0.
double tsallis_entropy(const Spectrum& s, EntropyOrder q);

/// ln(omega_q) / (1 - q); von Neumann at q -> 1; -ln(lambda_max) at infinity.
double renyi_entropy(const Spectrum& s, EntropyOrder q);

/// Conditional q-entropy from the joint spectrum and the spectrum of the
/// reduced state of the conditioning subsystem.
///
/// Tsallis: (S_q(AB) - S_q(cond)) / omega_q(cond)   [the normalized form;
///          the normalizer equals 1 + (1-q) S_q(cond) and is always > 0]
/// Renyi:   S_q(AB) - S_q(cond)
/// q = infinity (either kind): ln(lambda_max(cond) / lambda_max(AB)).
double conditional_entropy(const Spectrum& joint, const Spectrum& conditioning,
                           const EntropyParams& params);

struct ConditionalEntropyValue {
  double value;
  Subsystem conditioned_on;
  EntropyOrder order;
  EntropyKind kind;
};

/// Conditional entropy of a bipartite state. `conditioning` names the
/// subsystem whose reduced state appears in the formula: conditioning on B
/// yields S_q(A|B).
ConditionalEntropyValue conditional_entropy(const DensityMatrix& rho, Subsystem conditioning,
                                            const EntropyParams& params);

}  // namespace qvol
