#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matfix/linalg.hpp"

namespace matfix {

/// sigma_0 = I_2, sigma_1 = X, sigma_2 = Y, sigma_3 = Z.
Matrix pauli(int j);

/// sigma_{j1} (x) sigma_{j2} (x) ... , left to right. Throws on an empty sequence.
Matrix pauli_string(std::span<const int> js);
Matrix pauli_string(std::initializer_list<int> js);

struct GateCatalogEntry {
  std::string name;
  Matrix matrix;
  bool involutory = false;
  int qubits = 0;
};

/// One of "H", "CNOT", "SWAP", "X", "Y", "Z", "I2". Throws CatalogError otherwise.
GateCatalogEntry gate(std::string_view name);
std::vector<std::string> gate_names();

/// Element of the n-qubit Pauli group held symbolically: i^phase times a
/// tensor product of letters 0..3 (I, X, Y, Z).
struct PauliElement {
  std::uint8_t phase = 0;  // power of i, 0..3
  std::vector<std::uint8_t> letters;

  friend auto operator<=>(const PauliElement&, const PauliElement&) = default;
};

/// Letter-wise product with the phase picked up from XY = iZ and cyclic shifts.
PauliElement multiply(const PauliElement& a, const PauliElement& b);
PauliElement inverse(const PauliElement& a);
Matrix realize(const PauliElement& p);
std::string to_string(const PauliElement& p);

inline constexpr std::size_t kMaxPauliQubits = 6;

/// The full n-qubit Pauli group, generated by closure from i*I, X_q and Z_q.
/// Sorted. Throws CatalogError for n = 0 or n > kMaxPauliQubits.
std::vector<PauliElement> pauli_group(std::size_t n);

/// True when the product and inverse of every element stay in the (sorted) set.
bool is_closed(const std::vector<PauliElement>& group);

/// Propagator exp(-i omega_t K) = cos(omega_t) I - i sin(omega_t) K for involutory K.
Matrix evolve(const Matrix& k, double omega_t);

struct GateIdentityReport {
  bool involutory = false;
  double residual_minus = 0.0;  // z = -i pi/2
  double residual_plus = 0.0;   // z = +i pi/2
  bool pass_minus = false;
  bool pass_plus = false;
  int family_k_minus = -1;  // z = (2k+1) i pi / 2
  int family_k_plus = 0;

  bool passed() const { return involutory && pass_minus && pass_plus; }
};

/// Checks G^2 = I and exp(z (G - I)) = G at z = -i pi/2 and z = i pi/2.
GateIdentityReport gate_identity_check(const Matrix& g, double tol = 1e-10);

}  // namespace matfix
