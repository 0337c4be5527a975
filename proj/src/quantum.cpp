#include "matfix/quantum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "matfix/errors.hpp"
#include "matfix/matfun.hpp"
#include "matfix/solver.hpp"

namespace matfix {

namespace {

using std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

// kLetterProduct[a][b] = {phase, letter} with sigma_a sigma_b = i^phase sigma_letter.
struct LetterProduct {
  std::uint8_t phase;
  std::uint8_t letter;
};
constexpr std::array<std::array<LetterProduct, 4>, 4> kLetterProduct = {{
    {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
    {{{0, 1}, {0, 0}, {1, 3}, {3, 2}}},
    {{{0, 2}, {3, 3}, {0, 0}, {1, 1}}},
    {{{0, 3}, {1, 2}, {3, 1}, {0, 0}}},
}};

}  // namespace

Matrix pauli(int j) {
  switch (j) {
    case 0: return {{1, 0}, {0, 1}};
    case 1: return {{0, 1}, {1, 0}};
    case 2: return {{0, -kI}, {kI, 0}};
    case 3: return {{1, 0}, {0, -1}};
    default: throw DomainError("pauli: index must be 0..3, got " + std::to_string(j));
  }
}

Matrix pauli_string(std::span<const int> js) {
  if (js.empty()) throw ShapeError("pauli_string: empty sequence");
  Matrix m = pauli(js[0]);
  for (std::size_t i = 1; i < js.size(); ++i) m = kron(m, pauli(js[i]));
  return m;
}

Matrix pauli_string(std::initializer_list<int> js) {
  return pauli_string(std::span<const int>(js.begin(), js.size()));
}

std::vector<std::string> gate_names() { return {"H", "CNOT", "SWAP", "X", "Y", "Z", "I2"}; }

GateCatalogEntry gate(std::string_view name) {
  GateCatalogEntry e;
  e.name = std::string(name);
  if (name == "H") {
    const double r = 1.0 / std::numbers::sqrt2;
    e.matrix = {{r, r}, {r, -r}};
    e.qubits = 1;
  } else if (name == "CNOT") {
    e.matrix = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    e.qubits = 2;
  } else if (name == "SWAP") {
    e.matrix = {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
    e.qubits = 2;
  } else if (name == "X") {
    e.matrix = pauli(1);
    e.qubits = 1;
  } else if (name == "Y") {
    e.matrix = pauli(2);
    e.qubits = 1;
  } else if (name == "Z") {
    e.matrix = pauli(3);
    e.qubits = 1;
  } else if (name == "I2") {
    e.matrix = pauli(0);
    e.qubits = 1;
  } else {
    throw CatalogError("gate: unknown gate '" + std::string(name) + "'");
  }
  e.involutory = is_involutory(e.matrix, 1e-12);
  return e;
}

PauliElement multiply(const PauliElement& a, const PauliElement& b) {
  if (a.letters.size() != b.letters.size()) throw ShapeError("multiply: qubit counts differ");
  PauliElement out;
  out.letters.resize(a.letters.size());
  unsigned phase = a.phase + b.phase;
  for (std::size_t q = 0; q < a.letters.size(); ++q) {
    const LetterProduct p = kLetterProduct[a.letters[q]][b.letters[q]];
    phase += p.phase;
    out.letters[q] = p.letter;
  }
  out.phase = static_cast<std::uint8_t>(phase % 4);
  return out;
}

PauliElement inverse(const PauliElement& a) {
  // Each letter squares to I, so the inverse only conjugates the phase.
  PauliElement out = a;
  out.phase = static_cast<std::uint8_t>((4 - a.phase) % 4);
  return out;
}

Matrix realize(const PauliElement& p) {
  static constexpr std::array<Complex, 4> kPhases = {Complex{1, 0}, Complex{0, 1}, Complex{-1, 0},
                                                     Complex{0, -1}};
  std::vector<int> js(p.letters.begin(), p.letters.end());
  return kPhases[p.phase] * pauli_string(js);
}

std::string to_string(const PauliElement& p) {
  static constexpr std::array<const char*, 4> kPhase = {"+", "+i", "-", "-i"};
  static constexpr std::array<char, 4> kLetter = {'I', 'X', 'Y', 'Z'};
  std::string s = kPhase[p.phase];
  for (auto l : p.letters) s += kLetter[l];
  return s;
}

std::vector<PauliElement> pauli_group(std::size_t n) {
  if (n == 0 || n > kMaxPauliQubits) {
    throw CatalogError("pauli_group: qubit count must be in 1.." + std::to_string(kMaxPauliQubits) +
                       ", got " + std::to_string(n));
  }
  std::vector<PauliElement> generators;
  generators.push_back({1, std::vector<std::uint8_t>(n, 0)});  // i * I
  for (std::size_t q = 0; q < n; ++q) {
    for (std::uint8_t letter : {std::uint8_t{1}, std::uint8_t{3}}) {
      PauliElement g{0, std::vector<std::uint8_t>(n, 0)};
      g.letters[q] = letter;
      generators.push_back(std::move(g));
    }
  }
  std::set<PauliElement> seen;
  std::vector<PauliElement> frontier{{0, std::vector<std::uint8_t>(n, 0)}};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<PauliElement> next;
    for (const auto& e : frontier) {
      for (const auto& g : generators) {
        PauliElement p = multiply(e, g);
        if (seen.insert(p).second) next.push_back(std::move(p));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool is_closed(const std::vector<PauliElement>& group) {
  auto contains = [&](const PauliElement& p) {
    return std::binary_search(group.begin(), group.end(), p);
  };
  for (const auto& a : group) {
    if (!contains(inverse(a))) return false;
    for (const auto& b : group)
      if (!contains(multiply(a, b))) return false;
  }
  return true;
}

Matrix evolve(const Matrix& k, double omega_t) {
  return expm_involutory(k, Complex{0.0, -omega_t});
}

GateIdentityReport gate_identity_check(const Matrix& g, double tol) {
  GateIdentityReport r;
  r.involutory = is_involutory(g, tol);
  const VerifyResult minus = verify(g, Complex{0.0, -pi / 2}, tol);
  const VerifyResult plus = verify(g, Complex{0.0, pi / 2}, tol);
  r.residual_minus = minus.residual;
  r.residual_plus = plus.residual;
  r.pass_minus = minus.ok;
  r.pass_plus = plus.ok;
  return r;
}

}  // namespace matfix
