#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gravicat/linalg.hpp"
#include "gravicat/matrix.hpp"

namespace gravicat {

enum class Parity { Even, Odd };
enum class Definiteness { PositiveDefinite, NegativeDefinite, Indefinite, Degenerate };

// Integral symmetric bilinear form given by its Gram matrix in some basis.
// Construction validates shape and symmetry only; arithmetic invariants are
// computed on demand by analyze().
class Lattice {
 public:
  Lattice() : gram_(0, 0) {} // the rank-zero form
  explicit Lattice(IMat gram, std::optional<std::string> label = std::nullopt);

  const IMat& gram() const { return gram_; }
  std::size_t rank() const { return gram_.rows(); }
  const std::optional<std::string>& label() const { return label_; }
  void set_label(std::optional<std::string> label) { label_ = std::move(label); }

 private:
  IMat gram_;
  std::optional<std::string> label_;
};

struct LatticeProfile {
  long long rank = 0;
  long long b_plus = 0;
  long long b_minus = 0;
  long long signature = 0;
  Int determinant = 1;
  Parity parity = Parity::Even;
  bool unimodular = true;
  Definiteness definiteness = Definiteness::PositiveDefinite;
};

LatticeProfile analyze(const Lattice& l);

Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice tensor_product(const Lattice& a, const Lattice& b);
Lattice negate(const Lattice& l);

// q(x) and the pairing in the lattice's basis.
Int norm(const Lattice& l, const std::vector<Int>& x);
Int inner(const Lattice& l, const std::vector<Int>& x, const std::vector<Int>& y);

// Characteristic vector mod 2: w with <w,x> = <x,x> mod 2 for all x, reduced
// to {0,1} coordinates. Unique mod 2 exactly when det is odd; requires a
// unimodular lattice here.
std::vector<Int> characteristic_vector(const Lattice& l);

// Named stock lattices: "U", "E8", "E8(-1)", "I_p_q" (e.g. "I_3_19"), "K3".
Lattice builtin_lattice(const std::string& name);

const char* parity_name(Parity p);
const char* definiteness_name(Definiteness d);

} // namespace gravicat
