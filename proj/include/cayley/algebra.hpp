#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "cayley/scalar.hpp"

namespace cayley {

/// The six composition algebras: quaternions H, split quaternions Hs,
/// complex quaternions Hc, and the Cayley algebras O, Os, Oc.
enum class AlgebraKind { H, Hs, Hc, O, Os, Oc };

inline constexpr std::array<AlgebraKind, 6> kAllAlgebras = {
    AlgebraKind::H, AlgebraKind::Hs, AlgebraKind::Hc,
    AlgebraKind::O, AlgebraKind::Os, AlgebraKind::Oc};

class AlgebraId {
 public:
  constexpr AlgebraId(AlgebraKind kind) : kind_(kind) {}  // NOLINT(google-explicit-constructor)

  constexpr AlgebraKind kind() const { return kind_; }
  constexpr std::size_t dim() const { return is_cayley() ? 8 : 4; }
  constexpr bool is_cayley() const {
    return kind_ == AlgebraKind::O || kind_ == AlgebraKind::Os || kind_ == AlgebraKind::Oc;
  }
  constexpr bool is_quaternion() const { return !is_cayley(); }
  constexpr bool is_split() const { return kind_ == AlgebraKind::Hs || kind_ == AlgebraKind::Os; }
  constexpr bool is_division() const { return kind_ == AlgebraKind::H || kind_ == AlgebraKind::O; }
  constexpr Field field() const {
    return kind_ == AlgebraKind::Hc || kind_ == AlgebraKind::Oc ? Field::Complex : Field::Real;
  }
  /// Primes are a display convention only: odd imaginary indices of the
  /// split algebras.
  constexpr bool is_primed(std::size_t index) const { return is_split() && index % 2 == 1; }

  /// The Cayley algebra obtained by doubling, e.g. Hs -> Os. Identity on
  /// Cayley algebras.
  constexpr AlgebraId cayley_extension() const {
    switch (kind_) {
      case AlgebraKind::H: return AlgebraKind::O;
      case AlgebraKind::Hs: return AlgebraKind::Os;
      case AlgebraKind::Hc: return AlgebraKind::Oc;
      default: return kind_;
    }
  }
  constexpr AlgebraId quaternion_subalgebra() const {
    switch (kind_) {
      case AlgebraKind::O: return AlgebraKind::H;
      case AlgebraKind::Os: return AlgebraKind::Hs;
      case AlgebraKind::Oc: return AlgebraKind::Hc;
      default: return kind_;
    }
  }

  /// "H", "Hs", "Hc", "O", "Os", "Oc".
  std::string_view name() const;
  /// Basis label without coefficient: "1", "e2", "e3'".
  std::string basis_label(std::size_t index) const;

  friend constexpr bool operator==(AlgebraId a, AlgebraId b) { return a.kind_ == b.kind_; }

 private:
  AlgebraKind kind_;
};

std::optional<AlgebraId> algebra_from_name(std::string_view name);

/// e_i e_j = sign * e_index.
struct BasisProduct {
  std::size_t index = 0;
  int sign = 1;

  friend constexpr bool operator==(const BasisProduct&, const BasisProduct&) = default;
};

/// Multiplication table of the basis units of one algebra.
class StructureTable {
 public:
  StructureTable(AlgebraId algebra, std::array<std::array<BasisProduct, 8>, 8> products)
      : algebra_(algebra), products_(products) {}

  AlgebraId algebra() const { return algebra_; }
  std::size_t dim() const { return algebra_.dim(); }
  const BasisProduct& operator()(std::size_t i, std::size_t j) const { return products_[i][j]; }
  /// N(e_k) = -e_k^2 for k > 0; 1 for k = 0.
  int basis_norm(std::size_t k) const { return k == 0 ? 1 : -products_[k][k].sign; }

 private:
  AlgebraId algebra_;
  std::array<std::array<BasisProduct, 8>, 8> products_;
};

/// Builds the table: quaternion tables are written out directly, Cayley
/// tables are produced by the doubling product and checked against the
/// relations e5 = e1e4, e6 = -e2e4, e7 = e3e4. Throws ConsistencyError if a
/// derived product is not a signed basis unit or a relation fails.
StructureTable build_table(AlgebraId algebra);

/// Shared, lazily built, read-only table.
const StructureTable& table_for(AlgebraId algebra);

}  // namespace cayley
