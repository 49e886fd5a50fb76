#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hatlab {

// Hat colors are exact integers. Residues of mod(n) are kept in [0, n).
using Color = boost::multiprecision::cpp_int;

// The abelian group of hat colors: either Z/nZ or the additive integers.
class ColorSpace {
 public:
  enum class Kind { kModular, kIntegers };

  static ColorSpace modular(std::uint32_t n);
  static ColorSpace integers();

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kModular; }
  // 0 for the integers.
  std::uint32_t modulus() const { return modulus_; }

  Color zero() const { return Color(0); }
  Color add(const Color& x, const Color& y) const;
  Color sub(const Color& x, const Color& y) const;
  Color negate(const Color& x) const;
  // Reduces any integer into the canonical representative of its class.
  Color normalize(const Color& x) const;
  bool contains(const Color& x) const;

  std::string describe() const;

  friend bool operator==(const ColorSpace&, const ColorSpace&) = default;

 private:
  ColorSpace(Kind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint32_t modulus_;
};

std::string to_string(const Color& c);

}  // namespace hatlab
