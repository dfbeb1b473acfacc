#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace liftcover {

enum class CurveKind { A, B, C, Iota };

/// A Lickorish twist T_{a_i}, T_{b_i}, T_{c_i}, or the hyperelliptic
/// involution pseudo-letter. Indices are 1-based; iota carries index 0.
struct Generator {
  CurveKind kind = CurveKind::A;
  std::size_t index = 1;

  static Generator a(std::size_t i) { return {CurveKind::A, i}; }
  static Generator b(std::size_t i) { return {CurveKind::B, i}; }
  static Generator c(std::size_t i) { return {CurveKind::C, i}; }
  static Generator iota() { return {CurveKind::Iota, 0}; }

  bool valid_for(std::size_t genus) const;
  std::string name() const;

  bool operator==(const Generator&) const = default;
};

struct Letter {
  Generator generator;
  std::int64_t exponent = 1;

  bool operator==(const Letter&) const = default;
};

/// The 3g - 1 Lickorish generators in the order a_1..a_g, b_1..b_g, c_1..c_{g-1}.
std::vector<Generator> lickorish_generators(std::size_t genus);

/// A word in the Lickorish generators at a fixed genus. Zero-exponent letters
/// are dropped on construction and every index is checked against the genus.
class MCGWord {
 public:
  explicit MCGWord(std::size_t genus, std::vector<Letter> letters = {});

  std::size_t genus() const noexcept { return genus_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t length() const noexcept { return letters_.size(); }

  /// Appends `generator^exponent` (dropped when exponent is zero).
  MCGWord& append(Generator generator, std::int64_t exponent = 1);

  /// The word read backwards with every exponent negated.
  MCGWord inverse() const;

  friend MCGWord concat(const MCGWord& u, const MCGWord& v);

  bool operator==(const MCGWord&) const = default;

 private:
  std::size_t genus_;
  std::vector<Letter> letters_;
};

MCGWord concat(const MCGWord& u, const MCGWord& v);

/// Parses `name ("^" signed-int)?` tokens separated by whitespace, where
/// name is a|b|c followed by a positive integer, or "iota".
/// Throws ParseError on bad syntax and Error(IndexOutOfRange) on bad indices.
MCGWord parse_word(std::string_view text, std::size_t genus);

/// Canonical text: tokens separated by one space, "^1" omitted.
std::string format_word(const MCGWord& word);

}  // namespace liftcover
