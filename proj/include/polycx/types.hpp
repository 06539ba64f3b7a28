#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polycx {

/// Identity of an isotopy class of arcs inside one enumeration context.
enum class ArcId : std::int32_t {};

constexpr ArcId kNoArc{-1};

constexpr std::int32_t index(ArcId a) { return static_cast<std::int32_t>(a); }
constexpr ArcId arc_id(std::int64_t i) { return ArcId{static_cast<std::int32_t>(i)}; }

using ArcSet = std::vector<ArcId>;  // always kept sorted

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class InvalidSignature : public Error {
 public:
  using Error::Error;
};
class UnsupportedSignature : public Error {
 public:
  using Error::Error;
};
class UnknownEdge : public Error {
 public:
  using Error::Error;
};
class NotFlippable : public Error {
 public:
  using Error::Error;
};
class ArcNotWitnessed : public Error {
 public:
  using Error::Error;
};
class UnknownArc : public Error {
 public:
  using Error::Error;
};
class EnumerationDiverged : public Error {
 public:
  using Error::Error;
};
class ModeError : public Error {
 public:
  using Error::Error;
};
class FrontierVertex : public Error {
 public:
  using Error::Error;
};
class Undecidable : public Error {
 public:
  using Error::Error;
};
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace polycx
