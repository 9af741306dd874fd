#ifndef OSG_ERRORS_HPP_
#define OSG_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace osg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// (i.j).k != i.(j.k)
struct NotAssociative : Error {
  uint32_t i, j, k;
  NotAssociative(uint32_t i, uint32_t j, uint32_t k)
      : Error("table is not associative at (" + std::to_string(i) + ", "
              + std::to_string(j) + ", " + std::to_string(k) + ")"),
        i(i), j(j), k(k) {}
};

// i <= j and j <= i for distinct i, j after closure
struct NotAntisymmetric : Error {
  uint32_t i, j;
  NotAntisymmetric(uint32_t i, uint32_t j)
      : Error("order closure is not antisymmetric on (" + std::to_string(i)
              + ", " + std::to_string(j) + ")"),
        i(i), j(j) {}
};

enum class Side { left, right };

// a <= b but x.a <= x.b (left) or a.x <= b.x (right) fails
struct NotCompatible : Error {
  uint32_t a, b, x;
  Side side;
  NotCompatible(uint32_t a, uint32_t b, uint32_t x, Side side)
      : Error(std::string("order is not ")
              + (side == Side::left ? "left" : "right")
              + " compatible: a=" + std::to_string(a) + " b=" + std::to_string(b)
              + " x=" + std::to_string(x)),
        a(a), b(b), x(x), side(side) {}
};

struct EmptyInput : Error {
  explicit EmptyInput(const std::string& where)
      : Error("nonempty subset required: " + where) {}
};

struct BadKind : Error {
  explicit BadKind(const std::string& what) : Error(what) {}
};

struct BudgetExceeded : Error {
  uint64_t count;
  explicit BudgetExceeded(uint64_t count)
      : Error("enumeration budget exceeded after " + std::to_string(count)
              + " visited down-sets"),
        count(count) {}
};

struct MissingOrder : Error {
  MissingOrder() : Error("ordered mode requires a partial order") {}
};

struct NotRegular : Error {
  NotRegular() : Error("operation requires a regular ordered semigroup") {}
};

struct CarrierMismatch : Error {
  CarrierMismatch() : Error("carriers differ") {}
};

// a product of two family members left the family
struct NotClosed : Error {
  uint32_t a, b;
  NotClosed(uint32_t a, uint32_t b)
      : Error("bi-ideal family is not closed under * at (" + std::to_string(a)
              + ", " + std::to_string(b) + ")"),
        a(a), b(b) {}
};

struct TooLarge : Error {
  explicit TooLarge(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  int line;
  std::string reason;
  ParseError(int line, const std::string& reason)
      : Error("parse error at line " + std::to_string(line) + ": " + reason),
        line(line), reason(reason) {}
};

}  // namespace osg

#endif  // OSG_ERRORS_HPP_
