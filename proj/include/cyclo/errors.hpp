#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclo {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// exact_div was asked for a quotient that does not exist in Z[x].
class NotDivisible : public Error {
  public:
    using Error::Error;
};

/// n = 0 or n beyond the supported input bound, or a violated precondition.
class InputOutOfRange : public Error {
  public:
    using Error::Error;
};

/// A search was refused because n has too many divisors for the configured budget.
class BudgetExceeded : public Error {
  public:
    BudgetExceeded(std::uint64_t n, std::size_t divisor_count, std::size_t budget)
        : Error("n=" + std::to_string(n) + " has " + std::to_string(divisor_count) +
                " divisors, exceeding the budget of " + std::to_string(budget)),
          n(n), divisor_count(divisor_count), budget(budget) {}

    std::uint64_t n;
    std::size_t divisor_count;
    std::size_t budget;
};

/// A checker that requires squarefree n was given one with a repeated prime.
class NotSquarefree : public Error {
  public:
    using Error::Error;
};

/// A record line could not be decoded.
class ParseError : public Error {
  public:
    ParseError(std::size_t line_no, std::string field, const std::string& what)
        : Error("line " + std::to_string(line_no) + ", field '" + field + "': " + what),
          line_no(line_no), field(std::move(field)) {}

    std::size_t line_no;
    std::string field;
};

/// A height/length does not fit in 64 bits. Coefficients themselves never
/// overflow (they escalate); this guards only the reported summary value.
class ValueOverflow : public Error {
  public:
    using Error::Error;
};

}  // namespace cyclo
