#include "semreg/errors.hpp"

namespace semreg {

DivisionByZero::DivisionByZero(std::size_t node, std::size_t pattern)
    : Error("division by zero at node " + std::to_string(node) + ", pattern " +
            std::to_string(pattern)),
      node_(node),
      pattern_(pattern) {}

NonFiniteResult::NonFiniteResult(std::size_t node, std::size_t pattern)
    : Error("non-finite value at node " + std::to_string(node) + ", pattern " +
            std::to_string(pattern)),
      node_(node),
      pattern_(pattern) {}

InvalidNodeId::InvalidNodeId(std::size_t node)
    : Error("invalid node id " + std::to_string(node)) {}

ParseError::ParseError(const std::string& what, std::size_t position)
    : Error(what + " at position " + std::to_string(position)), position_(position) {}

DataParseError::DataParseError(const std::string& what, std::size_t row, std::size_t column)
    : Error(what + " (row " + std::to_string(row) + ", column " + std::to_string(column) + ")"),
      row_(row),
      column_(column) {}

KTooLarge::KTooLarge(std::size_t k, std::size_t n)
    : Error("k=" + std::to_string(k) + " exceeds the number of patterns (" + std::to_string(n) +
            ")") {}

}  // namespace semreg
