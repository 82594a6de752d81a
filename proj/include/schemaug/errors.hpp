#pragma once

#include <stdexcept>
#include <string>

namespace schemaug {

// Every recoverable toolkit failure (bad input file, contract violation,
// unknown domain, ...) throws this. File loaders prefix messages with
// "path:line:" where a line is known.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace schemaug
