#include "graphtempo/errors.hpp"

namespace graphtempo {

ParseError::ParseError(std::string file, std::size_t line, const std::string& message)
    : Error(file + ":" + std::to_string(line) + ": " + message), file_(std::move(file)), line_(line) {}

}  // namespace graphtempo
