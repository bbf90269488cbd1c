#pragma once

#include <stdexcept>
#include <string>

namespace medianlab {

/// Size or work budget exceeded; callers may retry with a larger budget.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Two internally redundant computations disagreed; the builder has a bug.
class ConstructionBugError : public std::logic_error {
public:
    explicit ConstructionBugError(const std::string& what) : std::logic_error(what) {}
};

/// Input file or JSON payload does not match the expected schema.
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace medianlab
