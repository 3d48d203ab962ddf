#ifndef KWISE_ERRORS_HPP
#define KWISE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kwise {

/// Cross-route consistency violation: two independent computations of the
/// same quantity disagreed. Either a bug or a counterexample; never swallowed.
class consistency_error : public std::logic_error {
public:
    explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

/// An enumeration would exceed its configured candidate budget.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace kwise

#endif
