#ifndef TOROIDAL_REPORT_HPP
#define TOROIDAL_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace toroidal {

/// Outcome of a batch of exact checks. Failures carry a human-readable
/// instantiation of the violated identity.
struct Report {
    std::string name;
    std::size_t checked = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok) failures.push_back(what);
    }
    void merge(const Report& other) {
        checked += other.checked;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    }
};

} // namespace toroidal

#endif
