#ifndef HSLAB_VERDICT_HPP
#define HSLAB_VERDICT_HPP

#include <optional>
#include <string>

namespace hslab {

// Outcome of one identity check. Failing reports always carry a witness,
// passing reports never do.
struct VerdictReport {
    std::string id;     // stable name of the check
    std::string suite;  // module family it belongs to
    std::string params; // bounds it actually ran with
    bool pass = false;
    std::optional<std::string> witness;
    long wall_ms = 0;
};

} // namespace hslab

#endif
