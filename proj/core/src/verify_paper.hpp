#ifndef EQUILOCAL_VERIFY_PAPER_HPP
#define EQUILOCAL_VERIFY_PAPER_HPP

#include <functional>
#include <string>
#include <vector>

namespace equilocal::detail {

// One reproducible worked computation: the check recomputes it from
// scratch and compares against the recorded value.
struct PaperCheck {
    std::string id;
    std::string description;
    std::function<bool()> fn;
};

const std::vector<PaperCheck>& paper_checks();

} // namespace equilocal::detail

#endif
