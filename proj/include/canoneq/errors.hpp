#ifndef CANONEQ_ERRORS_HPP
#define CANONEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace canoneq {

// Base for all library errors so callers can catch one type.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};
struct parse_error : error {
    using error::error;
};
struct order_exceeded : error {
    using error::error;
};
struct mixed_backends : error {
    mixed_backends() : error("generators mix permutation and matrix backends") {}
};
struct group_mismatch : error {
    group_mismatch() : error("operands belong to different groups") {}
};
struct not_a_character : error {
    using error::error;
};
struct non_integer_fix_count : error {
    using error::error;
};
struct extraction_failed : error {
    using error::error;
};
struct alignment_failed : error {
    using error::error;
};
struct multiplicity_error : error {
    using error::error;
};
struct parametric_lead_error : error {
    using error::error;
};
struct resource_exceeded : error {
    using error::error;
};
struct unsolved_system : error {
    using error::error;
};
struct degenerate_specialization : error {
    using error::error;
};
struct bad_prime : error {
    using error::error;
};
struct internal_error : error {
    using error::error;
};

} // namespace canoneq

#endif
