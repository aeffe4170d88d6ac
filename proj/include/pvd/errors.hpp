#ifndef PVD_ERRORS_HPP
#define PVD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pvd {

// Argument outside its documented domain (value, plane index, ...).
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Malformed in-memory object (bit vector length, dimension mismatch, ...).
struct StructuralError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Message does not fit the cover at the chosen system/plane.
struct CapacityError : std::runtime_error {
    std::size_t needed_bits;
    std::size_t available_bits;
    CapacityError(std::size_t needed, std::size_t available)
        : std::runtime_error("message needs " + std::to_string(needed) +
                             " bits but capacity is " + std::to_string(available)),
          needed_bits(needed), available_bits(available) {}
};

// Length-prefix header claims more bits than the stego can hold.
struct FramingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested raw length exceeds what is extractable.
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unsupported or malformed image file.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem failure, message carries the path.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace pvd

#endif
