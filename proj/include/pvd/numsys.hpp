#ifndef PVD_NUMSYS_HPP
#define PVD_NUMSYS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pvd {

// The seven pixel-value decomposition systems. Each decomposes an 8-bit
// intensity into a fixed number of bit-planes with positive integer weights;
// plane 1 is the least-significant plane.
enum class System {
    Binary,
    Fibonacci,
    Prime,
    Natural,
    Lucas,
    CatalanFibonacci,
    NewSystem,
};

inline constexpr std::array<System, 7> kAllSystems = {
    System::Binary,    System::Fibonacci,        System::Prime,
    System::Natural,   System::Lucas,            System::CatalanFibonacci,
    System::NewSystem,
};

const char* system_name(System s);
std::optional<System> parse_system(std::string_view name); // case-insensitive

// Plane weights, plane 1 first. Total over the enum.
std::span<const int> weights(System s);
int plane_count(System s);

// A fixed-length bit vector over a system's planes. Bit (plane-1) of `bits`
// is plane `plane`, so the string written MSB plane leftmost is just the
// mask printed high bit first.
struct CodeWord {
    System system;
    std::uint32_t bits;

    bool operator==(const CodeWord&) const = default;
};

// Lexicographically greatest subset-sum representation of value (MSB plane
// leftmost). Throws RangeError unless 0 <= value <= 255.
CodeWord canonicalize(int value, System s);

// Weighted sum of the set planes. Throws StructuralError if bits has set
// positions beyond the system's plane count.
int recompose(const CodeWord& word);

// True iff word is exactly the canonical form of its own value. Words that
// recompose above 255 are non-canonical, not errors.
bool is_canonical(const CodeWord& word);

// Every subset-sum representation of value, as plane masks, descending
// lexicographic order. Exhaustive-by-construction oracle for canonicalize.
std::vector<std::uint32_t> all_representations(int value, System s);

// True iff both settings of bit `plane` in canonicalize(value) are canonical,
// i.e. the pixel can carry one blindly recoverable secret bit there.
bool embeddable(int value, int plane, System s);

// Canonical bit string, MSB plane leftmost.
std::string to_bit_string(const CodeWord& word);

// (value, canonical string) for each value in [lo, hi].
std::vector<std::pair<int, std::string>> build_table(System s, int lo, int hi);

} // namespace pvd

#endif
