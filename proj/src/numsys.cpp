#include "pvd/numsys.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "pvd/errors.hpp"

namespace pvd {

namespace {

constexpr std::array<int, 8> kBinary = {1, 2, 4, 8, 16, 32, 64, 128};
constexpr std::array<int, 12> kFibonacci = {1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233};
// Plane 1 carries weight 2: the sequence starts L0=2, L1=1.
constexpr std::array<int, 12> kLucas = {2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123, 199};
constexpr std::array<int, 15> kPrime = {1, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
constexpr std::array<int, 15> kCatalanFibonacci = {1, 2, 3, 5, 8, 13, 14, 21, 34, 42, 55, 89, 132, 144, 233};
// {1} union {2n : 1 <= n <= 16, n != 9}; sums to exactly 255.
constexpr std::array<int, 16> kNewSystem = {1, 2, 4, 6, 8, 10, 12, 14, 16, 20, 22, 24, 26, 28, 30, 32};
constexpr std::array<int, 23> kNatural = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12,
                                          13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23};

// Per-system precomputed state: suffix-feasibility sets and the canonical
// mask of every value 0-255.
struct Tables {
    std::span<const int> w;
    // reach[i][s] == true iff s is a subset sum of planes 1..i.
    std::vector<std::vector<char>> reach;
    std::array<std::uint32_t, 256> canon;
};

std::uint32_t canonical_mask(const Tables& t, int value) {
    const int n = static_cast<int>(t.w.size());
    std::uint32_t mask = 0;
    int rem = value;
    for (int i = n - 1; i >= 0; --i) {
        if (t.w[i] <= rem && t.reach[i][rem - t.w[i]]) {
            mask |= 1u << i;
            rem -= t.w[i];
        }
    }
    return mask; // rem == 0 by completeness of every system over 0-255
}

Tables make_tables(std::span<const int> w) {
    Tables t;
    t.w = w;
    const int total = std::accumulate(w.begin(), w.end(), 0);
    t.reach.resize(w.size() + 1);
    t.reach[0].assign(total + 1, 0);
    t.reach[0][0] = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        t.reach[i + 1] = t.reach[i];
        for (int s = total; s >= w[i]; --s)
            if (t.reach[i][s - w[i]]) t.reach[i + 1][s] = 1;
    }
    for (int v = 0; v < 256; ++v) t.canon[v] = canonical_mask(t, v);
    return t;
}

const Tables& tables(System s) {
    static const std::array<Tables, 7> all = {
        make_tables(kBinary),  make_tables(kFibonacci),
        make_tables(kPrime),   make_tables(kNatural),
        make_tables(kLucas),   make_tables(kCatalanFibonacci),
        make_tables(kNewSystem),
    };
    return all[static_cast<std::size_t>(s)];
}

void check_value(int value) {
    if (value < 0 || value > 255)
        throw RangeError("pixel value " + std::to_string(value) +
                         " outside [0,255]");
}

void collect_reps(const Tables& t, int i, int rem, std::uint32_t mask,
                  std::vector<std::uint32_t>& out) {
    if (!t.reach[i][rem]) return;
    if (i == 0) {
        out.push_back(mask);
        return;
    }
    // Set branch first: emits in descending lexicographic order.
    if (t.w[i - 1] <= rem)
        collect_reps(t, i - 1, rem - t.w[i - 1], mask | (1u << (i - 1)), out);
    collect_reps(t, i - 1, rem, mask, out);
}

} // namespace

const char* system_name(System s) {
    switch (s) {
    case System::Binary: return "binary";
    case System::Fibonacci: return "fibonacci";
    case System::Prime: return "prime";
    case System::Natural: return "natural";
    case System::Lucas: return "lucas";
    case System::CatalanFibonacci: return "cf";
    case System::NewSystem: return "new";
    }
    return "?";
}

std::optional<System> parse_system(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    for (System s : kAllSystems)
        if (lower == system_name(s)) return s;
    return std::nullopt;
}

std::span<const int> weights(System s) { return tables(s).w; }

int plane_count(System s) { return static_cast<int>(tables(s).w.size()); }

CodeWord canonicalize(int value, System s) {
    check_value(value);
    return {s, tables(s).canon[value]};
}

int recompose(const CodeWord& word) {
    const Tables& t = tables(word.system);
    if (word.bits >> t.w.size())
        throw StructuralError("bit vector longer than plane count of " +
                              std::string(system_name(word.system)));
    int sum = 0;
    for (std::size_t i = 0; i < t.w.size(); ++i)
        if (word.bits >> i & 1) sum += t.w[i];
    return sum;
}

bool is_canonical(const CodeWord& word) {
    const int v = recompose(word);
    return v <= 255 && tables(word.system).canon[v] == word.bits;
}

std::vector<std::uint32_t> all_representations(int value, System s) {
    check_value(value);
    const Tables& t = tables(s);
    std::vector<std::uint32_t> out;
    collect_reps(t, static_cast<int>(t.w.size()), value, 0, out);
    return out;
}

bool embeddable(int value, int plane, System s) {
    const Tables& t = tables(s);
    if (plane < 1 || plane > static_cast<int>(t.w.size()))
        throw RangeError("plane " + std::to_string(plane) + " out of range for " +
                         system_name(s));
    check_value(value);
    const std::uint32_t bit = 1u << (plane - 1);
    const std::uint32_t m = t.canon[value];
    return is_canonical({s, m & ~bit}) && is_canonical({s, m | bit});
}

std::string to_bit_string(const CodeWord& word) {
    const int n = plane_count(word.system);
    std::string out(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if (word.bits >> i & 1) out[n - 1 - i] = '1';
    return out;
}

std::vector<std::pair<int, std::string>> build_table(System s, int lo, int hi) {
    check_value(lo);
    check_value(hi);
    if (lo > hi) throw RangeError("empty table range");
    std::vector<std::pair<int, std::string>> rows;
    rows.reserve(hi - lo + 1);
    for (int v = lo; v <= hi; ++v)
        rows.emplace_back(v, to_bit_string(canonicalize(v, s)));
    return rows;
}

} // namespace pvd
