#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace golay {

using cplx = std::complex<double>;
using Sequence = std::vector<cplx>;

// Generated element landed outside the declared constellation.
class constellation_error : public std::runtime_error {
public:
    constellation_error(std::string constellation, int row, int col, std::size_t index, cplx value)
        : std::runtime_error("element (" + std::to_string(value.real()) + "," +
                             std::to_string(value.imag()) + ") at n=" + std::to_string(index) +
                             " of entry (" + std::to_string(row) + "," + std::to_string(col) +
                             ") is outside constellation " + constellation),
          constellation_name(std::move(constellation)), entry_row(row), entry_col(col),
          element_index(index), element(value) {}

    std::string constellation_name;
    int entry_row;  // -1 when not tied to a matrix entry
    int entry_col;
    std::size_t element_index;
    cplx element;
};

// Requested enumeration or census exceeds the configured budget.
class budget_error : public std::runtime_error {
public:
    budget_error(std::uint64_t requested, std::uint64_t budget)
        : std::runtime_error("work size " + std::to_string(requested) +
                             " exceeds budget " + std::to_string(budget)),
          requested(requested), budget(budget) {}

    std::uint64_t requested;
    std::uint64_t budget;
};

inline bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

}  // namespace golay
