#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "dignet/net.hpp"

namespace dignet {

/// One row of a direction-number table: dimension, primitive-polynomial
/// degree, packed middle coefficients, and the initial direction integers
/// (each m_i odd, m_i < 2^i). Dimension 1 is never listed; it is the
/// radical-inverse identity matrix by convention.
struct DirectionEntry {
    std::uint32_t dimension = 0;
    std::uint32_t degree = 0;
    std::uint32_t poly_coeffs = 0;  // a_1..a_{degree-1}, a_1 most significant
    std::vector<std::uint64_t> initial;
};

/// Parse the standard table format: a header line, then whitespace-separated
/// rows "d s a m_1 ... m_s" for dimensions >= 2.
std::vector<DirectionEntry> parse_direction_file(std::string_view text);

/// Binary generating matrices for dimensions 1..s at m digits (n = m):
/// column k of C_d holds the m-bit direction number v_k, most significant bit
/// in row 1; numbers beyond the table's initial values follow the
/// primitive-polynomial recurrence. Upper-triangular with a unit diagonal.
std::vector<std::vector<std::vector<std::uint16_t>>> sobol_matrices(
    const std::vector<DirectionEntry>& entries, int s, int m);

DigitalNet sobol_net(const std::vector<DirectionEntry>& entries, int s, int m);

}  // namespace dignet
