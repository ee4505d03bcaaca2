#ifndef BIQEUCLID_TABLE1_HPP
#define BIQEUCLID_TABLE1_HPP

#include "biqeuclid/intarith.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace biqeuclid {

/* One row of the bundled reference table of 26 real biquadratic fields:
 * the inputs (p1,q1,q2), the class number h_K, the symbols (p1/q1) and
 * (p1/q2), the fundamental unit of Q(sqrt(p1)) as (eps_a+eps_b*sqrt(p1))/
 * eps_denom, the unit residue symbol where defined (blank cells stay blank),
 * and the Euclidean verdict. */
struct ReferenceRow {
    Integer p1, q1, q2;
    Integer h_k;
    int sym1 = 0;
    int sym2 = 0;
    Integer eps_a, eps_b;
    int eps_denom = 1;
    std::optional<int> unit_symbol;
    bool euclidean = false;
};

struct ReferenceFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::vector<ReferenceRow>& reference_table();

std::string reference_csv_header();
std::string to_csv_line(const ReferenceRow& row);
std::string to_csv(const std::vector<ReferenceRow>& rows);

/* Strict parser for the fixture CSV; malformed input raises
 * ReferenceFormatError naming the offending line. */
std::vector<ReferenceRow> parse_reference_csv(std::istream& in);
std::vector<ReferenceRow> parse_reference_csv_file(const std::string& path);

/* A fixture cell that disagrees with recomputation (or, for the key columns
 * p1/q1/q2, with the built-in table). */
struct CellDiff {
    std::size_t row = 0; // zero-based fixture row
    std::string column;
    std::string fixture_value;
    std::string computed_value;
};

struct VerifyOptions {
    bool check_hk = true;
};

/* Recomputes every derivable column of the fixture rows and returns all
 * mismatching cells; empty means the fixture verifies. */
std::vector<CellDiff> verify_reference_rows(const std::vector<ReferenceRow>& fixture,
                                            const VerifyOptions& options);

} // namespace biqeuclid

#endif // BIQEUCLID_TABLE1_HPP
