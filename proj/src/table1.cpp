#include "biqeuclid/table1.hpp"

#include "biqeuclid/biquad.hpp"
#include "biqeuclid/euclid.hpp"
#include "biqeuclid/quadfield.hpp"

#include <fstream>
#include <sstream>

namespace biqeuclid {

namespace {

struct RawRow {
    int p1, q1, q2, hk, s1, s2, ea, eb, ed, us; // us: 0 = blank
    char eu;
};

// The 26 bundled fields, in their published order.
constexpr RawRow kRows[] = {
    {29, 53, 37, 16, 1, -1, 5, 1, 2, -1, 'Y'},
    {29, 37, 97, 4, -1, -1, 5, 1, 2, 0, 'Y'},
    {29, 41, 61, 4, -1, -1, 5, 1, 2, 0, 'Y'},
    {29, 41, 89, 4, -1, -1, 5, 1, 2, 0, 'Y'},
    {29, 53, 89, 4, 1, -1, 5, 1, 2, -1, 'Y'},
    {29, 53, 97, 4, 1, -1, 5, 1, 2, -1, 'Y'},
    {37, 53, 29, 16, 1, -1, 6, 1, 1, -1, 'Y'},
    {37, 29, 97, 4, -1, -1, 6, 1, 1, 0, 'Y'},
    {37, 41, 53, 4, 1, 1, 6, 1, 1, 0, 'N'},
    {37, 41, 61, 4, 1, -1, 6, 1, 1, -1, 'Y'},
    {37, 53, 73, 4, 1, 1, 6, 1, 1, 0, 'N'},
    {37, 53, 89, 4, 1, -1, 6, 1, 1, -1, 'Y'},
    {37, 53, 97, 4, 1, -1, 6, 1, 1, -1, 'Y'},
    {37, 73, 61, 4, 1, -1, 6, 1, 1, -1, 'Y'},
    {37, 73, 89, 8, 1, -1, 6, 1, 1, -1, 'Y'},
    {37, 73, 97, 4, 1, -1, 6, 1, 1, -1, 'Y'},
    {41, 61, 29, 4, 1, -1, 32, 5, 1, 1, 'N'},
    {41, 29, 89, 4, -1, -1, 32, 5, 1, 0, 'Y'},
    {41, 37, 53, 4, 1, -1, 32, 5, 1, -1, 'Y'},
    {41, 37, 61, 4, 1, 1, 32, 5, 1, 0, 'N'},
    {41, 61, 53, 4, 1, -1, 32, 5, 1, 1, 'N'},
    {41, 61, 73, 8, 1, 1, 32, 5, 1, 0, 'N'},
    {41, 61, 89, 4, 1, -1, 32, 5, 1, 1, 'N'},
    {41, 61, 97, 4, 1, -1, 32, 5, 1, 1, 'N'},
    {41, 73, 89, 8, 1, -1, 32, 5, 1, -1, 'Y'},
    {41, 73, 97, 4, 1, -1, 32, 5, 1, -1, 'Y'},
};

std::vector<ReferenceRow> build_reference_table()
{
    std::vector<ReferenceRow> rows;
    for (const RawRow& r : kRows) {
        ReferenceRow row;
        row.p1 = r.p1;
        row.q1 = r.q1;
        row.q2 = r.q2;
        row.h_k = r.hk;
        row.sym1 = r.s1;
        row.sym2 = r.s2;
        row.eps_a = r.ea;
        row.eps_b = r.eb;
        row.eps_denom = r.ed;
        if (r.us != 0)
            row.unit_symbol = r.us;
        row.euclidean = r.eu == 'Y';
        rows.push_back(std::move(row));
    }
    return rows;
}

constexpr char kHeader[] = "p1,q1,q2,hK,sym1,sym2,eps_a,eps_b,eps_denom,unit_symbol,euclidean";

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    cells.push_back(cur);
    return cells;
}

Integer parse_int(const std::string& s, std::size_t line_no, const std::string& column)
{
    try {
        if (s.empty())
            throw std::runtime_error("empty");
        return Integer(s);
    } catch (const std::exception&) {
        throw ReferenceFormatError("fixture line " + std::to_string(line_no) + ": column " +
                                   column + ": not an integer: \"" + s + "\"");
    }
}

int parse_small(const std::string& s, std::size_t line_no, const std::string& column)
{
    const Integer v = parse_int(s, line_no, column);
    if (v < -1000000 || v > 1000000)
        throw ReferenceFormatError("fixture line " + std::to_string(line_no) + ": column " +
                                   column + ": out of range");
    return static_cast<int>(v);
}

} // namespace

const std::vector<ReferenceRow>& reference_table()
{
    static const std::vector<ReferenceRow> rows = build_reference_table();
    return rows;
}

std::string reference_csv_header() { return kHeader; }

std::string to_csv_line(const ReferenceRow& row)
{
    std::ostringstream os;
    os << row.p1 << ',' << row.q1 << ',' << row.q2 << ',' << row.h_k << ',' << row.sym1 << ','
       << row.sym2 << ',' << row.eps_a << ',' << row.eps_b << ',' << row.eps_denom << ',';
    if (row.unit_symbol)
        os << *row.unit_symbol;
    os << ',' << (row.euclidean ? 'Y' : 'N');
    return os.str();
}

std::string to_csv(const std::vector<ReferenceRow>& rows)
{
    std::ostringstream os;
    os << kHeader << '\n';
    for (const ReferenceRow& row : rows)
        os << to_csv_line(row) << '\n';
    return os.str();
}

std::vector<ReferenceRow> parse_reference_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line))
        throw ReferenceFormatError("fixture is empty");
    if (line == std::string(kHeader) + "\r")
        line.pop_back();
    if (line != kHeader)
        throw ReferenceFormatError("fixture header mismatch: \"" + line + "\"");

    std::vector<ReferenceRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const auto cells = split_csv(line);
        if (cells.size() != 11)
            throw ReferenceFormatError("fixture line " + std::to_string(line_no) +
                                       ": expected 11 cells, got " + std::to_string(cells.size()));
        ReferenceRow row;
        row.p1 = parse_int(cells[0], line_no, "p1");
        row.q1 = parse_int(cells[1], line_no, "q1");
        row.q2 = parse_int(cells[2], line_no, "q2");
        row.h_k = parse_int(cells[3], line_no, "hK");
        row.sym1 = parse_small(cells[4], line_no, "sym1");
        row.sym2 = parse_small(cells[5], line_no, "sym2");
        row.eps_a = parse_int(cells[6], line_no, "eps_a");
        row.eps_b = parse_int(cells[7], line_no, "eps_b");
        row.eps_denom = parse_small(cells[8], line_no, "eps_denom");
        if (!cells[9].empty())
            row.unit_symbol = parse_small(cells[9], line_no, "unit_symbol");
        if (cells[10] == "Y")
            row.euclidean = true;
        else if (cells[10] == "N")
            row.euclidean = false;
        else
            throw ReferenceFormatError("fixture line " + std::to_string(line_no) +
                                       ": column euclidean: expected Y or N, got \"" + cells[10] +
                                       "\"");
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ReferenceRow> parse_reference_csv_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ReferenceFormatError("cannot open fixture file: " + path);
    return parse_reference_csv(in);
}

namespace {

std::string opt_to_string(const std::optional<int>& v)
{
    return v ? std::to_string(*v) : std::string();
}

} // namespace

std::vector<CellDiff> verify_reference_rows(const std::vector<ReferenceRow>& fixture,
                                            const VerifyOptions& options)
{
    const auto& builtin = reference_table();
    if (fixture.size() != builtin.size())
        throw ReferenceFormatError("fixture has " + std::to_string(fixture.size()) +
                                   " rows, expected " + std::to_string(builtin.size()));

    std::vector<CellDiff> diffs;
    auto add = [&](std::size_t row, const char* col, const std::string& got,
                   const std::string& want) {
        diffs.push_back(CellDiff{row, col, got, want});
    };

    for (std::size_t i = 0; i < fixture.size(); ++i) {
        const ReferenceRow& f = fixture[i];
        const ReferenceRow& b = builtin[i];

        // Key columns are not derivable; they are checked against the
        // built-in table so a corrupted key is still pinned to its cell.
        bool key_ok = true;
        if (f.p1 != b.p1) {
            add(i, "p1", f.p1.str(), b.p1.str());
            key_ok = false;
        }
        if (f.q1 != b.q1) {
            add(i, "q1", f.q1.str(), b.q1.str());
            key_ok = false;
        }
        if (f.q2 != b.q2) {
            add(i, "q2", f.q2.str(), b.q2.str());
            key_ok = false;
        }
        if (!key_ok)
            continue;

        const int sym1 = jacobi(f.p1, f.q1).value();
        const int sym2 = jacobi(f.p1, f.q2).value();
        if (f.sym1 != sym1)
            add(i, "sym1", std::to_string(f.sym1), std::to_string(sym1));
        if (f.sym2 != sym2)
            add(i, "sym2", std::to_string(f.sym2), std::to_string(sym2));

        const QuadUnit eps = fundamental_unit(f.p1);
        if (f.eps_a != eps.a)
            add(i, "eps_a", f.eps_a.str(), eps.a.str());
        if (f.eps_b != eps.b)
            add(i, "eps_b", f.eps_b.str(), eps.b.str());
        if (f.eps_denom != eps.denom)
            add(i, "eps_denom", std::to_string(f.eps_denom), std::to_string(eps.denom));

        // The unit-symbol cell is populated exactly when the second genus
        // subcase is in play: (p1/q1) = 1, (p1/q2) = -1.
        std::optional<int> unit_sym;
        if (sym1 == 1 && sym2 == -1 && f.p1 % 4 == 1 && f.q1 % 4 == 1 && f.q1 != 2)
            unit_sym = unit_residue_symbol(f.p1, f.q1).value();
        if (f.unit_symbol != unit_sym)
            add(i, "unit_symbol", opt_to_string(f.unit_symbol), opt_to_string(unit_sym));

        const Decision dec = decide(BiquadTriple(f.p1, f.q1, f.q2));
        const std::string computed_eu = dec.verdict == Verdict::yes  ? "Y"
                                        : dec.verdict == Verdict::no ? "N"
                                                                     : to_string(dec.verdict);
        const std::string fixture_eu = f.euclidean ? "Y" : "N";
        if (fixture_eu != computed_eu)
            add(i, "euclidean", fixture_eu, computed_eu);

        if (options.check_hk) {
            const Integer hk = class_number_biquad(BiquadTriple(f.p1, f.q1, f.q2));
            if (f.h_k != hk)
                add(i, "hK", f.h_k.str(), hk.str());
        }
    }
    return diffs;
}

} // namespace biqeuclid
