#include "shimura/cm_tables.hpp"

#include <fstream>
#include <sstream>

#include "shimura/errors.hpp"
#include "shimura/factor.hpp"

namespace shimura {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

bool all_digits(const std::string& s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

Integer parse_integer(const std::string& s, const std::string& where) {
    if (!all_digits(s)) throw DomainError(where + ": expected a positive integer, got '" + s + "'");
    return Integer(s);
}

std::string fact_string(const std::vector<std::pair<Integer, unsigned>>& f) {
    IntegerFactorization x;
    x.factors = f;
    return x.to_string();
}

} // namespace

std::vector<CmTableRow> parse_cm_table(const std::string& text, const std::string& source) {
    std::vector<CmTableRow> rows;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string at = source + ":" + std::to_string(lineno);
        if (!line.empty() && line.back() == '\r') throw DomainError(at + ": CRLF line ending");
        if (line.empty()) continue;
        if (!header) {
            if (line != kCmTableHeader) throw DomainError(at + ": bad header '" + line + "'");
            header = true;
            continue;
        }
        const auto cols = split(line, '\t');
        if (cols.size() != 3) throw DomainError(at + ": expected 3 tab-separated columns, got " + std::to_string(cols.size()));
        CmTableRow row;
        row.line = lineno;
        row.field_label = cols[0];
        row.definition_field_label = cols[2];

        const auto parts = split(cols[0], '.');
        if (parts.size() != 4) throw DomainError(at + ": malformed field label '" + cols[0] + "'");
        for (const auto& p : parts)
            if (!all_digits(p)) throw DomainError(at + ": malformed field label '" + cols[0] + "'");
        row.degree = std::stoi(parts[0]);
        row.signature = std::stoi(parts[1]);
        row.disc = Integer(parts[2]);
        if (row.degree != 8 || row.signature != 0)
            throw DomainError(at + ": field label must be of the form 8.0.D.k, got '" + cols[0] + "'");

        if (cols[1].empty()) throw DomainError(at + ": empty factorization");
        for (const auto& term : split(cols[1], '*')) {
            const auto pe = split(term, '^');
            if (pe.size() > 2) throw DomainError(at + ": malformed factor '" + term + "'");
            const Integer p = parse_integer(pe[0], at);
            const Integer e = pe.size() == 2 ? parse_integer(pe[1], at) : Integer(1);
            if (e == 0 || p < 2) throw DomainError(at + ": malformed factor '" + term + "'");
            if (!row.disc_factorization.empty() && !(row.disc_factorization.back().first < p))
                throw DomainError(at + ": primes must be strictly increasing");
            row.disc_factorization.emplace_back(p, static_cast<unsigned>(e.get_ui()));
        }

        const auto dparts = split(cols[2], '.');
        if (dparts.size() != 4) throw DomainError(at + ": malformed definition field label '" + cols[2] + "'");
        for (const auto& p : dparts)
            if (!all_digits(p)) throw DomainError(at + ": malformed definition field label '" + cols[2] + "'");
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<CmTableRow> load_cm_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open CM table '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_cm_table(ss.str(), path);
}

CmTableExpectation cm_expectation_x7() { return {"table_x7", Integer(7), 4}; }
CmTableExpectation cm_expectation_x9() { return {"table_x9", Integer(3), 8}; }

SuiteResult verify_cm_rows(const std::vector<CmTableRow>& rows, const CmTableExpectation& expect) {
    SuiteResult out;
    out.name = expect.name;
    for (const auto& row : rows) {
        const std::string id = expect.name + " line " + std::to_string(row.line) + " " + row.field_label;
        Integer prod = 1;
        bool fourth = true;
        for (const auto& [p, e] : row.disc_factorization) {
            Integer pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
            prod *= pe;
            fourth = fourth && e % 4 == 0;
        }
        out.checks.push_back(make_check(id + " recomposes", row.disc.get_str(), prod.get_str(),
                                        "the listed factorization multiplies to the label's discriminant"));
        const IntegerFactorization f = factor_integer(row.disc);
        out.checks.push_back(make_check(id + " factorization", fact_string(row.disc_factorization), f.to_string(),
                                        "independent factorization of the discriminant agrees"));
        bool fourth_actual = true;
        for (const auto& [p, e] : f.factors) fourth_actual = fourth_actual && e % 4 == 0;
        out.checks.push_back(make_check(id + " fourth power", "true", fourth && fourth_actual ? "true" : "false",
                                        "all CM discriminants are fourth powers"));
        out.checks.push_back(make_check(id + " v_" + expect.prime.get_str(), std::to_string(expect.exponent),
                                        std::to_string(f.exponent_of(expect.prime)),
                                        "every discriminant contains " + expect.prime.get_str() + "^" +
                                            std::to_string(expect.exponent)));
    }
    return out;
}

} // namespace shimura
