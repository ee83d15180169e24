#include "polytri/textio.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace polytri {

namespace {
std::string strip_brackets(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != '[' && c != ']' && c != '$') s.push_back(c);
    return s;
}

std::vector<Elem> parse_coeffs(const Field& F, std::string_view text) {
    std::string s = strip_brackets(text);
    std::vector<Elem> coeffs;
    if (F.w() == 1) {
        for (char c : s) {
            if (std::isspace((unsigned char)c)) continue;
            int v;
            if (c >= '0' && c <= '9')
                v = c - '0';
            else if (c >= 'A' && c <= 'G')
                v = 10 + (c - 'A');
            else
                throw ParseError(std::string("bad coefficient character '") + c +
                                 "'");
            if (v >= F.q())
                throw ParseError("coefficient " + std::to_string(v) +
                                 " out of range for " + F.descriptor());
            coeffs.push_back(Elem(v));
        }
    } else {
        std::istringstream in(s);
        std::string tok;
        while (in >> tok) coeffs.push_back(F.parse_elem(tok));
    }
    if (coeffs.empty()) throw ParseError("empty polynomial text");
    return coeffs;
}
}  // namespace

Poly parse_poly_compact(const Field& F, std::string_view text) {
    return Poly(F, parse_coeffs(F, text));
}

Poly parse_poly_compact_reversed(const Field& F, std::string_view text) {
    auto coeffs = parse_coeffs(F, text);
    std::reverse(coeffs.begin(), coeffs.end());
    return Poly(F, std::move(coeffs));
}

std::string format_poly_compact(const Poly& f) {
    const Field& F = f.field();
    std::string out;
    long long top = std::max(f.degree(), 0LL);
    for (long long j = 0; j <= top; ++j) {
        if (F.w() == 1) {
            int v = f.coeff(j);
            out.push_back(v < 10 ? char('0' + v) : char('A' + v - 10));
        } else {
            if (j) out.push_back(' ');
            out += F.format(f.coeff(j));
        }
    }
    return out;
}

Trinomial parse_trinomial_quad(const Field& F, std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n, i;
    std::string atok, btok;
    if (!(in >> n >> i >> atok >> btok))
        throw ParseError("expected \"n i a b\"");
    return Trinomial(F, n, i, F.parse_elem(atok), F.parse_elem(btok));
}

Trinomial parse_trinomial_formula(const Field& F, std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace((unsigned char)c) && c != '{' && c != '}' && c != '$')
            s.push_back(c);
    std::size_t pos = 0;
    auto fail = [&]() -> ParseError {
        return ParseError("bad trinomial formula: " + std::string(text));
    };
    auto number = [&]() -> long long {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) throw fail();
        return std::stoll(s.substr(start, pos - start));
    };
    if (pos + 1 >= s.size() || s[pos] != 'x' || s[pos + 1] != '^') throw fail();
    pos += 2;
    long long n = number();

    auto signed_term = [&](long long& coeff) {
        if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-')) throw fail();
        bool neg = s[pos] == '-';
        ++pos;
        coeff = 1;
        if (pos < s.size() && std::isdigit((unsigned char)s[pos]))
            coeff = number();
        if (!neg) coeff = -coeff;  // trinomial form is x^n - a x^i - b
    };
    long long araw;
    signed_term(araw);
    if (pos >= s.size() || s[pos] != 'x') throw fail();
    ++pos;
    long long i = 1;
    if (pos < s.size() && s[pos] == '^') {
        ++pos;
        i = number();
    }
    long long braw;
    signed_term(braw);
    if (pos != s.size()) throw fail();
    return Trinomial(F, n, i, F.from_int(araw), F.from_int(braw));
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> row;
        std::string cell;
        bool quoted = false;
        for (std::size_t j = 0; j < line.size(); ++j) {
            char c = line[j];
            if (quoted) {
                if (c == '"') {
                    if (j + 1 < line.size() && line[j + 1] == '"') {
                        cell.push_back('"');
                        ++j;
                    } else {
                        quoted = false;
                    }
                } else {
                    cell.push_back(c);
                }
            } else if (c == '"') {
                quoted = true;
            } else if (c == ',') {
                row.push_back(cell);
                cell.clear();
            } else {
                cell.push_back(c);
            }
        }
        row.push_back(cell);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace polytri
