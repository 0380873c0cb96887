/// @file io.hpp
/// @brief Text formats shared by the library and the command line: section
/// files, key=value records with a JSON twin, and a small homogeneous
/// polynomial parser for the length probe.

#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "spinorkit/sections.hpp"

namespace spinorkit {

// ---------------------------------------------------------------------------
// Output records. Values are exact decimal-free strings; the plain printer
// emits `key=value` tokens, one record per line, and the JSON printer emits
// the same data as an array of string-valued objects.
// ---------------------------------------------------------------------------

struct Record {
    std::vector<std::pair<std::string, std::string>> fields;

    Record& add(const std::string& key, const std::string& value) {
        fields.emplace_back(key, value);
        return *this;
    }
    Record& add(const std::string& key, std::uint64_t value) {
        return add(key, std::to_string(value));
    }
    Record& add(const std::string& key, int value) { return add(key, std::to_string(value)); }
    Record& add(const std::string& key, bool value) {
        return add(key, value ? std::string("true") : std::string("false"));
    }
};

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default: out += c;
        }
    }
    return out;
}

inline std::string render_plain(const std::vector<Record>& records) {
    std::string out;
    for (const auto& r : records) {
        bool first = true;
        for (const auto& [k, v] : r.fields) {
            if (!first) out += ' ';
            first = false;
            out += k;
            out += '=';
            // values with spaces are printed verbatim; keys never contain '='
            out += v;
        }
        out += '\n';
    }
    return out;
}

inline std::string render_json(const std::vector<Record>& records) {
    std::string out = "{\"records\":[";
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (i) out += ',';
        out += '{';
        for (std::size_t f = 0; f < records[i].fields.size(); ++f) {
            if (f) out += ',';
            out += '"' + json_escape(records[i].fields[f].first) + "\":\"" +
                   json_escape(records[i].fields[f].second) + '"';
        }
        out += '}';
    }
    out += "]}\n";
    return out;
}

// ---------------------------------------------------------------------------
// Section file format, versioned:
//   spinorkit-section v1
//   field Fp:7
//   k 1
//   side plus
//   seed 42
//   w <16 coefficients in slot order>     (8-k lines)
// ---------------------------------------------------------------------------

template <class F>
std::string section_to_text(const LinearSection<F>& x) {
    std::ostringstream os;
    os << "spinorkit-section v1\n";
    os << "field " << x.spec.to_string() << "\n";
    os << "k " << x.k << "\n";
    os << "side " << (x.side == SectionSide::Plus ? "plus" : "minus") << "\n";
    os << "seed " << x.seed << "\n";
    for (const auto& w : x.cutting) os << "w " << vector_to_string(w.coefficients()) << "\n";
    return os.str();
}

template <class F>
LinearSection<F> section_from_text(const std::string& text, const FieldSpec& expect_spec) {
    std::istringstream is(text);
    std::string line;
    require(std::getline(is, line) && line == "spinorkit-section v1", ErrorCode::BadInput,
            "missing or unsupported section header");
    LinearSection<F> x;
    bool have_field = false, have_k = false, saw_w = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "field") {
            std::string f;
            ls >> f;
            x.spec = FieldSpec::parse(f);
            require(x.spec == expect_spec, ErrorCode::FieldMismatch,
                    "section file is over " + x.spec.to_string());
            have_field = true;
        } else if (key == "k") {
            ls >> x.k;
            require(x.k >= -1 && x.k <= 1, ErrorCode::BadK, "k must be -1, 0 or 1");
            have_k = true;
        } else if (key == "side") {
            require(!saw_w, ErrorCode::BadInput, "side line must precede spinor lines");
            std::string s;
            ls >> s;
            require(s == "plus" || s == "minus", ErrorCode::BadInput, "side must be plus or minus");
            x.side = s == "plus" ? SectionSide::Plus : SectionSide::Minus;
        } else if (key == "seed") {
            ls >> x.seed;
        } else if (key == "w") {
            require(have_field, ErrorCode::BadInput, "field line must precede spinor lines");
            saw_w = true;
            std::string rest;
            std::getline(ls, rest);
            auto coeffs = parse_vector<F>(rest, x.spec);
            require(coeffs.size() == 16, ErrorCode::BadInput, "spinor lines carry 16 coefficients");
            Parity p = x.side == SectionSide::Plus ? Parity::Odd : Parity::Even;
            HalfSpinor<F> w(p, x.spec);
            for (int sl = 0; sl < masks::kCount; ++sl) w.set_coeff_at_slot(sl, coeffs[sl]);
            x.cutting.push_back(std::move(w));
        } else {
            fail(ErrorCode::BadInput, "unknown section file key '" + key + "'");
        }
    }
    require(have_field && have_k, ErrorCode::BadInput, "section file missing field or k");
    require(x.cutting.size() == x.num_cutting(), ErrorCode::BadInput,
            "expected " + std::to_string(x.num_cutting()) + " cutting spinors");
    return x;
}

template <class F>
LinearSection<F> section_from_file(const std::string& path, const FieldSpec& spec) {
    std::ifstream in(path);
    require(in.good(), ErrorCode::BadInput, "cannot open section file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return section_from_text<F>(buf.str(), spec);
}

// ---------------------------------------------------------------------------
// Homogeneous polynomial literals: terms joined by + or -, each term a '*'
// separated product of an optional scalar and powers `x<i>` or `x<i>^<e>`.
// Example: "x0^2 - 3*x1*x2 + 1/2*x2^2".
// ---------------------------------------------------------------------------

template <class F>
Poly<F> parse_poly(const std::string& text, std::size_t vars, const FieldSpec& spec) {
    Poly<F> out(vars, spec);
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    require(!compact.empty(), ErrorCode::BadInput, "empty polynomial literal");

    std::size_t pos = 0;
    while (pos < compact.size()) {
        bool negative = false;
        if (compact[pos] == '+' || compact[pos] == '-') {
            negative = compact[pos] == '-';
            ++pos;
        }
        std::size_t end = pos;
        while (end < compact.size() && compact[end] != '+' && compact[end] != '-') ++end;
        std::string term = compact.substr(pos, end - pos);
        require(!term.empty(), ErrorCode::BadInput, "dangling sign in polynomial literal");
        pos = end;

        F coeff = one_of<F>(spec);
        Monomial mono = 0;
        std::size_t tpos = 0;
        while (tpos < term.size()) {
            std::size_t fend = term.find('*', tpos);
            if (fend == std::string::npos) fend = term.size();
            std::string factor = term.substr(tpos, fend - tpos);
            tpos = fend + 1;
            require(!factor.empty(), ErrorCode::BadInput, "empty factor in polynomial literal");
            if (factor[0] == 'x') {
                auto caret = factor.find('^');
                std::string var_str =
                    caret == std::string::npos ? factor.substr(1) : factor.substr(1, caret - 1);
                int e = 1;
                if (caret != std::string::npos) e = std::stoi(factor.substr(caret + 1));
                std::size_t var = 0;
                try {
                    var = static_cast<std::size_t>(std::stoul(var_str));
                } catch (const std::exception&) {
                    fail(ErrorCode::BadInput, "bad variable '" + factor + "'");
                }
                require(var < vars, ErrorCode::BadInput, "variable index out of range in '" + factor + "'");
                require(e >= 0 && e <= 15, ErrorCode::BadInput, "exponent out of range");
                for (int t = 0; t < e; ++t) mono = monomial::mul(mono, monomial::variable(var));
            } else {
                coeff *= parse_scalar<F>(factor, spec);
            }
        }
        if (negative) coeff = -coeff;
        out.add_term(mono, coeff);
    }
    return out;
}

}  // namespace spinorkit
