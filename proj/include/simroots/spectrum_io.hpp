#pragma once

// Serialization of tuple spectra: CSV (full and paper-table style with the
// 0 sentinel in the value column), self-contained JSON, and the two-column
// plot data mirroring the spectrum figures.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "simroots/counting.hpp"
#include "simroots/polynomial.hpp"

namespace simroots {

// Header "z,f1[,f2,...],is_tuple"; rows carry the true values.
inline std::string spectrum_to_csv(const TupleSpectrum& spec) {
    std::ostringstream out;
    out << "z";
    for (std::size_t i = 0; i < spec.polys.size(); ++i) out << ",f" << i + 1;
    out << ",is_tuple\n";
    for (const SpectrumRow& row : spec.rows) {
        out << row.z;
        for (u64 v : row.values) out << "," << v;
        out << "," << (row.is_tuple ? "true" : "false") << "\n";
    }
    return out.str();
}

// Paper-table convention: header "z,f(z)", a single polynomial, and 0 in
// the value column for rows without a simultaneous pair.
inline std::string spectrum_to_paper_csv(const TupleSpectrum& spec) {
    if (spec.polys.size() != 1)
        throw std::invalid_argument("paper table style requires exactly one polynomial");
    std::ostringstream out;
    out << "z,f(z)\n";
    for (const SpectrumRow& row : spec.rows)
        out << row.z << "," << (row.is_tuple ? row.values[0] : 0) << "\n";
    return out.str();
}

// Two-column plot data (z, f(z)-or-0), whitespace separated.
inline std::string spectrum_to_plot(const TupleSpectrum& spec) {
    std::ostringstream out;
    for (const SpectrumRow& row : spec.rows) {
        out << row.z;
        for (std::size_t i = 0; i < row.values.size(); ++i)
            out << " " << (row.is_tuple ? row.values[i] : 0);
        out << "\n";
    }
    return out.str();
}

// Re-parses the full CSV form. p and the polynomials are not part of the
// CSV schema, so the caller supplies them.
inline TupleSpectrum spectrum_from_csv(const std::string& text, u64 p,
                                       std::vector<IntPolynomial> polys) {
    TupleSpectrum spec;
    spec.p = p;
    spec.polys = std::move(polys);
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("spectrum CSV: missing header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        SpectrumRow row;
        std::istringstream cells(line);
        std::string cell;
        std::vector<std::string> fields;
        while (std::getline(cells, cell, ',')) fields.push_back(cell);
        if (fields.size() != spec.polys.size() + 2)
            throw std::runtime_error("spectrum CSV: wrong column count");
        row.z = std::stoull(fields.front());
        for (std::size_t i = 1; i + 1 < fields.size(); ++i)
            row.values.push_back(std::stoull(fields[i]));
        if (fields.back() == "true")
            row.is_tuple = true;
        else if (fields.back() == "false")
            row.is_tuple = false;
        else
            throw std::runtime_error("spectrum CSV: bad is_tuple value");
        if (row.is_tuple) ++spec.tuple_count;
        spec.rows.push_back(std::move(row));
    }
    return spec;
}

inline std::string spectrum_to_json(const TupleSpectrum& spec) {
    nlohmann::ordered_json j;
    j["p"] = spec.p;
    j["polys"] = nlohmann::json::array();
    for (const IntPolynomial& f : spec.polys) j["polys"].push_back(to_string(f));
    j["tuple_count"] = spec.tuple_count;
    j["rows"] = nlohmann::json::array();
    for (const SpectrumRow& row : spec.rows) {
        nlohmann::ordered_json r;
        r["z"] = row.z;
        r["values"] = row.values;
        r["is_tuple"] = row.is_tuple;
        j["rows"].push_back(std::move(r));
    }
    return j.dump(2) + "\n";
}

inline TupleSpectrum spectrum_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    TupleSpectrum spec;
    spec.p = j.at("p").get<u64>();
    for (const auto& s : j.at("polys")) spec.polys.push_back(parse_poly(s.get<std::string>()));
    spec.tuple_count = j.at("tuple_count").get<u64>();
    for (const auto& r : j.at("rows")) {
        SpectrumRow row;
        row.z = r.at("z").get<u64>();
        row.values = r.at("values").get<std::vector<u64>>();
        row.is_tuple = r.at("is_tuple").get<bool>();
        spec.rows.push_back(std::move(row));
    }
    return spec;
}

}  // namespace simroots
