// Canonical serialization of results: JSON records, CSV rows, plain text.
// All rationals are emitted as decimal-string numerator/denominator pairs.
#pragma once

#include <string>

#include <json.hpp>

#include "genuslab/apset.hpp"
#include "genuslab/dissonance.hpp"
#include "genuslab/graded_poly.hpp"
#include "genuslab/identities.hpp"
#include "genuslab/interval.hpp"
#include "genuslab/partition.hpp"
#include "genuslab/rational.hpp"

namespace genuslab {

using Json = nlohmann::ordered_json;

inline Json to_json(const Partition& p) {
    Json arr = Json::array();
    for (unsigned part : p.parts()) arr.push_back(part);
    return arr;
}

inline Json rational_fields(const ExactRational& r) {
    Json j;
    j["numerator"] = r.numerator().str();
    j["denominator"] = r.denominator().str();
    return j;
}

inline Json to_json(const RationalInterval& iv) {
    Json j;
    j["lo"] = iv.lo.to_string();
    j["hi"] = iv.hi.to_string();
    return j;
}

inline Json term_record(const Partition& mono, const ExactRational& coeff) {
    Json j;
    j["partition"] = to_json(mono);
    j["numerator"] = coeff.numerator().str();
    j["denominator"] = coeff.denominator().str();
    return j;
}

/// Canonical term list of a graded polynomial (map order is the canonical
/// partition order, so this is deterministic).
inline Json polynomial_terms(const GradedPolynomial& poly) {
    Json arr = Json::array();
    for (const auto& [mono, coeff] : poly.terms()) arr.push_back(term_record(mono, coeff));
    return arr;
}

inline Json to_json(const SignReport& r) {
    Json j;
    j["partition"] = to_json(r.partition);
    j["numerator"] = r.value.numerator().str();
    j["denominator"] = r.value.denominator().str();
    j["expected_sign"] = r.expected_sign;
    j["conforms"] = r.conforms;
    return j;
}

inline Json to_json(const WindowSet& w) {
    Json j;
    j["lo"] = w.lo;
    j["hi"] = w.hi;
    j["elements"] = w.elems;
    return j;
}

inline Json to_json(const Feasibility& f) {
    Json j;
    j["n"] = f.n;
    j["s"] = f.s;
    j["feasible"] = f.feasible;
    if (f.witness) {
        j["witness"] = *f.witness;
        j["decomposition"] = f.decomposition;
    }
    return j;
}

inline Json to_json(const ConstraintRow& row) {
    Json j;
    j["s"] = row.s;
    j["scan_min_n"] = row.scan_min_n ? Json(*row.scan_min_n) : Json("none");
    j["stated_min_n"] = row.stated_min_n ? Json(*row.stated_min_n) : Json("none");
    j["sharp_min_n"] = row.sharp_min_n ? Json(*row.sharp_min_n) : Json("none");
    j["matches_stated"] = row.matches_stated;
    j["matches_sharp"] = row.matches_sharp;
    if (row.witness_at_stated_n) j["witness_at_stated_n"] = *row.witness_at_stated_n;
    return j;
}

inline Json to_json(const ObstructionConstants& c) {
    Json j;
    j["n"] = c.n;
    j["s"] = c.s;
    j["b"] = c.b;
    j["c2"] = c.c2;
    j["first_obstruction_degree"] = c.first_obstruction;
    j["kill_threshold"] = c.kill_threshold;
    j["target_kill_threshold"] = c.target_kill;
    j["stated_range"] = c.stated_range;
    j["second_part_threshold"] = c.second_part;
    j["k_bound"] = c.k_bound.to_string();
    return j;
}

inline Json to_json(const ZetaBoundRow& row) {
    Json j;
    j["n"] = row.n;
    j["s"] = 2 * row.n;
    j["zeta_enclosure"] = to_json(row.lhs);
    j["bound"] = row.rhs.to_string();
    j["below"] = to_string(row.below);
    return j;
}

inline Json to_json(const PairChainReport& rep) {
    Json j;
    j["i"] = rep.i;
    j["j"] = rep.j;
    j["x"] = to_json(rep.x);
    j["y"] = to_json(rep.y);
    j["z"] = to_json(rep.z);
    j["q1"] = to_json(rep.q1);
    j["q2"] = to_json(rep.q2);
    j["q3"] = to_json(rep.q3);
    j["q4_loose"] = to_json(rep.q4_loose);
    j["q4_sharp"] = to_json(rep.q4_sharp);
    j["le_12"] = to_string(rep.le_12);
    j["le_23"] = to_string(rep.le_23);
    j["le_34_loose"] = to_string(rep.le_34_loose);
    j["le_34_sharp"] = to_string(rep.le_34_sharp);
    j["q4_loose_negative"] = to_string(rep.q4_loose_negative);
    j["q4_sharp_negative"] = to_string(rep.q4_sharp_negative);
    j["exact_sign"] = rep.exact_sign;
    j["exact_conforms"] = rep.exact_conforms;
    return j;
}

inline Json to_json(const ProgressionChainReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["ell"] = rep.ell;
    j["bound"] = rep.bound;
    j["prelim"] = to_json(rep.prelim);
    j["line1"] = to_json(rep.line1);
    j["line2"] = to_json(rep.line2);
    j["line3"] = to_json(rep.line3);
    j["line4"] = to_json(rep.line4);
    j["eq_01"] = rep.eq_01;
    j["eq_12"] = rep.eq_12;
    j["eq_23"] = rep.eq_23;
    j["subset_34"] = rep.subset_34;
    j["all_hold"] = rep.all_hold();
    return j;
}

/// Partition as a CSV-safe field: parts joined with '+' ("3+2+1"), empty
/// partition rendered as "0".
inline std::string csv_partition(const Partition& p) {
    if (p.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) s += '+';
        s += std::to_string(p.parts()[i]);
    }
    return s;
}

/// Report envelope shared by every command.
inline Json envelope(const std::string& command, Json parameters, Json results,
                     bool conforming) {
    Json j;
    j["command"] = command;
    j["parameters"] = std::move(parameters);
    j["results"] = std::move(results);
    j["conforming"] = conforming;
    j["version"] = 1;
    return j;
}

}  // namespace genuslab
