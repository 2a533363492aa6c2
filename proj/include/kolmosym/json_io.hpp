#pragma once

#include <json.hpp>

#include "kolmosym/diffop.hpp"
#include "kolmosym/expoly.hpp"
#include "kolmosym/poly.hpp"
#include "kolmosym/weyl.hpp"

namespace kolmosym {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const Rational& r) { return r.str(); }

inline ordered_json to_json(const Poly& p) {
    ordered_json terms = ordered_json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        ordered_json t;
        t["coeff"] = it->second.str();
        t["exp"] = it->first.exps;
        terms.push_back(t);
    }
    ordered_json j;
    j["vars"] = p.ring()->vars();
    j["terms"] = terms;
    return j;
}

// {"terms":[{"coeff":"<num>/<den>","exp":[i3,i2,i1,i0]}]} in canonical order.
inline ordered_json to_json(const WeylElem& e) {
    ordered_json terms = ordered_json::array();
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        ordered_json t;
        t["coeff"] = it->second.str();
        t["exp"] = {it->first.i3, it->first.i2, it->first.i1, it->first.i0};
        terms.push_back(t);
    }
    ordered_json j;
    j["terms"] = terms;
    return j;
}

inline ordered_json to_json(const DiffOp& d) {
    ordered_json terms = ordered_json::array();
    for (auto it = d.terms().rbegin(); it != d.terms().rend(); ++it) {
        ordered_json t;
        t["deriv"] = {it->first.dt, it->first.dx, it->first.dy};
        t["coeff"] = to_json(it->second);
        terms.push_back(t);
    }
    ordered_json j;
    j["terms"] = terms;
    return j;
}

inline ordered_json to_json(const ExpPoly& e) {
    ordered_json summands = ordered_json::array();
    for (const auto& [q, p] : e.summands()) {
        ordered_json s;
        s["exp_poly"] = to_json(q);
        s["prefactor"] = to_json(p);
        summands.push_back(s);
    }
    ordered_json j;
    j["summands"] = summands;
    return j;
}

}  // namespace kolmosym
