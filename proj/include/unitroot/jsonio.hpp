#ifndef UNITROOT_JSONIO_HPP
#define UNITROOT_JSONIO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "unitroot/doublecover.hpp"
#include "unitroot/laurent.hpp"
#include "unitroot/matrix.hpp"
#include "unitroot/report.hpp"
#include "unitroot/residue.hpp"

namespace unitroot {

using nlohmann::json;

// Canonical polynomial form: variables plus terms sorted by exponent vector,
// coefficients as decimal strings.
inline json poly_to_json(const ZPoly& f, const std::vector<std::string>& variables) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) {
        json t;
        t["coefficient"] = c.str();
        t["exponents"] = e;
        terms.push_back(std::move(t));
    }
    return json{{"variables", variables}, {"terms", std::move(terms)}};
}

inline ZPoly poly_from_json(const json& j, std::vector<std::string>& variables_out) {
    if (!j.contains("variables") || !j.contains("terms"))
        throw ParseError("polynomial JSON needs 'variables' and 'terms'", 0);
    variables_out = j.at("variables").get<std::vector<std::string>>();
    ZPoly f(ZRing{}, static_cast<int>(variables_out.size()));
    for (const auto& t : j.at("terms")) {
        ExponentVector e = t.at("exponents").get<ExponentVector>();
        f.add_term(std::move(e), Int(t.at("coefficient").get<std::string>()));
    }
    return f;
}

inline json labels_to_json(const std::vector<ExponentVector>& labels) {
    json out = json::array();
    for (const auto& l : labels) out.push_back(l);
    return out;
}

inline json matrix_to_json(const ModMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j)
            row.push_back(std::to_string(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return json{{"labels", labels_to_json(m.labels())},
                {"prime", m.ring().p},
                {"precision", m.ring().k},
                {"entries", std::move(entries)}};
}

inline json matrix_to_json(const ZMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.at(i, j).str());
        entries.push_back(std::move(row));
    }
    return json{{"labels", labels_to_json(m.labels())},
                {"ring", "Z"},
                {"entries", std::move(entries)}};
}

inline json matrix_to_json(const QMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.at(i, j).str());
        entries.push_back(std::move(row));
    }
    return json{{"labels", labels_to_json(m.labels())},
                {"ring", "Q"},
                {"entries", std::move(entries)}};
}

inline json report_to_json(const Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json e{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    return json{{"checks", std::move(checks)}, {"all_pass", r.all_pass()}};
}

} // namespace unitroot

#endif
