#include "kwise/certificate_io.hpp"

#include <json.hpp>

namespace kwise {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const ExtremalCertificate& cert, const CertificateChecks& checks) {
    Json j;
    j["n"] = cert.spec.n;
    j["k"] = cert.k;
    j["p"] = cert.spec.p.str();
    j["M"] = cert.value.str();
    j["support"] = cert.distribution.support;
    Json masses = Json::array();
    for (const Rational& m : cert.distribution.masses) masses.push_back(m.str());
    j["masses"] = std::move(masses);
    j["dual_zeros"] = cert.dual_zeros;
    Json coeffs = Json::array();
    for (const Rational& c : cert.dual_poly.coeffs()) coeffs.push_back(c.str());
    j["dual_coeffs"] = std::move(coeffs);
    j["degenerate"] = cert.degenerate;
    if (cert.odd_reduced) j["reduction"] = "odd";
    j["checks"] = Json{{"moments", checks.moments_match},
                       {"dual_feasible", checks.dual_feasible},
                       {"zero_gap", checks.zero_gap},
                       {"support_in_zeros", checks.support_in_zeros}};
    return j;
}

} // namespace

std::string certificate_json(const ExtremalCertificate& cert,
                             const CertificateChecks& checks, int indent) {
    return to_json(cert, checks).dump(indent);
}

std::string reserialize_certificate_json(const std::string& text, int indent) {
    const Json in = Json::parse(text);
    Json out;
    for (const auto& [key, value] : in.items()) {
        if (value.is_string() && (key == "p" || key == "M")) {
            out[key] = Rational::from_string(value.get<std::string>()).str();
        } else if (value.is_array() && (key == "masses" || key == "dual_coeffs")) {
            Json arr = Json::array();
            for (const auto& e : value) {
                arr.push_back(Rational::from_string(e.get<std::string>()).str());
            }
            out[key] = std::move(arr);
        } else {
            out[key] = value;
        }
    }
    return out.dump(indent);
}

} // namespace kwise
