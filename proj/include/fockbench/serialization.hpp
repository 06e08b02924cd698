#ifndef FOCKBENCH_SERIALIZATION_HPP
#define FOCKBENCH_SERIALIZATION_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "fockbench/convergence.hpp"
#include "fockbench/fock_vector.hpp"
#include "fockbench/operators.hpp"
#include "fockbench/permanent.hpp"

namespace fockbench {

using Json = nlohmann::ordered_json;

// --- scalar forms -----------------------------------------------------
//
// Exact rationals travel as decimal strings "p/q" ("p" when q = 1) so the
// wire format is lossless; float values are plain JSON numbers. A complex
// value with nonzero imaginary part becomes {"re": ..., "im": ...}; real
// values in summaries collapse to the bare number/string form. Integer
// rationals that fit in int64 are emitted as plain JSON numbers for
// readability; parsers accept every form.

std::string rational_to_string(const BigRational& r);
BigRational rational_from_string(const std::string& s);

Json real_to_json(const BigRational& r);
Json real_to_json(double r);
Json scalar_to_json(const GaussianRational& z);
Json scalar_to_json(const std::complex<double>& z);

BigRational real_from_json_exact(const Json& j);
GaussianRational scalar_from_json_exact(const Json& j);
std::complex<double> scalar_from_json_float(const Json& j);

template <ScalarType S>
Json scalar_component_to_json(const S& z);
template <ScalarType S>
S scalar_from_json(const Json& j);

template <>
inline Json scalar_component_to_json<GaussianRational>(const GaussianRational& z) {
    return scalar_to_json(z);
}
template <>
inline Json scalar_component_to_json<std::complex<double>>(const std::complex<double>& z) {
    return scalar_to_json(z);
}
template <>
inline GaussianRational scalar_from_json<GaussianRational>(const Json& j) {
    return scalar_from_json_exact(j);
}
template <>
inline std::complex<double> scalar_from_json<std::complex<double>>(const Json& j) {
    return scalar_from_json_float(j);
}

// --- Fock vectors -----------------------------------------------------
//
// {"d": int, "n_max": int, "backend": "exact"|"float",
//  "terms": [{"alpha": [ints], "re": ..., "im": ...}]}
// with exact coefficients always serialized as "p/q" strings.

template <ScalarType S>
Json fock_vector_to_json(const FockVector<S>& phi) {
    using T = scalar_traits<S>;
    Json terms = Json::array();
    for (const auto& [alpha, c] : phi.terms()) {
        Json t;
        t["alpha"] = alpha.counts();
        if constexpr (T::is_exact) {
            t["re"] = rational_to_string(c.real());
            t["im"] = rational_to_string(c.imag());
        } else {
            t["re"] = c.real();
            t["im"] = c.imag();
        }
        terms.push_back(std::move(t));
    }
    Json j;
    j["d"] = phi.workspace().d;
    j["n_max"] = phi.workspace().n_max;
    j["backend"] = T::backend_name();
    j["terms"] = std::move(terms);
    return j;
}

Json term_scalar_component(const Json& term, const char* key);

template <ScalarType S>
FockVector<S> fock_vector_from_json(const Json& j) {
    using T = scalar_traits<S>;
    std::string backend = j.at("backend").get<std::string>();
    if (backend != T::backend_name())
        throw Error("vector backend '" + backend + "' does not match the requested '" +
                    T::backend_name() + "' backend");
    Workspace ws{j.at("d").get<int>(), j.at("n_max").get<int>()};
    FockVector<S> phi(ws);
    for (const Json& t : j.at("terms")) {
        OccupationIndex alpha(t.at("alpha").get<std::vector<int>>());
        S re = scalar_from_json<S>(t.at("re"));
        S im = scalar_from_json<S>(t.at("im"));
        if constexpr (T::is_exact)
            phi.add_term(alpha, GaussianRational(re.real(), im.real()));
        else
            phi.add_term(alpha, std::complex<double>(re.real(), im.real()));
    }
    return phi;
}

// --- matrices -----------------------------------------------------------
//
// {"n": int, "entries": [[scalar, ...], ...]} with entries in any scalar
// form above.

template <ScalarType S>
Json matrix_to_json(const SquareMatrix<S>& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(scalar_component_to_json<S>(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    Json j;
    j["n"] = m.size();
    j["entries"] = std::move(rows);
    return j;
}

template <ScalarType S>
SquareMatrix<S> matrix_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    const Json& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != n)
        throw Error("matrix row count does not match n");
    SquareMatrix<S> m(n);
    for (int i = 0; i < n; ++i) {
        const Json& row = entries.at(i);
        if (static_cast<int>(row.size()) != n) throw Error("matrix is not square");
        for (int k = 0; k < n; ++k) m.at(i, k) = scalar_from_json<S>(row.at(k));
    }
    return m;
}

// --- reports ------------------------------------------------------------

template <ScalarType S>
Json report_to_json(const OperatorReport<S>& r) {
    Json j;
    j["lhs"] = scalar_to_json(r.lhs);
    j["rhs"] = scalar_to_json(r.rhs);
    j["equal"] = r.equal;
    j["residual"] = real_to_json(r.residual);
    j["flags"] = r.flags;
    return j;
}

Json verdict_to_json(const ConvergenceVerdict& v);
Json witness_to_json(const SeriesWitness& w);
Json domain_report_to_json(const DomainReport& r);

/// Flattens structured output to "path,value" CSV rows carrying the same
/// numeric content as the JSON rendering.
std::string json_to_csv(const Json& j);

}  // namespace fockbench

#endif
