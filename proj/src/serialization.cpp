#include "fockbench/serialization.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

namespace fockbench {

std::string rational_to_string(const BigRational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

BigRational rational_from_string(const std::string& s) {
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return BigRational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw Error("zero denominator in rational '" + s + "'");
        return BigRational(num, den);
    } catch (const std::exception&) {
        throw Error("cannot parse rational '" + s + "'");
    }
}

namespace {

bool fits_int64(const BigInt& n) {
    return n >= std::numeric_limits<std::int64_t>::min() &&
           n <= std::numeric_limits<std::int64_t>::max();
}

Json exact_real_component(const BigRational& r) {
    if (denominator(r) == 1 && fits_int64(numerator(r)))
        return numerator(r).convert_to<std::int64_t>();
    return rational_to_string(r);
}

}  // namespace

Json real_to_json(const BigRational& r) { return exact_real_component(r); }

Json real_to_json(double r) { return r; }

Json scalar_to_json(const GaussianRational& z) {
    if (z.imag() == 0) return exact_real_component(z.real());
    Json j;
    j["re"] = exact_real_component(z.real());
    j["im"] = exact_real_component(z.imag());
    return j;
}

Json scalar_to_json(const std::complex<double>& z) {
    if (z.imag() == 0.0) return z.real();
    Json j;
    j["re"] = z.real();
    j["im"] = z.imag();
    return j;
}

BigRational real_from_json_exact(const Json& j) {
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    if (j.is_number_integer()) return BigRational(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return BigRational(BigInt(j.get<std::uint64_t>()));
    if (j.is_number_float())
        throw Error("the exact backend cannot ingest a floating-point literal; "
                    "write it as a \"p/q\" string");
    throw Error("expected a rational scalar component");
}

GaussianRational scalar_from_json_exact(const Json& j) {
    if (j.is_object()) return {real_from_json_exact(j.at("re")), real_from_json_exact(j.at("im"))};
    return {real_from_json_exact(j)};
}

std::complex<double> scalar_from_json_float(const Json& j) {
    auto component = [](const Json& c) -> double {
        if (c.is_string()) return rational_to_double(rational_from_string(c.get<std::string>()));
        if (c.is_number()) return c.get<double>();
        throw Error("expected a numeric scalar component");
    };
    if (j.is_object()) return {component(j.at("re")), component(j.at("im"))};
    return {component(j), 0.0};
}

Json verdict_to_json(const ConvergenceVerdict& v) {
    Json j;
    j["converges"] = v.converges;
    j["rule"] = convergence_rule_name(v.rule);
    j["note"] = v.note;
    return j;
}

namespace {

Json sum_component(const std::variant<BigRational, double>& v) {
    if (std::holds_alternative<BigRational>(v)) return real_to_json(std::get<BigRational>(v));
    return real_to_json(std::get<double>(v));
}

}  // namespace

Json witness_to_json(const SeriesWitness& w) {
    Json j;
    j["series"] = w.series;
    j["N"] = w.N;
    j["sum"] = sum_component(w.sum);
    j["tail_bound"] = w.tail_bound ? sum_component(*w.tail_bound) : Json(nullptr);
    if (w.crossed_threshold) j["crossed_threshold"] = *w.crossed_threshold;
    return j;
}

Json domain_report_to_json(const DomainReport& r) {
    Json j;
    j["lambda_sq"] = render_seq_spec(r.lambda_sq);
    j["in_fock"] = verdict_to_json(r.in_fock);
    j["in_sqrtN_domain"] = verdict_to_json(r.in_sqrtN_domain);
    if (r.annihilator_uniform_bound) {
        j["K"] = real_to_json(*r.annihilator_uniform_bound);
        j["K_attained_at"] = r.bound_attained_at;
        if (r.bound_is_upper_estimate) j["K_is_upper_estimate"] = true;
    } else {
        j["K"] = nullptr;
    }
    Json ws = Json::array();
    for (const auto& w : r.witnesses) ws.push_back(witness_to_json(w));
    j["witnesses"] = std::move(ws);
    return j;
}

namespace {

void flatten(const Json& j, const std::string& path, std::string& out) {
    auto escape = [](std::string s) {
        if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += '"';
            q += c;
        }
        return q + "\"";
    };
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j.at(i), path + "[" + std::to_string(i) + "]", out);
    } else {
        std::string value = j.is_string() ? j.get<std::string>() : j.dump();
        out += escape(path) + "," + escape(value) + "\n";
    }
}

}  // namespace

std::string json_to_csv(const Json& j) {
    std::string out = "key,value\n";
    flatten(j, "", out);
    return out;
}

}  // namespace fockbench
