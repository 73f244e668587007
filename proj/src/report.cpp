#include "json.hpp"

#include "symplectica/verify.hpp"

namespace symplectica {

using ojson = nlohmann::ordered_json;

namespace {

ojson matrix_json(const Matrix& m) {
    ojson rows = ojson::array();
    for (const auto& r : m.to_nested()) rows.push_back(r);
    return rows;
}

Matrix matrix_from(const ojson& j) {
    if (!j.is_array()) fail(ErrorCode::invalid_argument, "matrix must be an array of rows");
    if (j.empty()) return Matrix(0, 0);
    const std::size_t cols = j[0].size();
    std::vector<Elem> data;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != cols) fail(ErrorCode::invalid_argument, "ragged matrix");
        for (const auto& v : row) {
            if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 255)
                fail(ErrorCode::invalid_argument, "matrix entry out of range");
            data.push_back(static_cast<Elem>(v.get<int>()));
        }
    }
    return Matrix(j.size(), cols, std::move(data));
}

ojson failure_json(const Failure& f) {
    ojson inputs = ojson::array();
    for (const auto& m : f.inputs) inputs.push_back(matrix_json(m));
    return ojson{{"check", f.check}, {"inputs", inputs}};
}

Failure failure_from(const ojson& j) {
    if (!j.is_object() || !j.contains("check") || !j["check"].is_string() || !j.contains("inputs") ||
        !j["inputs"].is_array())
        fail(ErrorCode::invalid_argument, "malformed failure record");
    Failure f;
    f.check = j["check"].get<std::string>();
    for (const auto& m : j["inputs"]) f.inputs.push_back(matrix_from(m));
    return f;
}

ojson parse(const std::string& text) {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::invalid_argument, std::string("invalid JSON: ") + e.what());
    }
}

} // namespace

std::string report_to_json(const VerificationReport& r, bool with_elapsed) {
    ojson j;
    j["suite"] = r.suite;
    j["instance"] = ojson{{"p", r.p}, {"m", r.m}, {"k", r.k}};
    j["mode"] = std::string(mode_name(r.mode));
    if (r.seed) j["seed"] = *r.seed;
    j["checks_run"] = r.checks_run;
    j["checks_by_name"] = ojson(r.checks_by_name);
    ojson failures = ojson::array();
    for (const auto& f : r.failures) failures.push_back(failure_json(f));
    j["failures"] = failures;
    if (!r.metrics.empty()) {
        ojson metrics = ojson::object();
        for (const auto& [k, v] : r.metrics) metrics[k] = v;
        j["metrics"] = metrics;
    }
    if (with_elapsed) j["elapsed_ms"] = static_cast<long long>(r.elapsed_ms + 0.5);
    j["pass"] = r.pass;
    return j.dump(2) + "\n";
}

VerificationReport report_from_json(const std::string& text) {
    auto j = parse(text);
    try {
        VerificationReport r;
        r.suite = j.at("suite").get<std::string>();
        r.p = j.at("instance").at("p").get<unsigned>();
        r.m = j.at("instance").at("m").get<std::size_t>();
        r.k = j.at("instance").at("k").get<std::size_t>();
        auto mode = parse_mode(j.at("mode").get<std::string>());
        if (!mode) fail(ErrorCode::invalid_argument, "unknown mode");
        r.mode = *mode;
        if (j.contains("seed")) r.seed = j["seed"].get<std::uint64_t>();
        r.checks_run = j.at("checks_run").get<std::size_t>();
        if (j.contains("checks_by_name"))
            r.checks_by_name = j["checks_by_name"].get<std::map<std::string, std::size_t>>();
        for (const auto& f : j.at("failures")) r.failures.push_back(failure_from(f));
        if (j.contains("metrics"))
            for (auto it = j["metrics"].begin(); it != j["metrics"].end(); ++it)
                r.metrics[it.key()] = it.value().get<std::string>();
        if (j.contains("elapsed_ms")) r.elapsed_ms = j["elapsed_ms"].get<double>();
        r.pass = j.at("pass").get<bool>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::invalid_argument, std::string("malformed report: ") + e.what());
    }
}

std::string failure_to_json(const Failure& f) { return failure_json(f).dump() + "\n"; }

Failure failure_from_json(const std::string& text) { return failure_from(parse(text)); }

} // namespace symplectica
