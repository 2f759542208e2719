#include "gcf/textio.hpp"

#include <sstream>
#include <stdexcept>

namespace gcf {

namespace {

Int parse_int(const std::string& tok) {
    try {
        return Int(tok);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not an integer: '" + tok + "'");
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

IntMatrix2 parse_matrix(const std::string& text) {
    auto rows = split(text, ';');
    if (rows.size() != 2) throw std::invalid_argument("matrix needs two ';'-separated rows");
    Int vals[4];
    std::size_t k = 0;
    for (const auto& row : rows) {
        std::istringstream in(row);
        std::string tok;
        while (in >> tok) {
            if (k >= 4) throw std::invalid_argument("matrix has more than four entries");
            vals[k++] = parse_int(tok);
        }
    }
    if (k != 4) throw std::invalid_argument("matrix needs four entries");
    return {vals[0], vals[1], vals[2], vals[3]};
}

nlohmann::json matrix_to_json(const IntMatrix2& M) {
    return nlohmann::json::array(
        {{M.m11.get_str(), M.m12.get_str()}, {M.m21.get_str(), M.m22.get_str()}});
}

IntMatrix2 matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        throw std::invalid_argument("matrix JSON must be [[a,c],[b,d]]");
    auto get = [](const nlohmann::json& v) -> Int {
        if (v.is_number_integer()) return Int(static_cast<long>(v.get<long long>()));
        if (v.is_string()) return parse_int(v.get<std::string>());
        throw std::invalid_argument("matrix entries must be integers");
    };
    return {get(j[0][0]), get(j[0][1]), get(j[1][0]), get(j[1][1])};
}

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    for (const auto& tok : split(text, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty entry in integer list");
        out.push_back(parse_int(tok));
    }
    return out;
}

std::string period_to_string(const std::vector<Int>& word) {
    std::string s = "(";
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) s += ",";
        s += word[i].get_str();
    }
    return s + ")";
}

nlohmann::json trace_to_json(const ReductionTrace& trace) {
    nlohmann::json j;
    j["input"] = matrix_to_json(trace.input);
    j["sign"] = trace.sign;
    j["T"] = matrix_to_json(trace.T);
    j["final"] = matrix_to_json(trace.final_state);
    auto steps = nlohmann::json::array();
    for (const auto& step : trace.steps) {
        steps.push_back({{"label", step_label_name(step.label)},
                         {"negated", step.negated},
                         {"conjugator", matrix_to_json(step.conjugator)},
                         {"state", matrix_to_json(step.state)}});
    }
    j["steps"] = steps;
    return j;
}

nlohmann::json sail_to_json(const SailPeriod& sail) {
    nlohmann::json j;
    j["octant"] = sail.octant;
    auto verts = nlohmann::json::array();
    for (const auto& v : sail.chain.vertices)
        verts.push_back({v.x.get_str(), v.y.get_str()});
    j["vertices"] = verts;
    auto lls = nlohmann::json::array();
    for (const auto& v : sail.lls.values) lls.push_back(v.get_str());
    j["lls"] = lls;
    j["shift"] = matrix_to_json(sail.shift);
    return j;
}

}  // namespace gcf
