#include "fcgram/study.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

#include "fcgram/errors.hpp"

namespace fcgram {

using nlohmann::json;

std::string study_to_json(const StudyConfig& cfg) {
    json j;
    j["function"] = cfg.function_id;
    j["k"] = cfg.k;
    j["eps"] = cfg.eps;
    j["d"] = cfg.d;
    j["b"] = cfg.b.str();
    j["n_list"] = cfg.n_list;
    j["method"] = method_name(cfg.method);
    j["c_rule"] = cfg.c_rule;
    j["s"] = cfg.s;
    j["n_eval"] = cfg.N_eval;
    j["ls"] = {{"z", cfg.Z}, {"n_over", cfg.n_over}, {"m", cfg.M},
               {"svd_cutoff", cfg.svd_cutoff}};
    return j.dump(2) + "\n";
}

StudyConfig study_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw IoError(std::string("bad manifest JSON: ") + e.what());
    }
    try {
        StudyConfig cfg;
        cfg.function_id = j.at("function").get<std::string>();
        cfg.k = j.at("k").get<double>();
        cfg.eps = j.at("eps").get<double>();
        cfg.d = j.at("d").get<int>();
        cfg.b = Rational::parse(j.at("b").get<std::string>());
        cfg.n_list = j.at("n_list").get<std::vector<int>>();
        cfg.method = parse_method(j.at("method").get<std::string>());
        cfg.c_rule = j.at("c_rule").get<std::string>();
        cfg.s = j.at("s").get<int>();
        cfg.N_eval = j.at("n_eval").get<int>();
        const auto& ls = j.at("ls");
        cfg.Z = ls.at("z").get<int>();
        cfg.n_over = ls.at("n_over").get<int>();
        cfg.M = ls.at("m").get<int>();
        cfg.svd_cutoff = ls.at("svd_cutoff").get<double>();
        return cfg;
    } catch (const json::exception& e) {
        throw IoError(std::string("manifest missing field: ") + e.what());
    }
}

void save_manifest(const std::string& path, const StudyConfig& cfg) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << study_to_json(cfg);
    if (!out) throw IoError("write failed for '" + path + "'");
}

StudyConfig load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return study_from_json(buf.str());
}

}  // namespace fcgram
