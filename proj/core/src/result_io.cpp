#include "packsep/result_io.hpp"

#include <json.hpp>

namespace packsep {

using nlohmann::json;

namespace {

constexpr const char* kSeparatorFormat = "packsep-separator";
constexpr const char* kTreeFormat = "packsep-tree";

json point_json(const Point& p) { return json(std::vector<double>(p.coords().begin(), p.coords().end())); }

json config_json(const SeparatorConfig& cfg) {
    json j;
    j["c_bal"] = cfg.c_bal;
    j["max_rounds"] = cfg.max_rounds;
    j["seed"] = cfg.seed;
    if (const auto* pf = std::get_if<PaperFaithful>(&cfg.mode)) {
        j["mode"] = "paper";
        j["c_pack"] = pf->c_pack;
    } else {
        j["mode"] = "min-of-m";
        j["m"] = std::get<MinOfM>(cfg.mode).m;
    }
    return j;
}

json result_json(const SeparatorResult& r) {
    json j;
    j["sphere"] = {{"center", point_json(r.sphere.center)}, {"radius", r.sphere.radius}};
    j["base_radius"] = r.base_radius;
    j["rounds_used"] = r.rounds_used;
    j["radii_tried"] = r.radii_tried;
    j["guarantee_applies"] = r.guarantee_applies;
    j["accepted"] = r.accepted;
    j["inside"] = r.inside;
    j["crossing"] = r.crossing;
    j["outside"] = r.outside;
    return j;
}

SeparatorResult result_from(const json& j) {
    SeparatorResult r;
    r.sphere.center = Point(j.at("sphere").at("center").get<std::vector<double>>());
    r.sphere.radius = j.at("sphere").at("radius").get<double>();
    r.base_radius = j.at("base_radius").get<double>();
    r.rounds_used = j.at("rounds_used").get<int>();
    r.radii_tried = j.at("radii_tried").get<std::vector<double>>();
    r.guarantee_applies = j.at("guarantee_applies").get<bool>();
    r.accepted = j.at("accepted").get<bool>();
    r.inside = j.at("inside").get<std::vector<std::size_t>>();
    r.crossing = j.at("crossing").get<std::vector<std::size_t>>();
    r.outside = j.at("outside").get<std::vector<std::size_t>>();
    return r;
}

json node_json(const SeparatorTreeNode& node) {
    json j;
    j["depth"] = node.depth;
    j["subset"] = node.subset;
    j["stored"] = node.stored;
    if (node.is_leaf()) {
        j["leaf"] = true;
        return j;
    }
    j["leaf"] = false;
    j["separator"] = result_json(*node.result);
    j["inside"] = node.inside ? node_json(*node.inside) : json(nullptr);
    j["outside"] = node.outside ? node_json(*node.outside) : json(nullptr);
    return j;
}

std::unique_ptr<SeparatorTreeNode> node_from(const json& j) {
    auto node = std::make_unique<SeparatorTreeNode>();
    node->depth = j.at("depth").get<int>();
    node->subset = j.at("subset").get<std::vector<std::size_t>>();
    node->stored = j.at("stored").get<std::vector<std::size_t>>();
    if (j.at("leaf").get<bool>()) return node;
    node->result = result_from(j.at("separator"));
    if (!j.at("inside").is_null()) node->inside = node_from(j.at("inside"));
    if (!j.at("outside").is_null()) node->outside = node_from(j.at("outside"));
    return node;
}

json parse_checked(const std::string& text, const char* expected_format) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ResultFormatError(std::string("result file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("format") || !j.contains("version"))
        throw ResultFormatError("result file lacks format/version fields");
    if (j["version"] != kResultFormatVersion) throw ResultFormatError("unsupported result format version");
    if (expected_format && j["format"] != expected_format)
        throw ResultFormatError(std::string("expected a ") + expected_format + " file");
    return j;
}

template <typename F>
auto rethrow_as_format_error(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ResultFormatError(std::string("malformed result file: ") + e.what());
    }
}

}  // namespace

std::string separator_to_json(const SeparatorResult& result, const SeparatorConfig& cfg, std::size_t n) {
    json j = result_json(result);
    j["format"] = kSeparatorFormat;
    j["version"] = kResultFormatVersion;
    j["n"] = n;
    j["config"] = config_json(cfg);
    return j.dump(2) + "\n";
}

SeparatorResult separator_from_json(const std::string& text) {
    const json j = parse_checked(text, kSeparatorFormat);
    return rethrow_as_format_error([&] { return result_from(j); });
}

std::string tree_to_json(const SeparatorTreeNode& root, const SeparatorConfig& cfg, std::size_t n, std::size_t leaf_size) {
    json j;
    j["format"] = kTreeFormat;
    j["version"] = kResultFormatVersion;
    j["n"] = n;
    j["leaf_size"] = leaf_size;
    j["config"] = config_json(cfg);
    j["root"] = node_json(root);
    return j.dump(2) + "\n";
}

std::unique_ptr<SeparatorTreeNode> tree_from_json(const std::string& text) {
    const json j = parse_checked(text, kTreeFormat);
    return rethrow_as_format_error([&] { return node_from(j.at("root")); });
}

ResultHeader read_result_header(const std::string& text) {
    const json j = parse_checked(text, nullptr);
    return rethrow_as_format_error([&] {
        ResultHeader h;
        const std::string format = j.at("format").get<std::string>();
        if (format == kSeparatorFormat) {
            h.kind = ResultKind::Separator;
        } else if (format == kTreeFormat) {
            h.kind = ResultKind::Tree;
        } else {
            throw ResultFormatError("unknown result format '" + format + "'");
        }
        h.c_bal = j.at("config").at("c_bal").get<int>();
        h.n = j.at("n").get<std::size_t>();
        return h;
    });
}

std::string packedness_to_json(const PackednessEstimate& estimate, std::size_t n) {
    json j;
    j["n"] = n;
    j["c_hat"] = estimate.c_hat;
    j["witness_center"] = point_json(estimate.witness_center);
    j["witness_radius"] = estimate.witness_radius;
    return j.dump(2) + "\n";
}

}  // namespace packsep
