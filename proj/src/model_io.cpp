#include "latdec/model_io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "latdec/errors.hpp"

namespace latdec {

namespace {

using nlohmann::ordered_json;

double score_from_json(const ordered_json& v, bool log_space, const char* where) {
    if (v.is_string()) {
        if (log_space && v.get<std::string>() == "-inf") return kLogZero;
        throw ParseError(std::string(where) +
                         ": string scores are only \"-inf\" in log-space documents");
    }
    if (!v.is_number()) {
        throw ParseError(std::string(where) + ": score is not a number");
    }
    double d = v.get<double>();
    if (std::isnan(d)) {
        throw ValidationError(std::string(where) + ": score is NaN");
    }
    if (!log_space && d < 0.0) {
        throw ValidationError(std::string(where) +
                              ": linear-domain scores must be >= 0 (zero means impossible)");
    }
    return d;
}

ordered_json score_to_json(double v, bool log_space) {
    if (log_space && is_log_zero(v)) return "-inf";
    return v;
}

}  // namespace

ModelDoc parse_model_doc(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(std::string("model: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("model: document is not an object");

    ModelDoc doc;
    doc.log_space = j.value("log_space", false);

    if (!j.contains("labels") || !j["labels"].is_array() || j["labels"].empty()) {
        throw ParseError("model: \"labels\" must be a non-empty array of names");
    }
    std::unordered_map<std::string, int> label_index;
    for (const auto& v : j["labels"]) {
        if (!v.is_string()) throw ParseError("model: label names must be strings");
        std::string name = v.get<std::string>();
        if (!label_index.emplace(name, static_cast<int>(doc.label_names.size())).second) {
            throw ParseError("model: duplicate label name \"" + name + "\"");
        }
        doc.label_names.push_back(std::move(name));
    }

    if (!j.contains("latent") || !j["latent"].is_array() || j["latent"].empty()) {
        throw ParseError("model: \"latent\" must be a non-empty array of {name, label}");
    }
    for (const auto& v : j["latent"]) {
        if (!v.is_object() || !v.contains("name") || !v.contains("label")) {
            throw ParseError("model: each latent entry needs \"name\" and \"label\"");
        }
        std::string owner = v["label"].get<std::string>();
        auto it = label_index.find(owner);
        if (it == label_index.end()) {
            throw ParseError("model: latent state owned by unknown label \"" + owner + "\"");
        }
        doc.latent_names.push_back(v["name"].get<std::string>());
        doc.latent_to_label.push_back(it->second);
    }
    const std::size_t num_latent = doc.latent_names.size();

    if (!j.contains("node_scores") || !j["node_scores"].is_array() ||
        j["node_scores"].empty()) {
        throw ParseError("model: \"node_scores\" must be a non-empty array of rows");
    }
    doc.positions = static_cast<int>(j["node_scores"].size());
    for (const auto& row : j["node_scores"]) {
        if (!row.is_array() || row.size() != num_latent) {
            throw ParseError("model: each node_scores row must have one score per latent state");
        }
        for (const auto& v : row) {
            doc.node_scores.push_back(score_from_json(v, doc.log_space, "node_scores"));
        }
    }

    if (!j.contains("edge_scores")) throw ParseError("model: missing \"edge_scores\"");
    const auto& e = j["edge_scores"];
    auto read_square = [&](const ordered_json& sq, std::vector<double>& out) {
        if (!sq.is_array() || sq.size() != num_latent) {
            throw ParseError("model: edge table must be |H| x |H|");
        }
        for (const auto& row : sq) {
            if (!row.is_array() || row.size() != num_latent) {
                throw ParseError("model: edge table must be |H| x |H|");
            }
            for (const auto& v : row) {
                out.push_back(score_from_json(v, doc.log_space, "edge_scores"));
            }
        }
    };
    if (e.is_object()) {
        if (!e.contains("tied")) {
            throw ParseError("model: edge_scores object must be {\"tied\": [[...]]}");
        }
        doc.tied_edges.emplace();
        read_square(e["tied"], *doc.tied_edges);
    } else if (e.is_array()) {
        if (e.size() != static_cast<std::size_t>(doc.positions) - 1) {
            throw ParseError("model: edge_scores must have positions-1 transition tables");
        }
        for (const auto& sq : e) read_square(sq, doc.edge_scores);
    } else {
        throw ParseError("model: edge_scores must be an array or {\"tied\": ...}");
    }

    return doc;
}

std::string serialize_model_doc(const ModelDoc& doc) {
    const std::size_t num_latent = doc.latent_names.size();
    ordered_json j;
    j["labels"] = doc.label_names;
    ordered_json latent = ordered_json::array();
    for (std::size_t h = 0; h < num_latent; ++h) {
        latent.push_back({{"name", doc.latent_names[h]},
                          {"label", doc.label_names[doc.latent_to_label[h]]}});
    }
    j["latent"] = std::move(latent);

    ordered_json nodes = ordered_json::array();
    for (int i = 0; i < doc.positions; ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t h = 0; h < num_latent; ++h) {
            row.push_back(score_to_json(doc.node_scores[i * num_latent + h], doc.log_space));
        }
        nodes.push_back(std::move(row));
    }
    j["node_scores"] = std::move(nodes);

    auto square_at = [&](const std::vector<double>& table, std::size_t base) {
        ordered_json sq = ordered_json::array();
        for (std::size_t a = 0; a < num_latent; ++a) {
            ordered_json row = ordered_json::array();
            for (std::size_t b = 0; b < num_latent; ++b) {
                row.push_back(score_to_json(table[base + a * num_latent + b], doc.log_space));
            }
            sq.push_back(std::move(row));
        }
        return sq;
    };
    if (doc.tied_edges) {
        j["edge_scores"] = ordered_json{{"tied", square_at(*doc.tied_edges, 0)}};
    } else {
        ordered_json edges = ordered_json::array();
        for (int i = 0; i + 1 < doc.positions; ++i) {
            edges.push_back(square_at(doc.edge_scores, i * num_latent * num_latent));
        }
        j["edge_scores"] = std::move(edges);
    }
    j["log_space"] = doc.log_space;
    return j.dump();
}

Model to_model(const ModelDoc& doc) {
    const int m = doc.positions;
    const int h = static_cast<int>(doc.latent_names.size());

    auto to_log = [&](double v) {
        if (doc.log_space) return v;
        return v == 0.0 ? kLogZero : std::log(v);
    };

    std::vector<double> node(doc.node_scores.size());
    for (std::size_t i = 0; i < node.size(); ++i) node[i] = to_log(doc.node_scores[i]);

    std::vector<double> edge;
    edge.reserve(static_cast<std::size_t>(m > 0 ? m - 1 : 0) * h * h);
    if (doc.tied_edges) {
        std::vector<double> one(h * static_cast<std::size_t>(h));
        for (std::size_t i = 0; i < one.size(); ++i) one[i] = to_log((*doc.tied_edges)[i]);
        for (int i = 0; i + 1 < m; ++i) edge.insert(edge.end(), one.begin(), one.end());
    } else {
        for (double v : doc.edge_scores) edge.push_back(to_log(v));
    }

    int num_labels = static_cast<int>(doc.label_names.size());
    Model model{Lattice(m, h, std::move(node), std::move(edge)),
                LabelMap(num_labels, doc.latent_to_label),
                doc.label_names, doc.latent_names};
    validate_or_throw(model.lattice, model.labels);
    return model;
}

ModelDoc from_model(const Model& model) {
    ModelDoc doc;
    doc.label_names = model.label_names;
    doc.latent_names = model.latent_names;
    doc.latent_to_label = model.labels.latent_to_label();
    doc.positions = model.lattice.num_positions();
    doc.log_space = true;
    doc.node_scores = model.lattice.node_scores();
    doc.edge_scores = model.lattice.edge_scores();
    return doc;
}

Model load_model(const std::string& text) { return to_model(parse_model_doc(text)); }

Model load_model_file(const std::string& path) { return load_model(read_file(path)); }

std::string save_model(const Model& model) { return serialize_model_doc(from_model(model)); }

std::string content_digest(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return std::string(buf);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << bytes;
    if (!out) throw ParseError("failed writing file: " + path);
}

}  // namespace latdec
