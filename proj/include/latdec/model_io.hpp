#ifndef LATDEC_MODEL_IO_HPP
#define LATDEC_MODEL_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "latdec/model.hpp"

namespace latdec {

// In-memory form of the model interchange document. Scores are kept in the
// document's own domain (linear by default, natural log when `log_space`),
// so writers with exact linear values (the generator, the clique reduction)
// serialize them untouched and log-space documents round-trip bit-exactly.
struct ModelDoc {
    std::vector<std::string> label_names;
    std::vector<std::string> latent_names;
    std::vector<int> latent_to_label;
    int positions = 0;
    bool log_space = false;
    std::vector<double> node_scores;  // positions x |H|, row-major
    // Either per-position edges ((positions-1) x |H| x |H|) or one tied
    // |H| x |H| table applied to every transition.
    std::vector<double> edge_scores;
    std::optional<std::vector<double>> tied_edges;
};

// Parses the JSON interchange format. Shape problems raise ParseError;
// out-of-domain scores (negative linear values, NaN) raise ValidationError.
ModelDoc parse_model_doc(const std::string& text);

// Serializes back to JSON. Finite doubles round-trip exactly; in log space
// the zero sentinel is written as the string "-inf".
std::string serialize_model_doc(const ModelDoc& doc);

// Converts to the runtime model (log-domain lattice + label map) and
// validates it. Linear scores of exactly 0 become -inf.
Model to_model(const ModelDoc& doc);

// Log-space document for an in-memory model; load(save(x)) == x bit-exactly.
ModelDoc from_model(const Model& model);

Model load_model(const std::string& text);
Model load_model_file(const std::string& path);
std::string save_model(const Model& model);

// FNV-1a 64-bit content hash, as 16 hex digits. Stable across runs for
// identical bytes.
std::string content_digest(const std::string& bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

}  // namespace latdec

#endif  // LATDEC_MODEL_IO_HPP
