#pragma once

#include <string>

#include "textclf/models.hpp"

namespace textclf {

enum class ModelFileFormat { Binary, Json };

inline constexpr std::uint32_t kModelFormatVersion = 1;

// Single-file model persistence. The binary layout is an 8-byte magic,
// a little-endian u32 format version, and length-prefixed named sections;
// doubles travel as little-endian IEEE-754 bits, so load(save(p)) predicts
// bit-identically. The JSON form is a debugging escape hatch.
void save_model(const TrainedPipeline& pipeline, const std::string& path,
                ModelFileFormat format = ModelFileFormat::Binary);

// Detects the format from the leading bytes.
TrainedPipeline load_model(const std::string& path);

// (De)serialization against byte buffers, exposed for tests.
std::string serialize_model(const TrainedPipeline& pipeline, ModelFileFormat format);
TrainedPipeline deserialize_model(const std::string& bytes);

}  // namespace textclf
