#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mpw/embedding.hpp"

namespace mpw {

inline constexpr const char* kPlanarCodeHeader = ">>planar_code<<";

/// One graph record: byte n, then each rotation as 1-based neighbor bytes
/// ending with a 0 byte. Requires n < 256.
std::string planar_code_record(const Embedding& e);

/// Streaming writer: header once, then records.
class PlanarCodeWriter {
public:
    explicit PlanarCodeWriter(std::ostream& out);
    void write(const Embedding& e);

private:
    std::ostream& out_;
};

/// Streaming reader; validates the header eagerly and each record as read.
class PlanarCodeReader {
public:
    explicit PlanarCodeReader(std::istream& in);
    std::optional<Embedding> next();

private:
    std::istream& in_;
};

void write_planar_code(std::ostream& out, std::span<const Embedding> graphs);
std::vector<Embedding> read_planar_code(std::istream& in);

}  // namespace mpw
