#include "mpw/planar_code.hpp"

#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace mpw {

std::string planar_code_record(const Embedding& e) {
    const int n = e.vertex_count();
    if (n >= 256) throw std::invalid_argument("planar_code: vertex labels need n < 256");
    std::string rec;
    rec.reserve(1 + n + 2 * e.edge_count());
    rec.push_back(static_cast<char>(static_cast<unsigned char>(n)));
    for (int v = 0; v < n; ++v) {
        for (int w : e.rotation(v))
            rec.push_back(static_cast<char>(static_cast<unsigned char>(w + 1)));
        rec.push_back('\0');
    }
    return rec;
}

PlanarCodeWriter::PlanarCodeWriter(std::ostream& out) : out_(out) {
    out_.write(kPlanarCodeHeader, static_cast<std::streamsize>(std::strlen(kPlanarCodeHeader)));
}

void PlanarCodeWriter::write(const Embedding& e) {
    const std::string rec = planar_code_record(e);
    out_.write(rec.data(), static_cast<std::streamsize>(rec.size()));
}

PlanarCodeReader::PlanarCodeReader(std::istream& in) : in_(in) {
    const size_t len = std::strlen(kPlanarCodeHeader);
    std::string header(len, '\0');
    in_.read(header.data(), static_cast<std::streamsize>(len));
    if (static_cast<size_t>(in_.gcount()) != len || header != kPlanarCodeHeader)
        throw std::invalid_argument("planar_code: bad header");
}

std::optional<Embedding> PlanarCodeReader::next() {
    const int first = in_.get();
    if (first == std::char_traits<char>::eof()) return std::nullopt;
    const int n = first & 0xff;
    if (n == 0) throw std::invalid_argument("planar_code: zero vertex count");
    std::string rec;
    rec.push_back(static_cast<char>(static_cast<unsigned char>(n)));
    int terminators = 0;
    while (terminators < n) {
        const int b = in_.get();
        if (b == std::char_traits<char>::eof())
            throw std::invalid_argument("planar_code: truncated record");
        rec.push_back(static_cast<char>(static_cast<unsigned char>(b)));
        if ((b & 0xff) == 0) ++terminators;
    }
    return embedding_from_code_bytes(rec);
}

void write_planar_code(std::ostream& out, std::span<const Embedding> graphs) {
    PlanarCodeWriter w(out);
    for (const auto& g : graphs) w.write(g);
}

std::vector<Embedding> read_planar_code(std::istream& in) {
    PlanarCodeReader r(in);
    std::vector<Embedding> out;
    while (auto e = r.next()) out.push_back(std::move(*e));
    return out;
}

}  // namespace mpw
