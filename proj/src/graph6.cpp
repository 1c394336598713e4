#include "ramsey/graph6.hpp"

#include <stdexcept>

namespace ramsey {

std::string encode_graph6(const EdgeSet& edges) {
    int n = edges.shape().total_vertices();
    if (n > 62) throw std::invalid_argument("graph6 short form only covers up to 62 vertices");

    std::string out;
    out.push_back(static_cast<char>(n + 63));

    int nbits = n * (n - 1) / 2;
    int acc = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (edges.contains(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (nbits % 6 != 0) {
        acc <<= 6 - nbits % 6;
        out.push_back(static_cast<char>(acc + 63));
    }
    return out;
}

EdgeSet decode_graph6(const std::string& text, const PartiteShape& shape) {
    if (text.empty()) throw std::runtime_error("graph6: empty input");
    for (char c : text)
        if (c < 63 || c > 126) throw std::runtime_error("graph6: character out of range");

    int n = text[0] - 63;
    if (n > 62) throw std::runtime_error("graph6: long form not supported");
    if (n != shape.total_vertices())
        throw std::runtime_error("graph6: vertex count does not match the shape");

    int nbits = n * (n - 1) / 2;
    size_t want = 1 + static_cast<size_t>((nbits + 5) / 6);
    if (text.size() != want) throw std::runtime_error("graph6: wrong length");

    EdgeSet out(shape);
    int bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int c = text[static_cast<size_t>(1 + bit / 6)] - 63;
            if ((c >> (5 - bit % 6)) & 1) {
                if (shape.same_part(u, v))
                    throw std::runtime_error("graph6: encoded edge lies within a part");
                out.add(u, v);
            }
        }
    }
    // trailing padding must be zero
    for (; bit < 6 * ((nbits + 5) / 6); ++bit) {
        int c = text[static_cast<size_t>(1 + bit / 6)] - 63;
        if ((c >> (5 - bit % 6)) & 1) throw std::runtime_error("graph6: nonzero padding");
    }
    return out;
}

}  // namespace ramsey
