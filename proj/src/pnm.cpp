#include "lacm/pnm.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

namespace lacm {

namespace {

// Reads the next header token, skipping whitespace and '#' comments.
std::string next_token(std::istream& in) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {
            }
        } else if (!isspace(c)) {
            tok.push_back(static_cast<char>(c));
            while ((c = in.peek()) != EOF && !isspace(c) && c != '#') tok.push_back(static_cast<char>(in.get()));
            return tok;
        }
    }
    throw IoError("pgm: truncated header");
}

int header_int(std::istream& in, const char* what) {
    std::string tok = next_token(in);
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw IoError(std::string("pgm: bad ") + what + " field '" + tok + "'");
    }
}

std::vector<uint8_t> read_p5(const std::string& path, int& w, int& h) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    if (next_token(in) != "P5") throw IoError("'" + path + "': not a binary PGM (P5)");
    w = header_int(in, "width");
    h = header_int(in, "height");
    int maxval = header_int(in, "maxval");
    if (w < 2 || h < 2) throw IoError("'" + path + "': image too small");
    if (maxval < 1 || maxval > 255) throw IoError("'" + path + "': only 8-bit PGM supported");
    in.get();  // single whitespace after maxval
    std::vector<uint8_t> data(static_cast<size_t>(w) * h);
    in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (in.gcount() != static_cast<std::streamsize>(data.size()))
        throw IoError("'" + path + "': truncated pixel data");
    return data;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    return out;
}

void finish(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw IoError("write failed for '" + path + "'");
}

uint8_t to_byte(double v) {
    double r = std::rint(v);
    if (r < 0.0) r = 0.0;
    if (r > 255.0) r = 255.0;
    return static_cast<uint8_t>(r);
}

}  // namespace

ScalarField read_pgm(const std::string& path) {
    int w = 0, h = 0;
    std::vector<uint8_t> data = read_p5(path, w, h);
    ScalarField f(w, h);
    for (size_t p = 0; p < data.size(); ++p) f.values[p] = data[p];
    return f;
}

BinaryMask read_mask_pgm(const std::string& path) {
    int w = 0, h = 0;
    std::vector<uint8_t> data = read_p5(path, w, h);
    BinaryMask m(w, h);
    for (size_t p = 0; p < data.size(); ++p) m.values[p] = data[p] > 127 ? 1 : 0;
    return m;
}

void write_pgm(const std::string& path, const ScalarField& img) {
    std::ofstream out = open_out(path);
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    for (double v : img.values) out.put(static_cast<char>(to_byte(v)));
    finish(out, path);
}

void write_pgm(const std::string& path, const BinaryMask& mask) {
    std::ofstream out = open_out(path);
    out << "P5\n" << mask.width << " " << mask.height << "\n255\n";
    for (uint8_t v : mask.values) out.put(static_cast<char>(v ? 255 : 0));
    finish(out, path);
}

void write_pgm_scaled(const std::string& path, const ScalarField& img) {
    double lo = img.min(), hi = img.max();
    ScalarField scaled(img.width, img.height);
    if (hi > lo)
        for (size_t p = 0; p < img.values.size(); ++p)
            scaled.values[p] = 255.0 * (img.values[p] - lo) / (hi - lo);
    write_pgm(path, scaled);
}

void write_ppm_overlay(const std::string& path, const ScalarField& img, const BinaryMask& mask) {
    if (img.width != mask.width || img.height != mask.height)
        throw std::invalid_argument("overlay: image/mask dimensions differ");
    std::ofstream out = open_out(path);
    out << "P6\n" << img.width << " " << img.height << "\n255\n";
    const int h = img.height, w = img.width;
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) {
            bool fg = mask.at(i, j) != 0;
            bool boundary = fg && ((i > 0 && !mask.at(i - 1, j)) || (i < h - 1 && !mask.at(i + 1, j)) ||
                                   (j > 0 && !mask.at(i, j - 1)) || (j < w - 1 && !mask.at(i, j + 1)));
            uint8_t v = to_byte(img.at(i, j));
            if (boundary) {
                out.put(static_cast<char>(255)).put(static_cast<char>(0)).put(static_cast<char>(0));
            } else {
                out.put(static_cast<char>(v)).put(static_cast<char>(v)).put(static_cast<char>(v));
            }
        }
    }
    finish(out, path);
}

void write_text_matrix(const std::string& path, const ScalarField& f) {
    std::ofstream out = open_out(path);
    char buf[32];
    for (int i = 0; i < f.height; ++i) {
        for (int j = 0; j < f.width; ++j) {
            snprintf(buf, sizeof buf, "%.17g", f.at(i, j));
            if (j) out << ' ';
            out << buf;
        }
        out << '\n';
    }
    finish(out, path);
}

}  // namespace lacm
