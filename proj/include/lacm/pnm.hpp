#pragma once

#include <stdexcept>
#include <string>

#include "lacm/field.hpp"

namespace lacm {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 8-bit binary PGM (P5, maxval <= 255); '#' comments tolerated in the header.
// Values are returned as doubles 0..255.
ScalarField read_pgm(const std::string& path);

// Mask from a PGM: pixels > 127 are foreground.
BinaryMask read_mask_pgm(const std::string& path);

// Writes P5 with maxval 255; values rounded and clamped to [0,255].
void write_pgm(const std::string& path, const ScalarField& img);

// Mask as 0/255 P5.
void write_pgm(const std::string& path, const BinaryMask& mask);

// Min-max scaled P5 (useful for phi dumps); constant fields map to 0.
void write_pgm_scaled(const std::string& path, const ScalarField& img);

// P6 overlay: grayscale image with the mask boundary drawn in red.
void write_ppm_overlay(const std::string& path, const ScalarField& img, const BinaryMask& mask);

// Raw values, one image row per line, '%.17g' fields separated by spaces.
void write_text_matrix(const std::string& path, const ScalarField& f);

}  // namespace lacm
