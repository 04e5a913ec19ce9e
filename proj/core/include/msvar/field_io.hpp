#pragma once

#include <string>
#include <vector>

#include "msvar/field.hpp"

namespace msvar {

// Integer class label per pixel, row-major.
struct LabelField {
  int width = 0;
  int height = 0;
  std::vector<int> labels;

  LabelField() = default;
  LabelField(int w, int h, int fill = 0);
  int size() const { return width * height; }
  int& at(int x, int y) { return labels[static_cast<size_t>(y) * width + x]; }
  int at(int x, int y) const { return labels[static_cast<size_t>(y) * width + x]; }
};

// Binary PGM (P5). 8-bit loads normalize to [0,1] by /255, 16-bit by /65535.
// 16-bit samples are big-endian per the PNM convention.
Field load_pgm(const std::string& path);
void save_pgm8(const std::string& path, const Field& f);
void save_pgm16(const std::string& path, const Field& f);

// Indexed label maps as 8-bit PGM: the raw sample is the class index.
LabelField load_label_pgm(const std::string& path);
void save_label_pgm(const std::string& path, const LabelField& l);

// Plain text: header "FIELD w h" then w*h decimal reals.
Field load_field_text(const std::string& path);
void save_field_text(const std::string& path, const Field& f);

// RGB overlay: class colors blended at 50% opacity over the grayscale image.
// The class equal to background_class is left untinted (pass -1 to tint all).
void save_overlay_ppm(const std::string& path, const Field& image, const LabelField& labels,
                      int background_class);

}  // namespace msvar
