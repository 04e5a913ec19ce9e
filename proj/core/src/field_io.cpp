#include "msvar/field_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "msvar/errors.hpp"

namespace msvar {

LabelField::LabelField(int w, int h, int fill) : width(w), height(h) {
  if (w < 1 || h < 1) throw std::invalid_argument("LabelField dimensions must be >= 1");
  labels.assign(static_cast<size_t>(w) * h, fill);
}

namespace {

// Reads one PNM header token, skipping whitespace and '#' comments.
std::string next_token(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (!std::isspace(c)) {
      tok.push_back(static_cast<char>(c));
      break;
    }
  }
  while ((c = in.get()) != EOF && !std::isspace(c)) tok.push_back(static_cast<char>(c));
  return tok;
}

struct PgmRaw {
  int width = 0;
  int height = 0;
  int maxval = 0;
  std::vector<uint16_t> samples;
};

PgmRaw read_pgm_raw(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open PGM");
  if (next_token(in) != "P5") throw IoError(path, "not a binary PGM (P5)");
  PgmRaw r;
  try {
    r.width = std::stoi(next_token(in));
    r.height = std::stoi(next_token(in));
    r.maxval = std::stoi(next_token(in));
  } catch (const std::exception&) {
    throw IoError(path, "malformed PGM header");
  }
  if (r.width < 1 || r.height < 1 || r.maxval < 1 || r.maxval > 65535)
    throw IoError(path, "invalid PGM dimensions or maxval");
  const size_t n = static_cast<size_t>(r.width) * r.height;
  r.samples.resize(n);
  if (r.maxval < 256) {
    std::vector<uint8_t> buf(n);
    in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(n));
    if (static_cast<size_t>(in.gcount()) != n) throw IoError(path, "truncated PGM data");
    for (size_t i = 0; i < n; ++i) r.samples[i] = buf[i];
  } else {
    std::vector<uint8_t> buf(2 * n);
    in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(2 * n));
    if (static_cast<size_t>(in.gcount()) != 2 * n) throw IoError(path, "truncated PGM data");
    for (size_t i = 0; i < n; ++i)
      r.samples[i] = static_cast<uint16_t>((buf[2 * i] << 8) | buf[2 * i + 1]);
  }
  return r;
}

void write_pgm_raw(const std::string& path, int width, int height, int maxval,
                   const std::vector<uint16_t>& samples) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path, "cannot write PGM");
  out << "P5\n" << width << " " << height << "\n" << maxval << "\n";
  if (maxval < 256) {
    std::vector<uint8_t> buf(samples.size());
    for (size_t i = 0; i < samples.size(); ++i) buf[i] = static_cast<uint8_t>(samples[i]);
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  } else {
    std::vector<uint8_t> buf(2 * samples.size());
    for (size_t i = 0; i < samples.size(); ++i) {
      buf[2 * i] = static_cast<uint8_t>(samples[i] >> 8);
      buf[2 * i + 1] = static_cast<uint8_t>(samples[i] & 0xff);
    }
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  }
  if (!out) throw IoError(path, "short write");
}

uint16_t quantize(double v, int maxval) {
  double q = std::clamp(v, 0.0, 1.0) * maxval;
  return static_cast<uint16_t>(std::lround(q));
}

}  // namespace

Field load_pgm(const std::string& path) {
  PgmRaw r = read_pgm_raw(path);
  Field f(r.width, r.height);
  const double scale = 1.0 / r.maxval;
  for (size_t i = 0; i < r.samples.size(); ++i) f.data[i] = r.samples[i] * scale;
  return f;
}

void save_pgm8(const std::string& path, const Field& f) {
  std::vector<uint16_t> s(f.data.size());
  for (size_t i = 0; i < s.size(); ++i) s[i] = quantize(f.data[i], 255);
  write_pgm_raw(path, f.width, f.height, 255, s);
}

void save_pgm16(const std::string& path, const Field& f) {
  std::vector<uint16_t> s(f.data.size());
  for (size_t i = 0; i < s.size(); ++i) s[i] = quantize(f.data[i], 65535);
  write_pgm_raw(path, f.width, f.height, 65535, s);
}

LabelField load_label_pgm(const std::string& path) {
  PgmRaw r = read_pgm_raw(path);
  LabelField l(r.width, r.height);
  for (size_t i = 0; i < r.samples.size(); ++i) l.labels[i] = r.samples[i];
  return l;
}

void save_label_pgm(const std::string& path, const LabelField& l) {
  std::vector<uint16_t> s(l.labels.size());
  for (size_t i = 0; i < s.size(); ++i) {
    if (l.labels[i] < 0 || l.labels[i] > 255)
      throw std::invalid_argument("save_label_pgm: class index out of 8-bit range");
    s[i] = static_cast<uint16_t>(l.labels[i]);
  }
  write_pgm_raw(path, l.width, l.height, 255, s);
}

Field load_field_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot open field text");
  std::string magic;
  int w = 0, h = 0;
  in >> magic >> w >> h;
  if (magic != "FIELD" || !in) throw IoError(path, "malformed FIELD header");
  if (w < 1 || h < 1) throw IoError(path, "invalid FIELD dimensions");
  Field f(w, h);
  for (double& v : f.data) {
    if (!(in >> v)) throw IoError(path, "truncated FIELD data");
  }
  return f;
}

void save_field_text(const std::string& path, const Field& f) {
  std::ofstream out(path);
  if (!out) throw IoError(path, "cannot write field text");
  out << "FIELD " << f.width << " " << f.height << "\n";
  char buf[64];
  for (int y = 0; y < f.height; ++y) {
    for (int x = 0; x < f.width; ++x) {
      std::snprintf(buf, sizeof(buf), "%.17g", f.at(x, y));
      out << buf << (x + 1 < f.width ? ' ' : '\n');
    }
  }
  if (!out) throw IoError(path, "short write");
}

void save_overlay_ppm(const std::string& path, const Field& image, const LabelField& labels,
                      int background_class) {
  if (image.width != labels.width || image.height != labels.height)
    throw std::invalid_argument("save_overlay_ppm: dimension mismatch");
  static const uint8_t palette[][3] = {
      {230, 60, 60}, {60, 200, 90}, {70, 110, 230}, {230, 200, 50},
      {200, 70, 200}, {60, 200, 200}, {240, 140, 40}, {150, 150, 150},
  };
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path, "cannot write PPM");
  out << "P6\n" << image.width << " " << image.height << "\n255\n";
  std::vector<uint8_t> buf(static_cast<size_t>(image.size()) * 3);
  for (int i = 0; i < image.size(); ++i) {
    const uint8_t gray = static_cast<uint8_t>(quantize(image.data[i], 255));
    const int cls = labels.labels[i];
    uint8_t r = gray, g = gray, b = gray;
    if (cls != background_class) {
      const uint8_t* col = palette[static_cast<size_t>(cls) % (sizeof(palette) / 3)];
      r = static_cast<uint8_t>((gray + col[0]) / 2);
      g = static_cast<uint8_t>((gray + col[1]) / 2);
      b = static_cast<uint8_t>((gray + col[2]) / 2);
    }
    buf[3 * static_cast<size_t>(i)] = r;
    buf[3 * static_cast<size_t>(i) + 1] = g;
    buf[3 * static_cast<size_t>(i) + 2] = b;
  }
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!out) throw IoError(path, "short write");
}

}  // namespace msvar
