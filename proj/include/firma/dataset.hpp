#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "firma/errors.hpp"
#include "firma/rng.hpp"

namespace firma {

// A labeled dataset held fully in memory. Features are row-major
// [n_samples x dim], already normalized into [0,1]; labels are class ids
// in {0..n_classes-1}.
struct LabeledDataset {
    std::string name;
    int dim = 0;
    int n_classes = 0;
    std::vector<double> features;  // n_samples * dim
    std::vector<int> labels;

    int size() const { return static_cast<int>(labels.size()); }
    const double* sample(int i) const { return features.data() + static_cast<std::size_t>(i) * dim; }
};

namespace detail {

inline std::uint32_t read_be32(std::istream& in, const std::string& what) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    if (!in) throw FormatError("truncated " + what);
    return (std::uint32_t(b[0]) << 24) | (std::uint32_t(b[1]) << 16) |
           (std::uint32_t(b[2]) << 8) | std::uint32_t(b[3]);
}

}  // namespace detail

// IDX binary pair (images + labels), the layout used by MNIST and
// Fashion-MNIST:
//   images: 0x00000803, count, rows, cols, then count*rows*cols pixel bytes
//   labels: 0x00000801, count, then count label bytes
// Magic numbers are big-endian 32-bit. Pixels are scaled by 1/255.
inline LabeledDataset load_idx(const std::string& path_images, const std::string& path_labels) {
    std::ifstream fi(path_images, std::ios::binary);
    if (!fi) throw FormatError("cannot open " + path_images);
    std::ifstream fl(path_labels, std::ios::binary);
    if (!fl) throw FormatError("cannot open " + path_labels);

    const std::uint32_t magic_i = detail::read_be32(fi, "image header");
    if (magic_i != 0x00000803u)
        throw FormatError("bad image magic in " + path_images + " (want 0x00000803)");
    const std::uint32_t n_images = detail::read_be32(fi, "image header");
    const std::uint32_t rows = detail::read_be32(fi, "image header");
    const std::uint32_t cols = detail::read_be32(fi, "image header");

    const std::uint32_t magic_l = detail::read_be32(fl, "label header");
    if (magic_l != 0x00000801u)
        throw FormatError("bad label magic in " + path_labels + " (want 0x00000801)");
    const std::uint32_t n_labels = detail::read_be32(fl, "label header");

    if (n_images != n_labels)
        throw ConsistencyError("image/label count mismatch: " + std::to_string(n_images) +
                               " vs " + std::to_string(n_labels));
    if (n_images == 0) throw ConsistencyError("IDX pair declares zero samples");

    LabeledDataset ds;
    ds.name = "idx";
    ds.dim = static_cast<int>(rows * cols);

    std::vector<unsigned char> pixels(static_cast<std::size_t>(n_images) * ds.dim);
    fi.read(reinterpret_cast<char*>(pixels.data()), static_cast<std::streamsize>(pixels.size()));
    if (!fi) throw FormatError("truncated pixel data in " + path_images);

    std::vector<unsigned char> labels(n_images);
    fl.read(reinterpret_cast<char*>(labels.data()), static_cast<std::streamsize>(labels.size()));
    if (!fl) throw FormatError("truncated label data in " + path_labels);

    ds.features.resize(pixels.size());
    for (std::size_t i = 0; i < pixels.size(); ++i) ds.features[i] = pixels[i] / 255.0;
    ds.labels.assign(labels.begin(), labels.end());
    ds.n_classes = *std::max_element(ds.labels.begin(), ds.labels.end()) + 1;
    return ds;
}

// 8x8 digits CSV: 64 comma-separated pixel values in 0..16 followed by a
// label in 0..9. Pixels are scaled by 1/16; C is fixed at 10.
inline LabeledDataset load_digits_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw FormatError("cannot open " + path);

    LabeledDataset ds;
    ds.name = "digits";
    ds.dim = 64;
    ds.n_classes = 10;

    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> vals;
        vals.reserve(65);
        while (std::getline(ss, cell, ',')) vals.push_back(std::stod(cell));
        if (vals.size() != 65)
            throw FormatError(path + ":" + std::to_string(lineno) + ": expected 65 values, got " +
                              std::to_string(vals.size()));
        for (int j = 0; j < 64; ++j) ds.features.push_back(vals[j] / 16.0);
        const int label = static_cast<int>(vals[64]);
        if (label < 0 || label >= 10)
            throw FormatError(path + ":" + std::to_string(lineno) + ": label out of range");
        ds.labels.push_back(label);
    }
    if (ds.labels.empty()) throw FormatError(path + ": no rows");
    return ds;
}

// CIFAR-10 binary batch: 3073-byte records, 1 label byte + 3072 pixel bytes.
// Multiple batch files may be concatenated by passing several paths.
inline LabeledDataset load_cifar10(const std::vector<std::string>& paths) {
    constexpr int kRecord = 3073;
    constexpr int kPixels = 3072;
    LabeledDataset ds;
    ds.name = "cifar10";
    ds.dim = kPixels;
    for (const auto& path : paths) {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw FormatError("cannot open " + path);
        f.seekg(0, std::ios::end);
        const auto bytes = static_cast<std::size_t>(f.tellg());
        f.seekg(0, std::ios::beg);
        if (bytes == 0 || bytes % kRecord != 0)
            throw FormatError(path + ": size is not a multiple of 3073 bytes");
        std::vector<unsigned char> raw(bytes);
        f.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(bytes));
        if (!f) throw FormatError("read failure on " + path);
        const std::size_t n = bytes / kRecord;
        for (std::size_t i = 0; i < n; ++i) {
            const unsigned char* rec = raw.data() + i * kRecord;
            ds.labels.push_back(rec[0]);
            for (int j = 0; j < kPixels; ++j) ds.features.push_back(rec[1 + j] / 255.0);
        }
    }
    if (ds.labels.empty()) throw ConsistencyError("CIFAR-10 input contains zero records");
    ds.n_classes = *std::max_element(ds.labels.begin(), ds.labels.end()) + 1;
    return ds;
}

// Synthetic Gaussian blobs: C clusters with seeded centers, labels assigned
// round-robin (balanced within one sample), features clamped into [0,1].
inline LabeledDataset synth_blobs(int n_samples, int dim, int n_classes, double spread,
                                  std::uint64_t seed) {
    if (n_samples < n_classes || dim < 1 || n_classes < 1 || spread <= 0.0)
        throw ConfigError("synth_blobs: need n_samples >= C, dim >= 1, spread > 0");

    Rng rng(derive_seed(seed, hash_str("blobs")));
    std::vector<double> centers(static_cast<std::size_t>(n_classes) * dim);
    for (auto& c : centers) c = rng.uniform(0.2, 0.8);

    LabeledDataset ds;
    ds.name = "blobs";
    ds.dim = dim;
    ds.n_classes = n_classes;
    ds.features.reserve(static_cast<std::size_t>(n_samples) * dim);
    ds.labels.reserve(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        const int label = i % n_classes;
        ds.labels.push_back(label);
        const double* c = centers.data() + static_cast<std::size_t>(label) * dim;
        for (int j = 0; j < dim; ++j) {
            ds.features.push_back(std::clamp(c[j] + spread * rng.normal(), 0.0, 1.0));
        }
    }
    return ds;
}

}  // namespace firma
