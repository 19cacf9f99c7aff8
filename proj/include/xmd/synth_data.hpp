#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace xmd {

enum class Modality : std::int32_t { Visible = 0, Infrared = 1 };
enum class Split : std::int32_t { Train = 0, TestQuery = 1, TestGallery = 2 };

// One synthetic sample. Pixels are channel-major [3][H][W] floats in [0,1];
// infrared images carry the same plane in all three channels. The identity
// field is hidden ground truth, used only by evaluation and label-quality
// metrics.
struct SynthImage {
    std::vector<float> pixels;
    int height = 0;
    int width = 0;
    Modality modality = Modality::Visible;
    int camera = 0;
    int identity = 0;
    Split split = Split::Train;

    float at(int c, int y, int x) const {
        return pixels[static_cast<std::size_t>((c * height + y) * width + x)];
    }
    float& at(int c, int y, int x) {
        return pixels[static_cast<std::size_t>((c * height + y) * width + x)];
    }
};

struct DatasetSpec {
    int num_train_identities = 30;
    int num_test_identities = 10;
    int images_per_identity_per_modality = 20;
    int height = 8;
    int width = 8;
    int num_cameras = 2;  // per modality
    int palette_count = 5;
    double noise_std = 0.05;
    std::uint64_t seed = 7;

    int num_identities() const { return num_train_identities + num_test_identities; }
    void validate() const;  // throws InvalidSpecError
};

// Palette shared by several identities: the color of identity i is
// palette i % palette_count. This is the modality-specific spurious cue.
int palette_of_identity(int identity, const DatasetSpec& spec);

// Evenly spaced saturated colors; deterministic, no RNG involved.
std::array<double, 3> palette_color(int palette_id, int palette_count);

// Deterministic per-camera brightness offset in {-0.05, +0.05}.
double camera_tint(int camera);

// Generates the full dataset. Visible images are the identity's base pattern
// colorized by its palette; infrared images are the gamma-0.7 tone curve of
// the same pattern replicated to three channels. Train/test identities are
// disjoint; test infrared goes to the query split and test visible to the
// gallery split.
std::vector<SynthImage> generate(const DatasetSpec& spec);

// Empirical train-split modality proportions (P(C=V), P(C=I)).
std::pair<double, double> modality_priors(const std::vector<SynthImage>& dataset);

}  // namespace xmd
