#include "xmd/synth_data.hpp"

#include <algorithm>
#include <cmath>

#include "xmd/errors.hpp"
#include "xmd/rng.hpp"

namespace xmd {
namespace {

// Visible pixel = palette_c * (kColorFloor + kColorSpan * pattern). The floor
// keeps the palette readable even on dark pattern pixels, which is what makes
// color a strong within-visible cue.
constexpr double kColorFloor = 0.25;
constexpr double kColorSpan = 0.75;
constexpr double kInfraredGamma = 0.7;

double clip01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

void DatasetSpec::validate() const {
    if (num_train_identities < 1 || num_test_identities < 1 ||
        images_per_identity_per_modality < 1 || height < 1 || width < 1 ||
        num_cameras < 1 || palette_count < 1)
        throw InvalidSpecError("dataset spec: all counts must be >= 1");
    if (palette_count >= num_identities())
        throw InvalidSpecError(
            "dataset spec: palette_count must be < num identities (palette sharing)");
    if (noise_std < 0.0)
        throw InvalidSpecError("dataset spec: noise_std must be >= 0");
}

int palette_of_identity(int identity, const DatasetSpec& spec) {
    return identity % spec.palette_count;
}

std::array<double, 3> palette_color(int palette_id, int palette_count) {
    // HSV wheel with s=0.75, v=1 keeps colors far apart for moderate counts.
    const double h = 6.0 * static_cast<double>(palette_id) / palette_count;
    const double s = 0.75;
    const int sector = static_cast<int>(h) % 6;
    const double f = h - std::floor(h);
    const double p = 1.0 - s;
    const double q = 1.0 - s * f;
    const double t = 1.0 - s * (1.0 - f);
    switch (sector) {
        case 0: return {1.0, t, p};
        case 1: return {q, 1.0, p};
        case 2: return {p, 1.0, t};
        case 3: return {p, q, 1.0};
        case 4: return {t, p, 1.0};
        default: return {1.0, p, q};
    }
}

double camera_tint(int camera) {
    return (camera % 2 == 0) ? -0.05 : 0.05;
}

std::vector<SynthImage> generate(const DatasetSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);
    const int hw = spec.height * spec.width;

    std::vector<SynthImage> dataset;
    dataset.reserve(static_cast<std::size_t>(spec.num_identities()) * 2 *
                    spec.images_per_identity_per_modality);

    for (int id = 0; id < spec.num_identities(); ++id) {
        const bool is_test = id >= spec.num_train_identities;
        std::vector<double> pattern(static_cast<std::size_t>(hw));
        for (auto& p : pattern) p = rng.uniform();
        const auto color = palette_color(palette_of_identity(id, spec), spec.palette_count);

        for (const Modality mod : {Modality::Visible, Modality::Infrared}) {
            for (int j = 0; j < spec.images_per_identity_per_modality; ++j) {
                SynthImage img;
                img.height = spec.height;
                img.width = spec.width;
                img.modality = mod;
                img.camera = j % spec.num_cameras;
                img.identity = id;
                if (!is_test)
                    img.split = Split::Train;
                else
                    img.split = (mod == Modality::Infrared) ? Split::TestQuery
                                                            : Split::TestGallery;
                img.pixels.resize(static_cast<std::size_t>(3 * hw));
                const double tint = camera_tint(img.camera);

                if (mod == Modality::Visible) {
                    for (int c = 0; c < 3; ++c)
                        for (int p = 0; p < hw; ++p) {
                            const double base =
                                color[static_cast<std::size_t>(c)] *
                                (kColorFloor + kColorSpan * pattern[static_cast<std::size_t>(p)]);
                            const double noise = spec.noise_std > 0.0
                                                     ? spec.noise_std * rng.normal()
                                                     : 0.0;
                            img.pixels[static_cast<std::size_t>(c * hw + p)] =
                                static_cast<float>(clip01(base + tint + noise));
                        }
                } else {
                    // Single gray plane replicated so all channels stay equal.
                    for (int p = 0; p < hw; ++p) {
                        const double tone =
                            std::pow(pattern[static_cast<std::size_t>(p)], kInfraredGamma);
                        const double noise =
                            spec.noise_std > 0.0 ? spec.noise_std * rng.normal() : 0.0;
                        const float v = static_cast<float>(clip01(tone + tint + noise));
                        img.pixels[static_cast<std::size_t>(p)] = v;
                        img.pixels[static_cast<std::size_t>(hw + p)] = v;
                        img.pixels[static_cast<std::size_t>(2 * hw + p)] = v;
                    }
                }
                dataset.push_back(std::move(img));
            }
        }
    }
    return dataset;
}

std::pair<double, double> modality_priors(const std::vector<SynthImage>& dataset) {
    std::size_t v = 0, i = 0;
    for (const auto& img : dataset) {
        if (img.split != Split::Train) continue;
        if (img.modality == Modality::Visible)
            ++v;
        else
            ++i;
    }
    const std::size_t total = v + i;
    if (total == 0) throw EmptySplitError("modality_priors: train split is empty");
    return {static_cast<double>(v) / total, static_cast<double>(i) / total};
}

}  // namespace xmd
